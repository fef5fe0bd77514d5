#include <hyp/parse.hpp>

#include <cctype>

namespace hyp {

namespace {

constexpr int kMaxExponent = 512;
constexpr const char* kAliases = "xyzw";

class Parser {
public:
  Parser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

  MultiPoly parse() {
    MultiPoly p = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected input");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly parse_expr() {
    MultiPoly acc = parse_term();
    while (true) {
      if (consume('+'))
        acc = acc + parse_term();
      else if (consume('-'))
        acc = acc - parse_term();
      else
        return acc;
    }
  }

  MultiPoly parse_term() {
    MultiPoly acc = parse_factor();
    while (consume('*')) acc = acc * parse_factor();
    return acc;
  }

  MultiPoly parse_factor() {
    if (consume('-')) return -parse_factor();
    MultiPoly base = parse_base();
    if (consume('^')) {
      skip_ws();
      std::size_t at = pos_;
      long e = parse_uint("exponent must be a non-negative integer");
      if (e > kMaxExponent) throw ParseError("exponent too large", at + 1);
      MultiPoly r = MultiPoly::constant(nvars_, 1);
      for (long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  MultiPoly parse_base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = parse_expr();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_literal();
    if (std::isalpha(static_cast<unsigned char>(c))) return MultiPoly::variable(nvars_, parse_variable());
    fail("expected a term");
  }

  MultiPoly parse_literal() {
    Integer num = parse_integer();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      Integer den = parse_integer();
      if (sgn(den) == 0) throw ParseError("zero denominator", at + 1);
      return MultiPoly::constant(nvars_, Rational(num, den));
    }
    return MultiPoly::constant(nvars_, Rational(num));
  }

  Integer parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  long parse_uint(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError(what, start + 1);
    if (pos_ - start > 9) throw ParseError("number too large", start + 1);
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  int parse_variable() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    try {
      return parse_var_name(name, nvars_);
    } catch (const ParseError&) {
      throw ParseError("unknown variable '" + name + "'", start + 1);
    }
  }

  std::string_view text_;
  int nvars_;
  std::size_t pos_ = 0;
};

std::string render_coeff(const Rational& c, bool with_times) {
  std::string s = c.str();
  return with_times ? s + "*" : s;
}

// Shared monomial/term rendering for the three polynomial flavours: each
// term is passed as (coefficient, list of (name, exponent)).
void append_term(std::string& out, const Rational& coeff,
                 const std::vector<std::pair<std::string, int>>& vars) {
  Rational c = coeff;
  if (out.empty()) {
    if (c.sign() < 0) {
      out += "-";
      c = -c;
    }
  } else {
    out += (c.sign() < 0) ? " - " : " + ";
    if (c.sign() < 0) c = -c;
  }
  bool any_var = false;
  for (const auto& [name, e] : vars) any_var |= (e > 0);
  std::string body;
  if (!any_var || c != Rational(1)) body += render_coeff(c, any_var);
  bool first = true;
  for (const auto& [name, e] : vars) {
    if (e == 0) continue;
    if (!first) body += "*";
    body += name;
    if (e > 1) body += "^" + std::to_string(e);
    first = false;
  }
  out += body;
}

}  // namespace

MultiPoly parse_poly(std::string_view text, int nvars) {
  if (nvars < 1) throw std::invalid_argument("parse_poly: variable count must be positive");
  return Parser(text, nvars).parse();
}

std::string var_name(int index, int nvars) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("var_name: index out of range");
  if (nvars <= 4) return std::string(1, kAliases[index]);
  return "x" + std::to_string(index + 1);
}

int parse_var_name(std::string_view name, int nvars) {
  if (name.size() == 1 && nvars <= 4)
    for (int i = 0; i < nvars; ++i)
      if (name[0] == kAliases[i]) return i;
  if (name.size() >= 2 && name[0] == 'x') {
    bool digits = true;
    for (std::size_t i = 1; i < name.size(); ++i)
      digits &= std::isdigit(static_cast<unsigned char>(name[i])) != 0;
    if (digits && name[1] != '0') {
      long k = std::stol(std::string(name.substr(1)));
      if (k >= 1 && k <= nvars) return static_cast<int>(k - 1);
    }
  }
  throw ParseError("unknown variable '" + std::string(name) + "'", 1);
}

std::string render(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::vector<std::pair<std::string, int>> vars;
    for (int i = 0; i < p.nvars(); ++i) {
      int e = it->first.exponent(i);
      if (e > 0) vars.emplace_back(var_name(i, p.nvars()), e);
    }
    append_term(out, it->second, vars);
  }
  return out;
}

std::string render(const UniPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = *p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c.is_zero()) continue;
    append_term(out, c, {{std::string(var), k}});
  }
  return out;
}

std::string render(const BiPoly& b) {
  if (b.is_zero()) return "0";
  std::string out;
  int d = b.max_degree();
  for (int deg = d; deg >= 0; --deg)
    for (int i = deg; i >= 0; --i) {
      Rational c = b.coeff(i, deg - i);
      if (c.is_zero()) continue;
      append_term(out, c, {{"z", i}, {"w", deg - i}});
    }
  return out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    out.push_back(Rational::from_string(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace hyp
