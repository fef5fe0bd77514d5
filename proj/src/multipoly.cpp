#include <hyp/multipoly.hpp>

#include <stdexcept>

namespace hyp {

namespace {

void check_same_vars(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("MultiPoly: variable count mismatch");
}

void accumulate(std::map<Monomial, Rational>& terms, const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

MultiPoly::MultiPoly(int nvars) : n_(nvars) {
  if (nvars < 1) throw std::invalid_argument("MultiPoly: variable count must be positive");
}

MultiPoly::MultiPoly(int nvars, std::map<Monomial, Rational> terms) : MultiPoly(nvars) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.nvars() != nvars) throw std::invalid_argument("MultiPoly: monomial has wrong variable count");
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
  }
  terms_ = std::move(terms);
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  return MultiPoly::monomial(Monomial::unit(nvars), c);
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  return MultiPoly::monomial(Monomial::var(nvars, index), 1);
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
  MultiPoly p(m.nvars());
  accumulate(p.terms_, m, c);
  return p;
}

std::optional<int> MultiPoly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.total_degree();  // grlex order: last key has max degree
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  check_same_vars(a, b);
  std::map<Monomial, Rational> terms(a.terms());
  for (const auto& [m, c] : b.terms()) accumulate(terms, m, c);
  return MultiPoly(a.nvars(), std::move(terms));
}

MultiPoly operator-(const MultiPoly& a) { return Rational(-1) * a; }

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_same_vars(a, b);
  std::map<Monomial, Rational> terms;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) accumulate(terms, ma * mb, ca * cb);
  return MultiPoly(a.nvars(), std::move(terms));
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
  std::map<Monomial, Rational> terms;
  if (!c.is_zero())
    for (const auto& [m, pc] : p.terms()) terms.emplace(m, c * pc);
  return MultiPoly(p.nvars(), std::move(terms));
}

MultiPoly derivative(const MultiPoly& p, int var) {
  if (var < 0 || var >= p.nvars()) throw std::invalid_argument("derivative: variable index out of range");
  std::map<Monomial, Rational> terms;
  for (const auto& [m, c] : p.terms()) {
    int e = m.exponent(var);
    if (e == 0) continue;
    std::vector<int> exps(m.exponents());
    exps[static_cast<std::size_t>(var)] = e - 1;
    accumulate(terms, Monomial(std::move(exps)), Rational(e) * c);
  }
  return MultiPoly(p.nvars(), std::move(terms));
}

MultiPoly derivative(const MultiPoly& p, int var, int order) {
  if (order < 0) throw std::invalid_argument("derivative: negative order");
  MultiPoly r(p);
  for (int i = 0; i < order && !r.is_zero(); ++i) r = derivative(r, var);
  return r;
}

Homogeneity homogeneity(const MultiPoly& p) {
  if (p.is_zero()) return {true, std::nullopt};
  int d = p.terms().begin()->first.total_degree();
  for (const auto& [m, c] : p.terms())
    if (m.total_degree() != d) return {false, std::nullopt};
  return {true, d};
}

Rational evaluate(const MultiPoly& p, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != p.nvars())
    throw std::invalid_argument("evaluate: point length mismatch");
  // per-variable power tables up to the largest exponent in use
  std::vector<std::vector<Rational>> pows(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) pows[i].push_back(1);
  Rational acc = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      int e = m.exponent(static_cast<int>(i));
      auto& table = pows[i];
      while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * point[i]);
      if (e > 0) term *= table[static_cast<std::size_t>(e)];
    }
    acc += term;
  }
  return acc;
}

UniPoly restrict_line(const MultiPoly& p, std::span<const Rational> base, std::span<const Rational> dir) {
  if (static_cast<int>(base.size()) != p.nvars() || static_cast<int>(dir.size()) != p.nvars())
    throw std::invalid_argument("restrict_line: vector length mismatch");
  // power tables of (base_i + dir_i t) per variable
  std::vector<std::vector<UniPoly>> pows(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    pows[i].push_back(UniPoly::constant(1));
    pows[i].push_back(UniPoly(std::vector<Rational>{base[i], dir[i]}));
  }
  UniPoly acc;
  for (const auto& [m, c] : p.terms()) {
    UniPoly term = UniPoly::constant(c);
    for (std::size_t i = 0; i < base.size(); ++i) {
      int e = m.exponent(static_cast<int>(i));
      auto& table = pows[i];
      while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * table[1]);
      if (e > 0) term = term * table[static_cast<std::size_t>(e)];
    }
    acc = acc + term;
  }
  return acc;
}

std::vector<MultiPoly> directional_taylor(const MultiPoly& p, std::span<const Rational> dir) {
  if (static_cast<int>(dir.size()) != p.nvars())
    throw std::invalid_argument("directional_taylor: vector length mismatch");
  std::vector<MultiPoly> layers;
  MultiPoly cur(p);
  Rational kfact = 1;
  for (int k = 0; !cur.is_zero() || k == 0; ++k) {
    if (k > 0) {
      MultiPoly next(p.nvars());
      for (std::size_t i = 0; i < dir.size(); ++i) {
        if (dir[i].is_zero()) continue;
        next = next + dir[i] * derivative(cur, static_cast<int>(i));
      }
      cur = std::move(next);
      kfact *= Rational(k);
      if (cur.is_zero()) break;
    }
    layers.push_back((Rational(1) / kfact) * cur);
  }
  return layers;
}

MultiPoly append_variable(const MultiPoly& p) {
  std::map<Monomial, Rational> terms;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> exps(m.exponents());
    exps.push_back(0);
    terms.emplace(Monomial(std::move(exps)), c);
  }
  return MultiPoly(p.nvars() + 1, std::move(terms));
}

}  // namespace hyp
