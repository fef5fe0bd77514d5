#include <hyp/unipoly.hpp>

#include <stdexcept>

namespace hyp {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(c_); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(int power, const Rational& c) {
  if (power < 0) throw std::invalid_argument("UniPoly: negative power");
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1, Rational(0));
  v.back() = c;
  return UniPoly(std::move(v));
}

std::optional<int> UniPoly::degree() const {
  if (c_.empty()) return std::nullopt;
  return static_cast<int>(c_.size()) - 1;
}

Rational UniPoly::coeff(int power) const {
  if (power < 0 || static_cast<std::size_t>(power) >= c_.size()) return 0;
  return c_[static_cast<std::size_t>(power)];
}

const Rational& UniPoly::leading() const {
  if (c_.empty()) throw std::logic_error("UniPoly: zero polynomial has no leading coefficient");
  return c_.back();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeffs()[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a) { return Rational(-1) * a; }

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> c(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return UniPoly(std::move(c));
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
  if (c.is_zero()) return UniPoly();
  std::vector<Rational> v(p.coeffs());
  for (auto& x : v) x *= c;
  return UniPoly(std::move(v));
}

UniPoly derivative(const UniPoly& p) {
  if (p.coeffs().size() <= 1) return UniPoly();
  std::vector<Rational> c(p.coeffs().size() - 1, Rational(0));
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) c[i - 1] = Rational(static_cast<long>(i)) * p.coeffs()[i];
  return UniPoly(std::move(c));
}

Rational evaluate(const UniPoly& p, const Rational& t) {
  Rational acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniDivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
  if (a.is_zero() || *a.degree() < *b.degree()) return {UniPoly(), a};
  std::vector<Rational> rem(a.coeffs());
  int db = *b.degree();
  std::vector<Rational> quot(rem.size() - static_cast<std::size_t>(db), Rational(0));
  const Rational& lb = b.leading();
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    std::size_t ui = static_cast<std::size_t>(i);
    if (rem[ui].is_zero()) continue;
    Rational q = rem[ui] / lb;
    quot[ui - static_cast<std::size_t>(db)] = q;
    for (int j = 0; j <= db; ++j)
      rem[ui - static_cast<std::size_t>(db - j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

}  // namespace hyp
