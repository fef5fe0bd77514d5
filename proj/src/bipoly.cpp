#include <hyp/bipoly.hpp>

#include <stdexcept>

namespace hyp {

BiPoly::BiPoly(int max_degree) : d_(max_degree) {
  if (max_degree < 0) throw std::invalid_argument("BiPoly: negative degree bound");
  c_.assign(static_cast<std::size_t>(d_ + 1) * static_cast<std::size_t>(d_ + 1), Rational(0));
}

BiPoly::BiPoly(int max_degree, std::vector<Rational> grid) : BiPoly(max_degree) {
  if (grid.size() != c_.size()) throw std::invalid_argument("BiPoly: grid size mismatch");
  c_ = std::move(grid);
  for (int i = 0; i <= d_; ++i)
    for (int j = 0; j <= d_; ++j)
      if (i + j > d_ && !coeff(i, j).is_zero())
        throw std::invalid_argument("BiPoly: entry beyond declared total degree");
}

Rational BiPoly::coeff(int zpow, int wpow) const {
  if (zpow < 0 || wpow < 0 || zpow > d_ || wpow > d_) return 0;
  return c_[static_cast<std::size_t>(zpow) * static_cast<std::size_t>(d_ + 1) + static_cast<std::size_t>(wpow)];
}

bool BiPoly::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  int d = std::max(a.d_, b.d_);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d - i; ++j)
      if (a.coeff(i, j) != b.coeff(i, j)) return false;
  return true;
}

BiPoly bipoly_from_shift(const UniPoly& q) {
  int d = q.degree().value_or(0);
  std::vector<Rational> grid(static_cast<std::size_t>(d + 1) * static_cast<std::size_t>(d + 1), Rational(0));
  auto at = [&](int i, int j) -> Rational& {
    return grid[static_cast<std::size_t>(i) * static_cast<std::size_t>(d + 1) + static_cast<std::size_t>(j)];
  };
  for (int k = 0; k <= d; ++k) {
    Rational ck = q.coeff(k);
    if (ck.is_zero()) continue;
    // (z+w)^k = sum_j C(k,j) z^j w^(k-j)
    for (int j = 0; j <= k; ++j) at(j, k - j) += Rational(binomial(static_cast<unsigned>(k), static_cast<unsigned>(j))) * ck;
  }
  return BiPoly(d, std::move(grid));
}

Rational evaluate(const BiPoly& b, const Rational& z, const Rational& w) {
  Rational acc = 0;
  for (int i = 0; i <= b.max_degree(); ++i)
    for (int j = 0; j <= b.max_degree() - i; ++j) {
      Rational c = b.coeff(i, j);
      if (!c.is_zero()) acc += c * pow(z, static_cast<unsigned>(i)) * pow(w, static_cast<unsigned>(j));
    }
  return acc;
}

UniPoly section_w_zero(const BiPoly& b) {
  std::vector<Rational> c(static_cast<std::size_t>(b.max_degree()) + 1, Rational(0));
  for (int i = 0; i <= b.max_degree(); ++i) c[static_cast<std::size_t>(i)] = b.coeff(i, 0);
  return UniPoly(std::move(c));
}

UniPoly section_z_zero(const BiPoly& b) {
  std::vector<Rational> c(static_cast<std::size_t>(b.max_degree()) + 1, Rational(0));
  for (int j = 0; j <= b.max_degree(); ++j) c[static_cast<std::size_t>(j)] = b.coeff(0, j);
  return UniPoly(std::move(c));
}

}  // namespace hyp
