// Dense bivariate polynomials in z and w, bounded total degree.
#ifndef HYP_BIPOLY_HPP
#define HYP_BIPOLY_HPP

#include <hyp/rational.hpp>
#include <hyp/unipoly.hpp>

#include <vector>

namespace hyp {

// (d+1) x (d+1) coefficient grid indexed by (power of z, power of w);
// entries with combined power above the declared degree are zero.
class BiPoly {
public:
  explicit BiPoly(int max_degree);
  BiPoly(int max_degree, std::vector<Rational> grid);  // row-major, z power major

  int max_degree() const { return d_; }
  Rational coeff(int zpow, int wpow) const;
  bool is_zero() const;

  // Mathematical equality; declared degrees may differ.
  friend bool operator==(const BiPoly& a, const BiPoly& b);

private:
  int d_ = 0;
  std::vector<Rational> c_;
};

// q(z + w), expanded exactly via binomial expansion of each power.
BiPoly bipoly_from_shift(const UniPoly& q);

Rational evaluate(const BiPoly& b, const Rational& z, const Rational& w);

// Sections b(z, 0) and b(0, w) as univariate polynomials.
UniPoly section_w_zero(const BiPoly& b);
UniPoly section_z_zero(const BiPoly& b);

}  // namespace hyp

#endif
