// Dense univariate polynomials over exact rationals.
#ifndef HYP_UNIPOLY_HPP
#define HYP_UNIPOLY_HPP

#include <hyp/rational.hpp>

#include <optional>
#include <vector>

namespace hyp {

// Coefficient list c0..cd indexed by power; the zero polynomial stores
// nothing and reports an undefined degree. The leading stored coefficient
// is always nonzero, so operator== is exact structural equality.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(int power, const Rational& c);

  bool is_zero() const { return c_.empty(); }
  std::optional<int> degree() const;
  Rational coeff(int power) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const;

  bool operator==(const UniPoly&) const = default;

private:
  std::vector<Rational> c_;
};

UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const Rational& c, const UniPoly& p);

UniPoly derivative(const UniPoly& p);
Rational evaluate(const UniPoly& p, const Rational& t);

struct UniDivMod {
  UniPoly quotient;
  UniPoly remainder;
};

// Euclidean division over the rationals; throws on zero divisor.
UniDivMod divmod(const UniPoly& a, const UniPoly& b);

}  // namespace hyp

#endif
