// Sparse multivariate polynomials over exact rationals.
#ifndef HYP_MULTIPOLY_HPP
#define HYP_MULTIPOLY_HPP

#include <hyp/monomial.hpp>
#include <hyp/rational.hpp>
#include <hyp/unipoly.hpp>

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace hyp {

// Term map keyed by graded-lexicographic monomial order; no zero
// coefficients are stored, so equality is structural. Values are
// immutable after construction and safe to share across threads.
class MultiPoly {
public:
  explicit MultiPoly(int nvars);
  MultiPoly(int nvars, std::map<Monomial, Rational> terms);

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int index);
  static MultiPoly monomial(const Monomial& m, const Rational& c);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::optional<int> total_degree() const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;

  bool operator==(const MultiPoly&) const = default;

private:
  int n_ = 0;
  std::map<Monomial, Rational> terms_;
};

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const Rational& c, const MultiPoly& p);

MultiPoly derivative(const MultiPoly& p, int var);
MultiPoly derivative(const MultiPoly& p, int var, int order);

struct Homogeneity {
  bool homogeneous = false;
  // Common degree of the terms; empty for the zero polynomial (which is
  // homogeneous of undefined degree) and for inhomogeneous input.
  std::optional<int> degree;
};

Homogeneity homogeneity(const MultiPoly& p);

Rational evaluate(const MultiPoly& p, std::span<const Rational> point);

// The univariate polynomial t -> p(base + t*dir).
UniPoly restrict_line(const MultiPoly& p, std::span<const Rational> base, std::span<const Rational> dir);

// Layers g_0..g_d with p(x + t*dir) = sum_k g_k(x) t^k; g_k is the k-th
// directional derivative of p along dir divided by k!. Precomputing the
// layers turns repeated line restrictions with a fixed direction into
// plain evaluations.
std::vector<MultiPoly> directional_taylor(const MultiPoly& p, std::span<const Rational> dir);

// Re-embed p into nvars()+1 variables; the new last variable is unused.
MultiPoly append_variable(const MultiPoly& p);

}  // namespace hyp

#endif
