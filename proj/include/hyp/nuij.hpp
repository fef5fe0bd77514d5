// Nuij's first-order hyperbolicity-preserving operators, their symbolic
// composition, coefficient sequences, and the bivariate symbol identity
// that certifies the sequence criterion.
#ifndef HYP_NUIJ_HPP
#define HYP_NUIJ_HPP

#include <hyp/bipoly.hpp>
#include <hyp/hyperbolicity.hpp>
#include <hyp/multipoly.hpp>

#include <span>
#include <vector>

namespace hyp {

// Composition of first-order operators T_k : P -> P + s x_k dP/dx_n,
// recorded as the ordered list of multiplier variables. The distinguished
// (derivative) variable is always the last one and never appears as a
// letter. Letters commute, so the order is cosmetic.
class OperatorWord {
public:
  OperatorWord(int nvars, std::vector<int> letters);

  int nvars() const { return n_; }
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<int>& letters() const { return letters_; }

private:
  int n_ = 0;
  std::vector<int> letters_;
};

// Sequence a_1..a_m of coefficient polynomials in the first n-1 variables;
// each nonzero a_k is homogeneous of degree exactly k.
class CoeffSequence {
public:
  CoeffSequence(int ambient_nvars, std::vector<MultiPoly> entries);

  static CoeffSequence zeros(int ambient_nvars, int m);

  int degree() const { return static_cast<int>(entries_.size()); }  // m
  int ambient_nvars() const { return n_; }
  // entries()[k-1] is the coefficient of the k-th derivative
  const std::vector<MultiPoly>& entries() const { return entries_; }

  bool operator==(const CoeffSequence&) const = default;

private:
  int n_ = 0;
  std::vector<MultiPoly> entries_;
};

// Numbers a_k(v) s^k obtained by fixing the first n-1 coordinates.
struct RestrictedSequence {
  std::vector<Rational> values;  // values[k-1] for k = 1..m
  int degree() const { return static_cast<int>(values.size()); }
};

// One first-order operator: p + s x_k dp/dx_n. k must not be the
// distinguished (last) variable.
MultiPoly apply_first_order(const MultiPoly& p, int k, const Rational& s);

// The coefficient sequence of the composed word: applying all letters of w
// to any p equals p + sum a_k s^k d^k p / dx_n^k. Multiplication by the
// letter variables commutes with d/dx_n, so the a_k are the elementary
// symmetric polynomials of the letter multiset. Optionally zero-padded to
// degree m >= length.
CoeffSequence expand_word(const OperatorWord& w);
CoeffSequence expand_word(const OperatorWord& w, int m);

// p + sum_k a_k s^k d^k p / dx_n^k for homogeneous p of degree a.degree().
MultiPoly apply_sequence(const MultiPoly& p, const CoeffSequence& a, const Rational& s);

// The sequence applied to the pure power x_n^m at s = 1:
//   x_n^m + sum_k (m!/(m-k)!) a_k x_n^(m-k).
// Homogeneous of degree m and equal to 1 at the distinguished direction;
// its hyperbolicity decides whether a preserves hyperbolicity.
MultiPoly sequence_test_poly(const CoeffSequence& a);

// a_k(v) s^k for a fixed point v of the first n-1 coordinates.
RestrictedSequence restrict_sequence(const CoeffSequence& a, std::span<const Rational> v, const Rational& s);

// Bivariate symbol of the restricted operator applied to (z+w)^d:
//   sum_i C(d,i) w^(d-i) sum_j r_j (i!/(i-j)!) z^(i-j),   r_0 = 1.
BiPoly operator_symbol(const RestrictedSequence& r, int d);

struct SymbolIdentity {
  bool equal = false;
  BiPoly via_operator;  // termwise operator expansion
  BiPoly via_shift;     // univariate test polynomial evaluated at z+w
};

// Exact equality of the two independently computed sides. Holds for every
// well-formed input; a failure indicates an implementation bug.
SymbolIdentity verify_symbol_identity(const RestrictedSequence& r, int d);

// Hyperbolicity test of the sequence's test polynomial. NotHyperbolic
// certifies that a does not preserve hyperbolicity, with the pure power
// x_n^m as explicit counterexample along the embedded witness line;
// ProbablyHyperbolic supports (but cannot certify) the converse.
HyperbolicityVerdict check_sequence(const CoeffSequence& a, const SamplingConfig& cfg = {});

}  // namespace hyp

#endif
