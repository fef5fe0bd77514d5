// Exact real-root counting for univariate rational polynomials via Sturm chains.
#ifndef HYP_REALROOT_HPP
#define HYP_REALROOT_HPP

#include <hyp/rational.hpp>
#include <hyp/unipoly.hpp>

#include <optional>
#include <vector>

namespace hyp {

// Signed remainder chain of the square-free part: seq[0] is the square-free
// part, seq[1] its derivative, and each following element is the negated
// remainder of the previous two, rescaled by a positive rational to keep
// integer coefficients small. Degrees strictly decrease and the last
// element is a nonzero constant.
struct SturmChain {
  std::vector<UniPoly> seq;
};

// p / gcd(p, p'): same roots as p, all simple. Normalized to integer
// coefficients with content 1 and positive leading coefficient.
UniPoly square_free_part(const UniPoly& p);

SturmChain sturm_chain(const UniPoly& p);

// Open interval; an absent endpoint means unbounded on that side.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  static Interval all() { return {}; }
  static Interval open(Rational a, Rational b) { return {std::move(a), std::move(b)}; }
  static Interval above(Rational a) { return {std::move(a), std::nullopt}; }
  static Interval below(Rational b) { return {std::nullopt, std::move(b)}; }
};

// Number of distinct real roots of p in the open interval.
int count_real_roots(const UniPoly& p, const Interval& iv = Interval::all());

// True iff every complex root of p is real (equivalently, the square-free
// part has as many distinct real roots as its degree).
bool is_real_rooted(const UniPoly& p);

// True iff p is real-rooted and every root is strictly negative.
bool all_roots_negative(const UniPoly& p);

}  // namespace hyp

#endif
