// Certified falsification / probabilistic confirmation of hyperbolicity.
#ifndef HYP_HYPERBOLICITY_HPP
#define HYP_HYPERBOLICITY_HPP

#include <hyp/multipoly.hpp>
#include <hyp/realroot.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hyp {

enum class RejectionReason { ZeroPolynomial, NonHomogeneous, ZeroAtDirection };

// Matches the serialized form used in verdicts and reports.
std::string to_string(RejectionReason r);

struct SamplingConfig {
  int sample_count = 500;
  int coordinate_bound = 10;
  bool include_grid = true;  // deterministic {-2..2}^n pass before the seeded pass
  std::uint64_t seed = 0;
};

enum class HypStatus { ProbablyHyperbolic, NotHyperbolic, Rejected };

std::string to_string(HypStatus s);

// A base point whose line restriction along the tested direction is not
// real-rooted. Witnesses are exact and independently re-checkable.
struct Witness {
  std::vector<Rational> base;
  UniPoly restriction;
};

struct HyperbolicityVerdict {
  HypStatus status = HypStatus::Rejected;
  long samples_checked = 0;
  std::optional<Witness> witness;        // present iff NotHyperbolic
  std::optional<RejectionReason> rejection;  // present iff Rejected
};

// Admissibility of the direction: p must be nonzero, homogeneous, and
// p(e) != 0 so that every restriction has full degree. Returns the
// rejection reason, or nothing when admissible.
std::optional<RejectionReason> check_direction(const MultiPoly& p, std::span<const Rational> e);

// Samples base points (grid shells first, then seeded integer draws) and
// tests each restriction for real-rootedness. A failure is a sound, exact
// disproof of hyperbolicity; completing all samples only supports it.
// Deterministic for a fixed config: the first witness in sample order wins.
HyperbolicityVerdict test_hyperbolic(const MultiPoly& p, std::span<const Rational> e,
                                     const SamplingConfig& cfg = {});

// True iff every root of t -> p(v + t e) is strictly negative, i.e. v lies
// in the open hyperbolicity cone around e. The caller asserts that p is
// hyperbolic with respect to e; an inadmissible direction throws.
bool cone_member(const MultiPoly& p, std::span<const Rational> e, std::span<const Rational> v);

// Stability test for bivariate polynomials of the form q(z+w): such a
// polynomial is stable exactly when q has only real roots, since
// Im z > 0 and Im w > 0 force Im(z+w) > 0.
bool stable_shift_check(const UniPoly& q);

}  // namespace hyp

#endif
