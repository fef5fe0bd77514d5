// Seeded random instance generators for tests and campaigns.
#ifndef HYP_GENERATORS_HPP
#define HYP_GENERATORS_HPP

#include <hyp/multipoly.hpp>
#include <hyp/nuij.hpp>
#include <hyp/rng.hpp>

namespace hyp {

// Product of m linear forms (sum_j c_j x_j) + x_n with integer c in
// [-5, 5]: hyperbolic with respect to the last variable by construction,
// and equal to 1 there.
MultiPoly random_hyperbolic(int m, int n, std::uint64_t seed);

// Word of length m over the non-distinguished variables.
OperatorWord random_word(int m, int n, std::uint64_t seed);

// Each a_k is a random homogeneous degree-k polynomial in n-1 variables
// with at most k+1 terms and integer coefficients in [-3, 3]; entries may
// come out zero.
CoeffSequence random_coeff_sequence(int m, int n, std::uint64_t seed);

}  // namespace hyp

#endif
