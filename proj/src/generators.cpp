#include <hyp/generators.hpp>

#include <stdexcept>

namespace hyp {

MultiPoly random_hyperbolic(int m, int n, std::uint64_t seed) {
  if (m < 1 || n < 2) throw std::invalid_argument("random_hyperbolic: need m >= 1, n >= 2");
  Rng rng(seed);
  MultiPoly p = MultiPoly::constant(n, 1);
  for (int i = 0; i < m; ++i) {
    MultiPoly form = MultiPoly::variable(n, n - 1);
    for (int j = 0; j < n - 1; ++j) {
      long c = rng.uniform(-5, 5);
      if (c != 0) form = form + Rational(c) * MultiPoly::variable(n, j);
    }
    p = p * form;
  }
  return p;
}

OperatorWord random_word(int m, int n, std::uint64_t seed) {
  if (m < 1 || n < 2) throw std::invalid_argument("random_word: need m >= 1, n >= 2");
  Rng rng(seed);
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) letters.push_back(static_cast<int>(rng.uniform(0, n - 2)));
  return OperatorWord(n, std::move(letters));
}

CoeffSequence random_coeff_sequence(int m, int n, std::uint64_t seed) {
  if (m < 1 || n < 2) throw std::invalid_argument("random_coeff_sequence: need m >= 1, n >= 2");
  Rng rng(seed);
  int q = n - 1;
  std::vector<MultiPoly> entries;
  entries.reserve(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) {
    MultiPoly a(q);
    long terms = rng.uniform(1, k + 1);
    for (long t = 0; t < terms; ++t) {
      // random exponent vector of total degree k
      std::vector<int> exps(static_cast<std::size_t>(q), 0);
      for (int u = 0; u < k; ++u) ++exps[static_cast<std::size_t>(rng.uniform(0, q - 1))];
      long c = rng.uniform(-3, 3);
      a = a + MultiPoly::monomial(Monomial(std::move(exps)), Rational(c));
    }
    entries.push_back(std::move(a));
  }
  return CoeffSequence(n, std::move(entries));
}

}  // namespace hyp
