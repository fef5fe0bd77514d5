#include <hyp/nuij.hpp>

#include <stdexcept>

namespace hyp {

OperatorWord::OperatorWord(int nvars, std::vector<int> letters) : n_(nvars), letters_(std::move(letters)) {
  if (n_ < 2) throw std::invalid_argument("OperatorWord: need at least two variables");
  for (int k : letters_)
    if (k < 0 || k >= n_ - 1)
      throw std::invalid_argument("OperatorWord: letter must be a non-distinguished variable");
}

CoeffSequence::CoeffSequence(int ambient_nvars, std::vector<MultiPoly> entries)
    : n_(ambient_nvars), entries_(std::move(entries)) {
  if (n_ < 2) throw std::invalid_argument("CoeffSequence: need at least two variables");
  if (entries_.empty()) throw std::invalid_argument("CoeffSequence: degree must be at least 1");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const MultiPoly& a = entries_[i];
    if (a.nvars() != n_ - 1)
      throw std::invalid_argument("CoeffSequence: entries must use the first n-1 variables");
    auto h = homogeneity(a);
    if (!a.is_zero() && (!h.homogeneous || *h.degree != static_cast<int>(i) + 1))
      throw std::invalid_argument("CoeffSequence: entry " + std::to_string(i + 1) +
                                  " must be zero or homogeneous of degree " + std::to_string(i + 1));
  }
}

CoeffSequence CoeffSequence::zeros(int ambient_nvars, int m) {
  return CoeffSequence(ambient_nvars,
                       std::vector<MultiPoly>(static_cast<std::size_t>(m), MultiPoly(ambient_nvars - 1)));
}

MultiPoly apply_first_order(const MultiPoly& p, int k, const Rational& s) {
  int n = p.nvars();
  if (n < 2) throw std::invalid_argument("apply_first_order: need at least two variables");
  if (k < 0 || k >= n - 1)
    throw std::invalid_argument("apply_first_order: k must be a non-distinguished variable index");
  return p + s * (MultiPoly::variable(n, k) * derivative(p, n - 1));
}

CoeffSequence expand_word(const OperatorWord& w) { return expand_word(w, w.length()); }

CoeffSequence expand_word(const OperatorWord& w, int m) {
  if (m < w.length()) throw std::invalid_argument("expand_word: target degree below word length");
  if (m < 1) throw std::invalid_argument("expand_word: target degree must be at least 1");
  int q = w.nvars() - 1;
  // elementary symmetric recurrence over the letter multiset
  std::vector<MultiPoly> acc;
  acc.push_back(MultiPoly::constant(q, 1));
  for (int k : w.letters()) {
    MultiPoly xk = MultiPoly::variable(q, k);
    acc.push_back(xk * acc.back());
    for (std::size_t j = acc.size() - 2; j >= 1; --j) acc[j] = acc[j] + xk * acc[j - 1];
  }
  std::vector<MultiPoly> entries(acc.begin() + 1, acc.end());
  entries.resize(static_cast<std::size_t>(m), MultiPoly(q));
  return CoeffSequence(w.nvars(), std::move(entries));
}

MultiPoly apply_sequence(const MultiPoly& p, const CoeffSequence& a, const Rational& s) {
  if (p.nvars() != a.ambient_nvars())
    throw std::invalid_argument("apply_sequence: variable count mismatch");
  auto h = homogeneity(p);
  if (!h.homogeneous || !h.degree || *h.degree != a.degree())
    throw std::invalid_argument("apply_sequence: p must be homogeneous of the sequence degree");
  int n = p.nvars();
  MultiPoly result(p);
  MultiPoly dk(p);
  Rational sk = 1;
  for (int k = 1; k <= a.degree(); ++k) {
    dk = derivative(dk, n - 1);
    sk *= s;
    const MultiPoly& ak = a.entries()[static_cast<std::size_t>(k - 1)];
    if (ak.is_zero() || dk.is_zero() || sk.is_zero()) continue;
    result = result + sk * (append_variable(ak) * dk);
  }
  return result;
}

MultiPoly sequence_test_poly(const CoeffSequence& a) {
  int n = a.ambient_nvars();
  int m = a.degree();
  MultiPoly q = MultiPoly::monomial(Monomial::var(n, n - 1, m), 1);
  for (int k = 1; k <= m; ++k) {
    const MultiPoly& ak = a.entries()[static_cast<std::size_t>(k - 1)];
    if (ak.is_zero()) continue;
    Rational c(falling_factorial(static_cast<unsigned>(m), static_cast<unsigned>(k)));
    MultiPoly power = MultiPoly::monomial(Monomial::var(n, n - 1, m - k), 1);
    q = q + c * (append_variable(ak) * power);
  }
  return q;
}

RestrictedSequence restrict_sequence(const CoeffSequence& a, std::span<const Rational> v, const Rational& s) {
  if (static_cast<int>(v.size()) != a.ambient_nvars() - 1)
    throw std::invalid_argument("restrict_sequence: point length mismatch");
  RestrictedSequence r;
  r.values.reserve(static_cast<std::size_t>(a.degree()));
  Rational sk = 1;
  for (int k = 1; k <= a.degree(); ++k) {
    sk *= s;
    r.values.push_back(evaluate(a.entries()[static_cast<std::size_t>(k - 1)], v) * sk);
  }
  return r;
}

BiPoly operator_symbol(const RestrictedSequence& r, int d) {
  if (d != r.degree()) throw std::invalid_argument("operator_symbol: degree mismatch");
  std::vector<Rational> grid(static_cast<std::size_t>(d + 1) * static_cast<std::size_t>(d + 1), Rational(0));
  auto at = [&](int i, int j) -> Rational& {
    return grid[static_cast<std::size_t>(i) * static_cast<std::size_t>(d + 1) + static_cast<std::size_t>(j)];
  };
  for (int i = 0; i <= d; ++i) {
    Rational ci(binomial(static_cast<unsigned>(d), static_cast<unsigned>(i)));
    for (int j = 0; j <= i; ++j) {
      Rational aj = (j == 0) ? Rational(1) : r.values[static_cast<std::size_t>(j - 1)];
      if (aj.is_zero()) continue;
      Rational ff(falling_factorial(static_cast<unsigned>(i), static_cast<unsigned>(j)));
      at(i - j, d - i) += ci * ff * aj;
    }
  }
  return BiPoly(d, std::move(grid));
}

SymbolIdentity verify_symbol_identity(const RestrictedSequence& r, int d) {
  if (d != r.degree()) throw std::invalid_argument("verify_symbol_identity: degree mismatch");
  BiPoly lhs = operator_symbol(r, d);
  // univariate route: t^d + sum_k (d!/(d-k)!) r_k t^(d-k), then shift by z+w
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1, Rational(0));
  c[static_cast<std::size_t>(d)] = 1;
  for (int k = 1; k <= d; ++k)
    c[static_cast<std::size_t>(d - k)] =
        Rational(falling_factorial(static_cast<unsigned>(d), static_cast<unsigned>(k))) *
        r.values[static_cast<std::size_t>(k - 1)];
  BiPoly rhs = bipoly_from_shift(UniPoly(std::move(c)));
  return SymbolIdentity{lhs == rhs, std::move(lhs), std::move(rhs)};
}

HyperbolicityVerdict check_sequence(const CoeffSequence& a, const SamplingConfig& cfg) {
  int n = a.ambient_nvars();
  std::vector<Rational> e(static_cast<std::size_t>(n), Rational(0));
  e.back() = 1;
  return test_hyperbolic(sequence_test_poly(a), e, cfg);
}

}  // namespace hyp
