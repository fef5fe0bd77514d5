// Exponent vector of a multivariate monomial, ordered graded-lexicographically.
#ifndef HYP_MONOMIAL_HPP
#define HYP_MONOMIAL_HPP

#include <numeric>
#include <stdexcept>
#include <vector>

namespace hyp {

// Variable indices are 0-based throughout the library; index i is rendered
// as x{i+1} (with x,y,z,w aliases for small variable counts).
class Monomial {
public:
  explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
    for (int v : e_)
      if (v < 0) throw std::invalid_argument("Monomial: negative exponent");
  }

  static Monomial unit(int nvars) { return Monomial(std::vector<int>(static_cast<std::size_t>(nvars), 0)); }

  static Monomial var(int nvars, int index, int power = 1) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("Monomial: variable index out of range");
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = power;
    return Monomial(std::move(e));
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  int exponent(int index) const { return e_.at(static_cast<std::size_t>(index)); }
  const std::vector<int>& exponents() const { return e_; }
  int total_degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

  Monomial operator*(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw std::invalid_argument("Monomial: variable count mismatch");
    std::vector<int> e(e_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
    return Monomial(std::move(e));
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }

  // Graded lexicographic: total degree first, then exponents from x1 on.
  bool operator<(const Monomial& o) const {
    int da = total_degree(), db = o.total_degree();
    if (da != db) return da < db;
    return e_ < o.e_;
  }

private:
  std::vector<int> e_;
};

}  // namespace hyp

#endif
