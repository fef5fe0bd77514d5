#include <hyp/hyperbolicity.hpp>
#include <hyp/rng.hpp>

#include <stdexcept>

namespace hyp {

namespace {

// x = lambda * e for some rational lambda (including lambda = 0)?
bool is_multiple_of(std::span<const Rational> x, std::span<const Rational> e) {
  std::size_t pivot = e.size();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (!e[i].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot == e.size()) return false;  // e = 0 never passes check_direction
  Rational lambda = x[pivot] / e[pivot];
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != lambda * e[i]) return false;
  return true;
}

UniPoly restriction_from_layers(const std::vector<MultiPoly>& layers, std::span<const Rational> x) {
  std::vector<Rational> c;
  c.reserve(layers.size());
  for (const auto& g : layers) c.push_back(evaluate(g, x));
  return UniPoly(std::move(c));
}

}  // namespace

std::string to_string(RejectionReason r) {
  switch (r) {
    case RejectionReason::ZeroPolynomial: return "zero polynomial";
    case RejectionReason::NonHomogeneous: return "non-homogeneous";
    case RejectionReason::ZeroAtDirection: return "P(e)=0";
  }
  return "?";
}

std::string to_string(HypStatus s) {
  switch (s) {
    case HypStatus::ProbablyHyperbolic: return "ProbablyHyperbolic";
    case HypStatus::NotHyperbolic: return "NotHyperbolic";
    case HypStatus::Rejected: return "Rejected";
  }
  return "?";
}

std::optional<RejectionReason> check_direction(const MultiPoly& p, std::span<const Rational> e) {
  if (static_cast<int>(e.size()) != p.nvars())
    throw std::invalid_argument("check_direction: direction length mismatch");
  if (p.is_zero()) return RejectionReason::ZeroPolynomial;
  if (!homogeneity(p).homogeneous) return RejectionReason::NonHomogeneous;
  if (evaluate(p, e).is_zero()) return RejectionReason::ZeroAtDirection;
  return std::nullopt;
}

HyperbolicityVerdict test_hyperbolic(const MultiPoly& p, std::span<const Rational> e,
                                     const SamplingConfig& cfg) {
  if (cfg.sample_count < 1) throw std::invalid_argument("test_hyperbolic: sample_count must be >= 1");
  if (auto rej = check_direction(p, e)) {
    HyperbolicityVerdict v;
    v.status = HypStatus::Rejected;
    v.rejection = rej;
    return v;
  }

  const auto layers = directional_taylor(p, e);
  const std::size_t n = e.size();

  HyperbolicityVerdict verdict;
  auto probe = [&](const std::vector<Rational>& x) {
    ++verdict.samples_checked;
    UniPoly r = restriction_from_layers(layers, x);
    if (!is_real_rooted(r)) {
      verdict.status = HypStatus::NotHyperbolic;
      verdict.witness = Witness{x, std::move(r)};
      return true;
    }
    return false;
  };

  if (cfg.include_grid) {
    // shells of L-infinity radius 1 then 2, lexicographic within a shell
    for (int radius = 1; radius <= 2; ++radius) {
      std::vector<int> odo(n, -radius);
      while (true) {
        int linf = 0;
        for (int v : odo) linf = std::max(linf, std::abs(v));
        if (linf == radius) {
          std::vector<Rational> x(odo.begin(), odo.end());
          if (!is_multiple_of(x, e) && probe(x)) return verdict;
        }
        std::size_t i = n;
        while (i > 0 && odo[i - 1] == radius) odo[--i] = -radius;
        if (i == 0) break;
        ++odo[i - 1];
      }
    }
  }

  Rng rng(cfg.seed);
  for (int s = 0; s < cfg.sample_count; ++s) {
    std::vector<Rational> x;
    x.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      x.emplace_back(static_cast<long>(rng.uniform(-cfg.coordinate_bound, cfg.coordinate_bound)));
    if (probe(x)) return verdict;
  }

  verdict.status = HypStatus::ProbablyHyperbolic;
  return verdict;
}

bool cone_member(const MultiPoly& p, std::span<const Rational> e, std::span<const Rational> v) {
  if (auto rej = check_direction(p, e))
    throw std::invalid_argument("cone_member: direction rejected (" + to_string(*rej) + ")");
  if (static_cast<int>(v.size()) != p.nvars())
    throw std::invalid_argument("cone_member: point length mismatch");
  return all_roots_negative(restrict_line(p, v, e));
}

bool stable_shift_check(const UniPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("stable_shift_check: zero polynomial");
  return is_real_rooted(q);
}

}  // namespace hyp
