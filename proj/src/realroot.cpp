#include <hyp/realroot.hpp>

#include <stdexcept>

namespace hyp {

namespace {

// Dense integer polynomial, trailing coefficient nonzero. All chain
// computations run over the integers: elements of a signed remainder
// chain may be rescaled by positive constants without changing any sign
// variation, which keeps coefficient growth under control.
using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

// Divide by the content (positive), preserving signs.
void make_primitive(IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g <= 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Clear denominators and divide by the content; sign pattern of p is kept.
IntPoly primitive_from(const UniPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(Integer(c.num() * (l / c.den())));
  make_primitive(out);
  return out;
}

UniPoly to_unipoly(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& x : p) c.emplace_back(x);
  return UniPoly(std::move(c));
}

IntPoly int_derivative(const IntPoly& p) {
  IntPoly d;
  if (p.size() <= 1) return d;
  d.reserve(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Integer(static_cast<long>(i)) * p[i]);
  return d;
}

// Pseudo-remainder of a by b combined with the Sturm sign rule: returns
// the primitive part of -rem(a, b) up to a positive factor. Each loop
// step multiplies the running remainder by lc(b), so the accumulated
// factor is lc(b)^steps; its sign is compensated at the end.
IntPoly negated_remainder(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a);
  const Integer& lb = b.back();
  int steps = 0;
  while (!r.empty() && degree(r) >= degree(b)) {
    int shift = degree(r) - degree(b);
    Integer lead = r.back();
    for (auto& c : r) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i)
      r[static_cast<std::size_t>(shift) + i] -= lead * b[i];
    trim(r);
    ++steps;
  }
  if (r.empty()) return r;
  bool accumulated_negative = sgn(lb) < 0 && (steps % 2) == 1;
  make_primitive(r);
  if (!accumulated_negative)
    for (auto& c : r) c = -c;
  return r;
}

// Signed remainder chain of (p, p'). The last element is (a positive
// multiple of) gcd(p, p'), so for square-free p it is a nonzero constant.
std::vector<IntPoly> remainder_chain(IntPoly p) {
  std::vector<IntPoly> chain;
  chain.push_back(std::move(p));
  if (degree(chain[0]) < 1) return chain;
  IntPoly d = int_derivative(chain[0]);
  trim(d);
  chain.push_back(std::move(d));
  while (true) {
    IntPoly next = negated_remainder(chain[chain.size() - 2], chain.back());
    if (next.empty()) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

// Sign of p at num/den with den > 0, via homogenized Horner.
int sign_at(const IntPoly& p, const Rational& x) {
  if (p.empty()) return 0;
  const Integer& u = x.num();
  const Integer& w = x.den();
  Integer acc = p.back();
  Integer wp = 1;
  for (int i = degree(p) - 1; i >= 0; --i) {
    wp *= w;
    acc = acc * u + p[static_cast<std::size_t>(i)] * wp;
  }
  return sgn(acc);
}

int sign_at_pos_inf(const IntPoly& p) { return p.empty() ? 0 : sgn(p.back()); }

int sign_at_neg_inf(const IntPoly& p) {
  if (p.empty()) return 0;
  int s = sgn(p.back());
  return (degree(p) % 2 == 0) ? s : -s;
}

template <typename SignFn>
int variations(const std::vector<IntPoly>& chain, SignFn&& sign_of) {
  int v = 0, last = 0;
  for (const auto& q : chain) {
    int s = sign_of(q);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int variations_at(const std::vector<IntPoly>& chain, const std::optional<Rational>& point, bool lower) {
  if (point) return variations(chain, [&](const IntPoly& q) { return sign_at(q, *point); });
  if (lower) return variations(chain, sign_at_neg_inf);
  return variations(chain, sign_at_pos_inf);
}

void require_nonzero(const UniPoly& p, const char* who) {
  if (p.is_zero()) throw std::invalid_argument(std::string(who) + ": zero polynomial");
}

// Distinct real roots of p in the open interval. Finite endpoints that
// happen to be roots are divided out first, so the classical variation
// difference (which counts roots in a half-open interval) applies.
int count_distinct_roots(UniPoly p, const Interval& iv) {
  if (iv.lo && iv.hi && *iv.lo >= *iv.hi) return 0;
  for (const auto& endpoint : {iv.lo, iv.hi}) {
    if (!endpoint) continue;
    while (!p.is_zero() && p.degree() > 0 && evaluate(p, *endpoint).is_zero()) {
      UniPoly linear(std::vector<Rational>{-*endpoint, Rational(1)});
      p = divmod(p, linear).quotient;
    }
  }
  if (p.degree().value_or(0) == 0) return 0;
  auto chain = remainder_chain(primitive_from(p));
  return variations_at(chain, iv.lo, true) - variations_at(chain, iv.hi, false);
}

}  // namespace

UniPoly square_free_part(const UniPoly& p) {
  require_nonzero(p, "square_free_part");
  // The remainder chain of (p, p') ends at a positive multiple of gcd(p, p').
  IntPoly ip = primitive_from(p);
  auto chain = remainder_chain(ip);
  const IntPoly& g = chain.back();
  if (degree(g) == 0) {
    // already square-free: reuse the primitive form, leading coefficient > 0
    if (sgn(ip.back()) < 0)
      for (auto& c : ip) c = -c;
    return to_unipoly(ip);
  }
  UniPoly q = divmod(to_unipoly(ip), to_unipoly(g)).quotient;
  IntPoly result = primitive_from(q);
  if (sgn(result.back()) < 0)
    for (auto& c : result) c = -c;
  return to_unipoly(result);
}

SturmChain sturm_chain(const UniPoly& p) {
  require_nonzero(p, "sturm_chain");
  UniPoly sf = square_free_part(p);
  std::vector<IntPoly> chain = remainder_chain(primitive_from(sf));
  SturmChain out;
  out.seq.reserve(chain.size());
  for (const auto& q : chain) out.seq.push_back(to_unipoly(q));
  return out;
}

int count_real_roots(const UniPoly& p, const Interval& iv) {
  require_nonzero(p, "count_real_roots");
  return count_distinct_roots(p, iv);
}

bool is_real_rooted(const UniPoly& p) {
  require_nonzero(p, "is_real_rooted");
  int d = *p.degree();
  if (d == 0) return true;
  auto chain = remainder_chain(primitive_from(p));
  // last chain element ~ gcd(p, p'); the square-free part has degree d - deg(gcd)
  int square_free_degree = d - degree(chain.back());
  int count = variations_at(chain, std::nullopt, true) - variations_at(chain, std::nullopt, false);
  return count == square_free_degree;
}

bool all_roots_negative(const UniPoly& p) {
  require_nonzero(p, "all_roots_negative");
  if (p.coeff(0).is_zero()) return false;  // root at 0
  if (!is_real_rooted(p)) return false;
  return count_real_roots(p, Interval::above(0)) == 0;
}

}  // namespace hyp
