#include <hyp/rational.hpp>

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace hyp {

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer falling_factorial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i) r *= Integer(n - i);
  return r;
}

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
  if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::from_string(std::string_view text) {
  auto is_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  // strip surrounding whitespace
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text, true)) throw std::invalid_argument("Rational: bad literal '" + std::string(text) + "'");
    return Rational(Integer(std::string(text)));
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!is_int(num, true) || !is_int(den, false))
    throw std::invalid_argument("Rational: bad literal '" + std::string(text) + "'");
  Integer d{std::string(den)};
  if (sgn(d) == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
  return Rational(Integer{std::string(num)}, d);
}

Rational pow(const Rational& base, unsigned exp) {
  if (exp == 0) return 1;
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), exp);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exp);
  return Rational(n, d);  // gcd(n,d)=1 is preserved by powering
}

Rational abs(const Rational& v) { return v.sign() < 0 ? -v : v; }

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

}  // namespace hyp
