// Exact rational coefficient type backed by GMP.
#ifndef HYP_RATIONAL_HPP
#define HYP_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hyp {

using Integer = mpz_class;

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
// n * (n-1) * ... * (n-k+1); equals n!/(n-k)! for k <= n.
Integer falling_factorial(unsigned n, unsigned k);

// Rational number kept in canonical form: denominator > 0 and
// gcd(|numerator|, denominator) = 1. Every constructor canonicalizes;
// arithmetic delegates to GMP, which preserves canonical form.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(Integer(v)) {}
  Rational(const Integer& v) : q_(v) {}
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
  Rational(double) = delete;

  // Accepts "p", "p/q", optionally signed; throws std::invalid_argument.
  static Rational from_string(std::string_view text);

  const Integer& num() const { return q_.get_num(); }
  const Integer& den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  std::string str() const { return q_.get_str(); }
  const mpq_class& value() const { return q_; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) { Rational r(a); r /= b; return r; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}  // already canonical
  mpq_class q_;
};

Rational pow(const Rational& base, unsigned exp);
Rational abs(const Rational& v);
std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace hyp

#endif
