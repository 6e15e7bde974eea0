#ifndef TROPLP_RATIONAL_HPP
#define TROPLP_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace troplp {

/// Exact rational number, always kept in canonical reduced form
/// (gcd(num, den) = 1, den > 0). Thin value wrapper around GMP's mpq_class;
/// the wrapper pins the construction and serialization contract.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Rational(const mpz_class& n) : q_(n) {}

  /// Parses "p/q" or "p" with optional leading '-'. Throws ParseError.
  static Rational parse(const std::string& text);

  /// Canonical form "p/q" with q > 0 (integers render as "p/1").
  std::string str() const;

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  Rational abs() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

private:
  mpq_class q_;
};

} // namespace troplp

#endif
