#include "troplp/rational.hpp"

#include <cctype>

#include "troplp/errors.hpp"

namespace troplp {

Rational::Rational(long num, long den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.q_ = ::abs(q_);
  return r;
}

namespace {

bool valid_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  return digits > 0 && i == s.size();
}

} // namespace

Rational Rational::parse(const std::string& text) {
  if (!valid_literal(text)) throw ParseError("invalid rational literal: '" + text + "'");
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw ParseError("invalid rational literal: '" + text + "'");
  if (q.get_den() == 0) throw ParseError("rational with zero denominator: '" + text + "'");
  q.canonicalize();
  Rational r;
  r.q_ = q;
  return r;
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

} // namespace troplp
