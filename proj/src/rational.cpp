#include "pellq/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace pellq {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw std::domain_error("Rational: zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational operator+(const Rational& lhs, const Rational& rhs) {
  return Rational(lhs.num_ * rhs.den_ + rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
}

Rational operator-(const Rational& lhs, const Rational& rhs) {
  return Rational(lhs.num_ * rhs.den_ - rhs.num_ * lhs.den_, lhs.den_ * rhs.den_);
}

Rational operator*(const Rational& lhs, const Rational& rhs) {
  return Rational(lhs.num_ * rhs.num_, lhs.den_ * rhs.den_);
}

Rational operator/(const Rational& lhs, const Rational& rhs) {
  if (rhs.is_zero())
    throw std::domain_error("Rational: division by zero");
  return Rational(lhs.num_ * rhs.den_, lhs.den_ * rhs.num_);
}

std::string Rational::to_string() const {
  if (den_.is_one())
    return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

} // namespace pellq
