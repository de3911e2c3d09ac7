#pragma once

#include <iosfwd>
#include <string>

#include "pellq/bigint.hpp"

namespace pellq {

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}
  Rational(BigInt num, BigInt den); // throws std::domain_error on zero denominator

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }

  Rational operator-() const;
  friend Rational operator+(const Rational& lhs, const Rational& rhs);
  friend Rational operator-(const Rational& lhs, const Rational& rhs);
  friend Rational operator*(const Rational& lhs, const Rational& rhs);
  friend Rational operator/(const Rational& lhs, const Rational& rhs);

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend bool operator!=(const Rational& lhs, const Rational& rhs) { return !(lhs == rhs); }

  std::string to_string() const; // "num/den", or just "num" for integers
  friend std::ostream& operator<<(std::ostream& os, const Rational& v);

private:
  void reduce();

  BigInt num_;
  BigInt den_; // > 0, gcd(|num|, den) == 1
};

} // namespace pellq
