#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "pellq/bigint.hpp"
#include "pellq/rational.hpp"

namespace pellq {

/// Thrown when two elements with different radicands meet in a binary operation.
class RadicandMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by as_integer when an element that should be a plain integer is not.
/// Either failure on a closed-form result means an implementation bug upstream.
class CollapseError : public std::runtime_error {
public:
  enum class Kind { nonzero_irrational_part, non_integral_rational_part };

  CollapseError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

/// Exact element a + b*sqrt(d) of the quadratic field Q(sqrt(d)).
///
/// The radicand is part of the value: d >= 2, not a perfect square, and equal
/// radicands are required for binary operations. Values are immutable.
class QuadElem {
public:
  QuadElem(Rational a, Rational b, BigInt d); // validates the radicand

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const BigInt& d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadElem operator-() const;
  friend QuadElem operator+(const QuadElem& u, const QuadElem& v);
  friend QuadElem operator-(const QuadElem& u, const QuadElem& v);
  friend QuadElem operator*(const QuadElem& u, const QuadElem& v);

  friend bool operator==(const QuadElem& u, const QuadElem& v) {
    return u.d_ == v.d_ && u.a_ == v.a_ && u.b_ == v.b_;
  }
  friend bool operator!=(const QuadElem& u, const QuadElem& v) { return !(u == v); }

  std::string to_string() const; // "a + b*sqrt(d)", e.g. "3/2 + 1/4*sqrt(2)"
  friend std::ostream& operator<<(std::ostream& os, const QuadElem& u);

private:
  Rational a_, b_;
  BigInt d_;
};

QuadElem conj(const QuadElem& u);
Rational norm(const QuadElem& u);            // a^2 - d*b^2
QuadElem inverse(const QuadElem& u);         // throws std::domain_error on zero
QuadElem pow(const QuadElem& u, std::int64_t n); // u^0 == 1; negative n via inverse

/// Collapse to a plain integer; requires b == 0 and an integral a.
BigInt as_integer(const QuadElem& u);

} // namespace pellq
