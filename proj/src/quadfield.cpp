#include "pellq/quadfield.hpp"

#include <ostream>
#include <utility>

#include "pellq/introot.hpp"

namespace pellq {
namespace {

void require_same_radicand(const QuadElem& u, const QuadElem& v) {
  if (u.d() != v.d())
    throw RadicandMismatch("QuadElem: radicand mismatch: sqrt(" + u.d().to_string() +
                           ") vs sqrt(" + v.d().to_string() + ")");
}

} // namespace

QuadElem::QuadElem(Rational a, Rational b, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ < BigInt(2))
    throw std::invalid_argument("QuadElem: radicand must be >= 2");
  if (is_perfect_square(d_))
    throw std::invalid_argument("QuadElem: radicand must not be a perfect square");
}

QuadElem QuadElem::operator-() const { return QuadElem(-a_, -b_, d_); }

QuadElem operator+(const QuadElem& u, const QuadElem& v) {
  require_same_radicand(u, v);
  return QuadElem(u.a_ + v.a_, u.b_ + v.b_, u.d_);
}

QuadElem operator-(const QuadElem& u, const QuadElem& v) {
  require_same_radicand(u, v);
  return QuadElem(u.a_ - v.a_, u.b_ - v.b_, u.d_);
}

QuadElem operator*(const QuadElem& u, const QuadElem& v) {
  require_same_radicand(u, v);
  Rational d(u.d_);
  return QuadElem(u.a_ * v.a_ + d * u.b_ * v.b_, u.a_ * v.b_ + u.b_ * v.a_, u.d_);
}

QuadElem conj(const QuadElem& u) { return QuadElem(u.a(), -u.b(), u.d()); }

Rational norm(const QuadElem& u) { return u.a() * u.a() - Rational(u.d()) * u.b() * u.b(); }

QuadElem inverse(const QuadElem& u) {
  if (u.is_zero())
    throw std::domain_error("QuadElem: division by zero");
  Rational n = norm(u); // nonzero: d is irrational, so norm vanishes only at zero
  return QuadElem(u.a() / n, -u.b() / n, u.d());
}

QuadElem pow(const QuadElem& u, std::int64_t n) {
  QuadElem result(Rational(1), Rational(0), u.d());
  QuadElem base = n < 0 ? inverse(u) : u;
  std::uint64_t e = n < 0 ? ~static_cast<std::uint64_t>(n) + 1 : static_cast<std::uint64_t>(n);
  while (e > 0) {
    if (e & 1)
      result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

BigInt as_integer(const QuadElem& u) {
  if (!u.b().is_zero())
    throw CollapseError(CollapseError::Kind::nonzero_irrational_part,
                        "as_integer: nonzero irrational part in " + u.to_string());
  if (!u.a().is_integer())
    throw CollapseError(CollapseError::Kind::non_integral_rational_part,
                        "as_integer: non-integral rational part in " + u.to_string());
  return u.a().num();
}

std::string QuadElem::to_string() const {
  std::string s = a_.to_string();
  if (b_.num().is_negative())
    s += " - " + (-b_).to_string();
  else
    s += " + " + b_.to_string();
  s += "*sqrt(" + d_.to_string() + ")";
  return s;
}

std::ostream& operator<<(std::ostream& os, const QuadElem& u) { return os << u.to_string(); }

} // namespace pellq
