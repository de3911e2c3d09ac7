#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pellq {

/// Signed arbitrary-precision integer, sign-magnitude over 32-bit limbs.
///
/// Multiplication switches from schoolbook to Karatsuba above a threshold;
/// division is Knuth algorithm D. Quotients truncate toward zero and the
/// remainder carries the dividend's sign (same convention as built-in /, %).
class BigInt {
public:
  BigInt() = default;
  BigInt(std::int64_t value);
  explicit BigInt(std::string_view decimal); // throws std::invalid_argument

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  bool is_one() const;
  bool odd() const { return !mag_.empty() && (mag_[0] & 1u); }

  /// Number of significant bits of |*this|; 0 for zero.
  std::size_t bit_length() const;

  std::string to_string() const;

  /// |*this| mod m for a machine-word modulus, m != 0.
  std::uint32_t mod_u32(std::uint32_t m) const;

  /// Exact conversion; throws std::overflow_error if the value needs > 63 bits.
  std::int64_t to_int64() const;

  BigInt operator-() const;

  friend BigInt operator+(const BigInt& lhs, const BigInt& rhs);
  friend BigInt operator-(const BigInt& lhs, const BigInt& rhs);
  friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);
  friend BigInt operator/(const BigInt& lhs, const BigInt& rhs);
  friend BigInt operator%(const BigInt& lhs, const BigInt& rhs);

  BigInt& operator+=(const BigInt& rhs) { return *this = *this + rhs; }
  BigInt& operator-=(const BigInt& rhs) { return *this = *this - rhs; }
  BigInt& operator*=(const BigInt& rhs) { return *this = *this * rhs; }
  BigInt& operator/=(const BigInt& rhs) { return *this = *this / rhs; }
  BigInt& operator%=(const BigInt& rhs) { return *this = *this % rhs; }

  /// Single-pass quotient and remainder; throws std::domain_error on zero divisor.
  static void divmod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem);

  BigInt operator<<(std::size_t bits) const;
  BigInt operator>>(std::size_t bits) const; // arithmetic on magnitude, sign kept

  friend bool operator==(const BigInt& lhs, const BigInt& rhs);
  friend bool operator!=(const BigInt& lhs, const BigInt& rhs) { return !(lhs == rhs); }
  friend bool operator<(const BigInt& lhs, const BigInt& rhs);
  friend bool operator>(const BigInt& lhs, const BigInt& rhs) { return rhs < lhs; }
  friend bool operator<=(const BigInt& lhs, const BigInt& rhs) { return !(rhs < lhs); }
  friend bool operator>=(const BigInt& lhs, const BigInt& rhs) { return !(lhs < rhs); }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

  friend BigInt abs(BigInt v);

private:
  using Limbs = std::vector<std::uint32_t>;

  static int cmp(const BigInt& lhs, const BigInt& rhs);
  void trim();

  std::int8_t sign_ = 0; // -1, 0, +1
  Limbs mag_;            // little-endian magnitude, no high zero limbs; empty iff zero
};

BigInt abs(BigInt v);
BigInt gcd(BigInt a, BigInt b);
BigInt pow(BigInt base, std::uint64_t exp);

} // namespace pellq
