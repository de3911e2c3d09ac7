#include "pellq/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace pellq {
namespace {

using Limbs = std::vector<std::uint32_t>;

constexpr std::uint64_t kBase = std::uint64_t(1) << 32;
constexpr std::size_t kKaratsubaThreshold = 48;

void trim_limbs(Limbs& a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

int cmp_mag(const Limbs& a, const Limbs& b) {
  if (a.size() != b.size())
    return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i])
      return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Limbs add_mag(const Limbs& a, const Limbs& b) {
  const Limbs& lo = a.size() <= b.size() ? a : b;
  const Limbs& hi = a.size() <= b.size() ? b : a;
  Limbs r(hi.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
    r[i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
  }
  r[hi.size()] = static_cast<std::uint32_t>(carry);
  trim_limbs(r);
  return r;
}

// requires |a| >= |b|
Limbs sub_mag(const Limbs& a, const Limbs& b) {
  Limbs r(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t s = std::int64_t(a[i]) - borrow - (i < b.size() ? std::int64_t(b[i]) : 0);
    if (s < 0) {
      s += std::int64_t(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<std::uint32_t>(s);
  }
  trim_limbs(r);
  return r;
}

// acc[shift..] += v, acc must be large enough to absorb the carry
void add_shifted(Limbs& acc, const Limbs& v, std::size_t shift) {
  std::uint64_t carry = 0;
  std::size_t i = 0;
  for (; i < v.size(); ++i) {
    std::uint64_t s = std::uint64_t(acc[shift + i]) + v[i] + carry;
    acc[shift + i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
  }
  while (carry) {
    std::uint64_t s = std::uint64_t(acc[shift + i]) + carry;
    acc[shift + i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
    ++i;
  }
}

Limbs mul_mag(const Limbs& a, const Limbs& b);

Limbs mul_schoolbook(const Limbs& a, const Limbs& b) {
  Limbs r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t ai = a[i];
    if (ai == 0)
      continue;
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = r[i + j] + ai * b[j] + carry;
      r[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    r[i + b.size()] = static_cast<std::uint32_t>(carry);
  }
  trim_limbs(r);
  return r;
}

Limbs mul_karatsuba(const Limbs& a, const Limbs& b) {
  const std::size_t m = (std::max(a.size(), b.size()) + 1) / 2;
  const std::size_t am = std::min(m, a.size());
  const std::size_t bm = std::min(m, b.size());
  Limbs a0(a.begin(), a.begin() + am);
  Limbs a1(a.begin() + am, a.end());
  Limbs b0(b.begin(), b.begin() + bm);
  Limbs b1(b.begin() + bm, b.end());
  trim_limbs(a0);
  trim_limbs(b0);

  Limbs z0 = mul_mag(a0, b0);
  Limbs z2 = mul_mag(a1, b1);
  Limbs z1 = sub_mag(sub_mag(mul_mag(add_mag(a0, a1), add_mag(b0, b1)), z0), z2);

  Limbs r(a.size() + b.size() + 1, 0);
  add_shifted(r, z0, 0);
  add_shifted(r, z1, m);
  add_shifted(r, z2, 2 * m);
  trim_limbs(r);
  return r;
}

Limbs mul_mag(const Limbs& a, const Limbs& b) {
  if (a.empty() || b.empty())
    return {};
  if (std::min(a.size(), b.size()) < kKaratsubaThreshold)
    return mul_schoolbook(a, b);
  return mul_karatsuba(a, b);
}

Limbs shl_mag(const Limbs& a, std::size_t bits) {
  if (a.empty())
    return {};
  const std::size_t limb_shift = bits / 32;
  const unsigned bit_shift = bits % 32;
  Limbs r(a.size() + limb_shift + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t v = std::uint64_t(a[i]) << bit_shift;
    r[i + limb_shift] |= static_cast<std::uint32_t>(v);
    r[i + limb_shift + 1] |= static_cast<std::uint32_t>(v >> 32);
  }
  trim_limbs(r);
  return r;
}

Limbs shr_mag(const Limbs& a, std::size_t bits) {
  const std::size_t limb_shift = bits / 32;
  const unsigned bit_shift = bits % 32;
  if (limb_shift >= a.size())
    return {};
  Limbs r(a.size() - limb_shift, 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t v = a[i + limb_shift] >> bit_shift;
    if (bit_shift && i + limb_shift + 1 < a.size())
      v |= std::uint64_t(a[i + limb_shift + 1]) << (32 - bit_shift);
    r[i] = static_cast<std::uint32_t>(v);
  }
  trim_limbs(r);
  return r;
}

// Knuth algorithm D (cf. Hacker's Delight divmnu), 32-bit digits.
void divmod_mag(const Limbs& u, const Limbs& v, Limbs& q, Limbs& r) {
  assert(!v.empty());
  if (cmp_mag(u, v) < 0) {
    q.clear();
    r = u;
    return;
  }
  if (v.size() == 1) {
    const std::uint64_t d = v[0];
    std::uint64_t rem = 0;
    q.assign(u.size(), 0);
    for (std::size_t i = u.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | u[i];
      q[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    trim_limbs(q);
    r.clear();
    if (rem)
      r.push_back(static_cast<std::uint32_t>(rem));
    return;
  }

  const std::size_t n = v.size();
  const std::size_t m = u.size() - n;
  const unsigned s = std::countl_zero(v.back());

  Limbs vn = shl_mag(v, s);
  vn.resize(n, 0); // shl_mag cannot spill: top limb keeps its high bit inside
  Limbs un = shl_mag(u, s);
  un.resize(u.size() + 1, 0);

  q.assign(m + 1, 0);
  for (std::size_t j = m + 1; j-- > 0;) {
    std::uint64_t num = (std::uint64_t(un[j + n]) << 32) | un[j + n - 1];
    std::uint64_t qhat = num / vn[n - 1];
    std::uint64_t rhat = num % vn[n - 1];
    while (qhat >= kBase ||
           qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
      --qhat;
      rhat += vn[n - 1];
      if (rhat >= kBase)
        break;
    }

    // multiply and subtract
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t p = qhat * vn[i] + carry;
      carry = p >> 32;
      std::int64_t t = std::int64_t(un[i + j]) - borrow - std::int64_t(p & 0xffffffffu);
      if (t < 0) {
        t += std::int64_t(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      un[i + j] = static_cast<std::uint32_t>(t);
    }
    std::int64_t top = std::int64_t(un[j + n]) - borrow - std::int64_t(carry);
    if (top < 0) {
      // qhat was one too large; add the divisor back
      --qhat;
      std::uint64_t c2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t t2 = std::uint64_t(un[i + j]) + vn[i] + c2;
        un[i + j] = static_cast<std::uint32_t>(t2);
        c2 = t2 >> 32;
      }
      top += std::int64_t(c2);
    }
    un[j + n] = static_cast<std::uint32_t>(top);
    q[j] = static_cast<std::uint32_t>(qhat);
  }

  trim_limbs(q);
  un.resize(n);
  r = shr_mag(un, s);
}

} // namespace

BigInt::BigInt(std::int64_t value) {
  if (value == 0)
    return;
  sign_ = value < 0 ? -1 : 1;
  // avoid UB on INT64_MIN
  std::uint64_t mag = value < 0 ? ~static_cast<std::uint64_t>(value) + 1 : static_cast<std::uint64_t>(value);
  mag_.push_back(static_cast<std::uint32_t>(mag));
  if (mag >> 32)
    mag_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

BigInt::BigInt(std::string_view decimal) {
  std::string_view s = decimal;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  if (s.empty())
    throw std::invalid_argument("BigInt: empty decimal string");
  for (char c : s) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("BigInt: invalid decimal digit");
  }
  BigInt acc;
  std::size_t i = 0;
  while (i < s.size()) {
    const std::size_t chunk = std::min<std::size_t>(9, s.size() - i);
    std::uint32_t piece = 0;
    std::uint32_t scale = 1;
    for (std::size_t k = 0; k < chunk; ++k) {
      piece = piece * 10 + static_cast<std::uint32_t>(s[i + k] - '0');
      scale *= 10;
    }
    acc = acc * BigInt(std::int64_t(scale)) + BigInt(std::int64_t(piece));
    i += chunk;
  }
  *this = acc;
  if (negative && sign_ != 0)
    sign_ = -1;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

std::size_t BigInt::bit_length() const {
  if (mag_.empty())
    return 0;
  return 32 * (mag_.size() - 1) + (32 - std::countl_zero(mag_.back()));
}

void BigInt::trim() {
  trim_limbs(mag_);
  if (mag_.empty())
    sign_ = 0;
}

int BigInt::cmp(const BigInt& lhs, const BigInt& rhs) {
  if (lhs.sign_ != rhs.sign_)
    return lhs.sign_ < rhs.sign_ ? -1 : 1;
  const int c = cmp_mag(lhs.mag_, rhs.mag_);
  return lhs.sign_ >= 0 ? c : -c;
}

bool operator==(const BigInt& lhs, const BigInt& rhs) {
  return lhs.sign_ == rhs.sign_ && lhs.mag_ == rhs.mag_;
}

bool operator<(const BigInt& lhs, const BigInt& rhs) { return BigInt::cmp(lhs, rhs) < 0; }

BigInt BigInt::operator-() const {
  BigInt r = *this;
  r.sign_ = static_cast<std::int8_t>(-r.sign_);
  return r;
}

BigInt operator+(const BigInt& lhs, const BigInt& rhs) {
  if (lhs.sign_ == 0)
    return rhs;
  if (rhs.sign_ == 0)
    return lhs;
  BigInt r;
  if (lhs.sign_ == rhs.sign_) {
    r.mag_ = add_mag(lhs.mag_, rhs.mag_);
    r.sign_ = lhs.sign_;
    return r;
  }
  const int c = cmp_mag(lhs.mag_, rhs.mag_);
  if (c == 0)
    return BigInt();
  if (c > 0) {
    r.mag_ = sub_mag(lhs.mag_, rhs.mag_);
    r.sign_ = lhs.sign_;
  } else {
    r.mag_ = sub_mag(rhs.mag_, lhs.mag_);
    r.sign_ = rhs.sign_;
  }
  return r;
}

BigInt operator-(const BigInt& lhs, const BigInt& rhs) { return lhs + (-rhs); }

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
  BigInt r;
  if (lhs.sign_ == 0 || rhs.sign_ == 0)
    return r;
  r.mag_ = mul_mag(lhs.mag_, rhs.mag_);
  r.sign_ = static_cast<std::int8_t>(lhs.sign_ * rhs.sign_);
  return r;
}

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem) {
  if (den.sign_ == 0)
    throw std::domain_error("BigInt: division by zero");
  Limbs q, r;
  divmod_mag(num.mag_, den.mag_, q, r);
  quot.mag_ = std::move(q);
  quot.sign_ = quot.mag_.empty() ? 0 : static_cast<std::int8_t>(num.sign_ * den.sign_);
  rem.mag_ = std::move(r);
  rem.sign_ = rem.mag_.empty() ? 0 : num.sign_;
}

BigInt operator/(const BigInt& lhs, const BigInt& rhs) {
  BigInt q, r;
  BigInt::divmod(lhs, rhs, q, r);
  return q;
}

BigInt operator%(const BigInt& lhs, const BigInt& rhs) {
  BigInt q, r;
  BigInt::divmod(lhs, rhs, q, r);
  return r;
}

BigInt BigInt::operator<<(std::size_t bits) const {
  BigInt r;
  r.mag_ = shl_mag(mag_, bits);
  r.sign_ = r.mag_.empty() ? 0 : sign_;
  return r;
}

BigInt BigInt::operator>>(std::size_t bits) const {
  BigInt r;
  r.mag_ = shr_mag(mag_, bits);
  r.sign_ = r.mag_.empty() ? 0 : sign_;
  return r;
}

std::uint32_t BigInt::mod_u32(std::uint32_t m) const {
  if (m == 0)
    throw std::domain_error("BigInt: zero modulus");
  std::uint64_t rem = 0;
  for (std::size_t i = mag_.size(); i-- > 0;)
    rem = ((rem << 32) | mag_[i]) % m;
  return static_cast<std::uint32_t>(rem);
}

std::int64_t BigInt::to_int64() const {
  if (bit_length() > 63)
    throw std::overflow_error("BigInt: value does not fit in int64");
  std::uint64_t v = 0;
  for (std::size_t i = mag_.size(); i-- > 0;)
    v = (v << 32) | mag_[i];
  return sign_ < 0 ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
}

std::string BigInt::to_string() const {
  if (sign_ == 0)
    return "0";
  // peel 9 decimal digits at a time
  Limbs cur = mag_;
  std::string digits;
  const Limbs nine(1, 1000000000u);
  while (!cur.empty()) {
    Limbs q, r;
    divmod_mag(cur, nine, q, r);
    std::uint32_t piece = r.empty() ? 0 : r[0];
    for (int k = 0; k < 9; ++k) {
      digits.push_back(static_cast<char>('0' + piece % 10));
      piece /= 10;
    }
    cur = std::move(q);
  }
  while (digits.size() > 1 && digits.back() == '0')
    digits.pop_back();
  if (sign_ < 0)
    digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

BigInt abs(BigInt v) {
  if (v.sign_ < 0)
    v.sign_ = 1;
  return v;
}

BigInt gcd(BigInt a, BigInt b) {
  a = abs(std::move(a));
  b = abs(std::move(b));
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInt pow(BigInt base, std::uint64_t exp) {
  BigInt result(1);
  while (exp > 0) {
    if (exp & 1)
      result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

} // namespace pellq
