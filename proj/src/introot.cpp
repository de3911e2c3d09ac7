#include "pellq/introot.hpp"

#include <stdexcept>

namespace pellq {

BigInt isqrt(const BigInt& m) {
  if (m.is_negative())
    throw std::domain_error("isqrt: negative input");
  if (m.is_zero())
    return BigInt(0);
  if (m.bit_length() <= 2)
    return BigInt(1); // m in {1,2,3}

  // x0 = 2^ceil(bits/2) >= sqrt(m); Newton steps descend monotonically to floor(sqrt(m))
  BigInt x = BigInt(1) << ((m.bit_length() + 1) / 2);
  while (true) {
    BigInt next = (x + m / x) >> 1;
    if (next >= x)
      return x;
    x = std::move(next);
  }
}

std::optional<BigInt> is_perfect_square(const BigInt& m) {
  if (m.is_negative())
    return std::nullopt;
  BigInt r = isqrt(m);
  if (r * r == m)
    return r;
  return std::nullopt;
}

std::optional<BigInt> nth_root(const BigInt& m, std::int64_t k) {
  if (k < 1)
    throw std::invalid_argument("nth_root: k must be >= 1");
  if (m.is_negative())
    throw std::domain_error("nth_root: negative input");
  if (k == 1)
    return m;
  if (m.is_zero() || m.is_one())
    return m;
  if (k == 2)
    return is_perfect_square(m);
  if (static_cast<std::size_t>(k) >= m.bit_length())
    return std::nullopt; // m >= 2 and 2^k > m already

  const std::uint64_t uk = static_cast<std::uint64_t>(k);
  const BigInt bk(k);
  const BigInt bk1(k - 1);
  // Newton for floor(m^(1/k)), seeded above the root
  BigInt x = BigInt(1) << (m.bit_length() / uk + 1);
  while (true) {
    BigInt next = (bk1 * x + m / pow(x, uk - 1)) / bk;
    if (next >= x)
      break;
    x = std::move(next);
  }
  if (pow(x, uk) == m)
    return x;
  return std::nullopt;
}

} // namespace pellq
