#pragma once

#include <optional>

#include "pellq/bigint.hpp"

namespace pellq {

/// Largest r with r*r <= m. Newton iteration seeded from the bit length,
/// terminated by monotone descent. Throws std::domain_error for m < 0.
BigInt isqrt(const BigInt& m);

/// The square root if m is a perfect square, absent otherwise (all m < 0 included).
std::optional<BigInt> is_perfect_square(const BigInt& m);

/// r with r^k == m exactly, absent if m is not a perfect k-th power.
/// Requires m >= 0; throws std::invalid_argument for k < 1.
std::optional<BigInt> nth_root(const BigInt& m, std::int64_t k);

} // namespace pellq
