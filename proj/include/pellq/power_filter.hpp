#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pellq/bigint.hpp"
#include "pellq/introot.hpp"
#include "pellq/pell_core.hpp"

namespace pellq {

/// One positive solution of x^2 = 2*y^4 - 1, with the Pell index and branch
/// it came from.
struct QuarticSolution {
  BigInt x;
  BigInt y;
  std::uint64_t n = 0;
  int eps = +1;
};

bool operator==(const QuarticSolution& lhs, const QuarticSolution& rhs);

struct SearchOptions {
  /// Reject obvious non-squares by quadratic-residue tables mod 64, 63 and 65
  /// before the isqrt. Output-equivalent to the plain path; off by default.
  bool prefilter = false;
  /// Indices per parallel work unit in the OpenMP kernel.
  std::uint64_t block_size = 128;
};

/// Square test with the optional modular pre-rejection in front of isqrt.
std::optional<BigInt> square_root_filtered(const BigInt& m, bool prefilter);

/// Scan Pell indices 0..max_n on both branches, keep pairs whose |t| is a
/// perfect square y^2, normalize signs, deduplicate (x, y) across branches,
/// and sort by source index. Serial reference implementation.
std::vector<QuarticSolution> search_quartic_serial(std::uint64_t max_n,
                                                   const SearchOptions& opts = {});

/// Same contract and output as search_quartic_serial; OpenMP kernel that scans
/// disjoint index blocks concurrently (each block jump-started via solution_at)
/// and merges deterministically.
std::vector<QuarticSolution> search_quartic(std::uint64_t max_n, const SearchOptions& opts = {});

} // namespace pellq
