#include "pellq/power_filter.hpp"

#include <algorithm>
#include <array>

namespace pellq {
namespace {

template <std::size_t M>
constexpr std::array<bool, M> residue_table() {
  std::array<bool, M> is_residue{};
  for (std::size_t k = 0; k < M; ++k)
    is_residue[k * k % M] = true;
  return is_residue;
}

constexpr auto kSquareMod64 = residue_table<64>();
constexpr auto kSquareMod63 = residue_table<63>();
constexpr auto kSquareMod65 = residue_table<65>();

bool may_be_square(const BigInt& m) {
  return kSquareMod64[m.mod_u32(64)] && kSquareMod63[m.mod_u32(63)] &&
         kSquareMod65[m.mod_u32(65)];
}

// Walk one index block, collecting quartic hits; p enters at the block start.
void scan_block(PellPair p, std::uint64_t last_n, const SearchOptions& opts,
                std::vector<QuarticSolution>& hits) {
  while (true) {
    if (auto y = square_root_filtered(abs(p.t), opts.prefilter))
      hits.push_back(QuarticSolution{abs(p.x), std::move(*y), p.n, p.eps});
    if (p.n == last_n)
      break;
    p = step(p);
  }
}

// Order candidates by (n, +1 branch first), drop repeated (x, y) pairs.
std::vector<QuarticSolution> merge_candidates(std::vector<QuarticSolution> candidates) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const QuarticSolution& lhs, const QuarticSolution& rhs) {
                     if (lhs.n != rhs.n)
                       return lhs.n < rhs.n;
                     return lhs.eps > rhs.eps;
                   });
  std::vector<QuarticSolution> out;
  for (auto& cand : candidates) {
    bool seen = std::any_of(out.begin(), out.end(), [&cand](const QuarticSolution& s) {
      return s.x == cand.x && s.y == cand.y;
    });
    if (!seen)
      out.push_back(std::move(cand));
  }
  return out;
}

} // namespace

bool operator==(const QuarticSolution& lhs, const QuarticSolution& rhs) {
  return lhs.x == rhs.x && lhs.y == rhs.y && lhs.n == rhs.n && lhs.eps == rhs.eps;
}

std::optional<BigInt> square_root_filtered(const BigInt& m, bool prefilter) {
  if (m.is_negative())
    return std::nullopt;
  if (prefilter && !may_be_square(m))
    return std::nullopt;
  return is_perfect_square(m);
}

std::vector<QuarticSolution> search_quartic_serial(std::uint64_t max_n,
                                                   const SearchOptions& opts) {
  std::vector<QuarticSolution> candidates;
  for (int eps : {+1, -1}) {
    PellPair p = seed(eps);
    while (true) {
      if (auto y = square_root_filtered(abs(p.t), opts.prefilter))
        candidates.push_back(QuarticSolution{abs(p.x), std::move(*y), p.n, p.eps});
      if (p.n == max_n)
        break;
      p = step(p);
    }
  }
  return merge_candidates(std::move(candidates));
}

std::vector<QuarticSolution> search_quartic(std::uint64_t max_n, const SearchOptions& opts) {
  const std::uint64_t block = std::max<std::uint64_t>(opts.block_size, 1);
  const std::uint64_t blocks_per_branch = max_n / block + 1;

  // task index -> (branch, block); per-task hit vectors keep the merge deterministic
  const std::int64_t tasks = static_cast<std::int64_t>(2 * blocks_per_branch);
  std::vector<std::vector<QuarticSolution>> hits(static_cast<std::size_t>(tasks));

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t task = 0; task < tasks; ++task) {
    const int eps = task < static_cast<std::int64_t>(blocks_per_branch) ? +1 : -1;
    const std::uint64_t b =
        static_cast<std::uint64_t>(task) % blocks_per_branch;
    const std::uint64_t first = b * block;
    const std::uint64_t last = std::min(first + block - 1, max_n);
    scan_block(solution_at(first, eps), last, opts, hits[static_cast<std::size_t>(task)]);
  }

  std::vector<QuarticSolution> candidates;
  for (auto& chunk : hits)
    for (auto& hit : chunk)
      candidates.push_back(std::move(hit));
  return merge_candidates(std::move(candidates));
}

} // namespace pellq
