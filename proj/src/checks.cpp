#include "pellq/checks.hpp"

namespace pellq {
namespace {

std::string pair_str(const PellPair& p) {
  return "(" + p.x.to_string() + ", " + p.t.to_string() + ")";
}

} // namespace

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.pass)
      return false;
  }
  return true;
}

std::vector<CheckResult> run_checks(std::uint64_t max_n, const GenerateFn& generate_fn) {
  std::vector<CheckResult> results;

  EigenReport eigen = eigen_check();
  for (const auto& item : eigen.items)
    results.push_back({"eigen/" + item.name, item.pass, item.detail});

  bool agreement = true;
  bool invariant = true;
  std::string agreement_detail;
  std::string invariant_detail;
  for (int eps : {+1, -1}) {
    std::vector<PellPair> seq = generate_fn(eps, max_n);
    for (std::uint64_t n = 0; n <= max_n && (agreement || invariant); ++n) {
      const PellPair& rec = seq[n];
      if (invariant && !pell_invariant_holds(rec)) {
        invariant = false;
        invariant_detail = "first failure at n=" + std::to_string(n) +
                           ", eps=" + std::to_string(eps) + ": " + pair_str(rec);
      }
      if (!agreement)
        continue;
      PellPair mat = solution_at(n, eps);
      PellPair closed = closed_form(n, eps);
      BigInt binom = binomial_t(n, eps);
      if (mat.x != rec.x || mat.t != rec.t || closed.x != rec.x || closed.t != rec.t ||
          binom != rec.t) {
        agreement = false;
        agreement_detail = "first failure at n=" + std::to_string(n) +
                           ", eps=" + std::to_string(eps) + ": recurrence " + pair_str(rec) +
                           ", matrix " + pair_str(mat) + ", closed form " + pair_str(closed) +
                           ", binomial t=" + binom.to_string();
      }
    }
  }

  const std::string range = "n <= " + std::to_string(max_n) + ", both branches";
  results.push_back({"four_way_agreement", agreement,
                     agreement ? "recurrence = matrix power = closed form = binomial sum, " + range
                               : agreement_detail});
  results.push_back(
      {"pell_invariant", invariant,
       invariant ? "x^2 - 2*t^2 = -1, " + range : invariant_detail});
  return results;
}

} // namespace pellq
