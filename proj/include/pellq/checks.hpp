#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pellq/pell_core.hpp"

namespace pellq {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

bool all_passed(const std::vector<CheckResult>& results);

/// Produces the recurrence sequence 0..max_n for a branch; swappable so tests
/// can inject a tampered recurrence and watch the checks catch it.
using GenerateFn = std::function<std::vector<PellPair>(int eps, std::uint64_t count)>;

/// Eigen-decomposition checks plus, for every n <= max_n on both branches:
/// recurrence, matrix power, closed form and binomial sum all agree, and the
/// Pell invariant x^2 - 2*t^2 = -1 holds. Failures name the first bad index.
std::vector<CheckResult> run_checks(std::uint64_t max_n, const GenerateFn& generate_fn = generate);

} // namespace pellq
