#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pellq/bigint.hpp"

namespace pellq {

/// Parameters of C*X^(2a) = D*Y^(2b) + E with C, D, E nonzero and a, b >= 1.
struct EquationSpec {
  BigInt C;
  std::int64_t a = 1;
  BigInt D;
  std::int64_t b = 1;
  BigInt E;
};

bool operator==(const EquationSpec& lhs, const EquationSpec& rhs);

/// Throws std::invalid_argument unless C, D, E != 0 and a, b >= 1.
void validate_spec(const EquationSpec& spec);

/// The conic P*U^2 - Q*V^2 = R obtained by substituting U = X^a, V = Y^b.
struct ConicForm {
  BigInt P;
  BigInt Q;
  BigInt R;
};

bool operator==(const ConicForm& lhs, const ConicForm& rhs);

using UV = std::pair<BigInt, BigInt>;

/// A solution family: a base pair on the conic plus the unit that maps
/// solutions to solutions, (u, v) -> (p*u + Q*q*v, P*q*u + p*v).
struct PellClass {
  UV base; // P*u^2 - Q*v^2 = R
  UV unit; // p^2 - P*Q*q^2 = 1
};

ConicForm reduce_spec(const EquationSpec& spec);

/// Continued-fraction expansion sqrt(d) = [a0; period...] with the minimal
/// repeating block. Requires d >= 2 and nonsquare.
struct CfExpansion {
  BigInt a0;
  std::vector<BigInt> period;
};

CfExpansion cf_sqrt(const BigInt& d);

/// Minimal positive (p, q) with p^2 - d*q^2 = 1, from the convergents of cf_sqrt.
std::pair<BigInt, BigInt> fundamental_unit(const BigInt& d);

/// All (u, v) with 0 <= v <= v_bound, u >= 0 and P*u^2 - Q*v^2 = R, by solving
/// for u^2 at each v and testing squareness. Serial reference implementation.
std::vector<UV> base_solutions_serial(const ConicForm& conic, std::uint64_t v_bound);

/// Same output as base_solutions_serial; OpenMP kernel over v ranges with a
/// deterministic ordered merge.
std::vector<UV> base_solutions(const ConicForm& conic, std::uint64_t v_bound);

/// base, then count applications of the unit map. Throws std::invalid_argument
/// if base is not on the conic or unit is not a unit for P*Q.
std::vector<UV> generate_family(const ConicForm& conic, const UV& base, const UV& unit,
                                std::uint64_t count);

struct SolveOptions {
  std::uint64_t v_bound = 1'000'000;
  std::uint64_t family_count = 64;
  bool allow_zero = false; // admit X = 0 or Y = 0 components
};

/// Reduce the equation to its conic, enumerate base solutions up to v_bound,
/// expand each by the fundamental-unit family when P*Q is positive and
/// nonsquare (bounded brute force otherwise), then keep pairs where both
/// X = u^(1/a) and Y = v^(1/b) are exact. Sorted and deduplicated; results are
/// the solutions found within the bounds, with no completeness claim.
std::vector<UV> solve_general(const EquationSpec& spec, const SolveOptions& opts = {});

} // namespace pellq
