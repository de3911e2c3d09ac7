#include "pellq/general_pell.hpp"

#include <algorithm>
#include <stdexcept>

#include "pellq/introot.hpp"

namespace pellq {
namespace {

bool on_conic(const ConicForm& conic, const UV& s) {
  return conic.P * s.first * s.first - conic.Q * s.second * s.second == conic.R;
}

bool is_unit(const ConicForm& conic, const UV& unit) {
  return unit.first * unit.first - conic.P * conic.Q * unit.second * unit.second == BigInt(1);
}

// one application of the solution-preserving map
UV apply_unit(const ConicForm& conic, const UV& unit, const UV& s) {
  return UV{unit.first * s.first + conic.Q * unit.second * s.second,
            conic.P * unit.second * s.first + unit.first * s.second};
}

// candidates with v in [v_first, v_last]
void scan_v_range(const ConicForm& conic, std::uint64_t v_first, std::uint64_t v_last,
                  std::vector<UV>& out) {
  for (std::uint64_t v = v_first; v <= v_last; ++v) {
    BigInt bv(static_cast<std::int64_t>(v));
    BigInt rhs = conic.R + conic.Q * bv * bv; // P*u^2
    BigInt u_sq, rem;
    BigInt::divmod(rhs, conic.P, u_sq, rem);
    if (!rem.is_zero() || u_sq.is_negative())
      continue;
    if (auto u = is_perfect_square(u_sq))
      out.push_back(UV{std::move(*u), std::move(bv)});
  }
}

} // namespace

bool operator==(const EquationSpec& lhs, const EquationSpec& rhs) {
  return lhs.C == rhs.C && lhs.a == rhs.a && lhs.D == rhs.D && lhs.b == rhs.b && lhs.E == rhs.E;
}

bool operator==(const ConicForm& lhs, const ConicForm& rhs) {
  return lhs.P == rhs.P && lhs.Q == rhs.Q && lhs.R == rhs.R;
}

void validate_spec(const EquationSpec& spec) {
  if (spec.C.is_zero() || spec.D.is_zero() || spec.E.is_zero())
    throw std::invalid_argument("EquationSpec: C, D and E must be nonzero");
  if (spec.a < 1 || spec.b < 1)
    throw std::invalid_argument("EquationSpec: a and b must be >= 1");
}

ConicForm reduce_spec(const EquationSpec& spec) {
  validate_spec(spec);
  return ConicForm{spec.C, spec.D, spec.E};
}

CfExpansion cf_sqrt(const BigInt& d) {
  if (d < BigInt(2))
    throw std::invalid_argument("cf_sqrt: d must be >= 2");
  if (is_perfect_square(d))
    throw std::invalid_argument("cf_sqrt: d must not be a perfect square");

  // quadratic-surd recurrence; for sqrt(d) the period closes when the
  // denominator returns to 1
  const BigInt a0 = isqrt(d);
  CfExpansion cf{a0, {}};
  BigInt m(0), den(1), a = a0;
  while (true) {
    m = den * a - m;
    den = (d - m * m) / den;
    a = (a0 + m) / den;
    cf.period.push_back(a);
    if (den.is_one())
      return cf;
  }
}

std::pair<BigInt, BigInt> fundamental_unit(const BigInt& d) {
  CfExpansion cf = cf_sqrt(d);
  // convergents h_k/k_k of [a0; period repeating]; the first with
  // h^2 - d*k^2 = 1 is the fundamental unit
  BigInt h_prev(1), h_prev2(0);
  BigInt k_prev(0), k_prev2(1);
  BigInt term = cf.a0;
  std::size_t i = 0;
  while (true) {
    BigInt h = term * h_prev + h_prev2;
    BigInt k = term * k_prev + k_prev2;
    if (k.sign() > 0 && h * h - d * k * k == BigInt(1))
      return {h, k};
    h_prev2 = std::move(h_prev);
    h_prev = std::move(h);
    k_prev2 = std::move(k_prev);
    k_prev = std::move(k);
    term = cf.period[i % cf.period.size()];
    ++i;
    if (i > 4 * cf.period.size() + 4)
      throw std::logic_error("fundamental_unit: no unit among convergents");
  }
}

std::vector<UV> base_solutions_serial(const ConicForm& conic, std::uint64_t v_bound) {
  std::vector<UV> out;
  scan_v_range(conic, 0, v_bound, out);
  return out;
}

std::vector<UV> base_solutions(const ConicForm& conic, std::uint64_t v_bound) {
  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = v_bound / kChunk + 1;
  std::vector<std::vector<UV>> found(chunks);

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::uint64_t first = static_cast<std::uint64_t>(c) * kChunk;
    const std::uint64_t last = std::min(first + kChunk - 1, v_bound);
    scan_v_range(conic, first, last, found[static_cast<std::size_t>(c)]);
  }

  std::vector<UV> out;
  for (auto& chunk : found)
    for (auto& uv : chunk)
      out.push_back(std::move(uv));
  return out;
}

std::vector<UV> generate_family(const ConicForm& conic, const UV& base, const UV& unit,
                                std::uint64_t count) {
  if (!on_conic(conic, base))
    throw std::invalid_argument("generate_family: base does not satisfy the conic");
  if (!is_unit(conic, unit))
    throw std::invalid_argument("generate_family: unit does not satisfy p^2 - P*Q*q^2 = 1");
  std::vector<UV> family;
  family.reserve(count + 1);
  family.push_back(base);
  for (std::uint64_t i = 0; i < count; ++i)
    family.push_back(apply_unit(conic, unit, family.back()));
  return family;
}

std::vector<UV> solve_general(const EquationSpec& spec, const SolveOptions& opts) {
  validate_spec(spec);
  const ConicForm conic = reduce_spec(spec);
  std::vector<UV> bases = base_solutions(conic, opts.v_bound);

  const BigInt pq = conic.P * conic.Q;
  std::vector<UV> conic_solutions;
  if (pq.sign() > 0 && !is_perfect_square(pq)) {
    const UV unit = fundamental_unit(pq);
    std::vector<std::vector<UV>> families(bases.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(bases.size()); ++i)
      families[static_cast<std::size_t>(i)] =
          generate_family(conic, bases[static_cast<std::size_t>(i)], unit, opts.family_count);
    for (auto& family : families)
      for (auto& uv : family)
        conic_solutions.push_back(std::move(uv));
  } else {
    // ellipse-type or degenerate conic: the bounded scan is all we use
    conic_solutions = std::move(bases);
  }

  std::vector<UV> solutions;
  for (const auto& [u, v] : conic_solutions) {
    auto x = nth_root(u, spec.a);
    if (!x)
      continue;
    auto y = nth_root(v, spec.b);
    if (!y)
      continue;
    if (!opts.allow_zero && (x->is_zero() || y->is_zero()))
      continue;
    solutions.push_back(UV{std::move(*x), std::move(*y)});
  }

  std::sort(solutions.begin(), solutions.end());
  solutions.erase(std::unique(solutions.begin(), solutions.end()), solutions.end());
  return solutions;
}

} // namespace pellq
