// Benchmark comparing the OpenMP scan kernels against their serial reference
// implementations: the quartic Pell-index search and the conic base-solution
// scan. Results must be identical; only the wall time differs.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pellq/general_pell.hpp"
#include "pellq/power_filter.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <class F>
double time_ms(F&& fn) {
  auto start = clock_type::now();
  fn();
  auto stop = clock_type::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void bench_search(std::uint64_t max_n) {
  pellq::SearchOptions opts;
  std::size_t serial_hits = 0, parallel_hits = 0;
  double serial_ms = time_ms([&] { serial_hits = pellq::search_quartic_serial(max_n, opts).size(); });
  double parallel_ms = time_ms([&] { parallel_hits = pellq::search_quartic(max_n, opts).size(); });
  std::printf("search_quartic   max_n=%-8llu serial %10.2f ms   omp %10.2f ms   speedup %5.2fx   %s\n",
              static_cast<unsigned long long>(max_n), serial_ms, parallel_ms,
              serial_ms / parallel_ms, serial_hits == parallel_hits ? "outputs match" : "MISMATCH");
}

void bench_base_solutions(std::uint64_t v_bound) {
  const pellq::ConicForm conic{pellq::BigInt(1), pellq::BigInt(2), pellq::BigInt(-1)};
  std::size_t serial_hits = 0, parallel_hits = 0;
  double serial_ms = time_ms([&] { serial_hits = pellq::base_solutions_serial(conic, v_bound).size(); });
  double parallel_ms = time_ms([&] { parallel_hits = pellq::base_solutions(conic, v_bound).size(); });
  std::printf("base_solutions   bound=%-8llu serial %10.2f ms   omp %10.2f ms   speedup %5.2fx   %s\n",
              static_cast<unsigned long long>(v_bound), serial_ms, parallel_ms,
              serial_ms / parallel_ms, serial_hits == parallel_hits ? "outputs match" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both columns run serially\n");
#endif
  std::uint64_t max_n = argc > 1 ? std::stoull(argv[1]) : 2000;
  std::uint64_t v_bound = argc > 2 ? std::stoull(argv[2]) : 2'000'000;

  bench_search(max_n / 4);
  bench_search(max_n);
  bench_base_solutions(v_bound / 4);
  bench_base_solutions(v_bound);
  return 0;
}
