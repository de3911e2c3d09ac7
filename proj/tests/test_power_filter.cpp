#include <doctest.h>

#include <random>
#include <string>

#include "pellq/power_filter.hpp"

using namespace pellq;

namespace {

std::mt19937_64 rng(0x7f11e2u);

BigInt random_number(std::size_t digits) {
  std::string s;
  s.push_back(static_cast<char>('1' + rng() % 9));
  for (std::size_t i = 1; i < digits; ++i)
    s.push_back(static_cast<char>('0' + rng() % 10));
  return BigInt(s);
}

bool satisfies_quartic(const QuarticSolution& s) {
  return s.x * s.x == BigInt(2) * pow(s.y, 4) - BigInt(1);
}

} // namespace

TEST_CASE("search finds the two known solutions") {
  auto sols = search_quartic_serial(3);
  REQUIRE(sols.size() == 2);
  CHECK(sols[0].x == BigInt(1));
  CHECK(sols[0].y == BigInt(1));
  CHECK(sols[0].n == 0);
  CHECK(sols[1].x == BigInt(239));
  CHECK(sols[1].y == BigInt(13));
  CHECK(sols[1].n == 3);
  for (const auto& s : sols)
    CHECK(satisfies_quartic(s));
}

TEST_CASE("search at index zero") {
  auto sols = search_quartic_serial(0);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].x == BigInt(1));
  CHECK(sols[0].y == BigInt(1));
}

TEST_CASE("deeper searches stay at two solutions") {
  auto sols = search_quartic_serial(300);
  REQUIRE(sols.size() == 2);
  for (const auto& s : sols)
    CHECK(satisfies_quartic(s));
}

TEST_CASE("parallel kernel matches the serial reference") {
  for (std::uint64_t max_n : {0ull, 1ull, 5ull, 100ull, 700ull}) {
    for (std::uint64_t block : {1ull, 7ull, 128ull}) {
      SearchOptions opts;
      opts.block_size = block;
      auto serial = search_quartic_serial(max_n, opts);
      auto parallel = search_quartic(max_n, opts);
      CHECK(serial == parallel);
    }
  }
}

TEST_CASE("prefilter does not change the output") {
  SearchOptions plain;
  SearchOptions filtered;
  filtered.prefilter = true;
  CHECK(search_quartic_serial(400, plain) == search_quartic_serial(400, filtered));
  CHECK(search_quartic(400, plain) == search_quartic(400, filtered));
}

TEST_CASE("square_root_filtered equals is_perfect_square") {
  for (std::int64_t m = -50; m <= 20000; ++m) {
    BigInt v(m);
    CHECK(square_root_filtered(v, true) == is_perfect_square(v));
    CHECK(square_root_filtered(v, false) == is_perfect_square(v));
  }
  for (int iter = 0; iter < 200; ++iter) {
    BigInt r = random_number(30 + rng() % 40);
    BigInt m = r * r + BigInt(static_cast<std::int64_t>(rng() % 5) - 2);
    CHECK(square_root_filtered(m, true) == is_perfect_square(m));
  }
}
