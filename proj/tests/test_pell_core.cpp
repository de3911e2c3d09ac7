#include <doctest.h>

#include <random>
#include <stdexcept>

#include "pellq/pell_core.hpp"

using namespace pellq;

namespace {

std::mt19937_64 rng(0x9e113u);

bool same_values(const PellPair& lhs, const PellPair& rhs) {
  return lhs.x == rhs.x && lhs.t == rhs.t;
}

PellPair pp(std::int64_t x, std::int64_t t, std::uint64_t n, int eps) {
  return PellPair{BigInt(x), BigInt(t), n, eps};
}

} // namespace

TEST_CASE("seed") {
  CHECK(seed(+1) == pp(1, 1, 0, +1));
  CHECK(seed(-1) == pp(1, -1, 0, -1));
  CHECK(pell_invariant_holds(seed(+1)));
  CHECK(pell_invariant_holds(seed(-1)));
  CHECK_THROWS_AS(seed(0), std::invalid_argument);
  CHECK_THROWS_AS(seed(2), std::invalid_argument);
}

TEST_CASE("step walks the recurrence") {
  PellPair p = seed(+1);
  p = step(p);
  CHECK(p == pp(7, 5, 1, +1));
  p = step(p);
  CHECK(p == pp(41, 29, 2, +1));
  p = step(p);
  CHECK(p == pp(239, 169, 3, +1));
}

TEST_CASE("generate") {
  auto plus = generate(+1, 3);
  REQUIRE(plus.size() == 4);
  CHECK(plus[0] == pp(1, 1, 0, +1));
  CHECK(plus[1] == pp(7, 5, 1, +1));
  CHECK(plus[2] == pp(41, 29, 2, +1));
  CHECK(plus[3] == pp(239, 169, 3, +1));

  auto minus = generate(-1, 1);
  REQUIRE(minus.size() == 2);
  CHECK(minus[0] == pp(1, -1, 0, -1));
  CHECK(minus[1] == pp(-1, -1, 1, -1));

  CHECK(generate(+1, 0).size() == 1);
}

TEST_CASE("mat_pow basics") {
  Mat2i identity{BigInt(1), BigInt(0), BigInt(0), BigInt(1)};
  CHECK(mat_pow(pell_matrix(), 0) == identity);
  CHECK(mat_pow(pell_matrix(), 1) == pell_matrix());
  Mat2i squared{BigInt(17), BigInt(24), BigInt(12), BigInt(17)};
  CHECK(mat_pow(pell_matrix(), 2) == squared);
}

TEST_CASE("mat_pow equals naive repeated multiplication") {
  Mat2i acc{BigInt(1), BigInt(0), BigInt(0), BigInt(1)};
  for (std::uint64_t n = 0; n <= 32; ++n) {
    CHECK(mat_pow(pell_matrix(), n) == acc);
    acc = acc * pell_matrix();
  }
}

TEST_CASE("mat_pow semigroup property") {
  for (int iter = 0; iter < 40; ++iter) {
    std::uint64_t m = rng() % 65;
    std::uint64_t n = rng() % 65;
    CHECK(mat_pow(pell_matrix(), m) * mat_pow(pell_matrix(), n) ==
          mat_pow(pell_matrix(), m + n));
  }
}

TEST_CASE("solution_at") {
  CHECK(same_values(solution_at(3, +1), pp(239, 169, 3, +1)));
  CHECK(solution_at(0, -1) == pp(1, -1, 0, -1));
  CHECK(same_values(solution_at(5, +1), pp(8119, 5741, 5, +1)));
  CHECK_THROWS_AS(solution_at(1, 0), std::invalid_argument);
}

TEST_CASE("closed_form_matrix") {
  Mat2i identity{BigInt(1), BigInt(0), BigInt(0), BigInt(1)};
  CHECK(collapse(closed_form_matrix(0)) == identity);
  CHECK(collapse(closed_form_matrix(1)) == pell_matrix());
  CHECK(collapse(closed_form_matrix(2)) == mat_pow(pell_matrix(), 2));
  for (std::uint64_t n = 0; n <= 100; ++n)
    CHECK(collapse(closed_form_matrix(n)) == mat_pow(pell_matrix(), n));
}

TEST_CASE("closed_form golden values") {
  CHECK(same_values(closed_form(0, +1), pp(1, 1, 0, +1)));
  CHECK(same_values(closed_form(3, +1), pp(239, 169, 3, +1)));
  CHECK(same_values(closed_form(2, -1), solution_at(2, -1)));
}

TEST_CASE("binomial_t") {
  CHECK(binomial_t(0, +1) == BigInt(1));
  CHECK(binomial_t(0, -1) == BigInt(-1));
  CHECK(binomial_t(1, +1) == BigInt(5)); // 3 + 2
  CHECK(binomial_t(3, +1) == BigInt(169));
}

TEST_CASE("four-way agreement to n = 200") {
  for (int eps : {+1, -1}) {
    auto seq = generate(eps, 200);
    for (std::uint64_t n = 0; n <= 200; ++n) {
      CHECK(same_values(seq[n], solution_at(n, eps)));
      CHECK(same_values(seq[n], closed_form(n, eps)));
      CHECK(binomial_t(n, eps) == seq[n].t);
    }
  }
}

TEST_CASE("pell invariant holds along every path") {
  for (int eps : {+1, -1}) {
    auto seq = generate(eps, 400);
    for (std::uint64_t n = 0; n <= 400; n += (n < 40 ? 1 : 37)) {
      CHECK(pell_invariant_holds(seq[n]));
      CHECK(pell_invariant_holds(solution_at(n, eps)));
      CHECK(pell_invariant_holds(closed_form(n, eps)));
    }
  }
}

TEST_CASE("branch reflection and monotonicity") {
  // eps = -1 pairs are the negated +1 pairs one index back:
  // (1 - sqrt2)*(3 + 2*sqrt2) = -(1 + sqrt2)
  for (std::uint64_t n = 1; n <= 50; ++n) {
    PellPair minus = solution_at(n, -1);
    PellPair plus = solution_at(n - 1, +1);
    CHECK(minus.x == -plus.x);
    CHECK(minus.t == -plus.t);
  }
  auto seq = generate(+1, 50);
  for (std::size_t i = 1; i < seq.size(); ++i) {
    CHECK(seq[i].x > seq[i - 1].x);
    CHECK(seq[i].t > seq[i - 1].t);
    CHECK(seq[i].x.sign() > 0);
    CHECK(seq[i].t.sign() > 0);
  }
}

TEST_CASE("eigen_check passes every item") {
  EigenReport report = eigen_check();
  CHECK(report.all_passed());
  REQUIRE(report.items.size() == 6);
  CHECK(report.items[0].name == "char_poly_lambda1");
  CHECK(report.items[1].name == "char_poly_lambda2");
  CHECK(report.items[2].name == "p_invertible");
  CHECK(report.items[3].name == "similarity_transform");
  CHECK(report.items[4].name == "eigenpair_1");
  CHECK(report.items[5].name == "eigenpair_2");
  for (const auto& item : report.items)
    CHECK(item.pass);
}

TEST_CASE("eigen vector product example") {
  // A*(2, sqrt2) = (6+4*sqrt2, 4+3*sqrt2) = (3+2*sqrt2)*(2, sqrt2)
  QuadElem two(Rational(2), Rational(0), BigInt(2));
  QuadElem root2(Rational(0), Rational(1), BigInt(2));
  QuadElem lambda(Rational(3), Rational(2), BigInt(2));
  QuadElem a11(Rational(3), Rational(0), BigInt(2));
  QuadElem a12(Rational(4), Rational(0), BigInt(2));
  QuadElem a21(Rational(2), Rational(0), BigInt(2));
  QuadElem a22(Rational(3), Rational(0), BigInt(2));
  CHECK(a11 * two + a12 * root2 == lambda * two);
  CHECK(a21 * two + a22 * root2 == lambda * root2);
}
