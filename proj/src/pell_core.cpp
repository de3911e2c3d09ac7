#include "pellq/pell_core.hpp"

#include <stdexcept>
#include <utility>

namespace pellq {
namespace {

const BigInt kTwo(2);

QuadElem q2(Rational a, Rational b) { return QuadElem(std::move(a), std::move(b), kTwo); }

Rational half() { return Rational(BigInt(1), BigInt(2)); }
Rational quarter() { return Rational(BigInt(1), BigInt(4)); }

void require_branch(int eps) {
  if (eps != 1 && eps != -1)
    throw std::invalid_argument("eps must be +1 or -1");
}

} // namespace

bool operator==(const PellPair& lhs, const PellPair& rhs) {
  return lhs.x == rhs.x && lhs.t == rhs.t && lhs.n == rhs.n && lhs.eps == rhs.eps;
}

bool pell_invariant_holds(const PellPair& p) {
  return p.x * p.x - kTwo * p.t * p.t == BigInt(-1);
}

PellPair seed(int eps) {
  require_branch(eps);
  return PellPair{BigInt(1), BigInt(eps), 0, eps};
}

PellPair step(const PellPair& p) {
  return PellPair{BigInt(3) * p.x + BigInt(4) * p.t, kTwo * p.x + BigInt(3) * p.t, p.n + 1,
                  p.eps};
}

std::vector<PellPair> generate(int eps, std::uint64_t count) {
  std::vector<PellPair> seq;
  seq.reserve(count + 1);
  seq.push_back(seed(eps));
  for (std::uint64_t i = 0; i < count; ++i)
    seq.push_back(step(seq.back()));
  return seq;
}

Mat2i pell_matrix() { return Mat2i{BigInt(3), BigInt(4), BigInt(2), BigInt(3)}; }

Mat2i mat_pow(Mat2i m, std::uint64_t n) {
  Mat2i result{BigInt(1), BigInt(0), BigInt(0), BigInt(1)};
  while (n > 0) {
    if (n & 1)
      result = result * m;
    m = m * m;
    n >>= 1;
  }
  return result;
}

PellPair solution_at(std::uint64_t n, int eps) {
  require_branch(eps);
  Mat2i an = mat_pow(pell_matrix(), n);
  BigInt e(eps);
  return PellPair{an.e11 + e * an.e12, an.e21 + e * an.e22, n, eps};
}

Mat2q closed_form_matrix(std::uint64_t n) {
  QuadElem a = pow(q2(Rational(3), Rational(2)), static_cast<std::int64_t>(n));
  QuadElem b = pow(q2(Rational(3), Rational(-2)), static_cast<std::int64_t>(n));
  QuadElem sum = a + b;
  QuadElem diff = a - b;
  Mat2q m{q2(half(), Rational(0)) * sum, q2(Rational(0), half()) * diff,
          q2(Rational(0), quarter()) * diff, q2(half(), Rational(0)) * sum};
  collapse(m); // entries provably collapse; a CollapseError here is a bug
  return m;
}

Mat2i collapse(const Mat2q& m) {
  return Mat2i{as_integer(m.e11), as_integer(m.e12), as_integer(m.e21), as_integer(m.e22)};
}

PellPair closed_form(std::uint64_t n, int eps) {
  require_branch(eps);
  QuadElem a = pow(q2(Rational(3), Rational(2)), static_cast<std::int64_t>(n));
  QuadElem b = pow(q2(Rational(3), Rational(-2)), static_cast<std::int64_t>(n));
  Rational eps_half = eps == 1 ? half() : -half();

  QuadElem x = q2(half(), eps_half) * a + q2(half(), -eps_half) * b;
  QuadElem t = q2(eps_half, quarter()) * a + q2(eps_half, -quarter()) * b;
  return PellPair{as_integer(x), as_integer(t), n, eps};
}

BigInt binomial_t(std::uint64_t n, int eps) {
  require_branch(eps);
  // walk j = 0..n keeping C(n,j), 3^(n-j) and the power of two for each parity
  BigInt binom(1);
  BigInt pow3 = pow(BigInt(3), n);
  BigInt pow2(1); // 2^0, 2^1, 2^3, 2^4, 2^6, 2^7, ...
  const BigInt three(3);
  BigInt even_sum(0);
  BigInt odd_sum(0);
  for (std::uint64_t j = 0; j <= n; ++j) {
    if (j > 0) {
      binom = binom * BigInt(static_cast<std::int64_t>(n - j + 1)) /
              BigInt(static_cast<std::int64_t>(j));
      pow3 /= three;
      pow2 = pow2 * ((j & 1) ? kTwo : BigInt(4));
    }
    BigInt term = binom * pow3 * pow2;
    if (j & 1)
      odd_sum += term;
    else
      even_sum += term;
  }
  return BigInt(eps) * even_sum + odd_sum;
}

bool EigenReport::all_passed() const {
  for (const auto& item : items) {
    if (!item.pass)
      return false;
  }
  return true;
}

EigenReport eigen_check() {
  EigenReport report;
  auto add = [&report](std::string name, bool pass, std::string detail) {
    report.items.push_back({std::move(name), pass, std::move(detail)});
  };

  const QuadElem zero = q2(Rational(0), Rational(0));
  const QuadElem lambda1 = q2(Rational(3), Rational(2));  // 3 + 2*sqrt(2)
  const QuadElem lambda2 = q2(Rational(3), Rational(-2)); // 3 - 2*sqrt(2)
  const Mat2q a{q2(Rational(3), Rational(0)), q2(Rational(4), Rational(0)),
                q2(Rational(2), Rational(0)), q2(Rational(3), Rational(0))};
  const Mat2q p{q2(Rational(2), Rational(0)), q2(Rational(2), Rational(0)),
                q2(Rational(0), Rational(1)), q2(Rational(0), Rational(-1))};
  const Mat2q d{lambda1, zero, zero, lambda2};

  // det(A - lambda*I) = lambda^2 - 6*lambda + 1 must vanish at both eigenvalues
  const QuadElem eigenvalues[2] = {lambda1, lambda2};
  for (int i = 0; i < 2; ++i) {
    const QuadElem& lambda = eigenvalues[i];
    QuadElem charpoly = lambda * lambda - q2(Rational(6), Rational(0)) * lambda +
                        q2(Rational(1), Rational(0));
    add("char_poly_lambda" + std::to_string(i + 1), charpoly == zero,
        "lambda = " + lambda.to_string() + ", det(A - lambda*I) = " + charpoly.to_string());
  }

  // P invertible
  QuadElem det_p = p.e11 * p.e22 - p.e12 * p.e21;
  add("p_invertible", !det_p.is_zero(), "det(P) = " + det_p.to_string());

  if (!det_p.is_zero()) {
    QuadElem inv_det = inverse(det_p);
    Mat2q p_inv{p.e22 * inv_det, -p.e12 * inv_det, -p.e21 * inv_det, p.e11 * inv_det};
    Mat2q similar = p_inv * a * p;
    add("similarity_transform", similar == d,
        "P^-1*A*P = [[" + similar.e11.to_string() + ", " + similar.e12.to_string() + "], [" +
            similar.e21.to_string() + ", " + similar.e22.to_string() + "]]");
  } else {
    add("similarity_transform", false, "skipped: P not invertible");
  }

  // A*v = lambda*v for each eigenpair (column of P, matching diagonal of D)
  const std::pair<QuadElem, QuadElem> columns[2] = {{p.e11, p.e21}, {p.e12, p.e22}};
  const QuadElem lambdas[2] = {lambda1, lambda2};
  for (int i = 0; i < 2; ++i) {
    QuadElem av1 = a.e11 * columns[i].first + a.e12 * columns[i].second;
    QuadElem av2 = a.e21 * columns[i].first + a.e22 * columns[i].second;
    bool pass = av1 == lambdas[i] * columns[i].first && av2 == lambdas[i] * columns[i].second;
    add("eigenpair_" + std::to_string(i + 1), pass,
        "A*v = (" + av1.to_string() + ", " + av2.to_string() + ")");
  }

  return report;
}

} // namespace pellq
