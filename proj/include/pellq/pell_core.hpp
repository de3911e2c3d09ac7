#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pellq/bigint.hpp"
#include "pellq/quadfield.hpp"

namespace pellq {

/// One integer solution (x_n, t_n) of x^2 - 2*t^2 = -1, with its index and
/// the seed branch. t is the quantity that must be a perfect square y^2 for
/// the quartic equation x^2 = 2*y^4 - 1.
struct PellPair {
  BigInt x;
  BigInt t;
  std::uint64_t n = 0;
  int eps = +1;
};

bool operator==(const PellPair& lhs, const PellPair& rhs);

/// x^2 - 2*t^2 == -1, checked exactly.
bool pell_invariant_holds(const PellPair& p);

/// Seed pair (1, eps); eps must be +1 or -1.
PellPair seed(int eps);

/// One recurrence step (x, t) -> (3x + 4t, 2x + 3t).
PellPair step(const PellPair& p);

/// [seed, step(seed), ...] with indices 0..count.
std::vector<PellPair> generate(int eps, std::uint64_t count);

/// 2x2 matrix; integer-entried and field-entried instantiations never mix.
template <class T>
struct Mat2 {
  T e11, e12, e21, e22;
};

template <class T>
Mat2<T> operator*(const Mat2<T>& lhs, const Mat2<T>& rhs) {
  return Mat2<T>{lhs.e11 * rhs.e11 + lhs.e12 * rhs.e21, lhs.e11 * rhs.e12 + lhs.e12 * rhs.e22,
                 lhs.e21 * rhs.e11 + lhs.e22 * rhs.e21, lhs.e21 * rhs.e12 + lhs.e22 * rhs.e22};
}

template <class T>
bool operator==(const Mat2<T>& lhs, const Mat2<T>& rhs) {
  return lhs.e11 == rhs.e11 && lhs.e12 == rhs.e12 && lhs.e21 == rhs.e21 && lhs.e22 == rhs.e22;
}

using Mat2i = Mat2<BigInt>;
using Mat2q = Mat2<QuadElem>;

/// The recurrence multiplier [[3,4],[2,3]].
Mat2i pell_matrix();

/// m^n by binary exponentiation; m^0 is the identity.
Mat2i mat_pow(Mat2i m, std::uint64_t n);

/// A^n * (1, eps) via mat_pow; O(log n) matrix products.
PellPair solution_at(std::uint64_t n, int eps);

/// A^n evaluated in Q(sqrt(2)) from the diagonalization:
/// [[ (a+b)/2, (a-b)*sqrt(2)/2 ], [ (a-b)*sqrt(2)/4, (a+b)/2 ]]
/// with a = (3+2*sqrt(2))^n, b = (3-2*sqrt(2))^n. Every entry is verified to
/// collapse to an integer; failure to collapse throws CollapseError.
Mat2q closed_form_matrix(std::uint64_t n);

/// Entry-wise as_integer.
Mat2i collapse(const Mat2q& m);

/// Exact closed-form evaluation of (x_n, t_n) in Q(sqrt(2)):
///   x_n = (1+eps*sqrt(2))/2 * a + (1-eps*sqrt(2))/2 * b
///   t_n = (2*eps+sqrt(2))/4 * a + (2*eps-sqrt(2))/4 * b
PellPair closed_form(std::uint64_t n, int eps);

/// t_n as the binomial sum
///   eps * sum_{k=0..floor(n/2)}     C(n,2k)   * 3^(n-2k)   * 2^(3k)
///       + sum_{k=0..floor((n-1)/2)} C(n,2k+1) * 3^(n-2k-1) * 2^(3k+1)
/// (second sum empty for n = 0).
BigInt binomial_t(std::uint64_t n, int eps);

struct EigenCheckItem {
  std::string name;
  bool pass;
  std::string detail;
};

struct EigenReport {
  std::vector<EigenCheckItem> items;
  bool all_passed() const;
};

/// Exact verification of the eigen-decomposition of A in Q(sqrt(2)):
/// both diagonal entries of D are roots of det(A - lambda*I) = lambda^2 - 6*lambda + 1,
/// P is invertible, P^-1 * A * P = D entrywise, and A*v = lambda*v per eigenpair.
/// Failures become report entries, never exceptions.
EigenReport eigen_check();

} // namespace pellq
