#pragma once

#include <vector>

#include "descents/nat.hpp"

// Exact integer primitives shared by the recurrences. Out-of-range arguments
// to binomial() and Q() yield 0, since the summation domains of the
// recurrences routinely touch boundary values.
namespace descents {

// C(n, k); 0 when k < 0 or k > n. Throws std::invalid_argument for n < 0.
Nat binomial(int n, int k);

// 2^e. Throws std::invalid_argument for e < 0.
Nat pow2(int e);

// Coefficients of the Gaussian binomial polynomial (n choose j)_q.
struct QCoefficients {
  int n = 0;
  int j = 0;
  // coeffs[i] is the coefficient of q^i, i = 0..j(n-j); empty for the
  // zero polynomial (j < 0 or j > n).
  std::vector<Nat> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  int max_degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Nat at(int i) const;
};

// Built from the q-Pascal rule
//   (n choose j)_q = (n-1 choose j-1)_q + q^j (n-1 choose j)_q
// over a shared, lazily extended table. Safe to call concurrently.
QCoefficients gaussian_coeffs(int n, int j);

// Coefficient of q^i in (n choose j)_q; 0 outside the support.
Nat Q(int n, int j, int i);

// (2^1 - 1)(2^2 - 1)...(2^n - 1); empty product is 1.
Nat two_factorial(int n);

// Partitions of i into at most num_parts parts, each at most max_part.
// Computed by a plain partition DP, independently of gaussian_coeffs().
Nat partition_count(int i, int num_parts, int max_part);

}  // namespace descents
