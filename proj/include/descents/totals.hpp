#pragma once

#include <vector>

#include <gmpxx.h>

#include "descents/nat.hpp"

namespace descents {

// Number of labeled acyclic digraphs on n vertices from the alternating
// recurrence a_n = sum_{k=1..n} (-1)^(k+1) C(n,k) 2^(k(n-k)) a_(n-k), a_0 = 1.
Nat robinson_total(int n);

// Coefficients 0..degree of
//   (sum_n a_n x^n / (n! 2^C(n,2))) * (sum_n (-1)^n x^n / (n! 2^C(n,2)))
// in exact rationals, with a_n = robinson_total(n).
std::vector<mpq_class> stanley_product(int degree);

// True iff stanley_product(degree) is 1, 0, 0, ..., 0.
bool stanley_series_check(int degree);

}  // namespace descents
