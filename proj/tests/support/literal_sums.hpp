#pragma once

#include <map>
#include <tuple>

#include "descents/engine.hpp"
#include "descents/kernel.hpp"

namespace descents::testing {

// Term-by-term transcription of the summation formulas, iterating the index
// sets exactly as written (j, i, r, s, then l or m). Shares nothing with the
// engine beyond binomial(), pow2() and partition_count(), which stands in for
// the Gaussian coefficients. Exponential-ish; meant for n <= 7.
class LiteralSums {
 public:
  Nat value(Family family, int n, int k) {
    if (n < 0 || k < 0) {
      return Nat{};
    }
    const auto key = std::tuple{family, n, k};
    if (auto it = memo_.find(key); it != memo_.end()) {
      return it->second;
    }
    Nat out = compute(family, n, k);
    memo_.emplace(key, out);
    return out;
  }

 private:
  static Nat q(int n, int j, int i) {
    if (n < 0 || j < 0 || j > n || i < 0 || i > j * (n - j)) {
      return Nat{};
    }
    return partition_count(i, n - j, j);
  }

  static Nat choose(int n, int k) { return n < 0 ? Nat{} : binomial(n, k); }

  Nat compute(Family family, int n, int k) {
    switch (family) {
      case Family::d: return d(n, k);
      case Family::t: return t(n, k);
      case Family::u: return u(n, k);
      case Family::A: return sum_a(n, k);
      case Family::B: return sum_b(n, k);
      case Family::Cw: return sum_c(n, k);
    }
    return Nat{};
  }

  Nat d(int n, int k) {
    if (n == 0) return Nat{k == 0 ? 1u : 0u};
    if (k == 0) return pow2(n * (n - 1) / 2);
    if (k > n * (n - 1) / 2) return Nat{};
    Nat plus = pow2(n - 1) * value(Family::d, n - 1, k) +
               Nat{static_cast<std::uint64_t>(n - 1)} * value(Family::d, n, k - 1);
    return plus - (value(Family::A, n, k - 1) + value(Family::B, n, k - 1) + value(Family::Cw, n, k));
  }

  Nat t(int n, int k) {
    if (n == 0) return Nat{k == 0 ? 1u : 0u};
    if (k == 0) return two_factorial(n - 1);
    if (n == 1) return Nat{};
    Nat sum;
    for (int j = 1; j <= n - 1; ++j)
      for (int i = 0; i <= (j - 1) * (n - j - 1); ++i)
        for (int r = 0; r <= k; ++r)
          for (int s = 0; r + s <= k; ++s)
            sum += value(Family::u, j, s) * value(Family::t, n - j, r) * choose(i, k - s - r) *
                   pow2((j - 1) * (n - j) - i) * (pow2(n - j) - Nat{1}) * q(n - 2, j - 1, i);
    return sum;
  }

  Nat u(int n, int k) {
    if (k == 0) return Nat{n == 1 ? 1u : 0u};
    if (n <= 1) return Nat{};
    Nat sum;
    for (int j = 1; j <= n - 1; ++j)
      for (int i = n - 1; i <= j * (n - j); ++i)
        for (int r = 0; r <= k - 1; ++r)
          for (int s = 0; r + s <= k - 1; ++s)
            sum += value(Family::t, j, s) * value(Family::u, n - j, r) *
                   (choose(i, k - r - s) - choose(i - n + j, k - s - r)) * pow2(j * (n - j) - i) *
                   q(n - 2, j - 1, i - n + 1);
    return sum;
  }

  Nat sum_a(int n, int k) {
    Nat sum;
    for (int j = 1; j <= n - 1; ++j)
      for (int i = 0; i <= (j - 1) * (n - j); ++i)
        for (int r = 0; r <= k - 1; ++r)
          for (int s = 0; r + s <= k - 1; ++s)
            for (int l = 1; l <= k - r - s; ++l)
              sum += Nat{static_cast<std::uint64_t>(l)} * value(Family::d, n - j, r) *
                     value(Family::t, j, s) * choose(n - j, l) * choose(i, k - s - r - l) *
                     pow2((j - 1) * (n - j) - i) * q(n - 1, j - 1, i);
    return sum;
  }

  Nat sum_b(int n, int k) {
    Nat sum;
    for (int j = 2; j <= n; ++j)
      for (int i = n - j; i <= j * (n - j); ++i)
        for (int r = 0; r <= k; ++r)
          for (int s = 0; r + s <= k; ++s)
            sum += Nat{static_cast<std::uint64_t>(j - 1)} * value(Family::d, n - j, r) *
                   value(Family::t, j, s) * choose(i, k - r - s) * pow2(j * (n - j) - i) *
                   q(n - 1, j - 1, i - n + j);
    return sum;
  }

  Nat sum_c(int n, int k) {
    Nat sum;
    for (int m = 2; m <= k; ++m)
      for (int j = 1; j <= n - m; ++j)
        for (int i = 0; i <= (j - 1) * (n - j); ++i)
          for (int r = 0; r <= k - m; ++r)
            for (int s = 0; r + s <= k - m; ++s)
              sum += Nat{static_cast<std::uint64_t>(m - 1)} * value(Family::d, n - j, r) *
                     value(Family::t, j, s) * choose(n - j, m) * choose(i, k - r - s - m) *
                     pow2((j - 1) * (n - j) - i) * q(n - 1, j - 1, i);
    return sum;
  }

  std::map<std::tuple<Family, int, int>, Nat> memo_;
};

}  // namespace descents::testing
