#include "descents/kernel.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

namespace descents {

Nat binomial(int n, int k) {
  if (n < 0) {
    throw std::invalid_argument("binomial: negative n " + std::to_string(n));
  }
  if (k < 0 || k > n) {
    return Nat{};
  }
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Nat::from_mpz(std::move(out));
}

Nat pow2(int e) {
  if (e < 0) {
    throw std::invalid_argument("pow2: negative exponent " + std::to_string(e));
  }
  return Nat{1} << static_cast<unsigned>(e);
}

Nat QCoefficients::at(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs.size())) {
    return Nat{};
  }
  return coeffs[static_cast<std::size_t>(i)];
}

namespace {

// Rows of the q-Pascal triangle; rows_[n][j] holds (n choose j)_q.
class GaussianTable {
 public:
  std::vector<Nat> get(int n, int j) {
    std::lock_guard lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n) {
      extend();
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
  }

 private:
  void extend() {
    const int n = static_cast<int>(rows_.size());
    std::vector<std::vector<Nat>> row(static_cast<std::size_t>(n) + 1);
    row[0] = {Nat{1}};
    row[static_cast<std::size_t>(n)] = {Nat{1}};
    for (int j = 1; j < n; ++j) {
      const auto& left = rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j - 1)];
      const auto& right = rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j)];
      std::vector<Nat> poly(static_cast<std::size_t>(j * (n - j) + 1));
      for (std::size_t i = 0; i < left.size(); ++i) {
        poly[i] += left[i];
      }
      for (std::size_t i = 0; i < right.size(); ++i) {
        poly[i + static_cast<std::size_t>(j)] += right[i];
      }
      row[static_cast<std::size_t>(j)] = std::move(poly);
    }
    rows_.push_back(std::move(row));
  }

  std::mutex mutex_;
  std::vector<std::vector<std::vector<Nat>>> rows_;
};

GaussianTable& gaussian_table() {
  static GaussianTable table;
  return table;
}

}  // namespace

QCoefficients gaussian_coeffs(int n, int j) {
  if (n < 0) {
    throw std::invalid_argument("gaussian_coeffs: negative n " + std::to_string(n));
  }
  QCoefficients out{n, j, {}};
  if (j < 0 || j > n) {
    return out;
  }
  out.coeffs = gaussian_table().get(n, j);
  return out;
}

Nat Q(int n, int j, int i) {
  if (j < 0 || j > n || i < 0 || i > j * (n - j)) {
    if (n < 0) {
      throw std::invalid_argument("Q: negative n " + std::to_string(n));
    }
    return Nat{};
  }
  return gaussian_coeffs(n, j).at(i);
}

Nat two_factorial(int n) {
  if (n < 0) {
    throw std::invalid_argument("two_factorial: negative n " + std::to_string(n));
  }
  Nat out{1};
  for (int i = 1; i <= n; ++i) {
    out *= pow2(i) - Nat{1};
  }
  return out;
}

Nat partition_count(int i, int num_parts, int max_part) {
  if (i < 0) {
    return Nat{};
  }
  if (num_parts < 0 || max_part < 0) {
    throw std::invalid_argument("partition_count: negative bound");
  }
  // ways[p][s]: partitions of s into at most p parts, each <= the current
  // largest allowed part. Parts are admitted one size at a time.
  const auto rows = static_cast<std::size_t>(num_parts) + 1;
  const auto cols = static_cast<std::size_t>(i) + 1;
  std::vector<std::vector<Nat>> ways(rows, std::vector<Nat>(cols));
  for (auto& row : ways) {
    row[0] = Nat{1};
  }
  for (int part = 1; part <= max_part; ++part) {
    // Adding parts of size `part`: one more part uses one more slot.
    for (std::size_t p = 1; p < rows; ++p) {
      for (std::size_t s = static_cast<std::size_t>(part); s < cols; ++s) {
        ways[p][s] += ways[p - 1][s - static_cast<std::size_t>(part)];
      }
    }
  }
  return ways[rows - 1][cols - 1];
}

}  // namespace descents
