#include <doctest.h>

#include <thread>
#include <vector>

#include "descents/kernel.hpp"

using namespace descents;

namespace {

std::vector<Nat> nats(std::initializer_list<std::uint64_t> values) {
  return {values.begin(), values.end()};
}

}  // namespace

TEST_CASE("binomial with out-of-range conventions") {
  CHECK(binomial(4, 2) == Nat{6});
  CHECK(binomial(0, 0) == Nat{1});
  CHECK(binomial(3, 5) == Nat{0});
  CHECK(binomial(5, -1) == Nat{0});
  CHECK(binomial(60, 30) == Nat::from_decimal("118264581564861424"));
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("pow2") {
  CHECK(pow2(0) == Nat{1});
  CHECK(pow2(6) == Nat{64});
  CHECK(pow2(28) == Nat{268435456});
  CHECK(pow2(100) == Nat::from_decimal("1267650600228229401496703205376"));
  CHECK_THROWS_AS(pow2(-1), std::invalid_argument);
}

TEST_CASE("gaussian coefficients") {
  CHECK(gaussian_coeffs(2, 1).coeffs == nats({1, 1}));
  CHECK(gaussian_coeffs(4, 2).coeffs == nats({1, 1, 2, 1, 1}));
  CHECK(gaussian_coeffs(3, 0).coeffs == nats({1}));
  CHECK(gaussian_coeffs(3, 3).coeffs == nats({1}));
  CHECK(gaussian_coeffs(3, 4).is_zero());
  CHECK(gaussian_coeffs(3, -1).is_zero());
  CHECK_THROWS_AS(gaussian_coeffs(-1, 0), std::invalid_argument);

  // Q is the q^i coefficient with zero outside the support.
  CHECK(Q(2, 1, 1) == Nat{1});
  CHECK(Q(4, 2, 2) == Nat{2});
  CHECK(Q(5, 2, -1) == Nat{0});
  CHECK(Q(5, 2, 7) == Nat{0});
  CHECK(Q(5, 6, 0) == Nat{0});
}

TEST_CASE("two_factorial") {
  CHECK(two_factorial(0) == Nat{1});
  CHECK(two_factorial(1) == Nat{1});
  CHECK(two_factorial(2) == Nat{3});
  CHECK(two_factorial(3) == Nat{21});
  CHECK(two_factorial(4) == Nat{315});
  CHECK_THROWS_AS(two_factorial(-1), std::invalid_argument);
}

TEST_CASE("partition_count") {
  CHECK(partition_count(0, 3, 2) == Nat{1});
  CHECK(partition_count(2, 2, 2) == Nat{2});
  CHECK(partition_count(7, 2, 3) == Nat{0});
  CHECK(partition_count(-1, 2, 3) == Nat{0});
  CHECK(partition_count(0, 0, 0) == Nat{1});
  CHECK(partition_count(3, 0, 5) == Nat{0});
  // Unrestricted partitions of 10.
  CHECK(partition_count(10, 10, 10) == Nat{42});
}

TEST_CASE("Q is palindromic and sums to the binomial coefficient") {
  for (int n = 0; n <= 12; ++n) {
    for (int j = 0; j <= n; ++j) {
      const auto q = gaussian_coeffs(n, j);
      const int top = j * (n - j);
      REQUIRE(q.max_degree() == top);
      Nat sum;
      for (int i = 0; i <= top; ++i) {
        CHECK(q.at(i) == q.at(top - i));
        sum += q.at(i);
      }
      CHECK(sum == binomial(n, j));
    }
  }
}

TEST_CASE("Q agrees with the bounded partition count") {
  for (int n = 0; n <= 10; ++n) {
    for (int j = 0; j <= n; ++j) {
      for (int i = -1; i <= j * (n - j) + 1; ++i) {
        CHECK_MESSAGE(Q(n, j, i) == partition_count(i, n - j, j), "n=" << n << " j=" << j << " i=" << i);
      }
    }
  }
}

TEST_CASE("two_factorial is the product of the Mersenne numbers") {
  Nat expected{1};
  for (int n = 1; n <= 40; ++n) {
    expected *= pow2(n) - Nat{1};
    CHECK(two_factorial(n) == expected);
  }
}

TEST_CASE("concurrent callers see the same Gaussian coefficients") {
  std::vector<std::vector<Nat>> seen(4);
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < seen.size(); ++w) {
    workers.emplace_back([&seen, w] {
      for (int n = 30; n >= 0; --n) {
        for (const Nat& c : gaussian_coeffs(n, n / 2).coeffs) {
          seen[w].push_back(c);
        }
      }
    });
  }
  for (auto& t : workers) {
    t.join();
  }
  for (std::size_t w = 1; w < seen.size(); ++w) {
    CHECK(seen[w] == seen[0]);
  }
}
