#include <doctest.h>

#include <algorithm>
#include <random>
#include <thread>

#include "descents/engine.hpp"
#include "descents/figure1.hpp"
#include "descents/kernel.hpp"
#include "descents/oracle.hpp"
#include "descents/totals.hpp"
#include "support/literal_sums.hpp"
#include "support/subset_polynomial.hpp"

using namespace descents;

TEST_CASE("d examples") {
  Engine engine;
  CHECK(engine.d(3, 1) == Nat{11});
  CHECK(engine.d(4, 2) == Nat{167});
  CHECK(engine.d(8, 28) == Nat{1});
  CHECK(engine.d(2, 1) == Nat{1});
  CHECK(engine.d(0, 0) == Nat{1});
  CHECK(engine.d(0, 3) == Nat{0});
  CHECK(engine.d(3, 9) == Nat{0});
  CHECK_THROWS_AS(engine.d(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(engine.d(2, -1), std::invalid_argument);
}

TEST_CASE("k beyond C(n,2) does not materialize rows") {
  Engine engine;
  CHECK(engine.d(40, 2000) == Nat{0});
  CHECK(engine.rows_ready() == 0);
}

TEST_CASE("t and u examples") {
  Engine engine;
  CHECK(engine.t(4, 0) == Nat{21});
  CHECK(engine.t(1, 3) == Nat{0});
  CHECK(engine.t(3, 1) == Nat{2});
  CHECK(engine.u(1, 0) == Nat{1});
  CHECK(engine.u(3, 0) == Nat{0});
  CHECK(engine.u(2, 1) == Nat{1});
}

TEST_CASE("incidence sum examples") {
  Engine engine;
  for (int n = 1; n <= 6; ++n) {
    CHECK(engine.sum_a(n, 0) == Nat{0});
    CHECK(engine.sum_c_weighted(n, 0) == Nat{0});
    CHECK(engine.sum_c_weighted(n, 1) == Nat{0});
  }
  CHECK(engine.sum_a(2, 1) == Nat{1});
  CHECK(engine.sum_a(3, 1) == Nat{7});
  CHECK(engine.sum_b(2, 0) == Nat{1});
  CHECK(engine.sum_b(3, 0) == Nat{9});
  for (int k = 0; k <= 3; ++k) {
    CHECK(engine.sum_b(1, k) == Nat{0});
    CHECK(engine.sum_c_weighted(2, k) == Nat{0});
  }
  CHECK(engine.sum_c_weighted(3, 2) == Nat{2});
}

TEST_CASE("row totals and tables") {
  Engine engine;
  CHECK(engine.row_total(0) == Nat{1});
  CHECK(engine.row_total(3) == Nat{25});
  CHECK(engine.row_total(5) == Nat{29281});

  const auto one = engine.table(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == std::vector<Nat>{Nat{1}});

  const auto three = engine.table(3);
  CHECK(three[2] == std::vector<Nat>{Nat{8}, Nat{11}, Nat{5}, Nat{1}});
  CHECK(engine.table(6)[5].back() == Nat{1});
}

TEST_CASE("engine matches the exhaustive oracle for every family, n <= 5") {
  Engine engine;
  for (int n = 1; n <= 5; ++n) {
    const auto bundle = oracle::enumerate_counts(n);
    for (int k = 0; k <= max_descents(n); ++k) {
      const auto ki = static_cast<std::size_t>(k);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(engine.d(n, k) == bundle.d[ki]);
      CHECK(engine.t(n, k) == bundle.t[ki]);
      CHECK(engine.u(n, k) == bundle.u[ki]);
      CHECK(engine.sum_a(n, k) == bundle.sum_a(k));
      CHECK(engine.sum_b(n, k) == bundle.sum_b(k));
      CHECK(engine.sum_c_weighted(n, k) == bundle.sum_c_weighted(k));
    }
  }
}

TEST_CASE("factored sums agree with the literal index-set sums, n <= 7") {
  Engine engine;
  testing::LiteralSums literal;
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k <= max_descents(n); ++k) {
      for (Family f : kAllFamilies) {
        CHECK_MESSAGE(engine.value(f, n, k) == literal.value(f, n, k),
                      family_tag(f) << " n=" << n << " k=" << k);
      }
    }
  }
}

TEST_CASE("d agrees with subset inclusion-exclusion, n <= 10") {
  Engine engine;
  testing::SubsetPolynomial subsets;
  for (int n = 0; n <= 10; ++n) {
    const auto poly = subsets.descents_polynomial(n);
    const auto row = engine.row(Family::d, n);
    REQUIRE(poly.size() == row.size());
    for (std::size_t k = 0; k < row.size(); ++k) {
      CHECK_MESSAGE(row[k].mpz() == poly[k], "n=" << n << " k=" << k);
    }
  }
}

TEST_CASE("reference table") {
  Engine engine;
  for (int n = 1; n <= figure1::kMaxN; ++n) {
    for (int k = 0; k <= figure1::kMaxK; ++k) {
      CHECK_MESSAGE(engine.d(n, k) == Nat{figure1::reference(n, k)}, "n=" << n << " k=" << k);
    }
    CHECK(engine.row_total(n) == Nat{figure1::published_total(n)});
  }
}

TEST_CASE("the printed table has exactly one entry inconsistent with its TOTAL row") {
  for (int n = 1; n <= figure1::kMaxN; ++n) {
    std::uint64_t printed_sum = 0;
    for (int k = 0; k <= figure1::kMaxK; ++k) {
      printed_sum += figure1::published(n, k);
    }
    CHECK(printed_sum - figure1::published_total(n) == (n == 8 ? 432u : 0u));
  }
  REQUIRE(figure1::errata().size() == 1);
  const auto& e = figure1::errata()[0];
  CHECK(e.printed - e.corrected == 432u);
  Engine engine;
  CHECK(engine.d(e.n, e.k) == Nat{e.corrected});
  CHECK(engine.d(e.n, e.k) != Nat{e.printed});
}

TEST_CASE("structural invariants, n <= 8") {
  Engine engine;
  for (int n = 0; n <= 8; ++n) {
    const int top = max_descents(n);
    CHECK(engine.d(n, 0) == pow2(top));
    CHECK(engine.d(n, top) == Nat{1});
    for (int k = top + 1; k <= top + 3; ++k) {
      for (Family f : kAllFamilies) {
        CHECK(engine.value(f, n, k) == Nat{0});
      }
    }
    if (n >= 1) {
      CHECK(engine.t(n, 0) == two_factorial(n - 1));
      CHECK(engine.u(n, 0) == Nat{n == 1 ? 1u : 0u});
    }
    for (int k = 0; k <= top; ++k) {
      CHECK(engine.t(n, k) <= engine.d(n, k));
      CHECK(engine.u(n, k) <= engine.d(n, k));
    }
  }
}

TEST_CASE("row totals follow the alternating total recurrence beyond the table") {
  Engine engine;
  for (int n = 0; n <= 16; ++n) {
    CHECK(engine.row_total(n) == robinson_total(n));
  }
}

TEST_CASE("values do not depend on query order") {
  Engine ascending;
  std::vector<std::tuple<Family, int, int>> keys;
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= max_descents(n); ++k) {
      for (Family f : kAllFamilies) {
        keys.emplace_back(f, n, k);
      }
    }
  }
  std::vector<Nat> forward;
  for (auto [f, n, k] : keys) {
    forward.push_back(ascending.value(f, n, k));
  }
  std::mt19937 rng(7);
  std::vector<std::size_t> order(keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  Engine shuffled;
  for (std::size_t i : order) {
    auto [f, n, k] = keys[i];
    CHECK(shuffled.value(f, n, k) == forward[i]);
  }
  CHECK(shuffled.entries() == ascending.entries());
}

TEST_CASE("concurrent queries observe identical values") {
  Engine shared;
  std::vector<std::vector<Nat>> seen(4);
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < seen.size(); ++w) {
    workers.emplace_back([&, w] {
      for (int n = 12; n >= 1; --n) {
        seen[w].push_back(shared.row_total(n));
        seen[w].push_back(shared.sum_b(n, n));
      }
    });
  }
  for (auto& t : workers) t.join();
  for (std::size_t w = 1; w < seen.size(); ++w) {
    CHECK(seen[w] == seen[0]);
  }
}

TEST_CASE("entries are ordered and cover whole rows") {
  Engine engine;
  engine.d(3, 0);
  const auto entries = engine.entries();
  // Six families, rows 0..3 of widths 1, 1, 2, 4.
  CHECK(entries.size() == 6u * 8u);
  CHECK(std::is_sorted(entries.begin(), entries.end(), [](const CountRecord& a, const CountRecord& b) {
    return std::tie(a.family, a.n, a.k) < std::tie(b.family, b.n, b.k);
  }));
}

TEST_CASE("seeded complete rows are adopted verbatim") {
  Engine source;
  source.d(6, 0);
  Engine copy;
  const auto entries = source.entries();
  copy.seed(entries);
  CHECK(copy.rows_ready() == 0);
  CHECK(copy.d(6, 7) == source.d(6, 7));
  CHECK(copy.rows_ready() == 7);
  CHECK(copy.entries() == entries);
}

TEST_CASE("seeded values that contradict the recurrences are rejected") {
  SUBCASE("partial row checked when computed") {
    Engine engine;
    const CountRecord bad{Family::d, 3, 1, Nat{12}};
    engine.seed(std::span(&bad, 1));
    CHECK_THROWS_AS(engine.d(3, 1), SeedConflict);
  }
  SUBCASE("conflict with an existing row") {
    Engine engine;
    engine.d(3, 0);
    const CountRecord bad{Family::t, 3, 1, Nat{5}};
    CHECK_THROWS_AS(engine.seed(std::span(&bad, 1)), SeedConflict);
  }
  SUBCASE("matching partial seeds are accepted") {
    Engine engine;
    const CountRecord good{Family::d, 3, 1, Nat{11}};
    engine.seed(std::span(&good, 1));
    CHECK(engine.d(3, 1) == Nat{11});
    CHECK(engine.entries().size() == 6u * 8u);
  }
  SUBCASE("bad keys") {
    Engine engine;
    const std::vector<CountRecord> dup{{Family::d, 2, 1, Nat{1}}, {Family::d, 2, 1, Nat{1}}};
    CHECK_THROWS_AS(engine.seed(dup), std::invalid_argument);
    const CountRecord out_of_range{Family::u, 2, 2, Nat{0}};
    CHECK_THROWS_AS(engine.seed(std::span(&out_of_range, 1)), std::invalid_argument);
  }
}
