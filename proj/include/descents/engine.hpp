#pragma once

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <tuple>
#include <vector>

#include "descents/nat.hpp"

namespace descents {

// The six memoized families.
//   d  : acyclic digraphs on [n] with k descents
//   t  : ... in which every vertex is reachable from 1
//   u  : ... in which every vertex is reachable from n
//   A  : sum over m of graphs containing the descent m -> 1
//   B  : sum over m = 2..n of graphs in which m is reachable from 1
//   Cw : sum over m of (m - 1) * graphs with exactly m descents into 1
enum class Family { d, t, u, A, B, Cw };

inline constexpr std::array<Family, 6> kAllFamilies{Family::d, Family::t, Family::u,
                                                    Family::A, Family::B, Family::Cw};

std::string_view family_tag(Family family);
std::optional<Family> parse_family(std::string_view tag);

// Largest possible descent count on n vertices, C(n, 2).
constexpr int max_descents(int n) { return n * (n - 1) / 2; }

struct CountRecord {
  Family family;
  int n;
  int k;
  Nat value;

  friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

// Thrown when values supplied through Engine::seed() disagree with what the
// recurrences produce for the same key.
class SeedConflict : public std::runtime_error {
 public:
  SeedConflict(CountRecord seeded, Nat computed);
  const CountRecord& seeded() const { return seeded_; }
  const Nat& computed() const { return computed_; }

 private:
  CountRecord seeded_;
  Nat computed_;
};

// Dense triangular memo for one family: row n holds k = 0..C(n,2). Rows are
// appended in order and never modified afterwards.
class CountTable {
 public:
  explicit CountTable(Family family) : family_(family) {}

  Family family() const { return family_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<Nat>& row(int n) const { return rows_.at(static_cast<std::size_t>(n)); }
  // 0 for k beyond the row.
  const Nat& at(int n, int k) const;

  void append_row(std::vector<Nat> row);

 private:
  Family family_;
  std::vector<std::vector<Nat>> rows_;
};

// Memoized evaluation of the descent recurrences. All public members are
// thread-safe; rows are computed bottom-up under a single lock.
class Engine {
 public:
  Engine();

  Nat d(int n, int k);
  Nat t(int n, int k);
  Nat u(int n, int k);
  Nat sum_a(int n, int k);
  Nat sum_b(int n, int k);
  Nat sum_c_weighted(int n, int k);
  Nat value(Family family, int n, int k);

  // Full row of one family, k = 0..C(n,2).
  std::vector<Nat> row(Family family, int n);

  // Sum over k of d(n, k).
  Nat row_total(int n);

  // Rows (d(n,0), ..., d(n,C(n,2))) for n = 1..n_max.
  std::vector<std::vector<Nat>> table(int n_max);

  // Number of fully materialized rows (rows 0..rows_ready()-1).
  int rows_ready() const;

  // Every memoized value, ordered by family, then n, then k. Seeded values
  // that have not been reconciled with a computed row are included.
  std::vector<CountRecord> entries() const;

  // Pre-populates the memo. A row whose six families are all fully seeded is
  // adopted as-is when it is next needed; other seeded values are checked
  // against the computed row and raise SeedConflict on disagreement.
  // Throws std::invalid_argument for out-of-range or duplicate keys.
  void seed(std::span<const CountRecord> records);

 private:
  using Key = std::tuple<Family, int, int>;

  void ensure_rows(int n);
  void compute_row(int n);
  bool adopt_seeded_row(int n);
  const CountTable& table_of(Family family) const;
  CountTable& table_of(Family family);

  mutable std::mutex mutex_;
  std::array<CountTable, 6> tables_;
  std::map<Key, Nat> seeded_;
};

}  // namespace descents
