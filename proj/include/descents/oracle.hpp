#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "descents/nat.hpp"

// Brute-force ground truth. Nothing here uses the recurrences; graphs are
// enumerated as raw edge masks and every statistic is read off directly.
namespace descents::oracle {

inline constexpr int kMaxVertices = 6;

// Subset of the vertices 1..n; bit v-1 stands for vertex v.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices);

  static constexpr VertexSet all(int n) { return VertexSet((1u << n) - 1); }

  constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1u; }
  constexpr void insert(int v) { bits_ |= 1u << (v - 1); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint32_t bits() const { return bits_; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

// Labeled digraph on 1..n without self-loops. Bit b of the edge mask is the
// b-th ordered pair (x, y), x != y, in lexicographic order:
// (1,2), (1,3), ..., (1,n), (2,1), (2,3), ..., (n,n-1).
class Dag {
 public:
  Dag(int n, std::uint64_t edge_mask);
  static Dag from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  static int num_pairs(int n) { return n * (n - 1); }
  static int pair_index(int n, int x, int y);

  int n() const { return n_; }
  std::uint64_t edge_mask() const { return mask_; }
  bool has_edge(int x, int y) const;
  VertexSet out_neighbors(int x) const;

 private:
  int n_;
  std::uint64_t mask_;
};

bool is_acyclic(const Dag& g);

struct DagStats {
  int descents = 0;
  int descents_into_1 = 0;
  VertexSet reach_from_1;
  VertexSet reach_from_n;
  // Vertices m with an edge m -> 1.
  VertexSet into_1;

  bool has_edge_m_to_1(int m) const { return into_1.contains(m); }
  bool m_reachable_from_1(int m) const { return reach_from_1.contains(m); }
};

// Throws std::invalid_argument if g has a cycle.
DagStats stats(const Dag& g);

// Exact per-descent-count tallies over all acyclic digraphs on [n].
// a[k][m], b[k][m] are indexed by m = 0..n (entries below 2 stay zero);
// c[k][m] counts graphs with exactly m edges into vertex 1.
struct OracleBundle {
  int n = 0;
  std::vector<Nat> d, t, u;
  std::vector<std::vector<Nat>> a, b, c;

  Nat sum_a(int k) const;
  Nat sum_b(int k) const;
  Nat sum_c_weighted(int k) const;
  Nat total() const;
};

struct EnumerateOptions {
  // n = 6 scans 2^30 masks and must be requested explicitly.
  bool allow_slow = false;
  // Mask-range chunks counted independently and merged; 0 picks one per
  // hardware thread.
  unsigned chunks = 0;
};

OracleBundle enumerate_counts(int n, EnumerateOptions options = {});

// Counts over the mask range [begin, end) only. Summing bundles over a
// partition of [0, 2^(n(n-1))) gives enumerate_counts(n).
OracleBundle enumerate_range(int n, std::uint64_t begin, std::uint64_t end);

OracleBundle merge(const OracleBundle& lhs, const OracleBundle& rhs);

// Histogram, over all j-subsets X of [n], of #{(x, y) in X x ([n] \ X) : x < y}.
std::vector<Nat> subset_pair_histogram(int n, int j);

}  // namespace descents::oracle
