#include "descents/oracle.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>

namespace descents::oracle {

namespace {

using Adjacency = std::array<std::uint32_t, kMaxVertices>;

void check_n(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::out_of_range("oracle supports 1 <= n <= " + std::to_string(kMaxVertices) +
                            ", got " + std::to_string(n));
  }
}

// out[x] has bit y set iff the edge (x+1) -> (y+1) is present.
Adjacency adjacency(int n, std::uint64_t mask) {
  Adjacency out{};
  const int width = n - 1;
  for (int x = 0; x < n; ++x) {
    const auto slice = static_cast<std::uint32_t>((mask >> (x * width)) & ((1u << width) - 1));
    const std::uint32_t below = slice & ((1u << x) - 1);
    const std::uint32_t above = (slice >> x) << (x + 1);
    out[static_cast<std::size_t>(x)] = below | above;
  }
  return out;
}

// Repeatedly strips sinks; a cycle leaves a nonempty set with no sink.
bool acyclic(int n, const Adjacency& out) {
  std::uint32_t remaining = (1u << n) - 1;
  while (remaining != 0) {
    std::uint32_t sinks = 0;
    for (std::uint32_t rest = remaining; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((out[static_cast<std::size_t>(v)] & remaining) == 0) {
        sinks |= 1u << v;
      }
    }
    if (sinks == 0) {
      return false;
    }
    remaining &= ~sinks;
  }
  return true;
}

std::uint32_t reach(const Adjacency& out, int start) {
  std::uint32_t seen = 1u << start;
  std::uint32_t frontier = seen;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
      next |= out[static_cast<std::size_t>(std::countr_zero(f))];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

int count_descents(int n, const Adjacency& out) {
  int descents = 0;
  for (int x = 1; x < n; ++x) {
    descents += std::popcount(out[static_cast<std::size_t>(x)] & ((1u << x) - 1));
  }
  return descents;
}

struct RawCounts {
  explicit RawCounts(int n)
      : n(n),
        rows(static_cast<std::size_t>(n * (n - 1) / 2) + 1),
        d(rows),
        t(rows),
        u(rows),
        a(rows, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1)),
        b(a),
        c(a) {}

  int n;
  std::size_t rows;
  std::vector<std::uint64_t> d, t, u;
  std::vector<std::vector<std::uint64_t>> a, b, c;
};

std::vector<Nat> to_nat(const std::vector<std::uint64_t>& v) {
  return {v.begin(), v.end()};
}

OracleBundle to_bundle(const RawCounts& raw) {
  OracleBundle out;
  out.n = raw.n;
  out.d = to_nat(raw.d);
  out.t = to_nat(raw.t);
  out.u = to_nat(raw.u);
  for (std::size_t k = 0; k < raw.rows; ++k) {
    out.a.push_back(to_nat(raw.a[k]));
    out.b.push_back(to_nat(raw.b[k]));
    out.c.push_back(to_nat(raw.c[k]));
  }
  return out;
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) {
    insert(v);
  }
}

Dag::Dag(int n, std::uint64_t edge_mask) : n_(n), mask_(edge_mask) {
  check_n(n);
  if (num_pairs(n) < 64 && (edge_mask >> num_pairs(n)) != 0) {
    throw std::invalid_argument("edge mask has bits beyond the " + std::to_string(num_pairs(n)) +
                                " ordered pairs");
  }
}

int Dag::pair_index(int n, int x, int y) {
  if (x < 1 || x > n || y < 1 || y > n || x == y) {
    throw std::invalid_argument("no ordered pair (" + std::to_string(x) + "," + std::to_string(y) +
                                ") on " + std::to_string(n) + " vertices");
  }
  return (x - 1) * (n - 1) + (y < x ? y - 1 : y - 2);
}

Dag Dag::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  check_n(n);
  std::uint64_t mask = 0;
  for (auto [x, y] : edges) {
    mask |= std::uint64_t{1} << pair_index(n, x, y);
  }
  return Dag(n, mask);
}

bool Dag::has_edge(int x, int y) const { return (mask_ >> pair_index(n_, x, y)) & 1u; }

VertexSet Dag::out_neighbors(int x) const {
  return VertexSet(adjacency(n_, mask_)[static_cast<std::size_t>(x - 1)]);
}

bool is_acyclic(const Dag& g) { return acyclic(g.n(), adjacency(g.n(), g.edge_mask())); }

DagStats stats(const Dag& g) {
  const int n = g.n();
  const Adjacency out = adjacency(n, g.edge_mask());
  if (!acyclic(n, out)) {
    throw std::invalid_argument("stats: digraph has a cycle");
  }
  DagStats s;
  s.descents = count_descents(n, out);
  s.reach_from_1 = VertexSet(reach(out, 0));
  s.reach_from_n = VertexSet(reach(out, n - 1));
  for (int x = 1; x < n; ++x) {
    if (out[static_cast<std::size_t>(x)] & 1u) {
      s.into_1.insert(x + 1);
    }
  }
  s.descents_into_1 = s.into_1.size();
  return s;
}

Nat OracleBundle::sum_a(int k) const {
  Nat total;
  for (const Nat& v : a.at(static_cast<std::size_t>(k))) {
    total += v;
  }
  return total;
}

Nat OracleBundle::sum_b(int k) const {
  Nat total;
  for (const Nat& v : b.at(static_cast<std::size_t>(k))) {
    total += v;
  }
  return total;
}

Nat OracleBundle::sum_c_weighted(int k) const {
  Nat total;
  const auto& row = c.at(static_cast<std::size_t>(k));
  for (std::size_t m = 2; m < row.size(); ++m) {
    total.add_product(Nat{m - 1}, row[m]);
  }
  return total;
}

Nat OracleBundle::total() const {
  Nat total;
  for (const Nat& v : d) {
    total += v;
  }
  return total;
}

OracleBundle enumerate_range(int n, std::uint64_t begin, std::uint64_t end) {
  check_n(n);
  const std::uint64_t limit = std::uint64_t{1} << Dag::num_pairs(n);
  end = std::min(end, limit);
  RawCounts raw(n);
  const std::uint32_t everyone = (1u << n) - 1;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    const Adjacency out = adjacency(n, mask);
    if (!acyclic(n, out)) {
      continue;
    }
    const auto k = static_cast<std::size_t>(count_descents(n, out));
    const std::uint32_t from_first = reach(out, 0);
    ++raw.d[k];
    if (from_first == everyone) {
      ++raw.t[k];
    }
    if (reach(out, n - 1) == everyone) {
      ++raw.u[k];
    }
    int into_first = 0;
    for (int m = 2; m <= n; ++m) {
      const auto mi = static_cast<std::size_t>(m);
      if (out[mi - 1] & 1u) {
        ++raw.a[k][mi];
        ++into_first;
      }
      if ((from_first >> (m - 1)) & 1u) {
        ++raw.b[k][mi];
      }
    }
    ++raw.c[k][static_cast<std::size_t>(into_first)];
  }
  return to_bundle(raw);
}

OracleBundle merge(const OracleBundle& lhs, const OracleBundle& rhs) {
  if (lhs.n != rhs.n) {
    throw std::invalid_argument("merge: bundles for different n");
  }
  OracleBundle out = lhs;
  auto add = [](std::vector<Nat>& into, const std::vector<Nat>& from) {
    for (std::size_t i = 0; i < into.size(); ++i) {
      into[i] += from[i];
    }
  };
  add(out.d, rhs.d);
  add(out.t, rhs.t);
  add(out.u, rhs.u);
  for (std::size_t k = 0; k < out.a.size(); ++k) {
    add(out.a[k], rhs.a[k]);
    add(out.b[k], rhs.b[k]);
    add(out.c[k], rhs.c[k]);
  }
  return out;
}

OracleBundle enumerate_counts(int n, EnumerateOptions options) {
  check_n(n);
  if (n == kMaxVertices && !options.allow_slow) {
    throw std::invalid_argument("n = 6 scans 2^30 digraphs; pass allow_slow to run it");
  }
  const std::uint64_t limit = std::uint64_t{1} << Dag::num_pairs(n);
  unsigned chunks = options.chunks != 0 ? options.chunks : std::max(1u, std::thread::hardware_concurrency());
  chunks = static_cast<unsigned>(std::min<std::uint64_t>(chunks, limit));
  if (chunks == 1) {
    return enumerate_range(n, 0, limit);
  }
  const std::uint64_t step = (limit + chunks - 1) / chunks;
  std::vector<std::future<OracleBundle>> parts;
  for (std::uint64_t begin = 0; begin < limit; begin += step) {
    parts.push_back(std::async(std::launch::async, enumerate_range, n, begin, std::min(limit, begin + step)));
  }
  OracleBundle out = parts.front().get();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out = merge(out, parts[i].get());
  }
  return out;
}

std::vector<Nat> subset_pair_histogram(int n, int j) {
  if (n < 0 || n > 20 || j < 0 || j > n) {
    throw std::invalid_argument("subset_pair_histogram: need 0 <= j <= n <= 20");
  }
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(j * (n - j)) + 1);
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    if (std::popcount(subset) != j) {
      continue;
    }
    int pairs = 0;
    for (int x = 0; x < n; ++x) {
      if ((subset >> x) & 1u) {
        // y ranges over larger vertices outside the subset.
        const std::uint32_t larger = ~((2u << x) - 1) & ((1u << n) - 1);
        pairs += std::popcount(larger & ~subset);
      }
    }
    ++counts[static_cast<std::size_t>(pairs)];
  }
  return to_nat(counts);
}

}  // namespace descents::oracle
