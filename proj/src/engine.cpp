#include "descents/engine.hpp"

#include <stdexcept>
#include <string>

#include "descents/kernel.hpp"

namespace descents {

namespace {

using Row = std::vector<Nat>;

// Rejects keys for which C(n,2) would not fit comfortably in an int.
constexpr int kMaxSupportedN = 10000;

void check_args(int n, int k) {
  if (n < 0 || k < 0 || n > kMaxSupportedN) {
    throw std::invalid_argument("invalid arguments n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  }
}

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

// out[v] = sum_{s + r = v} a[s] * b[r], for v = 0..limit.
Row convolve(const Row& a, const Row& b, int limit) {
  Row out(idx(limit) + 1);
  for (std::size_t s = 0; s < a.size() && s < out.size(); ++s) {
    if (a[s].is_zero()) {
      continue;
    }
    for (std::size_t r = 0; r < b.size() && s + r < out.size(); ++r) {
      if (!b[r].is_zero()) {
        out[s + r].add_product(a[s], b[r]);
      }
    }
  }
  return out;
}

// Weight of the cross edges between the two halves of a vertex split, as a
// function of how many of them are descents. With i = i' + pair_offset
// descent-capable pairs (q[i'] splits realize that), the w descents are
// chosen among i - binomial_shift of them and each of the remaining
// free_pairs - i increasing pairs is optional:
//   out[w] = sum_{i'} q[i'] * 2^(free_pairs - i) * C(i - binomial_shift, w)
Row cross_weights(const std::vector<Nat>& q, int pair_offset, int free_pairs, int binomial_shift,
                  int limit) {
  Row out(idx(limit) + 1);
  for (std::size_t ip = 0; ip < q.size(); ++ip) {
    if (q[ip].is_zero()) {
      continue;
    }
    const int i = static_cast<int>(ip) + pair_offset;
    const Nat scale = q[ip] * pow2(free_pairs - i);
    const int choose_from = i - binomial_shift;
    for (int w = 0; w <= limit && w <= choose_from; ++w) {
      out[idx(w)].add_product(scale, binomial(choose_from, w));
    }
  }
  return out;
}

// out[k] = sum_{v <= k} conv[v] * weights[k - v], for k = 0..limit.
Row combine(const Row& conv, const Row& weights, int limit) {
  return convolve(conv, weights, limit);
}

void accumulate(Row& target, const Row& addend, const Nat& factor = Nat{1}) {
  for (std::size_t k = 0; k < target.size() && k < addend.size(); ++k) {
    if (!addend[k].is_zero()) {
      target[k].add_product(factor, addend[k]);
    }
  }
}

}  // namespace

std::string_view family_tag(Family family) {
  switch (family) {
    case Family::d: return "d";
    case Family::t: return "t";
    case Family::u: return "u";
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::Cw: return "Cw";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view tag) {
  for (Family f : kAllFamilies) {
    if (family_tag(f) == tag) {
      return f;
    }
  }
  return std::nullopt;
}

SeedConflict::SeedConflict(CountRecord seeded, Nat computed)
    : std::runtime_error(std::string(family_tag(seeded.family)) + " " + std::to_string(seeded.n) +
                         " " + std::to_string(seeded.k) + " seeded " + seeded.value.to_decimal() +
                         " computed " + computed.to_decimal()),
      seeded_(std::move(seeded)),
      computed_(std::move(computed)) {}

const Nat& CountTable::at(int n, int k) const {
  static const Nat zero;
  const auto& r = row(n);
  if (k < 0 || idx(k) >= r.size()) {
    return zero;
  }
  return r[idx(k)];
}

void CountTable::append_row(std::vector<Nat> row) {
  if (row.size() != idx(max_descents(num_rows())) + 1) {
    throw std::logic_error("CountTable: row length mismatch");
  }
  rows_.push_back(std::move(row));
}

Engine::Engine()
    : tables_{CountTable{Family::d}, CountTable{Family::t}, CountTable{Family::u},
              CountTable{Family::A}, CountTable{Family::B}, CountTable{Family::Cw}} {}

const CountTable& Engine::table_of(Family family) const { return tables_[idx(static_cast<int>(family))]; }
CountTable& Engine::table_of(Family family) { return tables_[idx(static_cast<int>(family))]; }

Nat Engine::d(int n, int k) { return value(Family::d, n, k); }
Nat Engine::t(int n, int k) { return value(Family::t, n, k); }
Nat Engine::u(int n, int k) { return value(Family::u, n, k); }
Nat Engine::sum_a(int n, int k) { return value(Family::A, n, k); }
Nat Engine::sum_b(int n, int k) { return value(Family::B, n, k); }
Nat Engine::sum_c_weighted(int n, int k) { return value(Family::Cw, n, k); }

Nat Engine::value(Family family, int n, int k) {
  check_args(n, k);
  if (k > max_descents(n)) {
    return Nat{};
  }
  std::lock_guard lock(mutex_);
  ensure_rows(n);
  return table_of(family).at(n, k);
}

std::vector<Nat> Engine::row(Family family, int n) {
  check_args(n, 0);
  std::lock_guard lock(mutex_);
  ensure_rows(n);
  return table_of(family).row(n);
}

Nat Engine::row_total(int n) {
  Nat total;
  for (const Nat& v : row(Family::d, n)) {
    total += v;
  }
  return total;
}

std::vector<std::vector<Nat>> Engine::table(int n_max) {
  check_args(n_max, 0);
  std::lock_guard lock(mutex_);
  ensure_rows(n_max);
  std::vector<std::vector<Nat>> out;
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(table_of(Family::d).row(n));
  }
  return out;
}

int Engine::rows_ready() const {
  std::lock_guard lock(mutex_);
  return table_of(Family::d).num_rows();
}

std::vector<CountRecord> Engine::entries() const {
  std::lock_guard lock(mutex_);
  std::map<Key, Nat> all(seeded_);
  for (const auto& table : tables_) {
    for (int n = 0; n < table.num_rows(); ++n) {
      const auto& r = table.row(n);
      for (std::size_t k = 0; k < r.size(); ++k) {
        all.emplace(Key{table.family(), n, static_cast<int>(k)}, r[k]);
      }
    }
  }
  std::vector<CountRecord> out;
  out.reserve(all.size());
  for (auto& [key, value] : all) {
    out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), value});
  }
  return out;
}

void Engine::seed(std::span<const CountRecord> records) {
  std::lock_guard lock(mutex_);
  std::map<Key, Nat> incoming;
  for (const auto& rec : records) {
    if (rec.n < 0 || rec.n > kMaxSupportedN || rec.k < 0 || rec.k > max_descents(rec.n)) {
      throw std::invalid_argument("seed: key out of range: " + std::string(family_tag(rec.family)) +
                                  " " + std::to_string(rec.n) + " " + std::to_string(rec.k));
    }
    Key key{rec.family, rec.n, rec.k};
    if (!incoming.emplace(key, rec.value).second) {
      throw std::invalid_argument("seed: duplicate key " + std::string(family_tag(rec.family)) +
                                  " " + std::to_string(rec.n) + " " + std::to_string(rec.k));
    }
  }
  for (const auto& [key, value] : incoming) {
    const auto& [family, n, k] = key;
    const CountTable& table = table_of(family);
    if (n < table.num_rows()) {
      if (table.at(n, k) != value) {
        throw SeedConflict({family, n, k, value}, table.at(n, k));
      }
      continue;
    }
    auto it = seeded_.find(key);
    if (it != seeded_.end() && it->second != value) {
      throw SeedConflict({family, n, k, value}, it->second);
    }
  }
  for (auto& [key, value] : incoming) {
    if (std::get<1>(key) >= table_of(std::get<0>(key)).num_rows()) {
      seeded_.insert_or_assign(key, std::move(value));
    }
  }
}

void Engine::ensure_rows(int n) {
  for (int row = table_of(Family::d).num_rows(); row <= n; ++row) {
    if (!adopt_seeded_row(row)) {
      compute_row(row);
    }
  }
}

bool Engine::adopt_seeded_row(int n) {
  const int width = max_descents(n) + 1;
  for (Family f : kAllFamilies) {
    for (int k = 0; k < width; ++k) {
      if (!seeded_.contains(Key{f, n, k})) {
        return false;
      }
    }
  }
  for (Family f : kAllFamilies) {
    Row r;
    r.reserve(idx(width));
    for (int k = 0; k < width; ++k) {
      auto node = seeded_.extract(Key{f, n, k});
      r.push_back(std::move(node.mapped()));
    }
    table_of(f).append_row(std::move(r));
  }
  return true;
}

void Engine::compute_row(int n) {
  const int K = max_descents(n);
  const auto width = idx(K) + 1;
  Row d_row(width), t_row(width), u_row(width), a_row(width), b_row(width), c_row(width);

  const CountTable& d_tab = table_of(Family::d);
  const CountTable& t_tab = table_of(Family::t);
  const CountTable& u_tab = table_of(Family::u);

  if (n == 0) {
    d_row[0] = Nat{1};
    t_row[0] = Nat{1};
  } else {
    // Every vertex reachable from 1.
    t_row[0] = two_factorial(n - 1);
    for (int j = 1; j <= n - 1 && K >= 1; ++j) {
      const auto q = gaussian_coeffs(n - 2, j - 1);
      const Row weights = cross_weights(q.coeffs, 0, (j - 1) * (n - j), 0, K);
      const Row conv = convolve(u_tab.row(j), t_tab.row(n - j), K);
      Row part = combine(conv, weights, K);
      part[0] = Nat{};
      accumulate(t_row, part, pow2(n - j) - Nat{1});
    }

    // Every vertex reachable from n.
    u_row[0] = Nat{n == 1 ? 1u : 0u};
    for (int j = 1; j <= n - 1 && K >= 1; ++j) {
      const auto q = gaussian_coeffs(n - 2, j - 1);
      const int free_pairs = j * (n - j);
      Row weights = cross_weights(q.coeffs, n - 1, free_pairs, 0, K);
      const Row avoiding_one = cross_weights(q.coeffs, n - 1, free_pairs, n - j, K);
      for (std::size_t w = 0; w < weights.size(); ++w) {
        weights[w] -= avoiding_one[w];
      }
      const Row conv = convolve(t_tab.row(j), u_tab.row(n - j), K);
      Row part = combine(conv, weights, K);
      part[0] = Nat{};
      accumulate(u_row, part);
    }

    auto t_of = [&](int j) -> const Row& { return j == n ? t_row : t_tab.row(j); };

    // Incidences of descents into 1, and (m - 1)-weighted multiplicities.
    for (int j = 1; j <= n - 1; ++j) {
      const int outside = n - j;
      const auto q = gaussian_coeffs(n - 1, j - 1);
      const Row weights = cross_weights(q.coeffs, 0, (j - 1) * outside, 0, K);
      Row into_one_a(width), into_one_c(width);
      for (int count = 1; count <= outside; ++count) {
        const Nat ways = binomial(outside, count);
        for (int w = count; w <= K; ++w) {
          const Nat& base = weights[idx(w - count)];
          if (base.is_zero()) {
            continue;
          }
          into_one_a[idx(w)].add_product(Nat{static_cast<std::uint64_t>(count)} * ways, base);
          if (count >= 2) {
            into_one_c[idx(w)].add_product(Nat{static_cast<std::uint64_t>(count - 1)} * ways, base);
          }
        }
      }
      const Row conv = convolve(d_tab.row(outside), t_of(j), K);
      accumulate(a_row, combine(conv, into_one_a, K));
      accumulate(c_row, combine(conv, into_one_c, K));
    }

    // Incidences of vertices reachable from 1.
    for (int j = 2; j <= n; ++j) {
      const int outside = n - j;
      const auto q = gaussian_coeffs(n - 1, j - 1);
      const Row weights = cross_weights(q.coeffs, outside, j * outside, 0, K);
      const Row conv = convolve(d_tab.row(outside), t_of(j), K);
      accumulate(b_row, combine(conv, weights, K), Nat{static_cast<std::uint64_t>(j - 1)});
    }

    d_row[0] = pow2(K);
    const Nat grow = pow2(n - 1);
    const Nat new_descent_targets{static_cast<std::uint64_t>(n - 1)};
    for (int k = 1; k <= K; ++k) {
      Nat value = grow * d_tab.at(n - 1, k);
      value.add_product(new_descent_targets, d_row[idx(k - 1)]);
      try {
        value -= a_row[idx(k - 1)] + b_row[idx(k - 1)] + c_row[idx(k)];
      } catch (const std::domain_error& e) {
        throw std::logic_error("internal error: negative d(" + std::to_string(n) + "," +
                               std::to_string(k) + "): " + e.what());
      }
      d_row[idx(k)] = std::move(value);
    }
  }

  std::array<Row*, 6> rows{&d_row, &t_row, &u_row, &a_row, &b_row, &c_row};
  for (Family f : kAllFamilies) {
    const Row& r = *rows[idx(static_cast<int>(f))];
    for (int k = 0; k <= K; ++k) {
      auto it = seeded_.find(Key{f, n, k});
      if (it != seeded_.end() && it->second != r[idx(k)]) {
        throw SeedConflict({f, n, k, it->second}, r[idx(k)]);
      }
    }
  }
  for (Family f : kAllFamilies) {
    for (int k = 0; k <= K; ++k) {
      seeded_.erase(Key{f, n, k});
    }
    table_of(f).append_row(std::move(*rows[idx(static_cast<int>(f))]));
  }
}

}  // namespace descents
