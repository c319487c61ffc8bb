#pragma once

#include <cstdint>
#include <span>

// Published table of d(n, k) for 1 <= n <= 8, 0 <= k <= 28, with the TOTAL
// row, as printed (thousands separators removed).
namespace descents::figure1 {

inline constexpr int kMaxN = 8;
inline constexpr int kMaxK = 28;

// A printed entry that disagrees with both its own column TOTAL and an
// exhaustive recomputation.
struct Erratum {
  int n;
  int k;
  std::uint64_t printed;
  std::uint64_t corrected;
};

// Printed entry; 0 outside the table. Throws std::out_of_range for n
// outside 1..8.
std::uint64_t published(int n, int k);
std::uint64_t published_total(int n);

std::span<const Erratum> errata();

// Printed entry with errata applied.
std::uint64_t reference(int n, int k);

}  // namespace descents::figure1
