#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "descents/engine.hpp"

// Plain-text memo cache:
//   DESCENTS-CACHE v1
//   <family> <n> <k> <decimal>
//   ...
namespace descents {

inline constexpr std::string_view kCacheHeader = "DESCENTS-CACHE v1";

class CacheFormatError : public std::runtime_error {
 public:
  CacheFormatError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Rejects a wrong header, malformed lines, unknown families, k outside
// 0..C(n,2), and duplicate keys.
std::vector<CountRecord> read_cache(std::istream& in);

void write_cache(std::ostream& out, std::span<const CountRecord> records);

}  // namespace descents
