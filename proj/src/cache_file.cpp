#include "descents/cache_file.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <tuple>

namespace descents {

namespace {

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= line.size()) {
    const std::size_t end = line.find(' ', start);
    out.push_back(line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) {
      break;
    }
    start = end + 1;
  }
  return out;
}

std::optional<int> parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end || value < 0) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

CacheFormatError::CacheFormatError(int line, const std::string& what)
    : std::runtime_error("cache line " + std::to_string(line) + ": " + what), line_(line) {}

std::vector<CountRecord> read_cache(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCacheHeader) {
    throw CacheFormatError(1, "expected header '" + std::string(kCacheHeader) + "'");
  }
  std::vector<CountRecord> records;
  std::set<std::tuple<Family, int, int>> seen;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_spaces(line);
    if (fields.size() != 4) {
      throw CacheFormatError(line_no, "expected '<family> <n> <k> <decimal>'");
    }
    const auto family = parse_family(fields[0]);
    if (!family) {
      throw CacheFormatError(line_no, "unknown family '" + std::string(fields[0]) + "'");
    }
    const auto n = parse_int(fields[1]);
    const auto k = parse_int(fields[2]);
    if (!n || !k || *n > 10000) {
      throw CacheFormatError(line_no, "bad n or k");
    }
    if (*k > max_descents(*n)) {
      throw CacheFormatError(line_no, "k exceeds C(n,2)");
    }
    Nat value;
    try {
      value = Nat::from_decimal(fields[3]);
    } catch (const std::invalid_argument& e) {
      throw CacheFormatError(line_no, e.what());
    }
    if (!seen.emplace(*family, *n, *k).second) {
      throw CacheFormatError(line_no, "duplicate key");
    }
    records.push_back({*family, *n, *k, std::move(value)});
  }
  return records;
}

void write_cache(std::ostream& out, std::span<const CountRecord> records) {
  out << kCacheHeader << '\n';
  for (const auto& rec : records) {
    out << family_tag(rec.family) << ' ' << rec.n << ' ' << rec.k << ' ' << rec.value << '\n';
  }
}

}  // namespace descents
