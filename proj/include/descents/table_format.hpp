#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "descents/engine.hpp"

namespace descents {

enum class TableFormat { csv, json, md, latex };

std::optional<TableFormat> parse_table_format(std::string_view name);

struct TableRequest {
  int n_max = 8;
  // Caps the emitted k range; absent means full rows up to C(n, 2).
  std::optional<int> k_max;
  TableFormat format = TableFormat::csv;
  std::optional<std::filesystem::path> out;
};

// csv:   "n,k,count" then one line per (n, k), n-major.
// json:  {"max_n":N,"d":{"1":["1"],...}} with decimal-string counts.
// md, latex: k rows by n columns plus a TOTAL row. TOTAL is always the
//        full row total, even when k_max hides part of the row.
// Throws std::invalid_argument when n_max < 1 or k_max < 0.
std::string render_table(Engine& engine, const TableRequest& request);

}  // namespace descents
