#include "descents/table_format.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace descents {

namespace {

struct Layout {
  std::vector<std::vector<Nat>> rows;  // rows[n - 1][k], already capped
  std::vector<Nat> totals;
  int k_limit = 0;                     // largest k shown in grid formats
};

Layout collect(Engine& engine, const TableRequest& request) {
  if (request.n_max < 1) {
    throw std::invalid_argument("n_max must be at least 1");
  }
  if (request.k_max && *request.k_max < 0) {
    throw std::invalid_argument("k_max must be nonnegative");
  }
  Layout layout;
  layout.rows = engine.table(request.n_max);
  for (auto& row : layout.rows) {
    Nat total;
    for (const Nat& v : row) {
      total += v;
    }
    layout.totals.push_back(std::move(total));
    if (request.k_max && static_cast<int>(row.size()) > *request.k_max + 1) {
      row.resize(static_cast<std::size_t>(*request.k_max) + 1);
    }
  }
  layout.k_limit = static_cast<int>(layout.rows.back().size()) - 1;
  return layout;
}

Nat cell(const Layout& layout, int n, int k) {
  const auto& row = layout.rows[static_cast<std::size_t>(n - 1)];
  return static_cast<std::size_t>(k) < row.size() ? row[static_cast<std::size_t>(k)] : Nat{};
}

std::string render_csv(const Layout& layout) {
  std::ostringstream out;
  out << "n,k,count\n";
  for (std::size_t i = 0; i < layout.rows.size(); ++i) {
    for (std::size_t k = 0; k < layout.rows[i].size(); ++k) {
      out << i + 1 << ',' << k << ',' << layout.rows[i][k] << '\n';
    }
  }
  return out.str();
}

std::string render_json(const Layout& layout) {
  nlohmann::ordered_json doc;
  doc["max_n"] = layout.rows.size();
  doc["d"] = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < layout.rows.size(); ++i) {
    auto values = nlohmann::ordered_json::array();
    for (const Nat& v : layout.rows[i]) {
      values.push_back(v.to_decimal());
    }
    doc["d"][std::to_string(i + 1)] = std::move(values);
  }
  return doc.dump() + "\n";
}

std::string render_markdown(const Layout& layout) {
  const int n_max = static_cast<int>(layout.rows.size());
  std::ostringstream out;
  out << "| k \\ n |";
  for (int n = 1; n <= n_max; ++n) {
    out << ' ' << n << " |";
  }
  out << "\n|---|";
  for (int n = 1; n <= n_max; ++n) {
    out << "---:|";
  }
  out << '\n';
  for (int k = 0; k <= layout.k_limit; ++k) {
    out << "| " << k << " |";
    for (int n = 1; n <= n_max; ++n) {
      out << ' ' << cell(layout, n, k) << " |";
    }
    out << '\n';
  }
  out << "| TOTAL |";
  for (const Nat& total : layout.totals) {
    out << ' ' << total << " |";
  }
  out << '\n';
  return out.str();
}

std::string render_latex(const Layout& layout) {
  const int n_max = static_cast<int>(layout.rows.size());
  std::ostringstream out;
  out << "\\begin{tabular}{c||" << std::string(static_cast<std::size_t>(n_max), 'r') << "}\n";
  out << "$k \\backslash n$";
  for (int n = 1; n <= n_max; ++n) {
    out << " & " << n;
  }
  out << " \\\\\n\\hline\\hline\n";
  for (int k = 0; k <= layout.k_limit; ++k) {
    out << k;
    for (int n = 1; n <= n_max; ++n) {
      out << " & " << cell(layout, n, k);
    }
    out << " \\\\\n";
  }
  out << "\\hline\nTOTAL";
  for (const Nat& total : layout.totals) {
    out << " & " << total;
  }
  out << " \\\\\n\\end{tabular}\n";
  return out.str();
}

}  // namespace

std::optional<TableFormat> parse_table_format(std::string_view name) {
  if (name == "csv") return TableFormat::csv;
  if (name == "json") return TableFormat::json;
  if (name == "md") return TableFormat::md;
  if (name == "latex") return TableFormat::latex;
  return std::nullopt;
}

std::string render_table(Engine& engine, const TableRequest& request) {
  const Layout layout = collect(engine, request);
  switch (request.format) {
    case TableFormat::csv: return render_csv(layout);
    case TableFormat::json: return render_json(layout);
    case TableFormat::md: return render_markdown(layout);
    case TableFormat::latex: return render_latex(layout);
  }
  throw std::logic_error("unknown table format");
}

}  // namespace descents
