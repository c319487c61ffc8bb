#include "descents/verify.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

#include "descents/figure1.hpp"
#include "descents/kernel.hpp"
#include "descents/oracle.hpp"
#include "descents/totals.hpp"

namespace descents {

namespace {

std::string key_of(std::string_view tag, std::initializer_list<int> indices) {
  std::string out(tag);
  for (int i : indices) {
    out += ' ' + std::to_string(i);
  }
  return out;
}

CheckResult check_figure1(Engine& engine, const VerifyOptions& options) {
  CheckResult result;
  result.check = Check::figure1;
  const Fixture fixture = options.fixture ? *options.fixture : reference_fixture();
  for (const auto& [nk, listed] : fixture) {
    const auto [n, k] = nk;
    if (n > options.max_n) {
      continue;
    }
    const Nat computed = engine.d(n, k);
    if (computed != listed) {
      result.passed = false;
      // A user-supplied fixture is the thing under test; the built-in table tests the engine.
      result.mismatch = options.fixture ? Mismatch{key_of("d", {n, k}), computed, listed}
                                        : Mismatch{key_of("d", {n, k}), listed, computed};
      return result;
    }
  }
  if (!options.fixture) {
    for (const auto& e : figure1::errata()) {
      if (e.n <= options.max_n) {
        result.note += "(d " + std::to_string(e.n) + " " + std::to_string(e.k) + " checked against " +
                       std::to_string(e.corrected) + "; printed as " + std::to_string(e.printed) + ")";
      }
    }
  }
  return result;
}

CheckResult check_oracle(Engine& engine, const VerifyOptions& options) {
  CheckResult result;
  result.check = Check::oracle;
  for (int n = 1; n <= options.oracle_max_n; ++n) {
    const auto bundle = oracle::enumerate_counts(n, {.allow_slow = options.allow_slow});
    for (int k = 0; k <= max_descents(n); ++k) {
      const auto ki = static_cast<std::size_t>(k);
      const std::pair<Family, Nat> expected[] = {
          {Family::d, bundle.d[ki]},        {Family::t, bundle.t[ki]},
          {Family::u, bundle.u[ki]},        {Family::A, bundle.sum_a(k)},
          {Family::B, bundle.sum_b(k)},     {Family::Cw, bundle.sum_c_weighted(k)}};
      for (const auto& [family, value] : expected) {
        const Nat actual = engine.value(family, n, k);
        if (actual != value) {
          result.passed = false;
          result.mismatch = Mismatch{key_of(family_tag(family), {n, k}), value, actual};
          return result;
        }
      }
    }
  }
  return result;
}

CheckResult check_robinson(Engine& engine, const VerifyOptions& options) {
  CheckResult result;
  result.check = Check::robinson;
  for (int n = 0; n <= options.max_n; ++n) {
    const Nat expected = robinson_total(n);
    const Nat actual = engine.row_total(n);
    if (actual != expected) {
      result.passed = false;
      result.mismatch = Mismatch{key_of("total", {n}), expected, actual};
      return result;
    }
  }
  return result;
}

CheckResult check_stanley(const VerifyOptions& options) {
  CheckResult result;
  result.check = Check::stanley;
  result.passed = stanley_series_check(options.max_n);
  if (!result.passed) {
    result.note = "series product is not 1 through degree " + std::to_string(options.max_n);
  }
  return result;
}

CheckResult check_lemq(const VerifyOptions& options) {
  CheckResult result;
  result.check = Check::lemq;
  for (int n = 0; n <= std::min(options.max_n, 8); ++n) {
    for (int j = 0; j <= n; ++j) {
      const auto histogram = oracle::subset_pair_histogram(n, j);
      const auto q = gaussian_coeffs(n, j);
      for (int i = 0; i <= j * (n - j); ++i) {
        const Nat& expected = histogram[static_cast<std::size_t>(i)];
        const Nat actual = q.at(i);
        if (actual != expected) {
          result.passed = false;
          result.mismatch = Mismatch{key_of("Q", {n, j, i}), expected, actual};
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace

std::string Mismatch::describe() const {
  return key + " expected " + expected.to_decimal() + " actual " + actual.to_decimal();
}

Fixture reference_fixture() {
  Fixture out;
  for (int n = 1; n <= figure1::kMaxN; ++n) {
    for (int k = 0; k <= figure1::kMaxK; ++k) {
      out.emplace(std::pair{n, k}, Nat{figure1::reference(n, k)});
    }
  }
  return out;
}

Fixture read_fixture_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "n,k,count") {
    throw std::runtime_error("fixture: expected header 'n,k,count'");
  }
  Fixture out;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string n_text, k_text, count_text;
    if (!std::getline(fields, n_text, ',') || !std::getline(fields, k_text, ',') ||
        !std::getline(fields, count_text)) {
      throw std::runtime_error("fixture: malformed line '" + line + "'");
    }
    try {
      const int n = std::stoi(n_text);
      const int k = std::stoi(k_text);
      if (n < 1 || k < 0) {
        throw std::invalid_argument("negative index");
      }
      out.insert_or_assign(std::pair{n, k}, Nat::from_decimal(count_text));
    } catch (const std::exception&) {
      throw std::runtime_error("fixture: malformed line '" + line + "'");
    }
  }
  return out;
}

std::optional<Check> parse_check(std::string_view name) {
  for (Check c : {Check::figure1, Check::oracle, Check::robinson, Check::stanley, Check::lemq}) {
    if (check_name(c) == name) {
      return c;
    }
  }
  return std::nullopt;
}

std::string_view check_name(Check check) {
  switch (check) {
    case Check::figure1: return "figure1";
    case Check::oracle: return "oracle";
    case Check::robinson: return "robinson";
    case Check::stanley: return "stanley";
    case Check::lemq: return "lemq";
  }
  return "?";
}

void validate(const VerifyOptions& options) {
  if (options.max_n < 1) {
    throw std::invalid_argument("--max-n must be at least 1");
  }
  if (options.oracle_max_n < 1 || options.oracle_max_n > oracle::kMaxVertices) {
    throw std::invalid_argument("--oracle-max-n must be between 1 and 6");
  }
  if (options.oracle_max_n == oracle::kMaxVertices && !options.allow_slow) {
    throw std::invalid_argument("--oracle-max-n 6 scans 2^30 digraphs; add --allow-slow");
  }
}

std::vector<CheckResult> run_verify(Engine& engine, const VerifyOptions& options) {
  validate(options);
  std::vector<CheckResult> results;
  for (Check check : options.checks) {
    switch (check) {
      case Check::figure1: results.push_back(check_figure1(engine, options)); break;
      case Check::oracle: results.push_back(check_oracle(engine, options)); break;
      case Check::robinson: results.push_back(check_robinson(engine, options)); break;
      case Check::stanley: results.push_back(check_stanley(options)); break;
      case Check::lemq: results.push_back(check_lemq(options)); break;
    }
  }
  return results;
}

std::string format_result(const CheckResult& result) {
  std::string out(check_name(result.check));
  out += result.passed ? " PASS" : " FAIL";
  if (result.mismatch) {
    out += ' ' + result.mismatch->describe();
  }
  if (!result.note.empty()) {
    out += ' ' + result.note;
  }
  return out;
}

std::optional<Mismatch> check_records_against_reference(const std::vector<CountRecord>& records) {
  for (const auto& rec : records) {
    if (rec.family != Family::d || rec.n < 1 || rec.n > figure1::kMaxN) {
      continue;
    }
    const Nat expected{figure1::reference(rec.n, rec.k)};
    if (rec.value != expected) {
      return Mismatch{key_of("d", {rec.n, rec.k}), expected, rec.value};
    }
  }
  return std::nullopt;
}

}  // namespace descents
