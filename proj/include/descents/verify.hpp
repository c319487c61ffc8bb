#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "descents/engine.hpp"

namespace descents {

struct Mismatch {
  std::string key;  // e.g. "d 5 2", "total 4", "Q 4 2 1"
  Nat expected;
  Nat actual;

  // "<key> expected <expected> actual <actual>"
  std::string describe() const;
};

// Expected d(n, k) values keyed by (n, k).
using Fixture = std::map<std::pair<int, int>, Nat>;

// The published table for n <= 8, k <= 28, with errata applied.
Fixture reference_fixture();

// Reads a fixture in the table CSV layout ("n,k,count" header). Throws
// std::runtime_error on malformed input.
Fixture read_fixture_csv(std::istream& in);

enum class Check { figure1, oracle, robinson, stanley, lemq };

std::optional<Check> parse_check(std::string_view name);
std::string_view check_name(Check check);

struct VerifyOptions {
  int max_n = 8;
  int oracle_max_n = 5;
  bool allow_slow = false;
  std::vector<Check> checks{Check::figure1, Check::oracle, Check::robinson, Check::stanley,
                            Check::lemq};
  // Checked against the engine in place of reference_fixture(); mismatches
  // then report the engine value as expected.
  std::optional<Fixture> fixture;
};

struct CheckResult {
  Check check = Check::figure1;
  bool passed = true;
  std::optional<Mismatch> mismatch;  // first difference found
  std::string note;
};

// Throws std::invalid_argument for unusable options: max_n < 1,
// oracle_max_n outside 1..6, or oracle_max_n = 6 without allow_slow.
void validate(const VerifyOptions& options);

std::vector<CheckResult> run_verify(Engine& engine, const VerifyOptions& options);

// "figure1 PASS", "oracle FAIL t 4 2 expected 3 actual 4", ...
std::string format_result(const CheckResult& result);

// First d(n, k) record (1 <= n <= 8) that disagrees with reference_fixture().
std::optional<Mismatch> check_records_against_reference(const std::vector<CountRecord>& records);

}  // namespace descents
