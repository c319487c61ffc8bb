// descents: count labeled acyclic digraphs by number of descents.
//
// Exit codes: 0 success, 1 verification or data mismatch, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "descents/cache_file.hpp"
#include "descents/engine.hpp"
#include "descents/table_format.hpp"
#include "descents/verify.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct CacheSource {
  std::string explicit_path;

  // --cache wins; DESCENTS_CACHE is used only if the file exists.
  std::optional<std::filesystem::path> resolve() const {
    if (!explicit_path.empty()) {
      return std::filesystem::path(explicit_path);
    }
    if (const char* env = std::getenv("DESCENTS_CACHE"); env && *env) {
      if (std::filesystem::exists(env)) {
        return std::filesystem::path(env);
      }
    }
    return std::nullopt;
  }
};

// Returns 0 on success, otherwise the exit code to use.
int load_cache(descents::Engine& engine, const std::filesystem::path& path, std::size_t* count = nullptr) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cache: cannot read " << path.string() << "\n";
    return kExitUsage;
  }
  try {
    const auto records = descents::read_cache(in);
    if (auto mismatch = descents::check_records_against_reference(records)) {
      std::cerr << "cache: " << mismatch->describe() << "\n";
      return kExitMismatch;
    }
    engine.seed(records);
    if (count) {
      *count = records.size();
    }
  } catch (const std::exception& e) {
    std::cerr << "cache: " << e.what() << "\n";
    return kExitMismatch;
  }
  return 0;
}

int write_text(const std::string& text, const std::optional<std::filesystem::path>& out) {
  if (!out) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(*out, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text) || !file.flush()) {
    std::cerr << "cannot write " << out->string() << "\n";
    return kExitUsage;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count labeled acyclic digraphs on n vertices by number of descents."};
  app.require_subcommand(1);

  int value_n = 0;
  int value_k = 0;
  CacheSource value_cache;
  auto* value_cmd = app.add_subcommand("value", "Print d(n, k).");
  value_cmd->add_option("--n", value_n, "Number of vertices")->required()->check(CLI::NonNegativeNumber);
  value_cmd->add_option("--k", value_k, "Number of descents")->required()->check(CLI::NonNegativeNumber);
  value_cmd->add_option("--cache", value_cache.explicit_path, "Memo cache to preload");

  int table_n_max = 8;
  std::optional<int> table_k_max;
  std::string table_format = "csv";
  std::string table_out;
  CacheSource table_cache;
  auto* table_cmd = app.add_subcommand("table", "Print d(n, k) for 1 <= n <= n-max.");
  table_cmd->add_option("--n-max", table_n_max, "Largest n")->check(CLI::PositiveNumber);
  table_cmd->add_option("--k-max", table_k_max, "Largest k to emit")->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--format", table_format, "csv, json, md or latex")
      ->check(CLI::IsMember({"csv", "json", "md", "latex"}));
  table_cmd->add_option("--out", table_out, "Output file (default stdout)");
  table_cmd->add_option("--cache", table_cache.explicit_path, "Memo cache to preload");

  descents::VerifyOptions verify_opts;
  std::vector<std::string> verify_checks;
  std::string verify_fixture;
  CacheSource verify_cache;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the recurrences.");
  verify_cmd->add_option("--max-n", verify_opts.max_n, "Largest n for figure1/robinson/stanley/lemq");
  verify_cmd->add_option("--oracle-max-n", verify_opts.oracle_max_n, "Largest n for the exhaustive oracle");
  verify_cmd->add_flag("--allow-slow", verify_opts.allow_slow, "Permit --oracle-max-n 6");
  verify_cmd->add_option("--checks", verify_checks, "Subset of figure1,oracle,robinson,stanley,lemq")
      ->delimiter(',')
      ->check(CLI::IsMember({"figure1", "oracle", "robinson", "stanley", "lemq"}));
  verify_cmd->add_option("--fixture", verify_fixture, "CSV (n,k,count) replacing the built-in table");
  verify_cmd->add_option("--cache", verify_cache.explicit_path, "Memo cache to preload");

  std::string cache_action;
  std::string cache_path;
  int cache_n_max = 8;
  auto* cache_cmd = app.add_subcommand("cache", "Save, load or clear a memo cache file.");
  cache_cmd->add_option("action,--action", cache_action, "save, load or clear")
      ->required()
      ->check(CLI::IsMember({"save", "load", "clear"}));
  cache_cmd->add_option("--path", cache_path, "Cache file (default $DESCENTS_CACHE)");
  cache_cmd->add_option("--n-max", cache_n_max, "Rows to compute before saving")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  descents::Engine engine;
  try {
    if (*value_cmd) {
      if (auto path = value_cache.resolve()) {
        if (int rc = load_cache(engine, *path)) return rc;
      }
      std::cout << engine.d(value_n, value_k) << "\n";
      return 0;
    }

    if (*table_cmd) {
      if (auto path = table_cache.resolve()) {
        if (int rc = load_cache(engine, *path)) return rc;
      }
      descents::TableRequest request;
      request.n_max = table_n_max;
      request.k_max = table_k_max;
      request.format = *descents::parse_table_format(table_format);
      if (!table_out.empty()) {
        request.out = table_out;
      }
      return write_text(descents::render_table(engine, request), request.out);
    }

    if (*verify_cmd) {
      if (!verify_checks.empty()) {
        verify_opts.checks.clear();
        for (const auto& name : verify_checks) {
          verify_opts.checks.push_back(*descents::parse_check(name));
        }
      }
      try {
        descents::validate(verify_opts);
      } catch (const std::invalid_argument& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return kExitUsage;
      }
      if (!verify_fixture.empty()) {
        std::ifstream in(verify_fixture);
        if (!in) {
          std::cerr << "verify: cannot read " << verify_fixture << "\n";
          return kExitUsage;
        }
        try {
          verify_opts.fixture = descents::read_fixture_csv(in);
        } catch (const std::runtime_error& e) {
          std::cerr << "verify: " << e.what() << "\n";
          return kExitUsage;
        }
      }
      if (auto path = verify_cache.resolve()) {
        if (int rc = load_cache(engine, *path)) return rc;
      }
      bool all_passed = true;
      for (const auto& result : descents::run_verify(engine, verify_opts)) {
        std::cout << descents::format_result(result) << "\n";
        all_passed = all_passed && result.passed;
      }
      return all_passed ? 0 : kExitMismatch;
    }

    if (*cache_cmd) {
      if (cache_path.empty()) {
        if (const char* env = std::getenv("DESCENTS_CACHE"); env && *env) {
          cache_path = env;
        } else {
          std::cerr << "cache: no --path given and DESCENTS_CACHE is unset\n";
          return kExitUsage;
        }
      }
      if (cache_action == "save") {
        engine.row(descents::Family::d, cache_n_max);
        std::ofstream out(cache_path, std::ios::binary | std::ios::trunc);
        const auto records = engine.entries();
        descents::write_cache(out, records);
        if (!out.flush()) {
          std::cerr << "cache: cannot write " << cache_path << "\n";
          return kExitUsage;
        }
        std::cout << "saved " << records.size() << " entries to " << cache_path << "\n";
        return 0;
      }
      if (cache_action == "load") {
        std::size_t count = 0;
        if (int rc = load_cache(engine, cache_path, &count)) return rc;
        int highest = -1;
        for (const auto& rec : engine.entries()) {
          highest = std::max(highest, rec.n);
        }
        if (highest >= 0) {
          engine.row(descents::Family::d, highest);
        }
        std::cout << "loaded " << count << " entries; rows 0.." << engine.rows_ready() - 1
                  << " consistent\n";
        return 0;
      }
      // clear
      std::ofstream out(cache_path, std::ios::binary | std::ios::trunc);
      descents::write_cache(out, {});
      if (!out.flush()) {
        std::cerr << "cache: cannot write " << cache_path << "\n";
        return kExitUsage;
      }
      return 0;
    }
  } catch (const descents::SeedConflict& e) {
    std::cerr << "cache conflict: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
