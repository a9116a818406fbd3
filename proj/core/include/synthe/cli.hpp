#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "synthe/search.hpp"

namespace synthe {

struct RunOptions {
  std::string function;
  double timeout = 200;
  std::size_t max_size = 7;
  int verify_depth = 3;
  std::optional<std::size_t> dump_grammar;
  std::optional<std::filesystem::path> dump_smt;
  bool trace_ste = false;
  bool trace_search = false;
  std::optional<std::filesystem::path> seed_examples;
  bool sequential = false;
};

/// Parses, type checks and monomorphizes a benchmark file. Throws
/// ParseError, TypeCheckFailure or std::runtime_error for unreadable files.
Program load_program(const std::filesystem::path& path);

SearchConfig search_config(const RunOptions& opts);

/// Seed inputs, one per line, written as the argument list of `fn`
/// (e.g. `Cons(1, Nil()), 3`). Blank lines and `//` comments are skipped.
std::vector<Input> load_seed_examples(const std::filesystem::path& path, const Program& p, const FunDef& fn);

/// Synthesizes the choose-function of one file. Grammar dumps and STE traces
/// requested by `opts` go to `diag`.
SynthesisReport run_benchmark(const std::filesystem::path& path, const RunOptions& opts, std::ostream& diag);

/// 0 Verified, 2 SolvedUnverified, 3 Failed.
int exit_code(const SynthesisReport& r);

/// One JSON object, no newline.
std::string report_json(const SynthesisReport& r);
std::string report_table(const std::vector<SynthesisReport>& rs);

struct SuiteResult {
  std::vector<SynthesisReport> reports;
  /// One line per benchmark whose status differs from the expectation.
  std::vector<std::string> regressions;
};

/// Expectations: `name<TAB>Verified|SolvedUnverified|Failed` per line.
std::map<std::string, std::string> load_expectations(const std::filesystem::path& path);

/// Runs every `.lng` file of `dir` in name order.
SuiteResult run_suite(const std::filesystem::path& dir, const RunOptions& opts,
                      const std::optional<std::filesystem::path>& expectations, std::ostream& diag);

/// Status name without the depth, as compared against expectations.
std::string status_kind(const SynthesisReport& r);

}  // namespace synthe
