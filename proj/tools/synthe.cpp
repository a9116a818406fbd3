#include <iostream>

#include <CLI11.hpp>

#include "synthe/cli.hpp"
#include "synthe/parser.hpp"
#include "synthe/rules.hpp"
#include "synthe/typecheck.hpp"

namespace {

void add_run_flags(CLI::App& app, synthe::RunOptions& o, std::string& smt_dir, std::string& seeds,
                   std::size_t& grammar_size) {
  app.add_option("--function", o.function, "function to synthesize when the file has several");
  app.add_option("--timeout", o.timeout, "timeout in seconds")->default_val(200)->check(CLI::PositiveNumber);
  app.add_option("--max-size", o.max_size, "largest term size explored by STE")->default_val(7);
  app.add_option("--verify-depth", o.verify_depth, "input bound for bounded verification")->default_val(3);
  app.add_option("--dump-grammar", grammar_size, "print grammar strata 1..n for the root problem");
  app.add_option("--dump-smt", smt_dir, "write SMT-LIB2 queries into this directory");
  app.add_flag("--trace-ste", o.trace_ste, "print per-stratum STE counts");
  app.add_flag("--trace-search", o.trace_search, "print the node expansion trace");
  app.add_option("--seed-examples", seeds, "file of extra example inputs");
  app.add_flag("--sequential", o.sequential, "single-threaded evaluation");
}

void finish_options(synthe::RunOptions& o, const std::string& smt_dir, const std::string& seeds,
                    std::size_t grammar_size) {
  if (!smt_dir.empty()) o.dump_smt = smt_dir;
  if (!seeds.empty()) o.seed_examples = seeds;
  if (grammar_size) o.dump_grammar = grammar_size;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"synthe: fills in choose-functions of .lng programs"};
  app.require_subcommand(1);

  synthe::RunOptions run_opts, suite_opts;
  std::string run_smt, run_seeds, suite_smt, suite_seeds;
  std::size_t run_grammar = 0, suite_grammar = 0;

  std::string file;
  CLI::App* run = app.add_subcommand("run", "synthesize the choose-function of one benchmark file");
  run->add_option("file", file, "benchmark file")->required();
  add_run_flags(*run, run_opts, run_smt, run_seeds, run_grammar);

  std::string dir, expect;
  CLI::App* suite = app.add_subcommand("suite", "run every .lng file of a directory");
  suite->add_option("dir", dir, "benchmark directory")->required();
  suite->add_option("--expect", expect, "expectations file (name<TAB>status)");
  add_run_flags(*suite, suite_opts, suite_smt, suite_seeds, suite_grammar);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*run) {
      finish_options(run_opts, run_smt, run_seeds, run_grammar);
      synthe::SynthesisReport r = synthe::run_benchmark(file, run_opts, std::cerr);
      std::cout << synthe::report_json(r) << "\n";
      std::cout << synthe::report_table({r});
      if (!r.solution_text.empty()) std::cout << "\n" << r.solution_text << "\n";
      return synthe::exit_code(r);
    }
    finish_options(suite_opts, suite_smt, suite_seeds, suite_grammar);
    std::optional<std::filesystem::path> expectations;
    if (!expect.empty()) expectations = expect;
    synthe::SuiteResult s = synthe::run_suite(dir, suite_opts, expectations, std::cerr);
    for (const auto& r : s.reports) std::cout << synthe::report_json(r) << "\n";
    std::cout << synthe::report_table(s.reports);
    for (const auto& line : s.regressions) std::cout << "regression: " << line << "\n";
    return s.regressions.empty() ? 0 : 4;
  } catch (const synthe::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const synthe::TypeCheckFailure& e) {
    std::cerr << "type error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 1;
}
