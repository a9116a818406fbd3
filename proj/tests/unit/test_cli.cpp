#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "test_support.hpp"

using namespace synthe;
using namespace synthe::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("synthe_cli_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

Outcome run_binary(const std::string& args) {
  fs::path dir = scratch("io");
  std::string cmd = std::string("'") + SYNTHE_BINARY + "' " + args + " >'" + (dir / "out").string() + "' 2>'" +
                    (dir / "err").string() + "'";
  int status = std::system(cmd.c_str());
  Outcome r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(dir / "out");
  r.err = slurp(dir / "err");
  fs::remove_all(dir);
  return r;
}

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

nlohmann::ordered_json first_json(const std::string& out) {
  return nlohmann::ordered_json::parse(out.substr(0, out.find('\n')));
}

/// Body of a printed `def ... = { body }`.
std::string body_of(const std::string& def) {
  auto open = def.find("= {");
  auto close = def.rfind('}');
  return def.substr(open + 3, close - open - 3);
}

}  // namespace

TEST(Cli, ListInsertIsVerified) {
  Outcome r = run_binary("run " + quoted(corpus_file("list_insert")));
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = first_json(r.out);
  EXPECT_EQ(j["benchmark"], "list_insert");
  EXPECT_EQ(j["function"], "insert");
  EXPECT_EQ(j["status"], "Verified");
  EXPECT_EQ(j["verified_depth"], 3);
  EXPECT_EQ(j["solution_size"], 3);
  EXPECT_GT(j["program_size"].get<int>(), 3);
  EXPECT_TRUE(j["wall_clock_s"].is_number());
  EXPECT_FALSE(j.contains("failure"));
  EXPECT_NE(r.out.find("Verified(3)"), std::string::npos) << r.out;

  // The reported solution re-parses and type checks in its program.
  Program p = load_corpus("list_insert");
  Program solved = install(p, "insert", body_of(j["solution"].get<std::string>()));
  EXPECT_TRUE(type_check(solved).empty());
  EXPECT_EQ(print_expr(solved.find_function(Symbol("insert"))->body), "Cons(v, l)");
}

TEST(Cli, JsonSchema) {
  Outcome r = run_binary("run " + quoted(corpus_file("unsat_impossible")));
  EXPECT_EQ(r.code, 3) << r.err;
  auto j = first_json(r.out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"benchmark", "function", "program_size", "solution_size", "status",
                                            "failure", "wall_clock_s", "solution", "ste_trace"}));
  EXPECT_TRUE(j["solution_size"].is_null());
  EXPECT_EQ(j["status"], "Failed");
  EXPECT_EQ(j["failure"], "exhausted");
  EXPECT_EQ(j["solution"], "");
}

TEST(Cli, TinyTimeoutFails) {
  Outcome r = run_binary("run " + quoted(corpus_file("runlength_encode")) + " --timeout 0.001");
  EXPECT_EQ(r.code, 3) << r.err;
  auto j = first_json(r.out);
  EXPECT_EQ(j["status"], "Failed");
  EXPECT_EQ(j["failure"], "timeout");
  EXPECT_NE(r.out.find("Failed(timeout)"), std::string::npos);
}

TEST(Cli, UsageAndInputErrorsExitWithOne) {
  EXPECT_EQ(run_binary("").code, 1);
  EXPECT_EQ(run_binary("run").code, 1);
  EXPECT_EQ(run_binary("run " + quoted(corpus_file("list_insert")) + " --bogus").code, 1);
  EXPECT_EQ(run_binary("run " + quoted(corpus_file("list_insert")) + " --timeout -3").code, 1);
  EXPECT_EQ(run_binary("run /nonexistent/file.lng").code, 1);
  EXPECT_EQ(run_binary("run " + quoted(corpus_file("list_insert")) + " --function nope").code, 1);

  fs::path dir = scratch("bad");
  std::ofstream(dir / "bad.lng") << "def f(x: BigInt): BigInt = {\n  x +\n}\n";
  std::ofstream(dir / "ill.lng") << "def f(x: BigInt): BigInt = { if (1) x else x }\n";
  Outcome parse = run_binary("run " + quoted(dir / "bad.lng"));
  EXPECT_EQ(parse.code, 1);
  EXPECT_NE(parse.err.find("parse error"), std::string::npos) << parse.err;
  Outcome typing = run_binary("run " + quoted(dir / "ill.lng"));
  EXPECT_EQ(typing.code, 1);
  EXPECT_NE(typing.err.find("type error"), std::string::npos) << typing.err;
  fs::remove_all(dir);
}

TEST(Cli, HelpExitsWithZero) { EXPECT_EQ(run_binary("--help").code, 0); }

TEST(Cli, DiagnosticFlags) {
  fs::path smt = scratch("smt");
  Outcome r = run_binary("run " + quoted(corpus_file("list_insert")) + " --dump-grammar 3 --trace-ste --trace-search" +
                     " --dump-smt " + quoted(smt) + " --sequential --max-size 5 --verify-depth 2");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("generated"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("expand #0"), std::string::npos) << r.err;
  EXPECT_EQ(first_json(r.out)["verified_depth"], 2);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(smt)) {
    EXPECT_EQ(e.path().extension(), ".smt2");
    EXPECT_NE(slurp(e.path()).find("(check-sat)"), std::string::npos);
    ++files;
  }
  EXPECT_GT(files, 0u);
  fs::remove_all(smt);
}

TEST(Cli, SeedExamples) {
  fs::path dir = scratch("seed");
  std::ofstream(dir / "seeds.txt") << "// extra inputs\nCons(5, Cons(-4, Nil())), 7\n\nNil(), 9\n";
  Program p = load_corpus("list_insert");
  auto seeds = load_seed_examples(dir / "seeds.txt", p, *find_synthesis_target(p, "insert"));
  ASSERT_EQ(seeds.size(), 2u);
  EXPECT_EQ(seeds[0], (Input{int_list({5, -4}), Value::int32(7)}));
  EXPECT_EQ(seeds[1], (Input{int_list({}), Value::int32(9)}));
  EXPECT_EQ(run_binary("run " + quoted(corpus_file("list_insert")) + " --seed-examples " + quoted(dir / "seeds.txt")).code, 0);
  std::ofstream(dir / "wrong.txt") << "Nil()\n";
  EXPECT_EQ(run_binary("run " + quoted(corpus_file("list_insert")) + " --seed-examples " + quoted(dir / "wrong.txt")).code, 1);
  fs::remove_all(dir);
}

TEST(Cli, SolvedButUnverifiedExitsWithTwo) {
  // Checking candidates at depth 1 accepts a numeral that only works for
  // tiny inputs; the depth-3 check of the whole function rejects it.
  Program p = load_corpus("unarynumerals_distinct");
  SearchConfig cfg;
  cfg.ste.check.input_depth = 1;
  cfg.example_depth = 1;
  cfg.verify_depth = 3;
  SynthesisReport r = synthesize(p, "", cfg);
  ASSERT_EQ(r.status, SynthesisReport::Status::SolvedUnverified) << r.status_str() << "\n" << r.solution_text;
  EXPECT_EQ(exit_code(r), 2);
  EXPECT_EQ(r.status_str(), "SolvedUnverified");
  auto j = nlohmann::json::parse(report_json(r));
  EXPECT_EQ(j["status"], "SolvedUnverified");
  EXPECT_TRUE(j.contains("note"));
  EXPECT_FALSE(j.contains("verified_depth"));
}

TEST(Cli, SuiteOnEmptyDirectory) {
  fs::path dir = scratch("empty");
  Outcome r = run_binary("suite " + quoted(dir));
  EXPECT_EQ(r.code, 0) << r.err;
  fs::remove_all(dir);
}

TEST(Cli, SuiteReportsRegressions) {
  fs::path dir = scratch("suite");
  fs::copy_file(corpus_file("list_insert"), dir / "list_insert.lng");
  fs::copy_file(corpus_file("unsat_impossible"), dir / "unsat_impossible.lng");
  std::ofstream(dir / "good.tsv") << "list_insert\tVerified\nunsat_impossible\tFailed\n";
  std::ofstream(dir / "bad.tsv") << "list_insert\tVerified\nunsat_impossible\tVerified\n";

  Outcome ok = run_binary("suite " + quoted(dir) + " --expect " + quoted(dir / "good.tsv"));
  EXPECT_EQ(ok.code, 0) << ok.out << ok.err;
  std::istringstream lines(ok.out);
  std::string l1, l2;
  std::getline(lines, l1);
  std::getline(lines, l2);
  EXPECT_EQ(nlohmann::json::parse(l1)["benchmark"], "list_insert");
  EXPECT_EQ(nlohmann::json::parse(l2)["status"], "Failed");
  EXPECT_NE(ok.out.find("Failed(exhausted)"), std::string::npos);

  Outcome bad = run_binary("suite " + quoted(dir) + " --expect " + quoted(dir / "bad.tsv"));
  EXPECT_EQ(bad.code, 4);
  EXPECT_NE(bad.out.find("regression: unsat_impossible"), std::string::npos) << bad.out;
  fs::remove_all(dir);
}

TEST(Cli, ExpectationsFile) {
  fs::path dir = scratch("exp");
  std::ofstream(dir / "e.tsv") << "// comment\na\tVerified\n\nb\tFailed\n";
  auto e = load_expectations(dir / "e.tsv");
  EXPECT_EQ(e, (std::map<std::string, std::string>{{"a", "Verified"}, {"b", "Failed"}}));
  fs::remove_all(dir);
}
