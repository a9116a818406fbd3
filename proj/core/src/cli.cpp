#include "synthe/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "synthe/monomorphize.hpp"
#include "synthe/parser.hpp"
#include "synthe/typecheck.hpp"

namespace synthe {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Program load_program(const std::filesystem::path& path) {
  Program p = elaborate(parse_program(read_file(path)));
  return monomorphize(p, default_instantiation(p));
}

SearchConfig search_config(const RunOptions& opts) {
  SearchConfig cfg;
  cfg.timeout_seconds = opts.timeout;
  cfg.ste.max_size = opts.max_size;
  cfg.ste.check.input_depth = opts.verify_depth;
  cfg.verify_depth = opts.verify_depth;
  cfg.ste.threads = opts.sequential ? 1 : 0;
  return cfg;
}

std::vector<Input> load_seed_examples(const std::filesystem::path& path, const Program& p, const FunDef& fn) {
  std::vector<Input> out;
  std::istringstream lines(read_file(path));
  std::string line;
  std::vector<Type> types;
  for (const auto& prm : fn.params) types.push_back(prm.type);
  Type expected = types.size() == 1 ? types[0] : Type::tuple(types);
  while (std::getline(lines, line)) {
    auto cut = line.find("//");
    if (cut != std::string::npos) line.resize(cut);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::string text = types.size() == 1 ? line : "(" + line + ")";
    Expr e = elaborate_expr(p, parse_expr(text, &p), {}, expected);
    Value v = expr_to_value(p, e);
    out.push_back(types.size() == 1 ? Input{v} : Input(v.elems().begin(), v.elems().end()));
  }
  return out;
}

SynthesisReport run_benchmark(const std::filesystem::path& path, const RunOptions& opts, std::ostream& diag) {
  Program p = load_program(path);
  SearchConfig cfg = search_config(opts);
  const FunDef* target = find_synthesis_target(p, opts.function);
  if (opts.seed_examples) cfg.seed_examples = load_seed_examples(*opts.seed_examples, p, *target);
  std::optional<SmtDumper> dumper;
  if (opts.dump_smt) {
    dumper.emplace(*opts.dump_smt);
    cfg.smt = &*dumper;
  }
  if (opts.dump_grammar) {
    SynthesisProblem root = make_initial_problem(*target);
    diag << dump_grammar(base_grammar(root, p, cfg.grammar), *opts.dump_grammar);
  }
  SynthesisReport r = synthesize(p, target->name.str(), cfg);
  r.benchmark = path.stem().string();
  if (opts.trace_ste) diag << r.ste_trace;
  if (opts.trace_search)
    for (const auto& line : r.expansion_trace) diag << line << "\n";
  return r;
}

int exit_code(const SynthesisReport& r) {
  switch (r.status) {
    case SynthesisReport::Status::Verified: return 0;
    case SynthesisReport::Status::SolvedUnverified: return 2;
    case SynthesisReport::Status::Failed: return 3;
  }
  return 3;
}

std::string status_kind(const SynthesisReport& r) {
  switch (r.status) {
    case SynthesisReport::Status::Verified: return "Verified";
    case SynthesisReport::Status::SolvedUnverified: return "SolvedUnverified";
    case SynthesisReport::Status::Failed: return "Failed";
  }
  return "";
}

std::string report_json(const SynthesisReport& r) {
  nlohmann::ordered_json j;
  j["benchmark"] = r.benchmark;
  j["function"] = r.function;
  j["program_size"] = r.program_size;
  if (r.status != SynthesisReport::Status::Failed)
    j["solution_size"] = r.solution_size;
  else
    j["solution_size"] = nullptr;
  j["status"] = status_kind(r);
  if (r.status == SynthesisReport::Status::Verified) j["verified_depth"] = r.verify_depth;
  if (r.status == SynthesisReport::Status::Failed)
    j["failure"] = r.failure == SynthesisReport::Failure::Timeout ? "timeout" : "exhausted";
  j["wall_clock_s"] = r.wall_clock;
  j["solution"] = r.solution_text;
  if (!r.verification_note.empty()) j["note"] = r.verification_note;
  j["ste_trace"] = r.ste_trace;
  return j.dump();
}

std::string report_table(const std::vector<SynthesisReport>& rs) {
  std::size_t w = 9;
  for (const auto& r : rs) w = std::max(w, r.benchmark.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(w)) << "Benchmark" << "  " << std::right << std::setw(5) << "Prog"
      << "  " << std::setw(4) << "Sol" << "  " << std::left << std::setw(17) << "Status" << "  " << std::right
      << std::setw(8) << "Time(s)" << "\n";
  for (const auto& r : rs) {
    std::string sol = r.status == SynthesisReport::Status::Failed ? "-" : std::to_string(r.solution_size);
    out << std::left << std::setw(static_cast<int>(w)) << r.benchmark << "  " << std::right << std::setw(5)
        << r.program_size << "  " << std::setw(4) << sol << "  " << std::left << std::setw(17) << r.status_str()
        << "  " << std::right << std::setw(8) << std::fixed << std::setprecision(2) << r.wall_clock << "\n";
  }
  return out.str();
}

std::map<std::string, std::string> load_expectations(const std::filesystem::path& path) {
  std::map<std::string, std::string> out;
  std::istringstream lines(read_file(path));
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    std::string status = line.substr(tab + 1);
    while (!status.empty() && (status.back() == '\r' || status.back() == ' ')) status.pop_back();
    out[line.substr(0, tab)] = status;
  }
  return out;
}

SuiteResult run_suite(const std::filesystem::path& dir, const RunOptions& opts,
                      const std::optional<std::filesystem::path>& expectations, std::ostream& diag) {
  if (!std::filesystem::is_directory(dir)) throw std::runtime_error("cannot read directory " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".lng") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::map<std::string, std::string> expected;
  if (expectations) expected = load_expectations(*expectations);
  SuiteResult out;
  for (const auto& f : files) {
    SynthesisReport r;
    try {
      r = run_benchmark(f, opts, diag);
    } catch (const std::exception& e) {
      r.benchmark = f.stem().string();
      r.status = SynthesisReport::Status::Failed;
      r.failure = SynthesisReport::Failure::Exhausted;
      r.verification_note = e.what();
    }
    auto it = expected.find(r.benchmark);
    if (it != expected.end() && it->second != status_kind(r))
      out.regressions.push_back(r.benchmark + ": expected " + it->second + ", got " + status_kind(r));
    out.reports.push_back(std::move(r));
  }
  return out;
}

}  // namespace synthe
