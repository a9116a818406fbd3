#pragma once

#include <optional>
#include <string>
#include <vector>

#include "synthe/deadline.hpp"
#include "synthe/grammar.hpp"
#include "synthe/rules.hpp"
#include "synthe/ste.hpp"

namespace synthe {

struct SearchNode {
  enum class Kind { Or, And };
  enum class Status { Open, Solved, Failed };

  Kind kind = Kind::Or;
  Status status = Status::Open;
  int id = 0;
  int parent = -1;
  std::optional<Solution> solution;

  // Or
  SynthesisProblem problem;
  std::vector<int> alternatives;
  bool expanded = false;
  bool ste_pending = false;
  std::size_t rule_depth = 0;

  // And
  RuleApplication app;
  std::vector<int> children;
};

/// AND/OR tree of rule applications. Solved and Failed are final and
/// propagate towards the root.
class SearchTree {
 public:
  int add_root(SynthesisProblem prob);
  /// Adds an AND node under `or_id` with one open OR child per subproblem.
  int add_application(int or_id, RuleApplication app);
  void solve(int or_id, Solution s);
  void fail(int id);
  /// Marks an OR node expanded (with or without a pending STE run) and
  /// fails it if nothing is left to try.
  void set_expanded(int or_id, bool ste_pending);
  void ste_finished(int or_id);

  /// Program term for the root with a hole at `or_id`; solved siblings are
  /// materialized and open ones become their own choose.
  Expr partial_solution(int or_id) const;

  /// Lower bound on the size of a solution through `id`.
  std::size_t cost(int id) const;

  const SearchNode& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  std::size_t size() const { return nodes_.size(); }

 private:
  void maybe_fail_or(int or_id);
  std::vector<SearchNode> nodes_;
};

struct SearchConfig {
  double timeout_seconds = 200;
  SteConfig ste;
  std::size_t max_rule_depth = 6;
  /// Bound for the initial example store of every STE run.
  int example_depth = 2;
  /// Bound for the final check of the whole function.
  int verify_depth = 3;
  GrammarOptions grammar;
  std::vector<Input> seed_examples;
  Clock clock;
  SmtDumper* smt = nullptr;
};

struct SynthesisReport {
  enum class Status { Verified, SolvedUnverified, Failed };
  enum class Failure { None, Timeout, Exhausted };

  std::string benchmark;
  std::string function;
  std::size_t program_size = 0;
  std::size_t solution_size = 0;
  Status status = Status::Failed;
  Failure failure = Failure::None;
  int verify_depth = 0;
  double wall_clock = 0;
  std::string solution_text;
  /// Why a solved program is unverified (counterexample or unknown).
  std::string verification_note;
  std::string ste_trace;
  std::vector<std::string> expansion_trace;
  /// Whole program with the synthesized body installed (when solved).
  std::optional<Program> solved_program;

  std::string status_str() const;
};

const FunDef* find_synthesis_target(const Program& p, const std::string& name);

/// Runs the search for the choose-function `fn` of a monomorphic program.
SynthesisReport synthesize(const Program& p, const std::string& fn, const SearchConfig& cfg);

}  // namespace synthe
