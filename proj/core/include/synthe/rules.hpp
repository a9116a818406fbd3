#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "synthe/checker.hpp"
#include "synthe/problem.hpp"
#include "synthe/program.hpp"

namespace synthe {

class RuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RuleApplication {
  std::string rule;
  /// Rule name plus parameters; equal fingerprints mean the same application.
  std::string fingerprint;
  std::vector<SynthesisProblem> subproblems;
  std::function<Solution(const std::vector<Solution>&)> recompose;
};

/// phi1 || phi2 at the top of the predicate.
std::optional<RuleApplication> split_disjunction(const SynthesisProblem& prob);

/// One subproblem per constructor of `v`'s type, with the fields bound to
/// fresh names (first letter of the field plus a counter, `h0`, `t0`).
std::optional<RuleApplication> case_split_adt(const SynthesisProblem& prob, const Program& p, Symbol v);

/// Variables eligible for case_split_adt, inputs before bindings.
std::vector<Symbol> case_split_candidates(const SynthesisProblem& prob, const Program& p);

/// Structurally smaller expressions for an input or binding under `pc`.
std::vector<Expr> args_smaller(const Variable& arg, const PathCondition& pc, const Program& p);
std::vector<Expr> args_smaller(const Expr& arg, const PathCondition& pc, const Program& p);

/// Consumes the terminates-marker: one application per argument position
/// and smaller expression, each binding `rec` to the recursive call.
std::vector<RuleApplication> introduce_rec_calls(const SynthesisProblem& prob, const Program& p);

/// A constant output that satisfies the predicate on every bounded input.
std::optional<Solution> ground_solve(const SynthesisProblem& prob, const Program& p, const CheckConfig& cfg,
                                     const Expr& partial = {});

/// Root problem of a function whose body is a choose.
SynthesisProblem make_initial_problem(const FunDef& f);

/// Replaces subterms equal to a binding's value by the bound variable,
/// innermost bindings first (so `encode(l.tail)` becomes `encode(t0)`).
Expr use_binders(const Expr& e, const PathCondition& pc);

}  // namespace synthe
