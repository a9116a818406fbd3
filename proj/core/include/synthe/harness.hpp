#pragma once

#include <optional>

#include "synthe/evaluator.hpp"
#include "synthe/example_store.hpp"
#include "synthe/problem.hpp"

namespace synthe {

enum class TestOutcome { Pass, Fail, NotApplicable, Inconclusive };

const char* outcome_name(TestOutcome o);

struct TestResult {
  TestOutcome outcome;
  std::optional<EvalError> error;
};

enum class PathStatus { Holds, False, Inconclusive, Error };

struct PathResult {
  PathStatus status;
  Env env;  // inputs plus bindings, valid when status is Holds
  std::optional<EvalError> error;
};

/// Runs candidate terms of one synthesis problem on concrete inputs. A
/// candidate is plugged into `partial` (the surrounding program with one
/// hole) and the result temporarily replaces the body of the function
/// under synthesis, so recursive calls see the candidate.
class Harness {
 public:
  /// An empty `partial` leaves the function's own body in place.
  Harness(const Program& p, const SynthesisProblem& prob, Expr partial, std::size_t fuel = kDefaultFuel);

  struct Installed {
    Expr candidate;
    std::optional<BodyOverride> body;
  };

  Installed install(const Expr& candidate) const;

  /// Evaluates the path condition on `in`; false facts make the input not
  /// applicable, holes and unsolved chooses make it inconclusive.
  PathResult path_condition(const Input& in, const BodyOverride* body) const;

  /// Path-condition errors count against the candidate (recursive bindings
  /// run it), except running out of fuel, which is inconclusive.
  TestResult run(const Installed& c, const Input& in) const;
  /// Evaluates the candidate and the predicate in `env`, an environment for which
  /// the path condition holds.
  TestResult finish(const Installed& c, Env env) const;
  /// Whether evaluating the path condition can reach the function under
  /// synthesis (and therefore depends on the installed candidate).
  bool pc_depends_on_candidate() const { return pc_calls_fn_; }
  TestResult test(const Expr& candidate, const Input& in) const { return run(install(candidate), in); }

  const SynthesisProblem& problem() const { return prob_; }
  const Interpreter& interpreter() const { return interp_; }
  const Expr& partial() const { return partial_; }

 private:
  const SynthesisProblem& prob_;
  Expr partial_;
  Interpreter interp_;
  bool pc_calls_fn_ = false;
};

/// All input tuples within `bound` whose path condition does not evaluate
/// to false (inputs reaching an unsolved part are kept), in generation
/// order, each with fail count 0.
ExampleStore generate_initial_examples(const SynthesisProblem& prob, const Program& p, int bound,
                                       const Expr& partial = {}, std::size_t fuel = kDefaultFuel);

}  // namespace synthe
