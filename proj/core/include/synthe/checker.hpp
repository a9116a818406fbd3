#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "synthe/candidate_set.hpp"
#include "synthe/evaluator.hpp"
#include "synthe/problem.hpp"

namespace synthe {

struct CheckConfig {
  /// Bound handed to ValueDomain for every input component.
  int input_depth = 3;
  std::size_t fuel = kDefaultFuel;
};

struct CheckVerdict {
  enum class Kind { Valid, Counterexample, Unknown };

  Kind kind = Kind::Valid;
  Input input;                    // Counterexample
  std::optional<EvalError> error; // Counterexample caused by an evaluation error
  std::string reason;             // Unknown

  static CheckVerdict valid() { return {}; }
  static CheckVerdict counterexample(Input in, std::optional<EvalError> err = std::nullopt);
  static CheckVerdict unknown(std::string why);

  bool is_valid() const { return kind == Kind::Valid; }
  bool is_counterexample() const { return kind == Kind::Counterexample; }
  std::string str() const;
};

/// First bounded input (in generation order) on which the candidate, plugged
/// into `partial` and installed, violates the predicate. Inputs whose path
/// condition is false or unreachable are skipped. Unknown when the path
/// condition always starves or the candidate never gets past an unsolved
/// part of the program.
CheckVerdict find_counterexample(const SynthesisProblem& prob, const Expr& candidate, const Program& p,
                                 const CheckConfig& cfg, const Expr& partial = {});

/// Same, over an explicit input list.
CheckVerdict find_counterexample(const SynthesisProblem& prob, const Expr& candidate, const Program& p,
                                 const std::vector<Input>& inputs, std::size_t fuel = kDefaultFuel,
                                 const Expr& partial = {});

struct SatisfyingPair {
  enum class Kind { Found, NoneExists, Unknown };

  Kind kind = Kind::NoneExists;
  std::size_t index = 0;  // position in the candidate set
  Expr candidate;
  Input input;

  bool found() const { return kind == Kind::Found; }
};

/// First (input, candidate) pair, input-major, on which the predicate holds.
SatisfyingPair find_satisfying_pair(const CandidateSet& candidates, const SynthesisProblem& prob,
                                    const Program& p, const CheckConfig& cfg, const Expr& partial = {});

class SmtError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SmtMode { Validate, Satisfy };

/// SMT-LIB2 script for the validation query (one candidate; sat means a
/// counterexample exists) or the satisfaction query (any number of
/// candidates selected by an integer constant). Preconditions of called
/// functions and Int overflow are not encoded. Throws SmtError when a
/// reachable function still contains a choose or hole.
std::string emit_smtlib(const SynthesisProblem& prob, const Program& p, const std::vector<Expr>& candidates,
                        SmtMode mode, const Expr& partial = {});

/// Writes numbered query files (query_0001.smt2, ...) into a directory.
class SmtDumper {
 public:
  explicit SmtDumper(std::filesystem::path dir);
  std::filesystem::path write(const std::string& script);
  std::size_t count() const { return count_; }

 private:
  std::filesystem::path dir_;
  std::size_t count_ = 0;
};

}  // namespace synthe
