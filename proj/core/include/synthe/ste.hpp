#pragma once

#include <optional>
#include <string>
#include <vector>

#include "synthe/candidate_set.hpp"
#include "synthe/checker.hpp"
#include "synthe/deadline.hpp"
#include "synthe/example_store.hpp"
#include "synthe/grammar.hpp"

namespace synthe {

struct SteConfig {
  std::size_t max_size = 7;
  std::size_t small_set_threshold = 16;
  CheckConfig check;
  std::size_t fuel = kDefaultFuel;
  /// Worker threads for concrete testing; 0 picks the hardware count.
  std::size_t threads = 1;
  /// Keep (candidate, input) for every pruned candidate.
  bool record_pruned = false;
};

struct SteStratum {
  std::size_t size = 0;
  std::size_t generated = 0;
  std::size_t pruned_by_tests = 0;
  std::size_t pruned_by_counterexamples = 0;
  std::size_t validated = 0;
};

struct PruneRecord {
  Expr candidate;
  Input input;
};

struct SteResult {
  enum class Status { Solved, Exhausted, Timeout };

  Status status = Status::Exhausted;
  std::optional<Solution> solution;
  std::size_t origin_size = 0;
  std::vector<SteStratum> strata;
  std::vector<PruneRecord> pruned;

  /// Tab-separated per-stratum counts.
  std::string trace() const;
};

/// Context shared by one STE run: the problem, program, partial solution
/// and optional SMT dump target.
struct SteContext {
  const SynthesisProblem& prob;
  const Program& program;
  Expr partial;
  SteConfig cfg;
  const Deadline* deadline = nullptr;
  SmtDumper* smt = nullptr;
};

/// Removes every candidate that fails one of `inputs`; each removal bumps
/// the fail count of the first failing input in `store` (when the input is
/// stored). Returns the number removed.
std::size_t concrete_test(const SteContext& ctx, const std::vector<Input>& inputs, CandidateSet& set,
                          ExampleStore* store, std::vector<PruneRecord>* pruned = nullptr);

enum class ValidateOutcome { Valid, Counterexample, Unknown };

/// Bounded check of one candidate. A counterexample removes the candidate,
/// is tested against the rest of `set` and joins the store.
ValidateOutcome validate(const SteContext& ctx, const Expr& candidate, ExampleStore& store, CandidateSet& set,
                         SteStratum* stats = nullptr, std::vector<PruneRecord>* pruned = nullptr);

SteResult ste(const SteContext& ctx, const Grammar& g, ExampleStore& store);

}  // namespace synthe
