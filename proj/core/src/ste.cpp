#include "synthe/ste.hpp"

#include <sstream>
#include <thread>
#include <unordered_set>

#include "synthe/harness.hpp"

namespace synthe {

std::string SteResult::trace() const {
  std::ostringstream out;
  out << "size\tgenerated\tpruned_by_tests\tpruned_by_counterexamples\tvalidated\n";
  for (const auto& s : strata)
    out << s.size << "\t" << s.generated << "\t" << s.pruned_by_tests << "\t" << s.pruned_by_counterexamples << "\t"
        << s.validated << "\n";
  return out.str();
}

namespace {

constexpr std::size_t kNoFailure = static_cast<std::size_t>(-1);

/// Index of the first input the candidate fails, or kNoFailure.
std::size_t first_failure(const Harness& h, const Expr& candidate, const std::vector<Input>& inputs) {
  Harness::Installed inst = h.install(candidate);
  for (std::size_t i = 0; i < inputs.size(); ++i)
    if (h.run(inst, inputs[i]).outcome == TestOutcome::Fail) return i;
  return kNoFailure;
}

}  // namespace

std::size_t concrete_test(const SteContext& ctx, const std::vector<Input>& inputs, CandidateSet& set,
                          ExampleStore* store, std::vector<PruneRecord>* pruned) {
  if (inputs.empty() || set.empty()) return 0;
  Harness h(ctx.program, ctx.prob, ctx.partial, ctx.cfg.fuel);
  const std::vector<Expr>& cands = set.candidates();
  std::vector<std::size_t> fail(cands.size(), kNoFailure);

  std::size_t threads = ctx.cfg.threads ? ctx.cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, cands.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (ctx.deadline && i % 64 == 63 && ctx.deadline->expired()) break;
      fail[i] = first_failure(h, cands[i], inputs);
    }
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < cands.size(); i += threads) fail[i] = first_failure(h, cands[i], inputs);
      });
    for (auto& th : pool) th.join();
  }

  // Single-writer merge in candidate order.
  std::unordered_set<Expr, ExprHash, ExprEq> doomed;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (fail[i] == kNoFailure) continue;
    const Input& in = inputs[fail[i]];
    if (store && store->contains(in)) store->record_failure(in);
    if (pruned) pruned->push_back({cands[i], in});
    doomed.insert(cands[i]);
  }
  return set.erase_if([&](const Expr& e) { return doomed.count(e) != 0; });
}

ValidateOutcome validate(const SteContext& ctx, const Expr& candidate, ExampleStore& store, CandidateSet& set,
                         SteStratum* stats, std::vector<PruneRecord>* pruned) {
  if (stats) ++stats->validated;
  if (ctx.smt) {
    try {
      ctx.smt->write(emit_smtlib(ctx.prob, ctx.program, {candidate}, SmtMode::Validate, ctx.partial));
    } catch (const SmtError&) {
    }
  }
  CheckConfig check = ctx.cfg.check;
  check.fuel = ctx.cfg.fuel;
  CheckVerdict v = find_counterexample(ctx.prob, candidate, ctx.program, check, ctx.partial);
  if (v.is_valid()) return ValidateOutcome::Valid;
  if (!v.is_counterexample()) return ValidateOutcome::Unknown;
  store.add(v.input);
  store.record_failure(v.input);
  if (set.erase(candidate)) {
    if (stats) ++stats->pruned_by_counterexamples;
    if (pruned) pruned->push_back({candidate, v.input});
  }
  std::size_t more = concrete_test(ctx, {v.input}, set, &store, pruned);
  if (stats) stats->pruned_by_counterexamples += more;
  return ValidateOutcome::Counterexample;
}

SteResult ste(const SteContext& ctx, const Grammar& g, ExampleStore& store) {
  SteResult result;
  std::vector<PruneRecord>* pruned = ctx.cfg.record_pruned ? &result.pruned : nullptr;
  auto timed_out = [&] { return ctx.deadline && ctx.deadline->expired(); };
  CheckConfig check = ctx.cfg.check;
  check.fuel = ctx.cfg.fuel;

  for (std::size_t n = 1; n <= ctx.cfg.max_size; ++n) {
    if (timed_out()) {
      result.status = SteResult::Status::Timeout;
      return result;
    }
    SteStratum stats;
    stats.size = n;
    CandidateSet set(n);
    for (const Expr& e : unfold(g, n)) set.insert(e);
    stats.generated = set.size();
    stats.pruned_by_tests = concrete_test(ctx, store.inputs(), set, &store, pruned);

    // Candidates whose check was inconclusive; never retried in this stratum.
    std::unordered_set<Expr, ExprHash, ExprEq> undecided;
    auto finish = [&](const Expr& e) {
      result.status = SteResult::Status::Solved;
      result.solution = Solution{Expr::boolean(true), e};
      result.origin_size = n;
      result.strata.push_back(stats);
      return result;
    };
    while (set.size() > undecided.size()) {
      if (timed_out()) {
        result.strata.push_back(stats);
        result.status = SteResult::Status::Timeout;
        return result;
      }
      if (set.size() <= ctx.cfg.small_set_threshold) {
        std::vector<Expr> members = set.candidates();
        for (const Expr& e : members) {
          if (!set.contains(e) || undecided.count(e)) continue;
          if (timed_out()) break;
          ValidateOutcome o = validate(ctx, e, store, set, &stats, pruned);
          if (o == ValidateOutcome::Valid) return finish(e);
          if (o == ValidateOutcome::Unknown) undecided.insert(e);
        }
        continue;
      }
      CandidateSet open(n);
      for (const Expr& e : set)
        if (!undecided.count(e)) open.insert(e);
      if (ctx.smt) {
        try {
          ctx.smt->write(emit_smtlib(ctx.prob, ctx.program, open.candidates(), SmtMode::Satisfy, ctx.partial));
        } catch (const SmtError&) {
        }
      }
      SatisfyingPair pair = find_satisfying_pair(open, ctx.prob, ctx.program, check, ctx.partial);
      if (!pair.found()) break;
      ValidateOutcome o = validate(ctx, pair.candidate, store, set, &stats, pruned);
      if (o == ValidateOutcome::Valid) return finish(pair.candidate);
      if (o == ValidateOutcome::Unknown) undecided.insert(pair.candidate);
    }
    result.strata.push_back(stats);
  }
  result.status = SteResult::Status::Exhausted;
  return result;
}

}  // namespace synthe
