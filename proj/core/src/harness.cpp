#include "synthe/harness.hpp"

namespace synthe {

const char* outcome_name(TestOutcome o) {
  switch (o) {
    case TestOutcome::Pass: return "pass";
    case TestOutcome::Fail: return "fail";
    case TestOutcome::NotApplicable: return "n/a";
    case TestOutcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

Harness::Harness(const Program& p, const SynthesisProblem& prob, Expr partial, std::size_t fuel)
    : prob_(prob), partial_(std::move(partial)), interp_(p, fuel) {
  for (const auto& c : prob_.pc.conjuncts)
    if (c.expr && mentions_call_to(c.expr, prob_.function)) pc_calls_fn_ = true;
}

Harness::Installed Harness::install(const Expr& candidate) const {
  Installed c{candidate, std::nullopt};
  if (partial_) c.body = BodyOverride{prob_.function, plug_unchecked(partial_, candidate)};
  return c;
}

PathResult Harness::path_condition(const Input& in, const BodyOverride* body) const {
  PathResult r{PathStatus::Holds, {}, std::nullopt};
  r.env.reserve(prob_.inputs.size() + prob_.pc.conjuncts.size());
  for (std::size_t i = 0; i < prob_.inputs.size(); ++i) r.env.emplace_back(prob_.inputs[i].name, in[i]);
  for (const auto& c : prob_.pc.conjuncts) {
    if (c.kind == PathConjunct::Kind::Terminates) continue;
    EvalResult v = interp_.eval(c.expr, r.env, body);
    if (!v.ok()) {
      r.status = v.error().inconclusive() ? PathStatus::Inconclusive : PathStatus::Error;
      r.error = v.error();
      return r;
    }
    if (c.kind == PathConjunct::Kind::Fact) {
      if (!v.value().as_bool()) {
        r.status = PathStatus::False;
        return r;
      }
    } else {
      r.env.emplace_back(c.name, v.value());
    }
  }
  return r;
}

TestResult Harness::run(const Installed& c, const Input& in) const {
  const BodyOverride* body = c.body ? &*c.body : nullptr;
  PathResult pc = path_condition(in, body);
  switch (pc.status) {
    case PathStatus::False: return {TestOutcome::NotApplicable, std::nullopt};
    case PathStatus::Inconclusive: return {TestOutcome::Inconclusive, pc.error};
    case PathStatus::Error:
      if (pc.error->kind == EvalErrorKind::OutOfFuel) return {TestOutcome::Inconclusive, pc.error};
      return {TestOutcome::Fail, pc.error};
    case PathStatus::Holds: break;
  }
  return finish(c, std::move(pc.env));
}

TestResult Harness::finish(const Installed& c, Env env) const {
  const BodyOverride* body = c.body ? &*c.body : nullptr;
  EvalResult out = interp_.eval(c.candidate, env, body);
  if (!out.ok())
    return {out.error().inconclusive() ? TestOutcome::Inconclusive : TestOutcome::Fail, out.error()};
  if (prob_.outputs.size() == 1) {
    env.emplace_back(prob_.outputs[0].name, out.value());
  } else {
    for (std::size_t i = 0; i < prob_.outputs.size(); ++i)
      env.emplace_back(prob_.outputs[i].name, out.value().elems()[i]);
  }
  if (!prob_.spec) return {TestOutcome::Pass, std::nullopt};
  EvalResult ok = interp_.eval(prob_.spec, env, body);
  if (!ok.ok())
    return {ok.error().inconclusive() ? TestOutcome::Inconclusive : TestOutcome::Fail, ok.error()};
  return {ok.value().as_bool() ? TestOutcome::Pass : TestOutcome::Fail, std::nullopt};
}

ExampleStore generate_initial_examples(const SynthesisProblem& prob, const Program& p, int bound,
                                       const Expr& partial, std::size_t fuel) {
  ExampleStore store;
  Harness h(p, prob, partial, fuel);
  std::optional<BodyOverride> body;
  if (partial) body = BodyOverride{prob.function, partial};
  ValueDomain dom(p, bound);
  std::vector<Type> types;
  for (const auto& v : prob.inputs) types.push_back(v.type);
  dom.for_each_input(types, [&](const Input& in) {
    PathResult r = h.path_condition(in, body ? &*body : nullptr);
    if (r.status == PathStatus::Holds || r.status == PathStatus::Inconclusive) store.add(in);
    return true;
  });
  return store;
}

}  // namespace synthe
