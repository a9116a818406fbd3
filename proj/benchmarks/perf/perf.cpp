#include <benchmark/benchmark.h>

#include <filesystem>
#include <sstream>
#include <string>

#include "synthe/cli.hpp"
#include "synthe/harness.hpp"
#include "synthe/ste.hpp"

using namespace synthe;

namespace {

std::filesystem::path corpus(const std::string& stem) {
  return std::filesystem::path(SYNTHE_CORPUS_DIR) / (stem + ".lng");
}

SynthesisProblem root(const Program& p) { return make_initial_problem(*find_synthesis_target(p, "")); }

const char* const kBenchmarks[] = {"list_insert", "list_union", "unarynumerals_add", "unarynumerals_mult",
                                   "runlength_encode"};

}  // namespace

static void BM_LoadProgram(benchmark::State& state) {
  auto path = corpus(kBenchmarks[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(load_program(path));
  state.SetLabel(kBenchmarks[state.range(0)]);
}
BENCHMARK(BM_LoadProgram)->DenseRange(0, 4);

// A fresh grammar per iteration, so the term memo starts empty.
static void BM_Unfold(benchmark::State& state) {
  Program p = load_program(corpus("list_union"));
  SynthesisProblem prob = root(p);
  std::size_t terms = 0;
  for (auto _ : state) {
    Grammar g = base_grammar(prob, p);
    terms = 0;
    for (std::size_t n = 1; n <= static_cast<std::size_t>(state.range(0)); ++n) terms += unfold(g, n).size();
  }
  state.counters["terms"] = static_cast<double>(terms);
}
BENCHMARK(BM_Unfold)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_InitialExamples(benchmark::State& state) {
  Program p = load_program(corpus("list_union"));
  SynthesisProblem prob = root(p);
  for (auto _ : state) benchmark::DoNotOptimize(generate_initial_examples(prob, p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_InitialExamples)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_ConcreteTest(benchmark::State& state) {
  Program p = load_program(corpus("list_union"));
  SynthesisProblem prob = root(p);
  Grammar g = base_grammar(prob, p);
  std::vector<Input> inputs = generate_initial_examples(prob, p, 2).inputs();
  SteContext ctx{prob, p, Expr(), SteConfig{}};
  ctx.cfg.threads = static_cast<std::size_t>(state.range(0));
  std::vector<Expr> pool;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& e : unfold(g, n)) pool.push_back(e);
  for (auto _ : state) {
    CandidateSet set(6);
    for (const auto& e : pool) set.insert(e);
    benchmark::DoNotOptimize(concrete_test(ctx, inputs, set, nullptr));
  }
  state.counters["candidates"] = static_cast<double>(pool.size());
}
BENCHMARK(BM_ConcreteTest)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_BoundedCheck(benchmark::State& state) {
  RunOptions opts;
  opts.sequential = true;
  std::ostringstream diag;
  SynthesisReport r = run_benchmark(corpus("list_union"), opts, diag);
  if (!r.solved_program) {
    state.SkipWithError("list_union was not solved");
    return;
  }
  Program p = load_program(corpus("list_union"));
  SynthesisProblem prob = root(p);
  Expr body = r.solved_program->find_function(prob.function)->body;
  CheckConfig cfg{static_cast<int>(state.range(0)), kDefaultFuel};
  for (auto _ : state) benchmark::DoNotOptimize(find_counterexample(prob, body, p, cfg, Expr::hole(prob.output_type())));
}
BENCHMARK(BM_BoundedCheck)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_Synthesize(benchmark::State& state) {
  auto path = corpus(kBenchmarks[state.range(0)]);
  RunOptions opts;
  opts.sequential = true;
  for (auto _ : state) {
    std::ostringstream diag;
    benchmark::DoNotOptimize(run_benchmark(path, opts, diag));
  }
  state.SetLabel(kBenchmarks[state.range(0)]);
}
BENCHMARK(BM_Synthesize)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
