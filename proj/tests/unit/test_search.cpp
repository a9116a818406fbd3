#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

using namespace synthe;
using namespace synthe::testing;

namespace {

SearchConfig quick() {
  SearchConfig cfg;
  cfg.timeout_seconds = 120;
  return cfg;
}

}  // namespace

TEST(SearchTree, PartialSolutionOfTheRootIsAHole) {
  Program p = load_corpus("runlength_encode");
  SearchTree t;
  int root = t.add_root(root_problem(p));
  EXPECT_EQ(print_expr(t.partial_solution(root)), "???");
}

TEST(SearchTree, SolvedSiblingIsMaterialized) {
  Program p = load_corpus("runlength_encode");
  SearchTree t;
  int root = t.add_root(root_problem(p));
  int split = t.add_application(root, *case_split_adt(t.node(root).problem, p, Symbol("l")));
  int nil = t.node(split).children[0];
  int cons = t.node(split).children[1];
  t.solve(nil, Solution{Expr::boolean(true), Expr::ctor(Symbol("Nil"), {}, t.node(nil).problem.output_type())});
  EXPECT_EQ(print_expr(t.partial_solution(cons)), print_expr(typed(p, R"(
l match {
  case Nil() => Nil()
  case Cons(h0, t0) => ???
})", {{Symbol("l"), t.node(root).problem.inputs[0].type}})));
  EXPECT_EQ(t.node(root).status, SearchNode::Status::Open);
}

TEST(SearchTree, NestedHoleKeepsOuterContext) {
  Program p = load_corpus("runlength_encode");
  SearchTree t;
  int root = t.add_root(root_problem(p));
  int split = t.add_application(root, *case_split_adt(t.node(root).problem, p, Symbol("l")));
  int nil = t.node(split).children[0];
  int cons = t.node(split).children[1];
  t.solve(nil, Solution{Expr::boolean(true), Expr::ctor(Symbol("Nil"), {}, t.node(nil).problem.output_type())});
  auto recs = introduce_rec_calls(t.node(cons).problem, p);
  int rec = t.add_application(cons, recs[0]);
  int inner = t.node(rec).children[0];
  int split2 = t.add_application(inner, *case_split_adt(t.node(inner).problem, p, Symbol("rec")));
  int inner_nil = t.node(split2).children[0];
  int inner_cons = t.node(split2).children[1];
  std::string printed = print_expr(t.partial_solution(inner_cons));
  // The open sibling shows up as its own choose, the target as the hole.
  EXPECT_NE(printed.find("val rec = encode$Int(t0)"), std::string::npos) << printed;
  EXPECT_NE(printed.find("rec match"), std::string::npos) << printed;
  EXPECT_NE(printed.find("choose"), std::string::npos) << printed;
  EXPECT_NE(printed.find("???"), std::string::npos) << printed;
  EXPECT_EQ(printed.find("???"), printed.rfind("???"));
  // Solving the inner Nil branch replaces its choose.
  t.solve(inner_nil, Solution{Expr::boolean(true), typed(p, "Cons((BigInt(1), h0), Nil())",
                                                        {{Symbol("h0"), Type::int32()}},
                                                        t.node(inner_nil).problem.output_type())});
  printed = print_expr(t.partial_solution(inner_cons));
  EXPECT_EQ(printed.find("choose"), std::string::npos) << printed;
  EXPECT_NE(printed.find("Cons((BigInt(1), h0), Nil())"), std::string::npos) << printed;
}

TEST(SearchTree, FailurePropagatesWhenNoAlternativeIsLeft) {
  Program p = load_corpus("runlength_encode");
  SearchTree t;
  int root = t.add_root(root_problem(p));
  int split = t.add_application(root, *case_split_adt(t.node(root).problem, p, Symbol("l")));
  t.set_expanded(root, false);
  t.fail(t.node(split).children[0]);
  EXPECT_EQ(t.node(split).status, SearchNode::Status::Failed);
  EXPECT_EQ(t.node(root).status, SearchNode::Status::Failed);
}

TEST(Synthesize, ListInsert) {
  Program p = load_corpus("list_insert");
  SynthesisReport r = synthesize(p, "insert", quick());
  ASSERT_EQ(r.status, SynthesisReport::Status::Verified) << r.status_str();
  EXPECT_EQ(print_expr(r.solved_program->find_function(Symbol("insert"))->body), "Cons(v, l)");
  EXPECT_EQ(r.solution_text, "def insert(l: List, v: Int): List = {\n  Cons(v, l)\n}");
  EXPECT_EQ(r.solution_size, 3u);
  EXPECT_EQ(r.function, "insert");
}

TEST(Synthesize, SolvedProgramPassesAnIndependentCheck) {
  Program p = load_corpus("unarynumerals_add");
  SynthesisReport r = synthesize(p, "", quick());
  ASSERT_EQ(r.status, SynthesisReport::Status::Verified) << r.status_str();
  ASSERT_TRUE(r.solved_program.has_value());
  Interpreter in(*r.solved_program);
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 5; ++j) {
      EvalResult out = in.call(Symbol(r.function), {num(i), num(j)});
      ASSERT_TRUE(out.ok());
      EXPECT_EQ(out.value(), num(i + j)) << i << " + " << j << " with " << r.solution_text;
    }
  // The printed solution re-parses into the same definition.
  Program again = elaborate(parse_program(print_program(*r.solved_program)));
  EXPECT_TRUE(type_check(again).empty());
  EXPECT_TRUE(expr_equal(again.find_function(Symbol(r.function))->body,
                         r.solved_program->find_function(Symbol(r.function))->body));
  EXPECT_NE(print_program(again).find(r.solution_text), std::string::npos);
}

TEST(Synthesize, SearchIsDeterministic) {
  Program p = load_corpus("unarynumerals_mult");
  SearchConfig cfg = quick();
  SynthesisReport a = synthesize(p, "", cfg);
  SynthesisReport b = synthesize(p, "", cfg);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.solution_text, b.solution_text);
  EXPECT_EQ(a.expansion_trace, b.expansion_trace);
  EXPECT_EQ(a.ste_trace, b.ste_trace);
}

TEST(Synthesize, StubClockTimesOut) {
  Program p = load_corpus("runlength_encode");
  SearchConfig cfg = quick();
  cfg.timeout_seconds = 10;
  auto now = std::make_shared<TimePoint>();
  cfg.clock = [now] {
    *now += std::chrono::seconds(1);
    return *now;
  };
  SynthesisReport r = synthesize(p, "", cfg);
  EXPECT_EQ(r.status, SynthesisReport::Status::Failed);
  EXPECT_EQ(r.failure, SynthesisReport::Failure::Timeout);
  EXPECT_EQ(r.status_str(), "Failed(timeout)");
}

TEST(Synthesize, UnsatisfiablePredicateIsExhausted) {
  Program p = load_corpus("unsat_impossible");
  SynthesisReport r = synthesize(p, "", quick());
  EXPECT_EQ(r.status, SynthesisReport::Status::Failed);
  EXPECT_EQ(r.failure, SynthesisReport::Failure::Exhausted);
  EXPECT_TRUE(r.solution_text.empty());
}

TEST(Synthesize, RuleApplicationsAreNotRepeatedPerNode) {
  Program p = load_corpus("list_union");
  SynthesisReport r = synthesize(p, "", quick());
  std::set<std::string> seen;
  for (const auto& line : r.expansion_trace) {
    if (line.rfind("apply ", 0) != 0) continue;
    std::string key = line.substr(0, line.find(" -> "));
    EXPECT_TRUE(seen.insert(key).second) << line;
  }
  EXPECT_FALSE(seen.empty());
}

TEST(Synthesize, BadTargets) {
  Program p = load_corpus("list_insert");
  EXPECT_THROW(synthesize(p, "nope", quick()), RuleError);
  EXPECT_THROW(synthesize(p, "content", quick()), RuleError);
  Program two = load_source(R"(
def f(a: BigInt): BigInt = { choose { (r: BigInt) => r == a } }
def g(a: BigInt): BigInt = { choose { (r: BigInt) => r == a + 1 } }
)");
  EXPECT_THROW(synthesize(two, "", quick()), RuleError);
  // The other choose function is never offered as a call.
  SynthesisReport g = synthesize(two, "g", quick());
  EXPECT_EQ(g.status, SynthesisReport::Status::Verified) << g.status_str();
  EXPECT_EQ(print_expr(g.solved_program->find_function(Symbol("g"))->body), "BigInt(1) + a");
}
