#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "test_support.hpp"

using namespace synthe;
using namespace synthe::testing;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Node count written from the tree shape, not from expr_size.
std::size_t count_nodes(const Pattern& p) {
  std::size_t n = 1;
  for (const auto& s : p.subs) n += count_nodes(s);
  return n;
}

std::size_t count_nodes(const Expr& e) {
  std::size_t n = 1;
  for (const auto& c : e->children) n += count_nodes(c);
  for (const auto& p : e->patterns) n += count_nodes(p);
  return n;
}

std::vector<std::string> corpus_stems() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(corpus_dir()))
    if (entry.path().extension() == ".lng") out.push_back(entry.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Parse, RunLengthProgramHasTheThreeFunctionsAndChooseBody) {
  Program p = parse_program(read_file(corpus_file("runlength_encode")));
  for (const char* name : {"decode", "legal", "encode"}) EXPECT_NE(p.find_function(Symbol(name)), nullptr) << name;
  // fill and append stand in for the library functions used by decode.
  EXPECT_EQ(p.functions().size(), 5u);
  EXPECT_EQ(p.find_function(Symbol("encode"))->body.kind(), ExprKind::Choose);
}

TEST(Parse, EmptyInput) {
  Program p = parse_program("");
  EXPECT_TRUE(p.adts().empty());
  EXPECT_TRUE(p.functions().empty());
}

TEST(Parse, UnresolvedName) {
  try {
    parse_program("def f(x: BigInt): BigInt = { y }");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find('y'), std::string::npos);
    EXPECT_EQ(e.pos().line, 1);
  }
}

TEST(Parse, SyntaxErrorReportsLineAndColumn) {
  try {
    parse_program("def f(x: BigInt): BigInt = {\n  x +\n}");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.pos().line, 3);
    EXPECT_GT(e.pos().column, 0);
  }
}

TEST(TypeCheck, RunLengthProgramIsWellTyped) {
  EXPECT_TRUE(type_check(parse_program(read_file(corpus_file("runlength_encode")))).empty());
}

TEST(TypeCheck, NonBooleanCondition) {
  auto errs = type_check(parse_program("def f(x: BigInt): BigInt = { if (1) 2 else 3 }"));
  ASSERT_FALSE(errs.empty());
  EXPECT_NE(errs[0].message.find("Bool"), std::string::npos) << errs[0].str();
}

TEST(TypeCheck, NonExhaustiveMatch) {
  auto errs = type_check(parse_program(R"(
adt T = A() | B()
def f(t: T): BigInt = {
  t match {
    case A() => 1
  }
})"));
  ASSERT_FALSE(errs.empty());
  EXPECT_NE(errs[0].message.find("exhaustive"), std::string::npos) << errs[0].str();
}

TEST(TypeCheck, CorpusIsWellTyped) {
  for (const auto& stem : corpus_stems())
    EXPECT_TRUE(type_check(parse_program(read_file(corpus_file(stem)))).empty()) << stem;
}

TEST(ExprSize, Leaves) {
  TypeEnv env{{Symbol("a"), Type::bigint()}};
  Program empty;
  EXPECT_EQ(expr_size(typed(empty, "a", env)), 1u);
  EXPECT_EQ(expr_size(typed(empty, "a + 0", env)), 3u);
}

TEST(ExprSize, RunLengthSolutionMatchesIndependentCount) {
  Program p = install(load_corpus("runlength_encode"), "encode", kEncodeSolution);
  const Expr& body = p.find_function(Symbol("encode$Int"))->body;
  std::size_t n = expr_size(body);
  EXPECT_EQ(n, count_nodes(body));
  EXPECT_GE(n, 35u);
  EXPECT_LE(n, 45u);
}

TEST(Substitute, ReplacesFreeOccurrences) {
  Program empty;
  TypeEnv env{{Symbol("x"), Type::bigint()}, {Symbol("y"), Type::bigint()}};
  Expr e = substitute(typed(empty, "x + y", env), {{Symbol("x"), Expr::bigint(1)}});
  EXPECT_EQ(print_expr(e), "BigInt(1) + y");
}

TEST(Substitute, RespectsShadowing) {
  Program empty;
  TypeEnv env{{Symbol("y"), Type::bigint()}};
  Expr e = typed(empty, "{ val x = BigInt(1); x + y }", env);
  Expr s = substitute(e, {{Symbol("x"), Expr::bigint(2)}});
  EXPECT_TRUE(expr_equal(e, s));
}

TEST(Substitute, AvoidsCapture) {
  Program empty;
  TypeEnv env{{Symbol("y"), Type::bigint()}};
  Expr e = typed(empty, "{ val x = BigInt(1); x + y }", env);
  // Replacing y by x must not let the inner binder capture it.
  Expr s = substitute(e, {{Symbol("y"), Expr::var(Symbol("x"), Type::bigint())}});
  EXPECT_TRUE(occurs_free(Symbol("x"), s));
}

TEST(Substitute, RunLengthPredicateAtNil) {
  Program p = load_corpus("runlength_encode");
  SynthesisProblem prob = root_problem(p);
  Type out = prob.output_type();
  Expr nil = Expr::ctor(Symbol("Nil"), {}, out);
  Expr s = substitute(prob.spec, {{prob.outputs[0].name, nil}});
  EXPECT_EQ(print_expr(s), "legal$Int(Nil()) && decode$Int(Nil()) == l");
}

TEST(Substitute, SizeLaw) {
  Program empty;
  TypeEnv env{{Symbol("x"), Type::bigint()}, {Symbol("y"), Type::bigint()}};
  for (const char* text : {"x", "x + y", "x + x - y", "{ val z = x; z + x }", "if (x < y) x else BigInt(3)"}) {
    Expr e = typed(empty, text, env);
    Expr v = typed(empty, "BigInt(4) + BigInt(5)", env);
    Expr s = substitute(e, {{Symbol("x"), v}});
    EXPECT_EQ(expr_size(s), expr_size(e) + count_free_occurrences(Symbol("x"), e) * (expr_size(v) - 1)) << text;
  }
}

TEST(Monomorphize, RunLengthInstances) {
  Program p = load_corpus("runlength_encode");
  for (const char* name : {"decode$Int", "legal$Int", "encode$Int"})
    ASSERT_NE(p.find_function(Symbol(name)), nullptr) << name;
  EXPECT_EQ(print_type(p.find_function(Symbol("encode$Int"))->return_type), "List[(BigInt, Int)]");
  for (const auto& f : p.functions()) EXPECT_FALSE(f.is_polymorphic()) << f.name;
}

TEST(Monomorphize, MonomorphicProgramIsUnchanged) {
  Program p = elaborate(parse_program(read_file(corpus_file("list_insert"))));
  Program q = monomorphize(p, {});
  EXPECT_EQ(print_program(p), print_program(q));
}

TEST(Monomorphize, MissingInstantiation) {
  Program p = elaborate(parse_program(read_file(corpus_file("runlength_encode"))));
  EXPECT_THROW(monomorphize(p, {}), MonomorphizeError);
}

TEST(Printer, RoundTripOnCorpus) {
  for (const auto& stem : corpus_stems()) {
    Program once = parse_program(read_file(corpus_file(stem)));
    std::string printed = print_program(once);
    Program twice = parse_program(printed);
    EXPECT_EQ(printed, print_program(twice)) << stem;
    ASSERT_EQ(once.functions().size(), twice.functions().size());
    for (std::size_t i = 0; i < once.functions().size(); ++i)
      EXPECT_TRUE(expr_equal(once.functions()[i].body, twice.functions()[i].body)) << stem << " " << i;
  }
}

TEST(Printer, RoundTripOfElaboratedSolution) {
  Program p = install(load_corpus("runlength_encode"), "encode", kEncodeSolution);
  std::string printed = print_program(p);
  Program again = elaborate(parse_program(printed));
  EXPECT_EQ(printed, print_program(again));
}

TEST(Printer, AssociativityRoundTrips) {
  Program empty;
  TypeEnv env{{Symbol("a"), Type::boolean()}, {Symbol("b"), Type::boolean()}, {Symbol("c"), Type::boolean()},
              {Symbol("x"), Type::bigint()}, {Symbol("y"), Type::bigint()}};
  Expr right = typed(empty, "a || b || c", env);
  EXPECT_EQ(right.kind(), ExprKind::Binary);
  EXPECT_EQ(right->children[1].kind(), ExprKind::Binary);
  EXPECT_EQ(print_expr(right), "a || b || c");
  EXPECT_EQ(print_expr(typed(empty, "(a && b) && c", env)), "(a && b) && c");
  EXPECT_EQ(print_expr(typed(empty, "x - (y - x)", env)), "x - (y - x)");
  EXPECT_EQ(print_expr(typed(empty, "(x - y) - x", env)), "x - y - x");
  for (const char* text : {"a || b || c", "(a && b) && c", "a && (b || c)", "x - (y - x)", "x - y - x"}) {
    Expr e = typed(empty, text, env);
    EXPECT_TRUE(expr_equal(e, typed(empty, print_expr(e), env))) << text;
  }
}
