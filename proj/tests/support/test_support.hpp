#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "synthe/checker.hpp"
#include "synthe/cli.hpp"
#include "synthe/evaluator.hpp"
#include "synthe/expr.hpp"
#include "synthe/grammar.hpp"
#include "synthe/monomorphize.hpp"
#include "synthe/parser.hpp"
#include "synthe/printer.hpp"
#include "synthe/problem.hpp"
#include "synthe/program.hpp"
#include "synthe/rules.hpp"
#include "synthe/search.hpp"
#include "synthe/typecheck.hpp"
#include "synthe/value.hpp"

namespace synthe {

/// gtest printer.
inline void PrintTo(const Value& v, std::ostream* os) { *os << v.str(); }

}  // namespace synthe

namespace synthe::testing {

std::filesystem::path corpus_dir();
std::filesystem::path corpus_file(const std::string& stem);
std::filesystem::path golden_dir();

/// parse, elaborate, monomorphize at the default instantiation.
Program load_source(std::string_view text);
Program load_corpus(const std::string& stem);

/// Expression typed against `p` with the given variables in scope.
Expr typed(const Program& p, std::string_view text, const TypeEnv& env = {}, const Type& expected = {});

SynthesisProblem root_problem(const Program& p, const std::string& fn = "");

/// Hand-written run-length encoder body; the recursive call targets the
/// Int instance.
extern const char* const kEncodeSolution;

/// Program with `fn`'s body replaced by `body_text`.
Program install(const Program& p, const std::string& fn, std::string_view body_text);

/// Values built by hand.
Value int_list(const std::vector<std::int32_t>& xs);
Value bigint_list(const std::vector<long>& xs);
Value pair_list(const std::vector<std::pair<long, std::int32_t>>& xs);
Value num(int n);

/// Every list over `alphabet` of length at most `max_len`, shortest first.
std::vector<std::vector<std::int32_t>> all_words(const std::vector<std::int32_t>& alphabet, std::size_t max_len);

/// Run-length encoding computed directly in C++.
std::vector<std::pair<long, std::int32_t>> rle(const std::vector<std::int32_t>& xs);

/// Every value of a List[BigInt] or BigInt type with value-size at most
/// `max_size` (integers |n|+1, constructors 1 + fields).
std::vector<Value> values_up_to_size(const Program& p, const Type& t, std::size_t max_size);

// Grammar oracle --------------------------------------------------------

/// Every term of exactly size `n` built from the raw productions with no
/// attribute rewriting at all.
class NaiveEnumerator {
 public:
  explicit NaiveEnumerator(const Grammar& g) : g_(g) {}
  const std::vector<Expr>& terms(const Type& t, std::size_t n);

 private:
  const Grammar& g_;
  std::map<std::pair<Type, std::size_t>, std::vector<Expr>> memo_;
};

/// Neutral/absorbing literals of the builtin operators as documented for
/// the base grammar: position 0 = left, 1 = right.
bool is_neutral_operand(BinaryOp op, std::size_t pos, const Expr& operand);
bool is_associative(BinaryOp op);
bool is_commutative(BinaryOp op);

/// The filter oracle: keeps a naive term unless it is ground, applies an
/// operator to one of its neutral literals, nests an associative operator
/// on the right of itself, or puts a commutative operator's operands out
/// of canonical order.
bool oracle_keeps(const Expr& e);
bool mentions_variable(const Expr& e);

/// Terms the oracle keeps at size n for the grammar's start type.
std::vector<Expr> oracle_terms(const Grammar& g, std::size_t n);

/// Grammar of the root problem of a corpus benchmark, or of the small
/// integer example (input `a`, helper `foo: Boolean -> Int`) for "int_example".
Grammar benchmark_grammar(const std::string& stem);
Program int_example_program();
SynthesisProblem int_example_problem(const Program& p);

}  // namespace synthe::testing
