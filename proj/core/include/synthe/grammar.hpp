#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "synthe/expr.hpp"
#include "synthe/problem.hpp"
#include "synthe/program.hpp"

namespace synthe {

struct Attribute {
  enum class Kind { Sized, Ground, NonGround, NoOperator, NonNeutral };

  Kind kind = Kind::Sized;
  std::size_t size = 0;     // Sized
  BinaryOp op{};            // NoOperator
  Expr literal;             // NonNeutral

  static Attribute sized(std::size_t s);
  static Attribute ground();
  static Attribute non_ground();
  static Attribute no_operator(BinaryOp op);
  static Attribute non_neutral(Expr literal);

  std::string str() const;
};

/// Fixed total order on attributes; nonterminals keep theirs sorted.
int compare_attributes(const Attribute& a, const Attribute& b);

struct Nonterminal {
  Type type;
  std::vector<Attribute> attrs;  // sorted, no duplicates

  explicit Nonterminal(Type t = {}, std::vector<Attribute> as = {});

  Nonterminal with(const Attribute& a) const;
  /// Removes every attribute of the given kind.
  Nonterminal without(Attribute::Kind k) const;
  std::optional<std::size_t> size() const;
  bool has(Attribute::Kind k) const;
  bool forbids(BinaryOp op) const;
  bool excludes_literal(const Expr& lit) const;

  std::string str() const;

  friend bool operator<(const Nonterminal& a, const Nonterminal& b);
  friend bool operator==(const Nonterminal& a, const Nonterminal& b);
};

/// What a production builds.
struct Label {
  enum class Kind { Literal, Variable, Binary, Unary, Call, Ctor, Tuple };

  Kind kind = Kind::Literal;
  Expr literal;     // Literal
  Symbol name;      // Variable, Call, Ctor
  BinaryOp binary{};
  UnaryOp unary{};

  std::string str() const;
  /// Constants are nullary labels other than variables.
  bool is_constant(std::size_t arity) const { return arity == 0 && kind != Kind::Variable; }
};

struct Production {
  Nonterminal head;
  Label label;
  std::vector<Nonterminal> operands;
  std::size_t cost = 1;
  bool commutative = false;
  bool associative = false;
  /// (operand position, literal) pairs that make the operator trivial.
  std::vector<std::pair<std::size_t, Expr>> neutral;

  /// Term for this production applied to concrete operands.
  Expr build(std::vector<Expr> args) const;
  std::string str() const;
};

struct GrammarOptions {
  /// Adds `*` (neutral 1, absorbing 0) to the numeric productions.
  bool multiplication = false;
};

/// Type-indexed raw productions plus the start symbol. Immutable after
/// construction; unfold results are memoized per nonterminal and the memo
/// is shared between copies.
class Grammar {
 public:
  Grammar() = default;
  Grammar(Type start, std::map<Type, std::vector<Production>> raw);

  const Type& start() const { return start_; }
  const std::map<Type, std::vector<Production>>& raw() const { return raw_; }
  const std::vector<Production>& productions(const Type& t) const;

 private:
  friend const std::vector<Expr>& unfold_nonterminal(const Grammar& g, const Nonterminal& nt);
  struct Memo;
  Type start_;
  std::map<Type, std::vector<Production>> raw_;
  std::shared_ptr<Memo> memo_;
};

/// Type-directed grammar for a problem: literals 0 and 1 (true and false
/// for Bool) plus numeric literals of the predicate, in-scope variables,
/// constructors, builtin operators, and calls to every other function.
Grammar base_grammar(const SynthesisProblem& prob, const Program& p, GrammarOptions opts = {});

/// Productions of a sized nonterminal after the ground, operator, neutral
/// element and size rewrites.
std::vector<Production> expand_productions(const Nonterminal& nt, const Grammar& g);

/// Terms of a fully attributed nonterminal (which must carry Sized).
const std::vector<Expr>& unfold_nonterminal(const Grammar& g, const Nonterminal& nt);

/// All terms of exactly size `n` derivable from `top` (NonGround is
/// attached when no ground attribute is given).
std::vector<Expr> unfold(const Grammar& g, std::size_t n, const Nonterminal& top);
std::vector<Expr> unfold(const Grammar& g, std::size_t n);

/// Tab-separated dump of strata 1..n: productions and term counts.
std::string dump_grammar(const Grammar& g, std::size_t n);

}  // namespace synthe
