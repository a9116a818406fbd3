#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "synthe/expr.hpp"

namespace synthe {

struct Variable {
  Symbol name;
  Type type;
};

/// One conjunct of a path condition: a boolean fact, a binding `x <- e`, or
/// a terminates-marker recording the arguments of the function under
/// synthesis.
struct PathConjunct {
  enum class Kind { Fact, Binding, Terminates };

  Kind kind = Kind::Fact;
  Expr expr;               // Fact predicate or bound value
  Symbol name;             // Binding variable or marked function
  Type type;               // Binding type
  std::vector<Expr> args;  // Terminates arguments

  static PathConjunct fact(Expr e);
  static PathConjunct binding(Symbol name, Type type, Expr value);
  static PathConjunct terminates(Symbol fn, std::vector<Expr> args);

  std::string str() const;
};

class PathCondition {
 public:
  std::vector<PathConjunct> conjuncts;

  PathCondition with(PathConjunct c) const;
  const PathConjunct* marker() const;
  PathCondition without_marker() const;
  std::vector<Variable> bindings() const;
  std::vector<Expr> facts() const;
  /// Value bound to `name`, if any.
  const PathConjunct* binding_of(Symbol name) const;
  bool has_fact(const Expr& e) const;
  std::string str() const;
};

/// [[ inputs < pc |> spec > outputs ]]
struct SynthesisProblem {
  Symbol function;
  std::vector<Variable> inputs;
  PathCondition pc;
  Expr spec;
  std::vector<Variable> outputs;

  /// Type of a candidate term: the single output's type, or a tuple.
  Type output_type() const;
  /// Inputs followed by path-condition bindings.
  std::vector<Variable> scope() const;
  /// Every name used by the problem; fresh names avoid these.
  std::set<Symbol> names() const;
  std::string str() const;
};

/// <P | T>
struct Solution {
  Expr pre;
  Expr term;

  std::string str() const;
};

}  // namespace synthe
