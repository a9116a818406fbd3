#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "synthe/expr.hpp"
#include "synthe/program.hpp"

namespace synthe {

struct TypeError {
  SourcePos pos;
  std::string message;

  std::string str() const;
};

class TypeCheckFailure : public std::runtime_error {
 public:
  explicit TypeCheckFailure(std::vector<TypeError> errors);
  const std::vector<TypeError>& errors() const { return errors_; }

 private:
  std::vector<TypeError> errors_;
};

/// Empty iff every expression is well-typed and every match is exhaustive.
std::vector<TypeError> type_check(const Program& p);

/// Returns the program with every node, pattern and binder typed, numerals
/// fixed to Int or BigInt, and calls carrying their type arguments.
/// Throws TypeCheckFailure on error.
Program elaborate(const Program& p);

using TypeEnv = std::map<Symbol, Type>;

/// Elaborates a standalone expression against the definitions of `p`.
/// `expected` may be unknown.
Expr elaborate_expr(const Program& p, const Expr& e, const TypeEnv& env, const Type& expected = {});

/// Errors for an already-typed expression (used as a boundary assertion).
std::vector<TypeError> check_expr(const Program& p, const Expr& e, const TypeEnv& env,
                                  const Type& expected = {});

}  // namespace synthe
