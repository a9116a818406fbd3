#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "synthe/expr.hpp"
#include "synthe/program.hpp"
#include "synthe/value.hpp"

namespace synthe {

enum class EvalErrorKind {
  OutOfFuel,
  DivByZero,
  PrecondViolation,
  IntOverflow,
  MatchFailure,
  FieldError,
  HoleReached,
  ChooseReached,
  Unbound,
};

const char* eval_error_name(EvalErrorKind k);

struct EvalError {
  EvalErrorKind kind;
  std::string message;

  /// Hitting a hole or an unsolved choose says nothing about the candidate
  /// being tested.
  bool inconclusive() const {
    return kind == EvalErrorKind::HoleReached || kind == EvalErrorKind::ChooseReached;
  }
  std::string str() const;
};

class EvalResult {
 public:
  EvalResult(Value v) : rep_(std::move(v)) {}
  EvalResult(EvalError e) : rep_(std::move(e)) {}

  bool ok() const { return rep_.index() == 0; }
  const Value& value() const { return std::get<Value>(rep_); }
  const EvalError& error() const { return std::get<EvalError>(rep_); }

 private:
  std::variant<Value, EvalError> rep_;
};

using Env = std::vector<std::pair<Symbol, Value>>;

inline constexpr std::size_t kDefaultFuel = 1000;

/// Replaces one function's body for the duration of an evaluation.
struct BodyOverride {
  Symbol fn;
  Expr body;
};

/// Call-by-value interpreter. Each function call costs one unit of fuel;
/// the budget is per top-level `eval`. Stateless between calls, so one
/// instance may be shared across threads.
class Interpreter {
 public:
  explicit Interpreter(const Program& p, std::size_t fuel = kDefaultFuel);

  EvalResult eval(const Expr& e, const Env& env, const BodyOverride* override_body = nullptr) const;
  EvalResult call(Symbol fn, const std::vector<Value>& args,
                  const BodyOverride* override_body = nullptr) const;

  const Program& program() const { return prog_; }
  std::size_t fuel() const { return fuel_; }

 private:
  struct Ctx;
  Value eval_rec(const Expr& e, Env& env, Ctx& ctx) const;
  Value call_rec(const ExprNode& site, const std::vector<Value>& args, Ctx& ctx) const;
  Value invoke(const FunDef& f, const std::vector<Value>& args, Ctx& ctx) const;
  bool match_pattern(const Pattern& p, const Value& v, Env& env) const;
  std::size_t field_index(Symbol ctor, Symbol field) const;

  const Program& prog_;
  std::size_t fuel_;
  std::unordered_map<Symbol, const FunDef*> functions_;
};

/// Convenience wrapper around a throwaway Interpreter.
EvalResult evaluate(const Expr& e, const Env& env, const Program& p, std::size_t fuel = kDefaultFuel);

class PlugError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Replaces the single hole of `partial` by `candidate`.
Expr plug(const Expr& partial, const Expr& candidate);

/// plug() without the hole-count, type and scope checks; for hot loops
/// whose candidates were already validated against the hole.
Expr plug_unchecked(const Expr& partial, const Expr& candidate);

/// Names bound (by lets, patterns and chooses) at the position of the
/// single hole of `partial`.
std::vector<Symbol> binders_at_hole(const Expr& partial);

}  // namespace synthe
