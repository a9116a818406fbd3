#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "synthe/symbol.hpp"
#include "synthe/types.hpp"

namespace synthe {

using BigInt = boost::multiprecision::cpp_int;

struct SourcePos {
  int line = 0;
  int column = 0;
};

enum class BinaryOp { Add, Sub, Mul, Div, Mod, Lt, Le, Eq, And, Or };
enum class UnaryOp { Not, Neg };

const char* op_symbol(BinaryOp op);
const char* op_symbol(UnaryOp op);

/// Literal payload. Numerals are stored as BigInt until elaboration decides
/// between Int and BigInt; the node's type is authoritative afterwards.
using LitValue = std::variant<bool, std::int32_t, BigInt>;

struct Pattern {
  enum class Kind { Wildcard, Bind, Ctor, Tuple };

  Kind kind = Kind::Wildcard;
  Symbol name;  // Bind
  Symbol ctor;  // Ctor
  /// Ctor/Tuple sub-patterns; for Bind, an optional single inner pattern
  /// (`x @ p`).
  std::vector<Pattern> subs;
  /// Type of the value matched at this position (set by elaboration).
  Type type;

  static Pattern wildcard(Type t = {});
  static Pattern bind(Symbol name, Type t = {});
  static Pattern bind_as(Symbol name, Pattern inner);
  static Pattern constructor(Symbol ctor, std::vector<Pattern> subs, Type t = {});
  static Pattern tuple(std::vector<Pattern> subs, Type t = {});

  /// Variables bound by this pattern, in left-to-right order.
  void collect_binders(std::vector<Symbol>& out) const;
};

struct Binder {
  Symbol name;
  Type type;
};

enum class ExprKind {
  Literal,
  Var,
  Ctor,
  Tuple,
  TupleSelect,
  FieldSelect,
  Call,
  If,
  Match,
  Let,
  Binary,
  Unary,
  Choose,
  Hole,
  IsCtor,
};

class Expr;

struct ExprNode;

/// Immutable, shared expression handle. Copies share structure.
class Expr {
 public:
  Expr() = default;

  static Expr literal(LitValue value, Type type, SourcePos pos = {});
  static Expr boolean(bool b);
  static Expr bigint(BigInt v);
  static Expr int32(std::int32_t v);
  static Expr var(Symbol name, Type type, SourcePos pos = {});
  static Expr ctor(Symbol ctor, std::vector<Expr> args, Type type, SourcePos pos = {});
  static Expr tuple(std::vector<Expr> elems, SourcePos pos = {});
  /// `index` is 1-based, as in `t._1`.
  static Expr tuple_select(Expr tuple, int index, SourcePos pos = {});
  static Expr field(Expr obj, Symbol field, Type type, SourcePos pos = {});
  static Expr call(Symbol fn, std::vector<Type> type_args, std::vector<Expr> args, Type type,
                   SourcePos pos = {});
  static Expr ite(Expr cond, Expr then_branch, Expr else_branch, SourcePos pos = {});
  static Expr match(Expr scrutinee, std::vector<Pattern> patterns, std::vector<Expr> bodies,
                    Type type = {}, SourcePos pos = {});
  static Expr let(Symbol name, Expr value, Expr body, SourcePos pos = {});
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs, SourcePos pos = {});
  static Expr unary(UnaryOp op, Expr operand, SourcePos pos = {});
  static Expr choose(std::vector<Binder> binders, Expr predicate, Type type = {}, SourcePos pos = {});
  static Expr hole(Type type = {}, SourcePos pos = {});
  static Expr is_ctor(Expr obj, Symbol ctor, SourcePos pos = {});

  explicit operator bool() const { return node_ != nullptr; }
  const ExprNode* operator->() const { return node_.get(); }
  const ExprNode& operator*() const { return *node_; }
  const ExprNode* get() const { return node_.get(); }

  ExprKind kind() const;
  const Type& type() const;

  /// Same node with a different type annotation.
  Expr with_type(Type t) const;
  /// Same node with replaced children (same arity expected).
  Expr with_children(std::vector<Expr> children) const;
  /// Match node with replaced patterns (elaboration attaches pattern types).
  Expr with_patterns(std::vector<Pattern> patterns) const;
  Expr with_binders(std::vector<Binder> binders) const;
  Expr with_type_args(std::vector<Type> type_args) const;
  Expr with_name(Symbol name) const;
  Expr with_literal(LitValue value) const;

 private:
  explicit Expr(std::shared_ptr<const ExprNode> n) : node_(std::move(n)) {}
  static Expr make(ExprNode node);
  std::shared_ptr<const ExprNode> node_;
};

struct ExprNode {
  ExprKind kind;
  Type type;
  SourcePos pos;
  /// Var / Ctor / FieldSelect field / Call function / Let binder / IsCtor ctor.
  Symbol name;
  /// BinaryOp or UnaryOp as int; TupleSelect index.
  int op = 0;
  /// Call: arguments. Ctor/Tuple: elements. If: cond, then, else.
  /// Match: scrutinee followed by one body per case. Let: value, body.
  /// Binary: lhs, rhs. Unary/TupleSelect/FieldSelect/IsCtor: operand.
  /// Choose: predicate.
  std::vector<Expr> children;
  LitValue literal;
  std::vector<Pattern> patterns;  // Match
  std::vector<Binder> binders;    // Choose
  std::vector<Type> type_args;    // Call
  std::uint32_t size = 1;
  std::size_t hash = 0;

  BinaryOp binary_op() const { return static_cast<BinaryOp>(op); }
  UnaryOp unary_op() const { return static_cast<UnaryOp>(op); }
};

/// Number of AST nodes, match patterns included; every node costs 1.
std::size_t expr_size(const Expr& e);

/// Structural equality (positions ignored, types compared).
bool expr_equal(const Expr& a, const Expr& b);
std::size_t expr_hash(const Expr& e);

/// Canonical total order on terms: size, then node kind, then label, then
/// children left to right.
int compare_terms(const Expr& a, const Expr& b);

struct ExprHash {
  std::size_t operator()(const Expr& e) const { return expr_hash(e); }
};
struct ExprEq {
  bool operator()(const Expr& a, const Expr& b) const { return expr_equal(a, b); }
};

std::set<Symbol> free_vars(const Expr& e);
bool occurs_free(Symbol x, const Expr& e);
std::size_t count_free_occurrences(Symbol x, const Expr& e);
/// True if the expression contains no Var nodes at all.
bool is_ground_term(const Expr& e);
std::size_t count_holes(const Expr& e);
bool mentions_call_to(const Expr& e, Symbol fn);

using Bindings = std::map<Symbol, Expr>;

/// Capture-avoiding substitution of free variables.
Expr substitute(const Expr& e, const Bindings& bindings);

/// Bottom-up rewrite: `f` is applied to every node after its children have
/// been rewritten; returning an empty Expr keeps the node.
Expr rewrite_bottom_up(const Expr& e, const std::function<Expr(const Expr&)>& f);

/// A name not in `taken`, derived from `base`.
Symbol fresh_symbol(std::string_view base, const std::set<Symbol>& taken);

/// Convenience constructors that simplify trivially.
Expr make_and(Expr a, Expr b);
Expr make_or(Expr a, Expr b);
Expr make_not(Expr a);
bool is_true_literal(const Expr& e);
bool is_false_literal(const Expr& e);

}  // namespace synthe
