#include "synthe/evaluator.hpp"

#include <algorithm>
#include <limits>

namespace synthe {

const char* eval_error_name(EvalErrorKind k) {
  switch (k) {
    case EvalErrorKind::OutOfFuel: return "OutOfFuel";
    case EvalErrorKind::DivByZero: return "DivByZero";
    case EvalErrorKind::PrecondViolation: return "PrecondViolation";
    case EvalErrorKind::IntOverflow: return "IntOverflow";
    case EvalErrorKind::MatchFailure: return "MatchFailure";
    case EvalErrorKind::FieldError: return "FieldError";
    case EvalErrorKind::HoleReached: return "HoleReached";
    case EvalErrorKind::ChooseReached: return "ChooseReached";
    case EvalErrorKind::Unbound: return "Unbound";
  }
  return "?";
}

std::string EvalError::str() const {
  std::string s = eval_error_name(kind);
  if (!message.empty()) s += ": " + message;
  return s;
}

namespace {

struct Raise {
  EvalError error;
};

[[noreturn]] void raise(EvalErrorKind k, std::string msg = {}) { throw Raise{{k, std::move(msg)}}; }

std::int32_t checked_int(std::int64_t v) {
  if (v > std::numeric_limits<std::int32_t>::max() || v < std::numeric_limits<std::int32_t>::min())
    raise(EvalErrorKind::IntOverflow);
  return static_cast<std::int32_t>(v);
}

Value arith(BinaryOp op, const Value& a, const Value& b) {
  if (a.is_int32()) {
    std::int64_t x = a.as_int32(), y = b.as_int32();
    switch (op) {
      case BinaryOp::Add: return Value::int32(checked_int(x + y));
      case BinaryOp::Sub: return Value::int32(checked_int(x - y));
      case BinaryOp::Mul: return Value::int32(checked_int(x * y));
      case BinaryOp::Div:
        if (y == 0) raise(EvalErrorKind::DivByZero);
        return Value::int32(checked_int(x / y));
      case BinaryOp::Mod:
        if (y == 0) raise(EvalErrorKind::DivByZero);
        return Value::int32(checked_int(x % y));
      default: break;
    }
  } else {
    const BigInt& x = a.as_bigint();
    const BigInt& y = b.as_bigint();
    switch (op) {
      case BinaryOp::Add: return Value::bigint(x + y);
      case BinaryOp::Sub: return Value::bigint(x - y);
      case BinaryOp::Mul: return Value::bigint(x * y);
      case BinaryOp::Div:
        if (y == 0) raise(EvalErrorKind::DivByZero);
        return Value::bigint(x / y);
      case BinaryOp::Mod:
        if (y == 0) raise(EvalErrorKind::DivByZero);
        return Value::bigint(x % y);
      default: break;
    }
  }
  raise(EvalErrorKind::Unbound, "bad arithmetic operands");
}

bool less(const Value& a, const Value& b, bool or_equal) {
  if (a.is_int32()) return or_equal ? a.as_int32() <= b.as_int32() : a.as_int32() < b.as_int32();
  return or_equal ? a.as_bigint() <= b.as_bigint() : a.as_bigint() < b.as_bigint();
}

const Value* lookup(const Env& env, Symbol s) {
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    if (it->first == s) return &it->second;
  return nullptr;
}

}  // namespace

struct Interpreter::Ctx {
  std::size_t fuel;
  const BodyOverride* override_body;
};

Interpreter::Interpreter(const Program& p, std::size_t fuel) : prog_(p), fuel_(fuel) {
  for (const auto& f : p.functions()) functions_[f.name] = &f;
}

EvalResult Interpreter::eval(const Expr& e, const Env& env, const BodyOverride* ov) const {
  Ctx ctx{fuel_, ov};
  Env local = env;
  try {
    return eval_rec(e, local, ctx);
  } catch (const Raise& r) {
    return r.error;
  }
}

EvalResult Interpreter::call(Symbol fn, const std::vector<Value>& args, const BodyOverride* ov) const {
  Ctx ctx{fuel_, ov};
  auto it = functions_.find(fn);
  if (it == functions_.end()) return EvalError{EvalErrorKind::Unbound, "unknown function " + fn.str()};
  try {
    if (ctx.fuel == 0) raise(EvalErrorKind::OutOfFuel);
    --ctx.fuel;
    return invoke(*it->second, args, ctx);
  } catch (const Raise& r) {
    return r.error;
  }
}

std::size_t Interpreter::field_index(Symbol ctor, Symbol field) const {
  auto ref = prog_.find_ctor(ctor);
  if (!ref) raise(EvalErrorKind::FieldError, "unknown constructor " + ctor.str());
  const auto& fields = ref->ctor->fields;
  for (std::size_t i = 0; i < fields.size(); ++i)
    if (fields[i].name == field) return i;
  raise(EvalErrorKind::FieldError, ctor.str() + " has no field " + field.str());
}

bool Interpreter::match_pattern(const Pattern& p, const Value& v, Env& env) const {
  switch (p.kind) {
    case Pattern::Kind::Wildcard:
      return true;
    case Pattern::Kind::Bind:
      if (!p.subs.empty() && !match_pattern(p.subs[0], v, env)) return false;
      env.emplace_back(p.name, v);
      return true;
    case Pattern::Kind::Ctor:
      if (!v.is_adt() || v.ctor() != p.ctor) return false;
      for (std::size_t i = 0; i < p.subs.size(); ++i)
        if (!match_pattern(p.subs[i], v.elems()[i], env)) return false;
      return true;
    case Pattern::Kind::Tuple:
      for (std::size_t i = 0; i < p.subs.size(); ++i)
        if (!match_pattern(p.subs[i], v.elems()[i], env)) return false;
      return true;
  }
  return false;
}

Value Interpreter::invoke(const FunDef& f, const std::vector<Value>& args, Ctx& ctx) const {
  Env env;
  env.reserve(f.params.size() + 8);
  for (std::size_t i = 0; i < f.params.size(); ++i) env.emplace_back(f.params[i].name, args[i]);
  if (f.precondition) {
    Value ok = eval_rec(f.precondition, env, ctx);
    if (!ok.as_bool()) raise(EvalErrorKind::PrecondViolation, "precondition of " + f.name.str());
  }
  const Expr& body = ctx.override_body && ctx.override_body->fn == f.name ? ctx.override_body->body : f.body;
  return eval_rec(body, env, ctx);
}

Value Interpreter::call_rec(const ExprNode& site, const std::vector<Value>& args, Ctx& ctx) const {
  auto it = functions_.find(site.name);
  if (it == functions_.end()) raise(EvalErrorKind::Unbound, "unknown function " + site.name.str());
  if (ctx.fuel == 0) raise(EvalErrorKind::OutOfFuel);
  --ctx.fuel;
  return invoke(*it->second, args, ctx);
}

Value Interpreter::eval_rec(const Expr& e, Env& env, Ctx& ctx) const {
  const ExprNode& n = *e;
  switch (n.kind) {
    case ExprKind::Literal:
      if (auto b = std::get_if<bool>(&n.literal)) return Value::boolean(*b);
      if (auto i = std::get_if<std::int32_t>(&n.literal)) return Value::int32(*i);
      if (n.type.known() && n.type.kind() == Type::Kind::Int)
        return Value::int32(static_cast<std::int32_t>(std::get<BigInt>(n.literal)));
      return Value::bigint(std::get<BigInt>(n.literal));
    case ExprKind::Var: {
      const Value* v = lookup(env, n.name);
      if (!v) raise(EvalErrorKind::Unbound, "unbound variable " + n.name.str());
      return *v;
    }
    case ExprKind::Ctor: {
      std::vector<Value> fields;
      fields.reserve(n.children.size());
      for (const auto& c : n.children) fields.push_back(eval_rec(c, env, ctx));
      return Value::adt(n.name, std::move(fields));
    }
    case ExprKind::Tuple: {
      std::vector<Value> el;
      el.reserve(n.children.size());
      for (const auto& c : n.children) el.push_back(eval_rec(c, env, ctx));
      return Value::tuple(std::move(el));
    }
    case ExprKind::TupleSelect: {
      Value t = eval_rec(n.children[0], env, ctx);
      return t.elems()[n.op - 1];
    }
    case ExprKind::FieldSelect: {
      Value obj = eval_rec(n.children[0], env, ctx);
      if (!obj.is_adt()) raise(EvalErrorKind::FieldError, "field of non-constructor value");
      return obj.elems()[field_index(obj.ctor(), n.name)];
    }
    case ExprKind::IsCtor: {
      Value obj = eval_rec(n.children[0], env, ctx);
      return Value::boolean(obj.is_adt() && obj.ctor() == n.name);
    }
    case ExprKind::Call: {
      std::vector<Value> args;
      args.reserve(n.children.size());
      for (const auto& c : n.children) args.push_back(eval_rec(c, env, ctx));
      return call_rec(n, args, ctx);
    }
    case ExprKind::If: {
      Value c = eval_rec(n.children[0], env, ctx);
      return eval_rec(n.children[c.as_bool() ? 1 : 2], env, ctx);
    }
    case ExprKind::Match: {
      Value s = eval_rec(n.children[0], env, ctx);
      for (std::size_t i = 0; i < n.patterns.size(); ++i) {
        std::size_t mark = env.size();
        if (match_pattern(n.patterns[i], s, env)) {
          Value r = eval_rec(n.children[i + 1], env, ctx);
          env.resize(mark);
          return r;
        }
        env.resize(mark);
      }
      raise(EvalErrorKind::MatchFailure, "no case matches " + s.str());
    }
    case ExprKind::Let: {
      Value v = eval_rec(n.children[0], env, ctx);
      env.emplace_back(n.name, std::move(v));
      Value r = eval_rec(n.children[1], env, ctx);
      env.pop_back();
      return r;
    }
    case ExprKind::Binary: {
      BinaryOp op = n.binary_op();
      if (op == BinaryOp::And) {
        if (!eval_rec(n.children[0], env, ctx).as_bool()) return Value::boolean(false);
        return Value::boolean(eval_rec(n.children[1], env, ctx).as_bool());
      }
      if (op == BinaryOp::Or) {
        if (eval_rec(n.children[0], env, ctx).as_bool()) return Value::boolean(true);
        return Value::boolean(eval_rec(n.children[1], env, ctx).as_bool());
      }
      Value a = eval_rec(n.children[0], env, ctx);
      Value b = eval_rec(n.children[1], env, ctx);
      switch (op) {
        case BinaryOp::Eq: return Value::boolean(a == b);
        case BinaryOp::Lt: return Value::boolean(less(a, b, false));
        case BinaryOp::Le: return Value::boolean(less(a, b, true));
        default: return arith(op, a, b);
      }
    }
    case ExprKind::Unary: {
      Value a = eval_rec(n.children[0], env, ctx);
      if (n.unary_op() == UnaryOp::Not) return Value::boolean(!a.as_bool());
      if (a.is_int32()) return Value::int32(checked_int(-static_cast<std::int64_t>(a.as_int32())));
      return Value::bigint(-a.as_bigint());
    }
    case ExprKind::Choose:
      raise(EvalErrorKind::ChooseReached, "choose is not executable");
    case ExprKind::Hole:
      raise(EvalErrorKind::HoleReached, "hole reached");
  }
  raise(EvalErrorKind::Unbound, "unknown expression");
}

EvalResult evaluate(const Expr& e, const Env& env, const Program& p, std::size_t fuel) {
  return Interpreter(p, fuel).eval(e, env);
}

namespace {

bool collect_hole_scope(const Expr& e, std::vector<Symbol>& scope) {
  const ExprNode& n = *e;
  switch (n.kind) {
    case ExprKind::Hole:
      return true;
    case ExprKind::Let: {
      if (collect_hole_scope(n.children[0], scope)) return true;
      scope.push_back(n.name);
      if (collect_hole_scope(n.children[1], scope)) return true;
      scope.pop_back();
      return false;
    }
    case ExprKind::Match: {
      if (collect_hole_scope(n.children[0], scope)) return true;
      for (std::size_t i = 0; i < n.patterns.size(); ++i) {
        std::vector<Symbol> names;
        n.patterns[i].collect_binders(names);
        scope.insert(scope.end(), names.begin(), names.end());
        if (collect_hole_scope(n.children[i + 1], scope)) return true;
        scope.resize(scope.size() - names.size());
      }
      return false;
    }
    case ExprKind::Choose: {
      for (const auto& b : n.binders) scope.push_back(b.name);
      if (collect_hole_scope(n.children[0], scope)) return true;
      scope.resize(scope.size() - n.binders.size());
      return false;
    }
    default:
      for (const auto& c : n.children)
        if (collect_hole_scope(c, scope)) return true;
      return false;
  }
}

Expr replace_hole(const Expr& e, const Expr& candidate, const Type*& hole_type) {
  if (e.kind() == ExprKind::Hole) {
    hole_type = &e.type();
    return candidate;
  }
  if (count_holes(e) == 0) return e;
  std::vector<Expr> kids;
  for (const auto& c : e->children) kids.push_back(replace_hole(c, candidate, hole_type));
  return e.with_children(std::move(kids));
}

}  // namespace

std::vector<Symbol> binders_at_hole(const Expr& partial) {
  std::vector<Symbol> scope;
  collect_hole_scope(partial, scope);
  return scope;
}

Expr plug_unchecked(const Expr& partial, const Expr& candidate) {
  const Type* hole_type = nullptr;
  return replace_hole(partial, candidate, hole_type);
}

Expr plug(const Expr& partial, const Expr& candidate) {
  std::size_t holes = count_holes(partial);
  if (holes != 1) throw PlugError("plug: expected exactly one hole, found " + std::to_string(holes));
  if (count_holes(candidate) != 0) throw PlugError("plug: candidate contains a hole");
  if (partial.kind() == ExprKind::Hole) {
    if (partial.type().known() && candidate.type().known() && !(partial.type() == candidate.type()))
      throw PlugError("plug: candidate type " + candidate.type().str() + " does not match hole type " +
                      partial.type().str());
    return candidate;
  }
  std::vector<Symbol> scope;
  collect_hole_scope(partial, scope);
  auto outer = free_vars(partial);
  for (auto v : free_vars(candidate)) {
    if (std::find(scope.begin(), scope.end(), v) == scope.end() && !outer.count(v))
      throw PlugError("plug: variable " + v.str() + " is not in scope at the hole");
  }
  const Type* hole_type = nullptr;
  Expr out = replace_hole(partial, candidate, hole_type);
  if (hole_type && hole_type->known() && candidate.type().known() && !(*hole_type == candidate.type()))
    throw PlugError("plug: candidate type " + candidate.type().str() + " does not match hole type " +
                    hole_type->str());
  return out;
}

}  // namespace synthe
