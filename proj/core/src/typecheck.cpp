#include "synthe/typecheck.hpp"

#include <functional>
#include <limits>
#include <set>

namespace synthe {

std::string TypeError::str() const {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message;
}

namespace {

std::string join_errors(const std::vector<TypeError>& errors) {
  std::string s;
  for (const auto& e : errors) {
    if (!s.empty()) s += "\n";
    s += e.str();
  }
  return s;
}

struct Abort {
  TypeError error;
};

class Checker {
 public:
  explicit Checker(const Program& p) : prog_(p) {}

  std::vector<TypeError> errors;

  FunDef function(const FunDef& f) {
    reset();
    rigid_ = {f.type_params.begin(), f.type_params.end()};
    TypeEnv env;
    std::set<Symbol> seen;
    for (const auto& p : f.params) {
      if (!seen.insert(p.name).second) error(f.pos, "duplicate parameter '" + p.name.str() + "'");
      env[p.name] = p.type;
    }
    FunDef out = f;
    if (f.precondition) out.precondition = infer(f.precondition, env, Type::boolean());
    out.body = infer(f.body, env, f.return_type);
    if (f.postcondition) {
      TypeEnv post_env = env;
      post_env[f.postcondition->binder] = f.return_type;
      out.postcondition->predicate = infer(f.postcondition->predicate, post_env, Type::boolean());
    }
    if (out.precondition) out.precondition = finish(out.precondition);
    out.body = finish(out.body);
    if (out.postcondition) out.postcondition->predicate = finish(out.postcondition->predicate);
    return out;
  }

  Expr standalone(const Expr& e, const TypeEnv& env, const Type& expected) {
    reset();
    for (const auto& [k, t] : env) collect_vars(t);
    return finish(infer(e, env, expected));
  }

  void check_exhaustive(const Expr& e) {
    const ExprNode& n = *e;
    if (n.kind == ExprKind::Match) {
      std::vector<std::vector<Pattern>> rows;
      for (const auto& p : n.patterns) rows.push_back({p});
      if (!covers(rows, {n.children[0].type()}))
        errors.push_back({n.pos, "non-exhaustive match on " + n.children[0].type().str()});
    }
    for (const auto& c : n.children) check_exhaustive(c);
  }

 private:
  const Program& prog_;
  std::vector<Type> metas_;
  std::vector<bool> numeric_;
  std::set<Symbol> rigid_;

  void reset() {
    metas_.clear();
    numeric_.clear();
    rigid_.clear();
  }

  void collect_vars(const Type& t) {
    if (!t.known()) return;
    if (t.kind() == Type::Kind::Var) rigid_.insert(t.name());
    for (const auto& a : t.args()) collect_vars(a);
  }

  [[noreturn]] void error(SourcePos pos, std::string msg) { throw Abort{{pos, std::move(msg)}}; }

  Type fresh(bool numeric = false) {
    metas_.emplace_back();
    numeric_.push_back(numeric);
    return Type::meta(static_cast<int>(metas_.size() - 1));
  }

  Type shallow(Type t) const {
    while (t.known() && t.kind() == Type::Kind::Meta && metas_[t.meta_id()].known())
      t = metas_[t.meta_id()];
    return t;
  }

  Type zonk(const Type& t) const {
    Type s = shallow(t);
    if (!s.known()) return s;
    switch (s.kind()) {
      case Type::Kind::Tuple: {
        std::vector<Type> el;
        for (const auto& a : s.args()) el.push_back(zonk(a));
        return Type::tuple(std::move(el));
      }
      case Type::Kind::Adt: {
        std::vector<Type> el;
        for (const auto& a : s.args()) el.push_back(zonk(a));
        return Type::adt(s.name(), std::move(el));
      }
      default:
        return s;
    }
  }

  bool occurs(int id, const Type& t) const {
    Type s = shallow(t);
    if (s.kind() == Type::Kind::Meta) return s.meta_id() == id;
    for (const auto& a : s.args())
      if (occurs(id, a)) return true;
    return false;
  }

  bool unify_rec(const Type& a0, const Type& b0) {
    Type a = shallow(a0), b = shallow(b0);
    if (a.kind() == Type::Kind::Meta && b.kind() == Type::Kind::Meta && a.meta_id() == b.meta_id())
      return true;
    if (a.kind() == Type::Kind::Meta) return bind(a.meta_id(), b);
    if (b.kind() == Type::Kind::Meta) return bind(b.meta_id(), a);
    if (a.kind() != b.kind()) return false;
    if (a.kind() == Type::Kind::Adt || a.kind() == Type::Kind::Var)
      if (a.name() != b.name()) return false;
    if (a.args().size() != b.args().size()) return false;
    for (std::size_t i = 0; i < a.args().size(); ++i)
      if (!unify_rec(a.args()[i], b.args()[i])) return false;
    return true;
  }

  bool bind(int id, const Type& t) {
    if (occurs(id, t)) return false;
    if (numeric_[id]) {
      if (t.kind() == Type::Kind::Meta) {
        numeric_[t.meta_id()] = true;
      } else if (!t.is_numeric()) {
        return false;
      }
    }
    metas_[id] = t;
    return true;
  }

  void unify(const Type& expected, const Type& actual, SourcePos pos, const char* what = nullptr) {
    if (!expected.known() || !actual.known()) return;
    if (!unify_rec(expected, actual)) {
      std::string msg = what ? std::string(what) + ": " : std::string();
      error(pos, msg + "expected " + zonk(expected).str() + " but found " + zonk(actual).str());
    }
  }

  void require_numeric(const Type& t, SourcePos pos) {
    Type s = shallow(t);
    if (s.kind() == Type::Kind::Meta) {
      numeric_[s.meta_id()] = true;
      return;
    }
    if (!s.is_numeric()) error(pos, "expected a numeric type but found " + zonk(s).str());
  }

  void check_type_wf(const Type& t, SourcePos pos) {
    if (!t.known()) return;
    if (t.kind() == Type::Kind::Adt) {
      const AdtDef* a = prog_.find_adt(t.name());
      if (!a) error(pos, "unknown type '" + t.name().str() + "'");
      if (a->type_params.size() != t.args().size())
        error(pos, "wrong number of type arguments for " + t.name().str());
    }
    if (t.kind() == Type::Kind::Var && !rigid_.count(t.name()))
      error(pos, "unknown type variable '" + t.name().str() + "'");
    for (const auto& a : t.args()) check_type_wf(a, pos);
  }

  /// ADT type of `adt` with fresh metas for its parameters.
  Type instantiate_adt(const AdtDef& adt, TypeSubst& subst) {
    std::vector<Type> args;
    for (auto tp : adt.type_params) {
      Type m = fresh();
      subst[tp] = m;
      args.push_back(m);
    }
    return Type::adt(adt.name, std::move(args));
  }

  Pattern pattern(const Pattern& p, const Type& t, TypeEnv& env, SourcePos pos) {
    Pattern out = p;
    out.type = t;
    switch (p.kind) {
      case Pattern::Kind::Wildcard:
        return out;
      case Pattern::Kind::Bind:
        env[p.name] = t;
        if (!p.subs.empty()) out.subs[0] = pattern(p.subs[0], t, env, pos);
        return out;
      case Pattern::Kind::Tuple: {
        Type s = shallow(t);
        std::vector<Type> el;
        if (s.kind() == Type::Kind::Tuple && s.args().size() == p.subs.size()) {
          el.assign(s.args().begin(), s.args().end());
        } else {
          for (std::size_t i = 0; i < p.subs.size(); ++i) el.push_back(fresh());
          unify(t, Type::tuple(el), pos, "tuple pattern");
        }
        for (std::size_t i = 0; i < p.subs.size(); ++i) out.subs[i] = pattern(p.subs[i], el[i], env, pos);
        return out;
      }
      case Pattern::Kind::Ctor: {
        auto ref = prog_.find_ctor(p.ctor);
        if (!ref) error(pos, "unknown constructor '" + p.ctor.str() + "'");
        if (ref->ctor->fields.size() != p.subs.size())
          error(pos, "constructor '" + p.ctor.str() + "' expects " +
                         std::to_string(ref->ctor->fields.size()) + " sub-pattern(s)");
        TypeSubst subst;
        Type adt_t = instantiate_adt(*ref->adt, subst);
        unify(t, adt_t, pos, "constructor pattern");
        for (std::size_t i = 0; i < p.subs.size(); ++i)
          out.subs[i] = pattern(p.subs[i], substitute_type(ref->ctor->fields[i].type, subst), env, pos);
        return out;
      }
    }
    return out;
  }

  Expr infer(const Expr& e, const TypeEnv& env, const Type& expected) {
    Expr r = infer_node(e, env, expected);
    unify(expected, r.type(), e->pos);
    return r;
  }

  Expr infer_node(const Expr& e, const TypeEnv& env, const Type& expected) {
    const ExprNode& n = *e;
    switch (n.kind) {
      case ExprKind::Literal: {
        if (std::holds_alternative<bool>(n.literal)) return e.with_type(Type::boolean());
        if (std::holds_alternative<std::int32_t>(n.literal)) return e.with_type(Type::int32());
        if (n.type.known() && n.type.is_numeric()) return e;
        return e.with_type(fresh(true));
      }
      case ExprKind::Var: {
        auto it = env.find(n.name);
        if (it == env.end()) error(n.pos, "unresolved name '" + n.name.str() + "'");
        return e.with_type(it->second);
      }
      case ExprKind::Ctor: {
        auto ref = prog_.find_ctor(n.name);
        if (!ref) error(n.pos, "unknown constructor '" + n.name.str() + "'");
        if (ref->ctor->fields.size() != n.children.size())
          error(n.pos, "constructor '" + n.name.str() + "' expects " +
                           std::to_string(ref->ctor->fields.size()) + " argument(s)");
        TypeSubst subst;
        Type t = instantiate_adt(*ref->adt, subst);
        unify(expected, t, n.pos);
        std::vector<Expr> args;
        for (std::size_t i = 0; i < n.children.size(); ++i)
          args.push_back(infer(n.children[i], env, substitute_type(ref->ctor->fields[i].type, subst)));
        return e.with_children(std::move(args)).with_type(t);
      }
      case ExprKind::Tuple: {
        Type s = shallow(expected);
        std::vector<Expr> el;
        std::vector<Type> ts;
        for (std::size_t i = 0; i < n.children.size(); ++i) {
          Type hint;
          if (s.known() && s.kind() == Type::Kind::Tuple && s.args().size() == n.children.size())
            hint = s.args()[i];
          el.push_back(infer(n.children[i], env, hint));
          ts.push_back(el.back().type());
        }
        return e.with_children(std::move(el)).with_type(Type::tuple(std::move(ts)));
      }
      case ExprKind::TupleSelect: {
        Expr obj = infer(n.children[0], env, {});
        Type t = shallow(obj.type());
        if (t.kind() != Type::Kind::Tuple) error(n.pos, "tuple selection on non-tuple " + zonk(t).str());
        if (n.op < 1 || static_cast<std::size_t>(n.op) > t.args().size())
          error(n.pos, "tuple index _" + std::to_string(n.op) + " out of range for " + zonk(t).str());
        return e.with_children({obj}).with_type(t.args()[n.op - 1]);
      }
      case ExprKind::FieldSelect: {
        Expr obj = infer(n.children[0], env, {});
        Type t = shallow(obj.type());
        const AdtDef* adt = nullptr;
        if (t.kind() == Type::Kind::Adt) {
          adt = prog_.find_adt(t.name());
        } else if (t.kind() == Type::Kind::Meta) {
          for (const auto& a : prog_.adts())
            for (const auto& c : a.ctors)
              for (const auto& f : c.fields)
                if (f.name == n.name) {
                  if (adt && adt != &a) error(n.pos, "ambiguous field '" + n.name.str() + "'");
                  adt = &a;
                }
          if (adt) {
            TypeSubst unused;
            unify(t, instantiate_adt(*adt, unused), n.pos);
            t = shallow(t);
          }
        }
        if (!adt) error(n.pos, "field selection '" + n.name.str() + "' on " + zonk(t).str());
        TypeSubst subst;
        for (std::size_t i = 0; i < adt->type_params.size(); ++i) subst[adt->type_params[i]] = t.args()[i];
        for (const auto& c : adt->ctors)
          for (const auto& f : c.fields)
            if (f.name == n.name)
              return e.with_children({obj}).with_type(substitute_type(f.type, subst));
        error(n.pos, "type " + zonk(t).str() + " has no field '" + n.name.str() + "'");
      }
      case ExprKind::IsCtor: {
        auto ref = prog_.find_ctor(n.name);
        if (!ref) error(n.pos, "unknown constructor '" + n.name.str() + "'");
        TypeSubst subst;
        Expr obj = infer(n.children[0], env, instantiate_adt(*ref->adt, subst));
        return e.with_children({obj}).with_type(Type::boolean());
      }
      case ExprKind::Call: {
        const FunDef* f = prog_.find_function(n.name);
        if (!f) error(n.pos, "unknown function '" + n.name.str() + "'");
        if (f->params.size() != n.children.size())
          error(n.pos, "function '" + n.name.str() + "' expects " + std::to_string(f->params.size()) +
                           " argument(s), got " + std::to_string(n.children.size()));
        TypeSubst subst;
        std::vector<Type> targs;
        for (std::size_t i = 0; i < f->type_params.size(); ++i) {
          Type t;
          if (i < n.type_args.size()) {
            t = n.type_args[i];
            check_type_wf(t, n.pos);
          } else {
            t = fresh();
          }
          subst[f->type_params[i]] = t;
          targs.push_back(t);
        }
        if (!n.type_args.empty() && n.type_args.size() != f->type_params.size())
          error(n.pos, "wrong number of type arguments for '" + n.name.str() + "'");
        Type ret = substitute_type(f->return_type, subst);
        unify(expected, ret, n.pos);
        std::vector<Expr> args;
        for (std::size_t i = 0; i < n.children.size(); ++i)
          args.push_back(infer(n.children[i], env, substitute_type(f->params[i].type, subst)));
        return e.with_children(std::move(args)).with_type_args(std::move(targs)).with_type(ret);
      }
      case ExprKind::If: {
        Expr c = infer(n.children[0], env, {});
        unify(Type::boolean(), c.type(), n.children[0]->pos, "condition must be Boolean");
        Type t = expected.known() ? expected : fresh();
        Expr a = infer(n.children[1], env, t);
        Expr b = infer(n.children[2], env, t);
        return e.with_children({c, a, b}).with_type(t);
      }
      case ExprKind::Match: {
        Expr scrut = infer(n.children[0], env, {});
        Type t = expected.known() ? expected : fresh();
        std::vector<Expr> kids{scrut};
        std::vector<Pattern> pats;
        for (std::size_t i = 0; i < n.patterns.size(); ++i) {
          TypeEnv inner = env;
          pats.push_back(pattern(n.patterns[i], scrut.type(), inner, n.pos));
          kids.push_back(infer(n.children[i + 1], inner, t));
        }
        return e.with_children(std::move(kids)).with_patterns(std::move(pats)).with_type(t);
      }
      case ExprKind::Let: {
        Expr v = infer(n.children[0], env, {});
        TypeEnv inner = env;
        inner[n.name] = v.type();
        Expr b = infer(n.children[1], inner, expected);
        return e.with_children({v, b}).with_type(b.type());
      }
      case ExprKind::Binary: {
        BinaryOp op = n.binary_op();
        switch (op) {
          case BinaryOp::And:
          case BinaryOp::Or: {
            Expr a = infer(n.children[0], env, Type::boolean());
            Expr b = infer(n.children[1], env, Type::boolean());
            return e.with_children({a, b}).with_type(Type::boolean());
          }
          case BinaryOp::Eq: {
            Expr a = infer(n.children[0], env, {});
            Expr b = infer(n.children[1], env, a.type());
            return e.with_children({a, b}).with_type(Type::boolean());
          }
          case BinaryOp::Lt:
          case BinaryOp::Le: {
            Expr a = infer(n.children[0], env, {});
            Expr b = infer(n.children[1], env, a.type());
            require_numeric(a.type(), n.pos);
            return e.with_children({a, b}).with_type(Type::boolean());
          }
          default: {
            Expr a = infer(n.children[0], env, expected);
            Expr b = infer(n.children[1], env, a.type());
            require_numeric(a.type(), n.pos);
            return e.with_children({a, b}).with_type(a.type());
          }
        }
      }
      case ExprKind::Unary: {
        if (n.unary_op() == UnaryOp::Not) {
          Expr a = infer(n.children[0], env, Type::boolean());
          return e.with_children({a}).with_type(Type::boolean());
        }
        Expr a = infer(n.children[0], env, expected);
        require_numeric(a.type(), n.pos);
        return e.with_children({a}).with_type(a.type());
      }
      case ExprKind::Choose: {
        std::vector<Binder> bs = n.binders;
        std::set<Symbol> seen;
        for (auto& b : bs) {
          if (!seen.insert(b.name).second) error(n.pos, "duplicate binder '" + b.name.str() + "'");
          if (b.type.known()) check_type_wf(b.type, n.pos);
          else b.type = fresh();
        }
        Type t;
        if (bs.size() == 1) {
          t = bs[0].type;
        } else {
          std::vector<Type> ts;
          for (const auto& b : bs) ts.push_back(b.type);
          t = Type::tuple(std::move(ts));
        }
        unify(expected, t, n.pos, "choose");
        TypeEnv inner = env;
        for (const auto& b : bs) inner[b.name] = b.type;
        Expr pred = infer(n.children[0], inner, Type::boolean());
        return e.with_children({pred}).with_binders(std::move(bs)).with_type(t);
      }
      case ExprKind::Hole:
        return e.with_type(expected.known() ? expected : fresh());
    }
    error(n.pos, "unsupported expression");
  }

  // Numeral literals left unconstrained default to BigInt, as do any other
  // unconstrained metas.
  Type default_meta(const Type& t) const {
    Type z = zonk(t);
    if (!z.known() || !z.mentions_meta()) return z;
    switch (z.kind()) {
      case Type::Kind::Meta:
        return Type::bigint();
      case Type::Kind::Tuple: {
        std::vector<Type> el;
        for (const auto& a : z.args()) el.push_back(default_meta(a));
        return Type::tuple(std::move(el));
      }
      case Type::Kind::Adt: {
        std::vector<Type> el;
        for (const auto& a : z.args()) el.push_back(default_meta(a));
        return Type::adt(z.name(), std::move(el));
      }
      default:
        return z;
    }
  }

  Pattern finish_pattern(const Pattern& p) const {
    Pattern q = p;
    q.type = default_meta(p.type);
    for (auto& s : q.subs) s = finish_pattern(s);
    return q;
  }

  Expr finish(const Expr& e) {
    for (std::size_t i = 0; i < metas_.size(); ++i) {
      if (!metas_[i].known() && numeric_[i]) metas_[i] = Type::bigint();
    }
    return finish_rec(e);
  }

  Expr finish_rec(const Expr& e) {
    const ExprNode& n = *e;
    std::vector<Expr> kids;
    for (const auto& c : n.children) kids.push_back(finish_rec(c));
    Expr r = kids.empty() ? e : e.with_children(std::move(kids));
    Type t = default_meta(n.type);
    if (n.kind == ExprKind::Literal && t.known() && t.is_numeric()) {
      BigInt v = std::holds_alternative<std::int32_t>(n.literal) ? BigInt(std::get<std::int32_t>(n.literal))
                 : std::holds_alternative<BigInt>(n.literal)   ? std::get<BigInt>(n.literal)
                                                               : BigInt(0);
      if (t.kind() == Type::Kind::Int) {
        if (v > std::numeric_limits<std::int32_t>::max() || v < std::numeric_limits<std::int32_t>::min())
          errors.push_back({n.pos, "integer literal out of range for Int"});
        else
          r = r.with_literal(static_cast<std::int32_t>(v));
      } else {
        r = r.with_literal(v);
      }
    }
    if (!n.patterns.empty()) {
      std::vector<Pattern> ps;
      for (const auto& p : n.patterns) ps.push_back(finish_pattern(p));
      r = r.with_patterns(std::move(ps));
    }
    if (!n.binders.empty()) {
      std::vector<Binder> bs = n.binders;
      for (auto& b : bs) b.type = default_meta(b.type);
      r = r.with_binders(std::move(bs));
    }
    if (!n.type_args.empty()) {
      std::vector<Type> ts;
      for (const auto& a : n.type_args) ts.push_back(default_meta(a));
      r = r.with_type_args(std::move(ts));
    }
    return r.with_type(t);
  }

  // Pattern-matrix coverage: do the rows match every value of `types`?
  bool covers(const std::vector<std::vector<Pattern>>& rows, const std::vector<Type>& types) const {
    if (types.empty()) return !rows.empty();
    if (rows.empty()) return false;
    auto head = [](const Pattern& p) -> const Pattern& {
      const Pattern* q = &p;
      while (q->kind == Pattern::Kind::Bind && !q->subs.empty()) q = &q->subs[0];
      return *q;
    };
    auto is_wild = [](const Pattern& p) {
      return p.kind == Pattern::Kind::Wildcard || p.kind == Pattern::Kind::Bind;
    };
    const Type& t = types[0];
    std::vector<Type> rest(types.begin() + 1, types.end());
    bool any_structured = false;
    for (const auto& r : rows)
      if (!is_wild(head(r[0]))) any_structured = true;
    if (!any_structured || !t.known()) {
      std::vector<std::vector<Pattern>> def;
      for (const auto& r : rows) def.emplace_back(r.begin() + 1, r.end());
      return covers(def, rest);
    }
    if (t.kind() == Type::Kind::Tuple) {
      std::size_t k = t.args().size();
      std::vector<std::vector<Pattern>> spec;
      for (const auto& r : rows) {
        const Pattern& h = head(r[0]);
        std::vector<Pattern> row;
        if (is_wild(h)) row.assign(k, Pattern::wildcard());
        else row = h.subs;
        row.insert(row.end(), r.begin() + 1, r.end());
        spec.push_back(std::move(row));
      }
      std::vector<Type> ts(t.args().begin(), t.args().end());
      ts.insert(ts.end(), rest.begin(), rest.end());
      return covers(spec, ts);
    }
    if (t.kind() != Type::Kind::Adt) return false;
    const AdtDef* adt = prog_.find_adt(t.name());
    if (!adt) return false;
    for (std::size_t ci = 0; ci < adt->ctors.size(); ++ci) {
      CtorRef ref{adt, &adt->ctors[ci], ci};
      auto fields = prog_.ctor_field_types(ref, t);
      std::vector<std::vector<Pattern>> spec;
      for (const auto& r : rows) {
        const Pattern& h = head(r[0]);
        std::vector<Pattern> row;
        if (is_wild(h)) {
          row.assign(fields.size(), Pattern::wildcard());
        } else if (h.kind == Pattern::Kind::Ctor && h.ctor == adt->ctors[ci].name) {
          row = h.subs;
        } else {
          continue;
        }
        row.insert(row.end(), r.begin() + 1, r.end());
        spec.push_back(std::move(row));
      }
      std::vector<Type> ts = fields;
      ts.insert(ts.end(), rest.begin(), rest.end());
      if (!covers(spec, ts)) return false;
    }
    return true;
  }
};

void check_definitions(const Program& p, std::vector<TypeError>& errors) {
  for (const auto& a : p.adts()) {
    std::set<Symbol> params(a.type_params.begin(), a.type_params.end());
    std::function<void(const Type&)> wf = [&](const Type& t) {
      if (t.kind() == Type::Kind::Adt) {
        const AdtDef* d = p.find_adt(t.name());
        if (!d) errors.push_back({a.pos, "unknown type '" + t.name().str() + "'"});
        else if (d->type_params.size() != t.args().size())
          errors.push_back({a.pos, "wrong number of type arguments for " + t.name().str()});
      } else if (t.kind() == Type::Kind::Var && !params.count(t.name())) {
        errors.push_back({a.pos, "unknown type variable '" + t.name().str() + "'"});
      }
      for (const auto& x : t.args()) wf(x);
    };
    for (const auto& c : a.ctors)
      for (const auto& f : c.fields) wf(f.type);
  }
}

}  // namespace

TypeCheckFailure::TypeCheckFailure(std::vector<TypeError> errors)
    : std::runtime_error(join_errors(errors)), errors_(std::move(errors)) {}

namespace {

std::pair<Program, std::vector<TypeError>> run(const Program& p) {
  std::vector<TypeError> errors;
  check_definitions(p, errors);
  Checker c(p);
  std::vector<FunDef> out;
  for (const auto& f : p.functions()) {
    try {
      FunDef g = c.function(f);
      if (g.precondition) c.check_exhaustive(g.precondition);
      c.check_exhaustive(g.body);
      if (g.postcondition) c.check_exhaustive(g.postcondition->predicate);
      out.push_back(std::move(g));
    } catch (const Abort& a) {
      errors.push_back(a.error);
      out.push_back(f);
    }
  }
  errors.insert(errors.end(), c.errors.begin(), c.errors.end());
  return {Program(p.adts(), std::move(out)), std::move(errors)};
}

}  // namespace

std::vector<TypeError> type_check(const Program& p) { return run(p).second; }

Program elaborate(const Program& p) {
  auto [prog, errors] = run(p);
  if (!errors.empty()) throw TypeCheckFailure(std::move(errors));
  return prog;
}

Expr elaborate_expr(const Program& p, const Expr& e, const TypeEnv& env, const Type& expected) {
  Checker c(p);
  Expr out;
  try {
    out = c.standalone(e, env, expected);
    c.check_exhaustive(out);
  } catch (const Abort& a) {
    throw TypeCheckFailure({a.error});
  }
  if (!c.errors.empty()) throw TypeCheckFailure(c.errors);
  return out;
}

std::vector<TypeError> check_expr(const Program& p, const Expr& e, const TypeEnv& env,
                                  const Type& expected) {
  try {
    elaborate_expr(p, e, env, expected);
  } catch (const TypeCheckFailure& f) {
    return f.errors();
  }
  return {};
}

}  // namespace synthe
