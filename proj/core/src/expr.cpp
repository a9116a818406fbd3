#include "synthe/expr.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace synthe {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t literal_hash(const LitValue& v) {
  return std::visit(
      [](const auto& x) -> std::size_t {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          return x ? 0x51 : 0x50;
        } else if constexpr (std::is_same_v<T, std::int32_t>) {
          return std::hash<std::int64_t>{}(x);
        } else {
          if (x >= std::numeric_limits<std::int64_t>::min() &&
              x <= std::numeric_limits<std::int64_t>::max())
            return std::hash<std::int64_t>{}(static_cast<std::int64_t>(x));
          return std::hash<std::string>{}(x.str());
        }
      },
      v);
}

int compare_literals(const LitValue& a, const LitValue& b) {
  if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  if (auto pa = std::get_if<bool>(&a)) {
    bool pb = std::get<bool>(b);
    return *pa == pb ? 0 : (!*pa ? -1 : 1);
  }
  // Integers: nonnegative before negative, then by magnitude.
  BigInt x = std::holds_alternative<std::int32_t>(a) ? BigInt(std::get<std::int32_t>(a))
                                                     : std::get<BigInt>(a);
  BigInt y = std::holds_alternative<std::int32_t>(b) ? BigInt(std::get<std::int32_t>(b))
                                                     : std::get<BigInt>(b);
  if (x == y) return 0;
  bool nx = x < 0, ny = y < 0;
  if (nx != ny) return nx ? 1 : -1;
  BigInt ax = nx ? BigInt(-x) : x, ay = ny ? BigInt(-y) : y;
  return ax < ay ? -1 : 1;
}

bool patterns_equal(const Pattern& a, const Pattern& b) {
  if (a.kind != b.kind || a.name != b.name || a.ctor != b.ctor || a.subs.size() != b.subs.size())
    return false;
  for (std::size_t i = 0; i < a.subs.size(); ++i)
    if (!patterns_equal(a.subs[i], b.subs[i])) return false;
  return true;
}

int compare_patterns(const Pattern& a, const Pattern& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (a.name != b.name) return a.name < b.name ? -1 : 1;
  if (a.ctor != b.ctor) return a.ctor < b.ctor ? -1 : 1;
  if (a.subs.size() != b.subs.size()) return a.subs.size() < b.subs.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.subs.size(); ++i)
    if (int c = compare_patterns(a.subs[i], b.subs[i])) return c;
  return 0;
}

Type bool_type() { return Type::boolean(); }

std::uint32_t pattern_size(const Pattern& p) {
  std::uint32_t n = 1;
  for (const auto& s : p.subs) n += pattern_size(s);
  return n;
}

ExprNode blank_node(ExprKind kind, Type type, SourcePos pos) {
  ExprNode n;
  n.kind = kind;
  n.type = std::move(type);
  n.pos = pos;
  return n;
}

}  // namespace

const char* op_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Eq: return "==";
    case BinaryOp::And: return "&&";
    case BinaryOp::Or: return "||";
  }
  return "?";
}

const char* op_symbol(UnaryOp op) { return op == UnaryOp::Not ? "!" : "-"; }

Pattern Pattern::wildcard(Type t) {
  Pattern p;
  p.kind = Kind::Wildcard;
  p.type = std::move(t);
  return p;
}

Pattern Pattern::bind(Symbol name, Type t) {
  Pattern p;
  p.kind = Kind::Bind;
  p.name = name;
  p.type = std::move(t);
  return p;
}

Pattern Pattern::bind_as(Symbol name, Pattern inner) {
  Pattern p;
  p.kind = Kind::Bind;
  p.name = name;
  p.type = inner.type;
  p.subs.push_back(std::move(inner));
  return p;
}

Pattern Pattern::constructor(Symbol ctor, std::vector<Pattern> subs, Type t) {
  Pattern p;
  p.kind = Kind::Ctor;
  p.ctor = ctor;
  p.subs = std::move(subs);
  p.type = std::move(t);
  return p;
}

Pattern Pattern::tuple(std::vector<Pattern> subs, Type t) {
  Pattern p;
  p.kind = Kind::Tuple;
  p.subs = std::move(subs);
  p.type = std::move(t);
  return p;
}

void Pattern::collect_binders(std::vector<Symbol>& out) const {
  if (kind == Kind::Bind) out.push_back(name);
  for (const auto& s : subs) s.collect_binders(out);
}

Expr Expr::make(ExprNode node) {
  std::uint32_t size = 1;
  std::size_t h = mix(static_cast<std::size_t>(node.kind), node.name.hash());
  h = mix(h, static_cast<std::size_t>(node.op));
  if (node.kind == ExprKind::Literal) h = mix(h, literal_hash(node.literal));
  for (const auto& c : node.children) {
    size += c->size;
    h = mix(h, c->hash);
  }
  for (const auto& p : node.patterns) size += pattern_size(p);
  node.size = size;
  node.hash = h;
  return Expr(std::make_shared<const ExprNode>(std::move(node)));
}

Expr Expr::literal(LitValue value, Type type, SourcePos pos) {
  ExprNode n = blank_node(ExprKind::Literal, std::move(type), pos);
  n.literal = std::move(value);
  return make(std::move(n));
}

Expr Expr::boolean(bool b) { return literal(b, Type::boolean()); }
Expr Expr::bigint(BigInt v) { return literal(std::move(v), Type::bigint()); }
Expr Expr::int32(std::int32_t v) { return literal(v, Type::int32()); }

Expr Expr::var(Symbol name, Type type, SourcePos pos) {
  ExprNode n = blank_node(ExprKind::Var, std::move(type), pos);
  n.name = name;
  return make(std::move(n));
}

Expr Expr::ctor(Symbol ctor, std::vector<Expr> args, Type type, SourcePos pos) {
  ExprNode n = blank_node(ExprKind::Ctor, std::move(type), pos);
  n.name = ctor;
  n.children = std::move(args);
  return make(std::move(n));
}

Expr Expr::tuple(std::vector<Expr> elems, SourcePos pos) {
  std::vector<Type> types;
  bool known = true;
  for (const auto& e : elems) {
    if (!e.type().known()) known = false;
    types.push_back(e.type());
  }
  ExprNode n = blank_node(ExprKind::Tuple, known ? Type::tuple(std::move(types)) : Type(), pos);
  n.children = std::move(elems);
  return make(std::move(n));
}

Expr Expr::tuple_select(Expr tuple, int index, SourcePos pos) {
  Type t;
  const Type& tt = tuple.type();
  if (tt.known() && tt.kind() == Type::Kind::Tuple && index >= 1 &&
      static_cast<std::size_t>(index) <= tt.args().size())
    t = tt.args()[index - 1];
  ExprNode n = blank_node(ExprKind::TupleSelect, std::move(t), pos);
  n.op = index;
  n.children.push_back(std::move(tuple));
  return make(std::move(n));
}

Expr Expr::field(Expr obj, Symbol field, Type type, SourcePos pos) {
  ExprNode n = blank_node(ExprKind::FieldSelect, std::move(type), pos);
  n.name = field;
  n.children.push_back(std::move(obj));
  return make(std::move(n));
}

Expr Expr::call(Symbol fn, std::vector<Type> type_args, std::vector<Expr> args, Type type,
                SourcePos pos) {
  ExprNode n = blank_node(ExprKind::Call, std::move(type), pos);
  n.name = fn;
  n.type_args = std::move(type_args);
  n.children = std::move(args);
  return make(std::move(n));
}

Expr Expr::ite(Expr cond, Expr then_branch, Expr else_branch, SourcePos pos) {
  Type t = then_branch.type().known() ? then_branch.type() : else_branch.type();
  ExprNode n = blank_node(ExprKind::If, std::move(t), pos);
  n.children = {std::move(cond), std::move(then_branch), std::move(else_branch)};
  return make(std::move(n));
}

Expr Expr::match(Expr scrutinee, std::vector<Pattern> patterns, std::vector<Expr> bodies, Type type,
                 SourcePos pos) {
  if (patterns.size() != bodies.size()) throw std::invalid_argument("match: arity mismatch");
  if (!type.known()) {
    for (const auto& b : bodies)
      if (b.type().known()) {
        type = b.type();
        break;
      }
  }
  ExprNode n = blank_node(ExprKind::Match, std::move(type), pos);
  n.children.push_back(std::move(scrutinee));
  for (auto& b : bodies) n.children.push_back(std::move(b));
  n.patterns = std::move(patterns);
  return make(std::move(n));
}

Expr Expr::let(Symbol name, Expr value, Expr body, SourcePos pos) {
  ExprNode n = blank_node(ExprKind::Let, body.type(), pos);
  n.name = name;
  n.children = {std::move(value), std::move(body)};
  return make(std::move(n));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs, SourcePos pos) {
  Type t;
  switch (op) {
    case BinaryOp::Add:
    case BinaryOp::Sub:
    case BinaryOp::Mul:
    case BinaryOp::Div:
    case BinaryOp::Mod:
      t = lhs.type().known() ? lhs.type() : rhs.type();
      break;
    default:
      t = bool_type();
  }
  ExprNode n = blank_node(ExprKind::Binary, std::move(t), pos);
  n.op = static_cast<int>(op);
  n.children = {std::move(lhs), std::move(rhs)};
  return make(std::move(n));
}

Expr Expr::unary(UnaryOp op, Expr operand, SourcePos pos) {
  Type t = op == UnaryOp::Not ? bool_type() : operand.type();
  ExprNode n = blank_node(ExprKind::Unary, std::move(t), pos);
  n.op = static_cast<int>(op);
  n.children.push_back(std::move(operand));
  return make(std::move(n));
}

Expr Expr::choose(std::vector<Binder> binders, Expr predicate, Type type, SourcePos pos) {
  if (!type.known()) {
    bool known = true;
    std::vector<Type> ts;
    for (const auto& b : binders) {
      known = known && b.type.known();
      ts.push_back(b.type);
    }
    if (known && !binders.empty()) type = ts.size() == 1 ? ts[0] : Type::tuple(std::move(ts));
  }
  ExprNode n = blank_node(ExprKind::Choose, std::move(type), pos);
  n.binders = std::move(binders);
  n.children.push_back(std::move(predicate));
  return make(std::move(n));
}

Expr Expr::hole(Type type, SourcePos pos) { return make(blank_node(ExprKind::Hole, std::move(type), pos)); }

Expr Expr::is_ctor(Expr obj, Symbol ctor, SourcePos pos) {
  ExprNode n = blank_node(ExprKind::IsCtor, bool_type(), pos);
  n.name = ctor;
  n.children.push_back(std::move(obj));
  return make(std::move(n));
}

ExprKind Expr::kind() const { return node_->kind; }

const Type& Expr::type() const {
  static const Type unknown;
  return node_ ? node_->type : unknown;
}

Expr Expr::with_type(Type t) const {
  ExprNode n = *node_;
  n.type = std::move(t);
  return make(std::move(n));
}

Expr Expr::with_children(std::vector<Expr> children) const {
  ExprNode n = *node_;
  n.children = std::move(children);
  return make(std::move(n));
}

Expr Expr::with_patterns(std::vector<Pattern> patterns) const {
  ExprNode n = *node_;
  n.patterns = std::move(patterns);
  return make(std::move(n));
}

Expr Expr::with_binders(std::vector<Binder> binders) const {
  ExprNode n = *node_;
  n.binders = std::move(binders);
  return make(std::move(n));
}

Expr Expr::with_type_args(std::vector<Type> type_args) const {
  ExprNode n = *node_;
  n.type_args = std::move(type_args);
  return make(std::move(n));
}

Expr Expr::with_name(Symbol name) const {
  ExprNode n = *node_;
  n.name = name;
  return make(std::move(n));
}

Expr Expr::with_literal(LitValue value) const {
  ExprNode n = *node_;
  n.literal = std::move(value);
  return make(std::move(n));
}

std::size_t expr_size(const Expr& e) { return e ? e->size : 0; }

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  const ExprNode& x = *a;
  const ExprNode& y = *b;
  if (x.hash != y.hash || x.size != y.size || x.kind != y.kind || x.name != y.name ||
      x.op != y.op || x.children.size() != y.children.size())
    return false;
  if (x.kind == ExprKind::Literal && compare_literals(x.literal, y.literal) != 0) return false;
  if (!(x.type == y.type)) return false;
  if (x.patterns.size() != y.patterns.size()) return false;
  for (std::size_t i = 0; i < x.patterns.size(); ++i)
    if (!patterns_equal(x.patterns[i], y.patterns[i])) return false;
  if (x.binders.size() != y.binders.size()) return false;
  for (std::size_t i = 0; i < x.binders.size(); ++i)
    if (x.binders[i].name != y.binders[i].name || !(x.binders[i].type == y.binders[i].type))
      return false;
  if (x.type_args != y.type_args) return false;
  for (std::size_t i = 0; i < x.children.size(); ++i)
    if (!expr_equal(x.children[i], y.children[i])) return false;
  return true;
}

std::size_t expr_hash(const Expr& e) { return e ? e->hash : 0; }

int compare_terms(const Expr& a, const Expr& b) {
  if (a.get() == b.get()) return 0;
  const ExprNode& x = *a;
  const ExprNode& y = *b;
  if (x.size != y.size) return x.size < y.size ? -1 : 1;
  if (x.kind != y.kind) return x.kind < y.kind ? -1 : 1;
  if (x.kind == ExprKind::Literal)
    if (int c = compare_literals(x.literal, y.literal)) return c;
  if (x.name != y.name) return x.name < y.name ? -1 : 1;
  if (x.op != y.op) return x.op < y.op ? -1 : 1;
  if (x.children.size() != y.children.size()) return x.children.size() < y.children.size() ? -1 : 1;
  for (std::size_t i = 0; i < x.children.size(); ++i)
    if (int c = compare_terms(x.children[i], y.children[i])) return c;
  if (x.patterns.size() != y.patterns.size()) return x.patterns.size() < y.patterns.size() ? -1 : 1;
  for (std::size_t i = 0; i < x.patterns.size(); ++i)
    if (int c = compare_patterns(x.patterns[i], y.patterns[i])) return c;
  if (auto c = x.type <=> y.type; c != 0) return c < 0 ? -1 : 1;
  return 0;
}

namespace {

void free_vars_rec(const Expr& e, std::set<Symbol>& bound, std::set<Symbol>& out) {
  const ExprNode& n = *e;
  switch (n.kind) {
    case ExprKind::Var:
      if (!bound.count(n.name)) out.insert(n.name);
      return;
    case ExprKind::Let: {
      free_vars_rec(n.children[0], bound, out);
      bool inserted = bound.insert(n.name).second;
      free_vars_rec(n.children[1], bound, out);
      if (inserted) bound.erase(n.name);
      return;
    }
    case ExprKind::Match: {
      free_vars_rec(n.children[0], bound, out);
      for (std::size_t i = 0; i < n.patterns.size(); ++i) {
        std::vector<Symbol> names;
        n.patterns[i].collect_binders(names);
        std::vector<Symbol> added;
        for (auto s : names)
          if (bound.insert(s).second) added.push_back(s);
        free_vars_rec(n.children[i + 1], bound, out);
        for (auto s : added) bound.erase(s);
      }
      return;
    }
    case ExprKind::Choose: {
      std::vector<Symbol> added;
      for (const auto& b : n.binders)
        if (bound.insert(b.name).second) added.push_back(b.name);
      free_vars_rec(n.children[0], bound, out);
      for (auto s : added) bound.erase(s);
      return;
    }
    default:
      for (const auto& c : n.children) free_vars_rec(c, bound, out);
  }
}

Pattern rename_pattern(const Pattern& p, const std::map<Symbol, Symbol>& renames) {
  Pattern q = p;
  if (q.kind == Pattern::Kind::Bind) {
    auto it = renames.find(q.name);
    if (it != renames.end()) q.name = it->second;
  }
  for (auto& s : q.subs) s = rename_pattern(s, renames);
  return q;
}

}  // namespace

std::set<Symbol> free_vars(const Expr& e) {
  std::set<Symbol> bound, out;
  if (e) free_vars_rec(e, bound, out);
  return out;
}

bool occurs_free(Symbol x, const Expr& e) { return free_vars(e).count(x) > 0; }

std::size_t count_free_occurrences(Symbol x, const Expr& e) {
  const ExprNode& n = *e;
  switch (n.kind) {
    case ExprKind::Var:
      return n.name == x ? 1 : 0;
    case ExprKind::Let:
      return count_free_occurrences(x, n.children[0]) +
             (n.name == x ? 0 : count_free_occurrences(x, n.children[1]));
    case ExprKind::Match: {
      std::size_t c = count_free_occurrences(x, n.children[0]);
      for (std::size_t i = 0; i < n.patterns.size(); ++i) {
        std::vector<Symbol> names;
        n.patterns[i].collect_binders(names);
        if (std::find(names.begin(), names.end(), x) == names.end())
          c += count_free_occurrences(x, n.children[i + 1]);
      }
      return c;
    }
    case ExprKind::Choose:
      for (const auto& b : n.binders)
        if (b.name == x) return 0;
      return count_free_occurrences(x, n.children[0]);
    default: {
      std::size_t c = 0;
      for (const auto& ch : n.children) c += count_free_occurrences(x, ch);
      return c;
    }
  }
}

bool is_ground_term(const Expr& e) {
  if (e.kind() == ExprKind::Var) return false;
  for (const auto& c : e->children)
    if (!is_ground_term(c)) return false;
  return true;
}

std::size_t count_holes(const Expr& e) {
  if (e.kind() == ExprKind::Hole) return 1;
  std::size_t c = 0;
  for (const auto& ch : e->children) c += count_holes(ch);
  return c;
}

bool mentions_call_to(const Expr& e, Symbol fn) {
  if (e.kind() == ExprKind::Call && e->name == fn) return true;
  for (const auto& c : e->children)
    if (mentions_call_to(c, fn)) return true;
  return false;
}

Symbol fresh_symbol(std::string_view base, const std::set<Symbol>& taken) {
  Symbol s(base);
  if (!taken.count(s)) return s;
  for (int i = 1;; ++i) {
    Symbol t(std::string(base) + std::to_string(i));
    if (!taken.count(t)) return t;
  }
}

namespace {

Expr subst_rec(const Expr& e, const Bindings& b);

// Removes shadowed names and renames binders that would capture a free
// variable of a remaining replacement.
struct BinderScope {
  Bindings inner;
  std::map<Symbol, Symbol> renames;
};

BinderScope enter_scope(const std::vector<Symbol>& binders, const Bindings& b, const Expr& body) {
  BinderScope scope;
  scope.inner = b;
  for (auto s : binders) scope.inner.erase(s);
  if (scope.inner.empty()) return scope;
  std::set<Symbol> replacement_fvs;
  for (const auto& [k, v] : scope.inner) {
    auto fv = free_vars(v);
    replacement_fvs.insert(fv.begin(), fv.end());
  }
  std::set<Symbol> taken = replacement_fvs;
  auto body_fv = free_vars(body);
  taken.insert(body_fv.begin(), body_fv.end());
  for (auto s : binders) taken.insert(s);
  for (auto s : binders) {
    if (replacement_fvs.count(s)) {
      Symbol f = fresh_symbol(s.str(), taken);
      taken.insert(f);
      scope.renames[s] = f;
    }
  }
  return scope;
}

Expr subst_rec(const Expr& e, const Bindings& b) {
  if (b.empty()) return e;
  const ExprNode& n = *e;
  switch (n.kind) {
    case ExprKind::Var: {
      auto it = b.find(n.name);
      if (it == b.end()) return e;
      if (n.type.known() && it->second.type().known() && !(n.type == it->second.type()))
        throw std::invalid_argument("substitute: " + n.name.str() + " has type " + n.type.str() +
                                    " but replacement has type " + it->second.type().str());
      return it->second;
    }
    case ExprKind::Let: {
      Expr value = subst_rec(n.children[0], b);
      BinderScope scope = enter_scope({n.name}, b, n.children[1]);
      Expr body = n.children[1];
      Symbol name = n.name;
      Bindings inner = scope.inner;
      if (auto it = scope.renames.find(name); it != scope.renames.end()) {
        inner[name] = Expr::var(it->second, n.children[0].type());
        name = it->second;
      }
      body = subst_rec(body, inner);
      Expr r = e.with_children({value, body});
      return name == n.name ? r : r.with_name(name);
    }
    case ExprKind::Match: {
      std::vector<Expr> children{subst_rec(n.children[0], b)};
      std::vector<Pattern> patterns;
      for (std::size_t i = 0; i < n.patterns.size(); ++i) {
        std::vector<Symbol> names;
        n.patterns[i].collect_binders(names);
        BinderScope scope = enter_scope(names, b, n.children[i + 1]);
        Bindings inner = scope.inner;
        for (const auto& [from, to] : scope.renames) inner[from] = Expr::var(to, Type());
        patterns.push_back(scope.renames.empty() ? n.patterns[i]
                                                 : rename_pattern(n.patterns[i], scope.renames));
        // Renamed binder occurrences need their original types.
        Expr body = n.children[i + 1];
        if (!scope.renames.empty()) {
          body = rewrite_bottom_up(body, [&](const Expr& x) -> Expr {
            if (x.kind() == ExprKind::Var) {
              auto it = scope.renames.find(x->name);
              if (it != scope.renames.end()) return x.with_name(it->second);
            }
            return {};
          });
          for (const auto& [from, to] : scope.renames) inner.erase(from);
        }
        children.push_back(subst_rec(body, inner));
      }
      return e.with_children(std::move(children)).with_patterns(std::move(patterns));
    }
    case ExprKind::Choose: {
      std::vector<Symbol> names;
      for (const auto& bd : n.binders) names.push_back(bd.name);
      BinderScope scope = enter_scope(names, b, n.children[0]);
      std::vector<Binder> binders = n.binders;
      Bindings inner = scope.inner;
      for (auto& bd : binders) {
        auto it = scope.renames.find(bd.name);
        if (it != scope.renames.end()) {
          inner[bd.name] = Expr::var(it->second, bd.type);
          bd.name = it->second;
        }
      }
      return e.with_children({subst_rec(n.children[0], inner)}).with_binders(std::move(binders));
    }
    default: {
      if (n.children.empty()) return e;
      std::vector<Expr> children;
      children.reserve(n.children.size());
      bool changed = false;
      for (const auto& c : n.children) {
        children.push_back(subst_rec(c, b));
        changed = changed || children.back().get() != c.get();
      }
      return changed ? e.with_children(std::move(children)) : e;
    }
  }
}

}  // namespace

Expr substitute(const Expr& e, const Bindings& bindings) { return subst_rec(e, bindings); }

Expr rewrite_bottom_up(const Expr& e, const std::function<Expr(const Expr&)>& f) {
  Expr cur = e;
  if (!e->children.empty()) {
    std::vector<Expr> children;
    children.reserve(e->children.size());
    bool changed = false;
    for (const auto& c : e->children) {
      children.push_back(rewrite_bottom_up(c, f));
      changed = changed || children.back().get() != c.get();
    }
    if (changed) cur = e.with_children(std::move(children));
  }
  Expr r = f(cur);
  return r ? r : cur;
}

bool is_true_literal(const Expr& e) {
  return e && e.kind() == ExprKind::Literal && std::holds_alternative<bool>(e->literal) &&
         std::get<bool>(e->literal);
}

bool is_false_literal(const Expr& e) {
  return e && e.kind() == ExprKind::Literal && std::holds_alternative<bool>(e->literal) &&
         !std::get<bool>(e->literal);
}

Expr make_and(Expr a, Expr b) {
  if (is_true_literal(a)) return b;
  if (is_true_literal(b)) return a;
  if (is_false_literal(a) || is_false_literal(b)) return Expr::boolean(false);
  return Expr::binary(BinaryOp::And, std::move(a), std::move(b));
}

Expr make_or(Expr a, Expr b) {
  if (is_false_literal(a)) return b;
  if (is_false_literal(b)) return a;
  if (is_true_literal(a) || is_true_literal(b)) return Expr::boolean(true);
  return Expr::binary(BinaryOp::Or, std::move(a), std::move(b));
}

Expr make_not(Expr a) {
  if (is_true_literal(a)) return Expr::boolean(false);
  if (is_false_literal(a)) return Expr::boolean(true);
  return Expr::unary(UnaryOp::Not, std::move(a));
}

}  // namespace synthe
