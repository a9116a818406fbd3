#include "synthe/grammar.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "synthe/printer.hpp"

namespace synthe {

Attribute Attribute::sized(std::size_t s) {
  Attribute a;
  a.kind = Kind::Sized;
  a.size = s;
  return a;
}

Attribute Attribute::ground() {
  Attribute a;
  a.kind = Kind::Ground;
  return a;
}

Attribute Attribute::non_ground() {
  Attribute a;
  a.kind = Kind::NonGround;
  return a;
}

Attribute Attribute::no_operator(BinaryOp op) {
  Attribute a;
  a.kind = Kind::NoOperator;
  a.op = op;
  return a;
}

Attribute Attribute::non_neutral(Expr literal) {
  Attribute a;
  a.kind = Kind::NonNeutral;
  a.literal = std::move(literal);
  return a;
}

std::string Attribute::str() const {
  switch (kind) {
    case Kind::Sized: return "|" + std::to_string(size) + "|";
    case Kind::Ground: return "G";
    case Kind::NonGround: return "¬G";
    case Kind::NoOperator: return std::string("¬") + op_symbol(op);
    case Kind::NonNeutral: return "¬" + print_expr(literal);
  }
  return "";
}

int compare_attributes(const Attribute& a, const Attribute& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  switch (a.kind) {
    case Attribute::Kind::Sized: return a.size < b.size ? -1 : a.size > b.size ? 1 : 0;
    case Attribute::Kind::NoOperator: return a.op < b.op ? -1 : a.op > b.op ? 1 : 0;
    case Attribute::Kind::NonNeutral: return compare_terms(a.literal, b.literal);
    default: return 0;
  }
}

Nonterminal::Nonterminal(Type t, std::vector<Attribute> as) : type(std::move(t)) {
  for (auto& a : as) *this = with(a);
}

Nonterminal Nonterminal::with(const Attribute& a) const {
  Nonterminal n = *this;
  if (a.kind == Attribute::Kind::Sized) n = n.without(Attribute::Kind::Sized);
  if (a.kind == Attribute::Kind::Ground) n = n.without(Attribute::Kind::NonGround);
  if (a.kind == Attribute::Kind::NonGround) n = n.without(Attribute::Kind::Ground);
  auto it = std::lower_bound(n.attrs.begin(), n.attrs.end(), a,
                             [](const Attribute& x, const Attribute& y) { return compare_attributes(x, y) < 0; });
  if (it != n.attrs.end() && compare_attributes(*it, a) == 0) return n;
  n.attrs.insert(it, a);
  return n;
}

Nonterminal Nonterminal::without(Attribute::Kind k) const {
  Nonterminal n = *this;
  std::erase_if(n.attrs, [&](const Attribute& a) { return a.kind == k; });
  return n;
}

std::optional<std::size_t> Nonterminal::size() const {
  for (const auto& a : attrs)
    if (a.kind == Attribute::Kind::Sized) return a.size;
  return std::nullopt;
}

bool Nonterminal::has(Attribute::Kind k) const {
  return std::any_of(attrs.begin(), attrs.end(), [&](const Attribute& a) { return a.kind == k; });
}

bool Nonterminal::forbids(BinaryOp op) const {
  return std::any_of(attrs.begin(), attrs.end(),
                     [&](const Attribute& a) { return a.kind == Attribute::Kind::NoOperator && a.op == op; });
}

bool Nonterminal::excludes_literal(const Expr& lit) const {
  return std::any_of(attrs.begin(), attrs.end(), [&](const Attribute& a) {
    return a.kind == Attribute::Kind::NonNeutral && expr_equal(a.literal, lit);
  });
}

std::string Nonterminal::str() const {
  std::string s = type.str();
  if (attrs.empty()) return s;
  s += "{";
  for (std::size_t i = 0; i < attrs.size(); ++i) s += (i ? "," : "") + attrs[i].str();
  return s + "}";
}

bool operator<(const Nonterminal& a, const Nonterminal& b) {
  if (a.type != b.type) return a.type < b.type;
  return std::lexicographical_compare(a.attrs.begin(), a.attrs.end(), b.attrs.begin(), b.attrs.end(),
                                      [](const Attribute& x, const Attribute& y) {
                                        return compare_attributes(x, y) < 0;
                                      });
}

bool operator==(const Nonterminal& a, const Nonterminal& b) { return !(a < b) && !(b < a); }

std::string Label::str() const {
  switch (kind) {
    case Kind::Literal: return print_expr(literal);
    case Kind::Variable:
    case Kind::Call:
    case Kind::Ctor: return name.str();
    case Kind::Binary: return op_symbol(binary);
    case Kind::Unary: return op_symbol(unary);
    case Kind::Tuple: return "tuple";
  }
  return "";
}

Expr Production::build(std::vector<Expr> args) const {
  switch (label.kind) {
    case Label::Kind::Literal: return label.literal;
    case Label::Kind::Variable: return Expr::var(label.name, head.type);
    case Label::Kind::Binary: return Expr::binary(label.binary, std::move(args[0]), std::move(args[1]));
    case Label::Kind::Unary: return Expr::unary(label.unary, std::move(args[0]));
    case Label::Kind::Call: return Expr::call(label.name, {}, std::move(args), head.type);
    case Label::Kind::Ctor: return Expr::ctor(label.name, std::move(args), head.type);
    case Label::Kind::Tuple: return Expr::tuple(std::move(args));
  }
  return {};
}

std::string Production::str() const {
  std::string s = label.str();
  if (operands.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < operands.size(); ++i) s += (i ? ", " : "") + operands[i].str();
  return s + ")";
}

struct Grammar::Memo {
  struct Entry {
    std::once_flag once;
    std::vector<Expr> terms;
  };
  std::mutex mu;
  std::map<Nonterminal, std::shared_ptr<Entry>> table;

  std::shared_ptr<Entry> get(const Nonterminal& nt) {
    std::lock_guard<std::mutex> lock(mu);
    auto& e = table[nt];
    if (!e) e = std::make_shared<Entry>();
    return e;
  }
};

Grammar::Grammar(Type start, std::map<Type, std::vector<Production>> raw)
    : start_(std::move(start)), raw_(std::move(raw)), memo_(std::make_shared<Memo>()) {}

const std::vector<Production>& Grammar::productions(const Type& t) const {
  static const std::vector<Production> none;
  auto it = raw_.find(t);
  return it == raw_.end() ? none : it->second;
}

// ---------------------------------------------------------------------------

namespace {

Expr numeric_literal(long v, const Type& t) {
  return t.kind() == Type::Kind::Int ? Expr::int32(static_cast<std::int32_t>(v)) : Expr::bigint(v);
}

Production make_production(const Type& head, Label label, std::vector<Type> operand_types) {
  Production p;
  p.head = Nonterminal(head);
  p.label = std::move(label);
  for (auto& t : operand_types) p.operands.emplace_back(std::move(t));
  return p;
}

Production binary(const Type& head, BinaryOp op, const Type& operand) {
  Label l;
  l.kind = Label::Kind::Binary;
  l.binary = op;
  return make_production(head, l, {operand, operand});
}

bool contains_choose(const Expr& e) {
  if (!e) return false;
  if (e.kind() == ExprKind::Choose) return true;
  return std::any_of(e->children.begin(), e->children.end(), contains_choose);
}

/// Functions whose evaluation may reach `fn` or an unsolved choose.
std::set<Symbol> callers_of(const Program& p, Symbol fn) {
  std::set<Symbol> out{fn};
  for (const auto& f : p.functions())
    if (contains_choose(f.body)) out.insert(f.name);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& f : p.functions()) {
      if (out.count(f.name) || !f.body) continue;
      for (auto g : out) {
        if (mentions_call_to(f.body, g)) {
          out.insert(f.name);
          changed = true;
          break;
        }
      }
    }
  }
  return out;
}

void collect_literals(const Expr& e, std::vector<Expr>& out) {
  if (!e) return;
  if (e.kind() == ExprKind::Literal && e.type().known() && e.type().is_numeric()) {
    bool dup = std::any_of(out.begin(), out.end(), [&](const Expr& x) { return expr_equal(x, e); });
    if (!dup) out.push_back(e.with_type(e.type()));
  }
  for (const auto& c : e->children) collect_literals(c, out);
}

}  // namespace

Grammar base_grammar(const SynthesisProblem& prob, const Program& p, GrammarOptions opts) {
  std::vector<Variable> scope = prob.scope();
  std::set<Symbol> excluded = callers_of(p, prob.function);
  std::vector<Expr> spec_literals;
  collect_literals(prob.spec, spec_literals);

  std::vector<Type> numeric_scope;
  for (const auto& v : scope)
    if (v.type.is_numeric() && std::find(numeric_scope.begin(), numeric_scope.end(), v.type) == numeric_scope.end())
      numeric_scope.push_back(v.type);

  std::map<Type, std::vector<Production>> raw;
  std::deque<Type> work{prob.output_type()};
  std::set<Type> seen;
  while (!work.empty()) {
    Type t = work.front();
    work.pop_front();
    if (!seen.insert(t).second) continue;
    std::vector<Production>& out = raw[t];
    auto literal = [&](Expr e) {
      for (const auto& q : out)
        if (q.label.kind == Label::Kind::Literal && expr_equal(q.label.literal, e)) return;
      Label l;
      l.kind = Label::Kind::Literal;
      l.literal = std::move(e);
      out.push_back(make_production(t, l, {}));
    };

    if (t.kind() == Type::Kind::Bool) {
      literal(Expr::boolean(true));
      literal(Expr::boolean(false));
    } else if (t.is_numeric()) {
      literal(numeric_literal(0, t));
      literal(numeric_literal(1, t));
      for (const auto& e : spec_literals) {
        const BigInt* v = std::get_if<BigInt>(&e->literal);
        if (v && e.type() == t) literal(e);
        if (auto i = std::get_if<std::int32_t>(&e->literal); i && e.type() == t) literal(e);
      }
    }
    for (const auto& v : scope) {
      if (v.type != t) continue;
      Label l;
      l.kind = Label::Kind::Variable;
      l.name = v.name;
      out.push_back(make_production(t, l, {}));
    }
    if (t.kind() == Type::Kind::Adt) {
      const AdtDef* adt = p.find_adt(t.name());
      for (std::size_t i = 0; i < adt->ctors.size(); ++i) {
        Label l;
        l.kind = Label::Kind::Ctor;
        l.name = adt->ctors[i].name;
        out.push_back(make_production(t, l, p.ctor_field_types(CtorRef{adt, &adt->ctors[i], i}, t)));
      }
    }
    if (t.kind() == Type::Kind::Tuple) {
      Label l;
      l.kind = Label::Kind::Tuple;
      out.push_back(make_production(t, l, std::vector<Type>(t.args().begin(), t.args().end())));
    }
    if (t.is_numeric()) {
      Production add = binary(t, BinaryOp::Add, t);
      add.commutative = add.associative = true;
      add.neutral = {{0, numeric_literal(0, t)}, {1, numeric_literal(0, t)}};
      out.push_back(add);
      Production sub = binary(t, BinaryOp::Sub, t);
      sub.neutral = {{1, numeric_literal(0, t)}};
      out.push_back(sub);
      if (opts.multiplication) {
        Production mul = binary(t, BinaryOp::Mul, t);
        mul.commutative = mul.associative = true;
        for (std::size_t pos : {0u, 1u}) {
          mul.neutral.emplace_back(pos, numeric_literal(1, t));
          mul.neutral.emplace_back(pos, numeric_literal(0, t));
        }
        out.push_back(mul);
      }
    }
    if (t.kind() == Type::Kind::Bool) {
      Label n;
      n.kind = Label::Kind::Unary;
      n.unary = UnaryOp::Not;
      out.push_back(make_production(t, n, {t}));
      Production conj = binary(t, BinaryOp::And, t);
      conj.commutative = conj.associative = true;
      conj.neutral = {{0, Expr::boolean(true)}, {1, Expr::boolean(true)}};
      out.push_back(conj);
      Production disj = binary(t, BinaryOp::Or, t);
      disj.commutative = disj.associative = true;
      disj.neutral = {{0, Expr::boolean(false)}, {1, Expr::boolean(false)}};
      out.push_back(disj);
      for (const auto& nt : numeric_scope) {
        Production eq = binary(t, BinaryOp::Eq, nt);
        eq.commutative = true;
        out.push_back(eq);
        out.push_back(binary(t, BinaryOp::Lt, nt));
        out.push_back(binary(t, BinaryOp::Le, nt));
      }
    }
    for (const auto& f : p.functions()) {
      if (excluded.count(f.name) || f.is_polymorphic() || f.return_type != t) continue;
      Label l;
      l.kind = Label::Kind::Call;
      l.name = f.name;
      std::vector<Type> ps;
      for (const auto& prm : f.params) ps.push_back(prm.type);
      out.push_back(make_production(t, l, ps));
    }
    for (const auto& q : out)
      for (const auto& o : q.operands) work.push_back(o.type);
  }
  return Grammar(prob.output_type(), std::move(raw));
}

namespace {

/// Compositions of `total` into `parts` positive summands, lexicographic.
void partitions(std::size_t total, std::size_t parts, bool nonincreasing, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() + 1 == parts) {
    if (total >= 1 && (!nonincreasing || cur.empty() || total <= cur.back())) {
      cur.push_back(total);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  std::size_t rest = parts - cur.size() - 1;
  for (std::size_t s = 1; s + rest <= total; ++s) {
    if (nonincreasing && !cur.empty() && s > cur.back()) break;
    cur.push_back(s);
    partitions(total - s, parts, nonincreasing, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Production> expand_productions(const Nonterminal& nt, const Grammar& g) {
  auto size = nt.size();
  if (!size) throw std::invalid_argument("expand_productions needs a sized nonterminal: " + nt.str());
  bool ground = nt.has(Attribute::Kind::Ground);
  bool non_ground = nt.has(Attribute::Kind::NonGround);
  std::vector<Production> out;
  for (const Production& raw : g.productions(nt.type)) {
    std::size_t arity = raw.operands.size();
    // Ground / NonGround
    std::vector<std::vector<Nonterminal>> variants;
    if (ground) {
      if (raw.label.kind == Label::Kind::Variable) continue;
      std::vector<Nonterminal> ops;
      for (const auto& o : raw.operands) ops.push_back(o.with(Attribute::ground()));
      variants.push_back(std::move(ops));
    } else if (non_ground) {
      if (raw.label.is_constant(arity)) continue;
      if (arity == 0) variants.emplace_back();
      for (std::size_t mask = 0; arity > 0 && mask + 1 < (std::size_t{1} << arity); ++mask) {
        std::vector<Nonterminal> ops;
        for (std::size_t i = 0; i < arity; ++i)
          ops.push_back(raw.operands[i].with((mask >> (arity - 1 - i)) & 1 ? Attribute::ground()
                                                                            : Attribute::non_ground()));
        variants.push_back(std::move(ops));
      }
    } else {
      variants.push_back(raw.operands);
    }
    // NoOperator
    if (raw.label.kind == Label::Kind::Binary && nt.forbids(raw.label.binary)) continue;
    if (raw.associative)
      for (auto& v : variants) v[1] = v[1].with(Attribute::no_operator(raw.label.binary));
    // NonNeutral
    if (raw.label.kind == Label::Kind::Literal && nt.excludes_literal(raw.label.literal)) continue;
    for (const auto& [pos, lit] : raw.neutral)
      for (auto& v : variants) v[pos] = v[pos].with(Attribute::non_neutral(lit));
    // Sized
    if (arity == 0) {
      if (raw.cost != *size) continue;
      Production q = raw;
      q.head = nt;
      out.push_back(std::move(q));
      continue;
    }
    if (*size < raw.cost + arity) continue;
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    partitions(*size - raw.cost, arity, raw.commutative, cur, parts);
    for (const auto& part : parts) {
      for (const auto& v : variants) {
        Production q = raw;
        q.head = nt;
        q.operands = v;
        for (std::size_t i = 0; i < arity; ++i) q.operands[i] = q.operands[i].with(Attribute::sized(part[i]));
        out.push_back(std::move(q));
      }
    }
  }
  return out;
}

const std::vector<Expr>& unfold_nonterminal(const Grammar& g, const Nonterminal& nt) {
  auto entry = g.memo_->get(nt);
  std::call_once(entry->once, [&] {
    std::vector<Expr>& terms = entry->terms;
    for (const Production& prod : expand_productions(nt, g)) {
      std::size_t arity = prod.operands.size();
      if (arity == 0) {
        terms.push_back(prod.build({}));
        continue;
      }
      std::vector<const std::vector<Expr>*> lists;
      bool empty = false;
      for (const auto& o : prod.operands) {
        lists.push_back(&unfold_nonterminal(g, o));
        if (lists.back()->empty()) empty = true;
      }
      if (empty) continue;
      bool tie = prod.commutative && arity == 2 && prod.operands[0].size() == prod.operands[1].size();
      std::vector<std::size_t> idx(arity, 0);
      while (true) {
        if (!tie || compare_terms((*lists[0])[idx[0]], (*lists[1])[idx[1]]) <= 0) {
          std::vector<Expr> args;
          args.reserve(arity);
          for (std::size_t i = 0; i < arity; ++i) args.push_back((*lists[i])[idx[i]]);
          terms.push_back(prod.build(std::move(args)));
        }
        std::size_t k = arity;
        while (k > 0 && ++idx[k - 1] == lists[k - 1]->size()) idx[--k] = 0;
        if (k == 0) break;
      }
    }
  });
  return entry->terms;
}

std::vector<Expr> unfold(const Grammar& g, std::size_t n, const Nonterminal& top) {
  if (n == 0) return {};
  Nonterminal nt = top;
  if (!nt.has(Attribute::Kind::Ground) && !nt.has(Attribute::Kind::NonGround)) nt = nt.with(Attribute::non_ground());
  return unfold_nonterminal(g, nt.with(Attribute::sized(n)));
}

std::vector<Expr> unfold(const Grammar& g, std::size_t n) { return unfold(g, n, Nonterminal(g.start())); }

std::string dump_grammar(const Grammar& g, std::size_t n) {
  std::ostringstream out;
  out << "size\tkind\tnonterminal\tdetail\n";
  Nonterminal top = Nonterminal(g.start()).with(Attribute::non_ground());
  for (std::size_t s = 1; s <= n; ++s) {
    Nonterminal nt = top.with(Attribute::sized(s));
    for (const auto& prod : expand_productions(nt, g)) out << s << "\tproduction\t" << nt.str() << "\t" << prod.str() << "\n";
    out << s << "\tterms\t" << nt.str() << "\t" << unfold_nonterminal(g, nt).size() << "\n";
  }
  return out.str();
}

}  // namespace synthe
