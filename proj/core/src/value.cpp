#include "synthe/value.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace synthe {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t bigint_hash(const BigInt& b) {
  if (b >= std::numeric_limits<std::int64_t>::min() && b <= std::numeric_limits<std::int64_t>::max())
    return std::hash<std::int64_t>{}(static_cast<std::int64_t>(b));
  return std::hash<std::string>{}(b.str());
}

}  // namespace

Value Value::boolean(bool b) {
  Value v;
  v.rep_ = b;
  return v;
}

Value Value::int32(std::int32_t i) {
  Value v;
  v.rep_ = i;
  return v;
}

Value Value::bigint(BigInt b) {
  Value v;
  v.rep_ = std::move(b);
  return v;
}

Value Value::tuple(std::vector<Value> elems) {
  auto c = std::make_shared<Composite>();
  std::size_t h = 0x7475706c65ULL, size = 0;
  for (const auto& e : elems) {
    h = mix(h, e.hash());
    size += value_size(e);
  }
  c->elems = std::move(elems);
  c->hash = h;
  c->size = size;
  Value v;
  v.rep_ = std::shared_ptr<const Composite>(std::move(c));
  return v;
}

Value Value::adt(Symbol ctor, std::vector<Value> fields) {
  auto c = std::make_shared<Composite>();
  std::size_t h = mix(0xad7ULL, ctor.hash()), size = 1;
  for (const auto& e : fields) {
    h = mix(h, e.hash());
    size += value_size(e);
  }
  c->ctor = ctor;
  c->elems = std::move(fields);
  c->hash = h;
  c->size = size;
  Value v;
  v.rep_ = std::shared_ptr<const Composite>(std::move(c));
  return v;
}

bool Value::is_tuple() const {
  auto p = std::get_if<std::shared_ptr<const Composite>>(&rep_);
  return p && (*p)->ctor.empty();
}

bool Value::is_adt() const {
  auto p = std::get_if<std::shared_ptr<const Composite>>(&rep_);
  return p && !(*p)->ctor.empty();
}

Symbol Value::ctor() const { return std::get<std::shared_ptr<const Composite>>(rep_)->ctor; }

const std::vector<Value>& Value::elems() const {
  return std::get<std::shared_ptr<const Composite>>(rep_)->elems;
}

std::size_t Value::composite_size() const {
  auto p = std::get_if<std::shared_ptr<const Composite>>(&rep_);
  return p ? (*p)->size : 0;
}

std::size_t Value::hash() const {
  switch (rep_.index()) {
    case 0: return 0;
    case 1: return std::get<bool>(rep_) ? 0xb1 : 0xb0;
    case 2: return mix(0x12, std::hash<std::int32_t>{}(std::get<std::int32_t>(rep_)));
    case 3: return mix(0x13, bigint_hash(std::get<BigInt>(rep_)));
    default: return std::get<std::shared_ptr<const Composite>>(rep_)->hash;
  }
}

std::string Value::str() const {
  switch (rep_.index()) {
    case 0: return "<none>";
    case 1: return std::get<bool>(rep_) ? "true" : "false";
    case 2: return std::to_string(std::get<std::int32_t>(rep_));
    case 3: return std::get<BigInt>(rep_).str();
    default: {
      const Composite& c = *std::get<std::shared_ptr<const Composite>>(rep_);
      std::string s = c.ctor.empty() ? "(" : c.ctor.str() + "(";
      for (std::size_t i = 0; i < c.elems.size(); ++i) {
        if (i) s += ", ";
        s += c.elems[i].str();
      }
      return s + ")";
    }
  }
}

bool operator==(const Value& a, const Value& b) {
  if (a.rep_.index() != b.rep_.index()) return false;
  switch (a.rep_.index()) {
    case 0: return true;
    case 1: return std::get<bool>(a.rep_) == std::get<bool>(b.rep_);
    case 2: return std::get<std::int32_t>(a.rep_) == std::get<std::int32_t>(b.rep_);
    case 3: return std::get<BigInt>(a.rep_) == std::get<BigInt>(b.rep_);
    default: {
      const auto& x = std::get<std::shared_ptr<const Composite>>(a.rep_);
      const auto& y = std::get<std::shared_ptr<const Composite>>(b.rep_);
      if (x == y) return true;
      if (x->hash != y->hash || x->ctor != y->ctor || x->elems.size() != y->elems.size()) return false;
      for (std::size_t i = 0; i < x->elems.size(); ++i)
        if (!(x->elems[i] == y->elems[i])) return false;
      return true;
    }
  }
}

std::size_t InputHash::operator()(const Input& in) const {
  std::size_t h = in.size();
  for (const auto& v : in) h = mix(h, v.hash());
  return h;
}

std::string input_str(const Input& in) {
  std::string s = "(";
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (i) s += ", ";
    s += in[i].str();
  }
  return s + ")";
}

std::size_t value_size(const Value& v) {
  if (v.is_bool()) return 1;
  if (v.is_int32()) {
    std::int64_t x = v.as_int32();
    return static_cast<std::size_t>(x < 0 ? -x : x) + 1;
  }
  if (v.is_bigint()) {
    BigInt a = abs(v.as_bigint());
    if (a > 1000000000) return 1000000001;
    return static_cast<std::size_t>(a) + 1;
  }
  return v.composite_size();
}

namespace {

int compare_ints(const BigInt& x, const BigInt& y) {
  if (x == y) return 0;
  bool nx = x < 0, ny = y < 0;
  if (nx != ny) return nx ? 1 : -1;
  return abs(x) < abs(y) ? -1 : 1;
}

int compare_structural(const Program& p, const Value& a, const Value& b) {
  if (a.is_bool()) return a.as_bool() == b.as_bool() ? 0 : (!a.as_bool() ? -1 : 1);
  if (a.is_int32()) return compare_ints(a.as_int32(), b.as_int32());
  if (a.is_bigint()) return compare_ints(a.as_bigint(), b.as_bigint());
  if (a.is_adt() && a.ctor() != b.ctor()) {
    auto ra = p.find_ctor(a.ctor()), rb = p.find_ctor(b.ctor());
    std::size_t ia = ra ? ra->index : 0, ib = rb ? rb->index : 0;
    if (ia != ib) return ia < ib ? -1 : 1;
    return a.ctor() < b.ctor() ? -1 : 1;
  }
  const auto& xs = a.elems();
  const auto& ys = b.elems();
  for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i)
    if (int c = compare_values(p, xs[i], ys[i])) return c;
  if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
  return 0;
}

}  // namespace

int compare_values(const Program& p, const Value& a, const Value& b) {
  std::size_t sa = value_size(a), sb = value_size(b);
  if (sa != sb) return sa < sb ? -1 : 1;
  return compare_structural(p, a, b);
}

Expr value_to_expr(const Program& p, const Value& v, const Type& t) {
  if (v.is_bool()) return Expr::boolean(v.as_bool());
  if (v.is_int32()) return Expr::int32(v.as_int32());
  if (v.is_bigint()) return Expr::bigint(v.as_bigint());
  if (v.is_tuple()) {
    std::vector<Expr> el;
    for (std::size_t i = 0; i < v.elems().size(); ++i) el.push_back(value_to_expr(p, v.elems()[i], t.args()[i]));
    return Expr::tuple(std::move(el));
  }
  auto ref = p.find_ctor(v.ctor());
  if (!ref) throw std::invalid_argument("unknown constructor " + v.ctor().str());
  auto fields = p.ctor_field_types(*ref, t);
  std::vector<Expr> el;
  for (std::size_t i = 0; i < v.elems().size(); ++i) el.push_back(value_to_expr(p, v.elems()[i], fields[i]));
  return Expr::ctor(v.ctor(), std::move(el), t);
}

Value expr_to_value(const Program& p, const Expr& e) {
  const ExprNode& n = *e;
  switch (n.kind) {
    case ExprKind::Literal:
      if (auto b = std::get_if<bool>(&n.literal)) return Value::boolean(*b);
      if (auto i = std::get_if<std::int32_t>(&n.literal)) return Value::int32(*i);
      if (n.type.known() && n.type.kind() == Type::Kind::Int)
        return Value::int32(static_cast<std::int32_t>(std::get<BigInt>(n.literal)));
      return Value::bigint(std::get<BigInt>(n.literal));
    case ExprKind::Tuple: {
      std::vector<Value> el;
      for (const auto& c : n.children) el.push_back(expr_to_value(p, c));
      return Value::tuple(std::move(el));
    }
    case ExprKind::Ctor: {
      std::vector<Value> el;
      for (const auto& c : n.children) el.push_back(expr_to_value(p, c));
      return Value::adt(n.name, std::move(el));
    }
    case ExprKind::Unary:
      if (n.unary_op() == UnaryOp::Neg) {
        Value v = expr_to_value(p, n.children[0]);
        if (v.is_int32()) return Value::int32(-v.as_int32());
        if (v.is_bigint()) return Value::bigint(-v.as_bigint());
      }
      break;
    default:
      break;
  }
  throw std::invalid_argument("not a literal value: expression kind " +
                              std::to_string(static_cast<int>(n.kind)));
}

ValueDomain::ValueDomain(const Program& p, int bound) : prog_(p), bound_(bound) {}

const std::vector<Value>& ValueDomain::values(const Type& t) { return values_at_depth(t, bound_); }

const std::vector<Value>& ValueDomain::values_at_depth(const Type& t, int depth) {
  auto key = std::make_pair(t, depth);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  std::vector<Value> out;
  switch (t.kind()) {
    case Type::Kind::Bool:
      out = {Value::boolean(false), Value::boolean(true)};
      break;
    case Type::Kind::Int:
      for (int i = 0; i <= bound_; ++i) {
        out.push_back(Value::int32(i));
        if (i) out.push_back(Value::int32(-i));
      }
      break;
    case Type::Kind::BigInt:
      for (int i = 0; i <= bound_; ++i) {
        out.push_back(Value::bigint(i));
        if (i) out.push_back(Value::bigint(-i));
      }
      break;
    case Type::Kind::Tuple: {
      std::vector<std::vector<Value>> comps;
      for (const auto& a : t.args()) comps.push_back(values_at_depth(a, depth));
      std::vector<Value> cur;
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == comps.size()) {
          out.push_back(Value::tuple(cur));
          return;
        }
        for (const auto& v : comps[i]) {
          cur.push_back(v);
          rec(i + 1);
          cur.pop_back();
        }
      };
      rec(0);
      break;
    }
    case Type::Kind::Adt: {
      if (depth < 1) break;
      const AdtDef* adt = prog_.find_adt(t.name());
      if (!adt) throw std::invalid_argument("unknown ADT " + t.name().str());
      for (std::size_t ci = 0; ci < adt->ctors.size(); ++ci) {
        CtorRef ref{adt, &adt->ctors[ci], ci};
        auto fields = prog_.ctor_field_types(ref, t);
        std::vector<std::vector<Value>> comps;
        for (const auto& f : fields) comps.push_back(values_at_depth(f, depth - 1));
        std::vector<Value> cur;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
          if (i == comps.size()) {
            out.push_back(Value::adt(adt->ctors[ci].name, cur));
            return;
          }
          for (const auto& v : comps[i]) {
            cur.push_back(v);
            rec(i + 1);
            cur.pop_back();
          }
        };
        rec(0);
      }
      break;
    }
    default:
      throw std::invalid_argument("cannot enumerate values of type " + t.str());
  }
  // Scalars ignore depth; only ADT nesting consumes it.
  std::stable_sort(out.begin(), out.end(),
                   [&](const Value& a, const Value& b) { return compare_values(prog_, a, b) < 0; });
  return cache_.emplace(key, std::move(out)).first->second;
}

void ValueDomain::for_each_input(const std::vector<Type>& types,
                                 const std::function<bool(const Input&)>& f) {
  const std::size_t n = types.size();
  if (n == 0) {
    f({});
    return;
  }
  // Per component: values grouped into runs of equal size.
  struct Bucket {
    std::size_t size;
    std::size_t begin, end;
  };
  std::vector<const std::vector<Value>*> doms;
  std::vector<std::vector<Bucket>> buckets(n);
  for (std::size_t i = 0; i < n; ++i) {
    doms.push_back(&values(types[i]));
    const auto& d = *doms.back();
    if (d.empty()) return;
    for (std::size_t j = 0; j < d.size();) {
      std::size_t s = value_size(d[j]), k = j;
      while (k < d.size() && value_size(d[k]) == s) ++k;
      buckets[i].push_back({s, j, k});
      j = k;
    }
  }
  std::vector<std::size_t> min_suffix(n + 1, 0), max_suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    min_suffix[i] = min_suffix[i + 1] + buckets[i].front().size;
    max_suffix[i] = max_suffix[i + 1] + buckets[i].back().size;
  }
  Input cur(n);
  bool stop = false;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t remaining) {
    if (stop) return;
    if (i == n) {
      if (remaining == 0 && !f(cur)) stop = true;
      return;
    }
    for (const auto& b : buckets[i]) {
      if (b.size + min_suffix[i + 1] > remaining) break;
      if (b.size + max_suffix[i + 1] < remaining) continue;
      for (std::size_t j = b.begin; j < b.end && !stop; ++j) {
        cur[i] = (*doms[i])[j];
        rec(i + 1, remaining - b.size);
      }
      if (stop) return;
    }
  };
  for (std::size_t total = min_suffix[0]; total <= max_suffix[0] && !stop; ++total) rec(0, total);
}

}  // namespace synthe
