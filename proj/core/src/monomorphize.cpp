#include "synthe/monomorphize.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace synthe {

namespace {

std::string mangle_type(const Type& t) {
  switch (t.kind()) {
    case Type::Kind::Bool: return "Boolean";
    case Type::Kind::Int: return "Int";
    case Type::Kind::BigInt: return "BigInt";
    case Type::Kind::Tuple: {
      std::string s = "Tuple" + std::to_string(t.args().size());
      for (const auto& a : t.args()) s += "_" + mangle_type(a);
      return s;
    }
    case Type::Kind::Adt: {
      std::string s = t.name().str();
      for (const auto& a : t.args()) s += "_" + mangle_type(a);
      return s;
    }
    default:
      throw MonomorphizeError("cannot mangle non-ground type " + t.str());
  }
}

Pattern subst_pattern(const Pattern& p, const TypeSubst& s) {
  Pattern q = p;
  if (q.type.known()) q.type = substitute_type(q.type, s);
  for (auto& x : q.subs) x = subst_pattern(x, s);
  return q;
}

class Mono {
 public:
  explicit Mono(const Program& p) : prog_(p) {}

  Symbol request(const FunDef& f, const std::vector<Type>& targs) {
    if (!f.is_polymorphic()) return f.name;
    for (const auto& t : targs)
      if (!t.is_ground())
        throw MonomorphizeError("missing instantiation for a type argument of '" + f.name.str() + "'");
    auto key = std::make_pair(f.name, targs);
    auto it = names_.find(key);
    if (it != names_.end()) return it->second;
    Symbol name(mangle(f.name, targs));
    names_.emplace(key, name);
    queue_.push_back({&f, targs, name});
    return name;
  }

  std::vector<FunDef> drain() {
    std::vector<FunDef> out;
    while (!queue_.empty()) {
      auto job = queue_.front();
      queue_.pop_front();
      TypeSubst s;
      for (std::size_t i = 0; i < job.fn->type_params.size(); ++i) s[job.fn->type_params[i]] = job.targs[i];
      out.push_back(instantiate(*job.fn, s, job.name));
    }
    return out;
  }

  FunDef instantiate(const FunDef& f, const TypeSubst& s, Symbol name) {
    FunDef g = f;
    g.name = name;
    g.type_params.clear();
    for (auto& p : g.params) p.type = substitute_type(p.type, s);
    g.return_type = substitute_type(g.return_type, s);
    if (g.precondition) g.precondition = rewrite(g.precondition, s);
    g.body = rewrite(g.body, s);
    if (g.postcondition) g.postcondition->predicate = rewrite(g.postcondition->predicate, s);
    return g;
  }

 private:
  struct Job {
    const FunDef* fn;
    std::vector<Type> targs;
    Symbol name;
  };

  const Program& prog_;
  std::map<std::pair<Symbol, std::vector<Type>>, Symbol> names_;
  std::deque<Job> queue_;

  Expr rewrite(const Expr& e, const TypeSubst& s) {
    const ExprNode& n = *e;
    std::vector<Expr> kids;
    for (const auto& c : n.children) kids.push_back(rewrite(c, s));
    Expr r = kids.empty() ? e : e.with_children(std::move(kids));
    if (n.type.known()) r = r.with_type(substitute_type(n.type, s));
    if (!n.patterns.empty()) {
      std::vector<Pattern> ps;
      for (const auto& p : n.patterns) ps.push_back(subst_pattern(p, s));
      r = r.with_patterns(std::move(ps));
    }
    if (!n.binders.empty()) {
      auto bs = n.binders;
      for (auto& b : bs)
        if (b.type.known()) b.type = substitute_type(b.type, s);
      r = r.with_binders(std::move(bs));
    }
    if (n.kind == ExprKind::Call) {
      const FunDef* callee = prog_.find_function(n.name);
      if (callee && callee->is_polymorphic()) {
        std::vector<Type> targs;
        for (const auto& t : n.type_args) targs.push_back(substitute_type(t, s));
        if (targs.size() != callee->type_params.size())
          throw MonomorphizeError("call to '" + n.name.str() + "' lacks type arguments; elaborate first");
        r = r.with_name(request(*callee, targs)).with_type_args({});
      } else if (!n.type_args.empty()) {
        r = r.with_type_args({});
      }
    }
    return r;
  }
};

}  // namespace

std::string mangle(Symbol fn, const std::vector<Type>& type_args) {
  std::string s = fn.str();
  for (const auto& t : type_args) s += "$" + mangle_type(t);
  return s;
}

Program monomorphize(const Program& p, const TypeSubst& inst) {
  Mono m(p);
  std::vector<FunDef> out;
  for (const auto& f : p.functions()) {
    if (f.is_polymorphic()) {
      std::vector<Type> targs;
      for (auto tp : f.type_params) {
        auto it = inst.find(tp);
        if (it == inst.end())
          throw MonomorphizeError("missing instantiation for type parameter '" + tp.str() + "' of '" +
                                  f.name.str() + "'");
        targs.push_back(it->second);
      }
      m.request(f, targs);
    } else {
      out.push_back(m.instantiate(f, {}, f.name));
    }
  }
  for (auto& g : m.drain()) out.push_back(std::move(g));
  // Instances come out in discovery order; keep the source order of their
  // originals so printing is stable.
  std::map<Symbol, std::size_t> order;
  for (std::size_t i = 0; i < p.functions().size(); ++i) order[p.functions()[i].name] = i;
  auto origin = [&](const FunDef& f) {
    std::string n = f.name.str();
    auto pos = n.find('$');
    return order[Symbol(pos == std::string::npos ? n : n.substr(0, pos))];
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const FunDef& a, const FunDef& b) { return origin(a) < origin(b); });
  return Program(p.adts(), std::move(out));
}

TypeSubst default_instantiation(const Program& p) {
  TypeSubst s;
  for (const auto& f : p.functions())
    for (auto tp : f.type_params) s[tp] = Type::int32();
  return s;
}

}  // namespace synthe
