#include "synthe/rules.hpp"

#include <algorithm>
#include <set>

#include "synthe/example_store.hpp"
#include "synthe/harness.hpp"
#include "synthe/printer.hpp"

namespace synthe {

namespace {

const Type* variable_type(const SynthesisProblem& prob, Symbol v) {
  for (const auto& x : prob.inputs)
    if (x.name == v) return &x.type;
  if (const PathConjunct* b = prob.pc.binding_of(v)) return &b->type;
  return nullptr;
}

/// Expression `e` and everything the path condition equates with it through
/// bindings.
bool same_subject(const Expr& a, const Expr& b, const PathCondition& pc) {
  if (expr_equal(a, b)) return true;
  auto bound = [&](const Expr& x) -> Expr {
    if (x.kind() != ExprKind::Var) return {};
    const PathConjunct* c = pc.binding_of(x->name);
    return c ? c->expr : Expr();
  };
  Expr ab = bound(a), bb = bound(b);
  return (ab && expr_equal(ab, b)) || (bb && expr_equal(a, bb)) || (ab && bb && expr_equal(ab, bb));
}

/// Constructor that the path condition fixes for `e`, if any.
std::optional<Symbol> fixed_ctor(const Expr& e, const PathCondition& pc) {
  for (const auto& c : pc.conjuncts) {
    if (c.kind != PathConjunct::Kind::Fact || c.expr.kind() != ExprKind::IsCtor) continue;
    if (same_subject(c.expr->children[0], e, pc)) return c.expr->name;
  }
  return std::nullopt;
}

bool is_literal_value(const Expr& e, long v) {
  if (e.kind() != ExprKind::Literal) return false;
  if (auto i = std::get_if<std::int32_t>(&e->literal)) return *i == v;
  if (auto b = std::get_if<BigInt>(&e->literal)) return *b == v;
  return false;
}

Expr numeric_literal(long v, const Type& t) {
  return t.kind() == Type::Kind::Int ? Expr::int32(static_cast<std::int32_t>(v)) : Expr::bigint(v);
}

/// Syntactic sign facts: `0 < i`, `1 <= i` (positive), `i < 0`, `i <= -1`
/// (negative).
int entailed_sign(const Expr& i, const PathCondition& pc) {
  for (const auto& c : pc.conjuncts) {
    if (c.kind != PathConjunct::Kind::Fact || c.expr.kind() != ExprKind::Binary) continue;
    BinaryOp op = c.expr->binary_op();
    const Expr& l = c.expr->children[0];
    const Expr& r = c.expr->children[1];
    if (op == BinaryOp::Lt) {
      if (is_literal_value(l, 0) && expr_equal(r, i)) return 1;
      if (expr_equal(l, i) && is_literal_value(r, 0)) return -1;
    } else if (op == BinaryOp::Le) {
      if (is_literal_value(l, 1) && expr_equal(r, i)) return 1;
      if (expr_equal(l, i) && is_literal_value(r, -1)) return -1;
    }
  }
  return 0;
}

}  // namespace

std::optional<RuleApplication> split_disjunction(const SynthesisProblem& prob) {
  if (!prob.spec || prob.spec.kind() != ExprKind::Binary || prob.spec->binary_op() != BinaryOp::Or) return std::nullopt;
  RuleApplication app;
  app.rule = "split_disjunction";
  app.fingerprint = app.rule;
  for (int i = 0; i < 2; ++i) {
    SynthesisProblem sub = prob;
    sub.spec = prob.spec->children[i];
    app.subproblems.push_back(std::move(sub));
  }
  app.recompose = [](const std::vector<Solution>& s) {
    Solution out;
    out.pre = make_or(s[0].pre ? s[0].pre : Expr::boolean(true), s[1].pre ? s[1].pre : Expr::boolean(true));
    if (!s[0].pre || is_true_literal(s[0].pre))
      out.term = s[0].term;
    else
      out.term = Expr::ite(s[0].pre, s[0].term, s[1].term);
    return out;
  };
  return app;
}

std::vector<Symbol> case_split_candidates(const SynthesisProblem& prob, const Program& p) {
  std::vector<Symbol> out;
  for (const auto& v : prob.scope()) {
    if (v.type.kind() != Type::Kind::Adt) continue;
    const AdtDef* adt = p.find_adt(v.type.name());
    if (!adt || adt->ctors.size() < 2) continue;
    if (fixed_ctor(Expr::var(v.name, v.type), prob.pc)) continue;
    out.push_back(v.name);
  }
  return out;
}

std::optional<RuleApplication> case_split_adt(const SynthesisProblem& prob, const Program& p, Symbol v) {
  const Type* vt = variable_type(prob, v);
  if (!vt || vt->kind() != Type::Kind::Adt) return std::nullopt;
  const AdtDef* adt = p.find_adt(vt->name());
  if (!adt || adt->ctors.size() < 2) return std::nullopt;
  Expr subject = Expr::var(v, *vt);
  if (fixed_ctor(subject, prob.pc)) return std::nullopt;

  // Binder stems per constructor field.
  std::vector<std::vector<std::string>> stems(adt->ctors.size());
  for (std::size_t c = 0; c < adt->ctors.size(); ++c) {
    for (const auto& f : adt->ctors[c].fields) {
      std::string s(1, f.name.str()[0]);
      if (std::find(stems[c].begin(), stems[c].end(), s) != stems[c].end()) s = f.name.str();
      stems[c].push_back(s);
    }
  }
  std::set<Symbol> taken = prob.names();
  int k = 0;
  for (;; ++k) {
    bool ok = true;
    for (const auto& ss : stems)
      for (const auto& s : ss) {
        std::string base = s + std::to_string(k);
        for (const std::string& n : {base, base + "_1", base + "_2"})
          if (taken.count(Symbol(n))) ok = false;
      }
    if (ok) break;
  }

  RuleApplication app;
  app.rule = "case_split";
  app.fingerprint = "case_split(" + v.str() + ")";
  std::vector<Pattern> patterns;
  for (std::size_t c = 0; c < adt->ctors.size(); ++c) {
    const CtorDef& cd = adt->ctors[c];
    auto fts = p.ctor_field_types(CtorRef{adt, &cd, c}, *vt);
    SynthesisProblem sub = prob;
    sub.pc = sub.pc.with(PathConjunct::fact(Expr::is_ctor(subject, cd.name)));
    std::vector<Pattern> subs;
    for (std::size_t i = 0; i < cd.fields.size(); ++i) {
      Symbol name(stems[c][i] + std::to_string(k));
      Expr sel = Expr::field(subject, cd.fields[i].name, fts[i]);
      sub.pc = sub.pc.with(PathConjunct::binding(name, fts[i], sel));
      if (fts[i].kind() == Type::Kind::Tuple) {
        std::vector<Pattern> parts;
        Expr whole = Expr::var(name, fts[i]);
        for (std::size_t j = 0; j < fts[i].args().size(); ++j) {
          Symbol part(name.str() + "_" + std::to_string(j + 1));
          sub.pc = sub.pc.with(
              PathConjunct::binding(part, fts[i].args()[j], Expr::tuple_select(whole, static_cast<int>(j + 1))));
          parts.push_back(Pattern::bind(part, fts[i].args()[j]));
        }
        subs.push_back(Pattern::bind_as(name, Pattern::tuple(std::move(parts), fts[i])));
      } else {
        subs.push_back(Pattern::bind(name, fts[i]));
      }
    }
    patterns.push_back(Pattern::constructor(cd.name, std::move(subs), *vt));
    app.subproblems.push_back(std::move(sub));
  }
  Type out_t = prob.output_type();
  app.recompose = [subject, patterns, adt, out_t](const std::vector<Solution>& s) {
    Solution out;
    std::vector<Expr> bodies;
    bool all_true = true;
    Expr pre = Expr::boolean(false);
    for (std::size_t c = 0; c < s.size(); ++c) {
      bodies.push_back(s[c].term);
      Expr pc = s[c].pre ? s[c].pre : Expr::boolean(true);
      if (!is_true_literal(pc)) all_true = false;
      pre = make_or(pre, make_and(Expr::is_ctor(subject, adt->ctors[c].name), pc));
    }
    out.pre = all_true ? Expr::boolean(true) : pre;
    out.term = Expr::match(subject, patterns, std::move(bodies), out_t);
    return out;
  };
  return app;
}

std::vector<Expr> args_smaller(const Expr& arg, const PathCondition& pc, const Program& p) {
  std::vector<Expr> out;
  const Type& t = arg.type();
  if (t.is_numeric()) {
    int sign = entailed_sign(arg, pc);
    if (sign > 0) out.push_back(Expr::binary(BinaryOp::Sub, arg, numeric_literal(1, t)));
    if (sign < 0) out.push_back(Expr::binary(BinaryOp::Add, arg, numeric_literal(1, t)));
    return out;
  }
  if (t.kind() != Type::Kind::Adt) return out;
  auto ctor = fixed_ctor(arg, pc);
  if (!ctor) return out;
  auto ref = p.find_ctor(*ctor);
  auto fts = p.ctor_field_types(*ref, t);
  for (std::size_t i = 0; i < fts.size(); ++i) {
    if (fts[i] != t) continue;
    Expr sel = Expr::field(arg, ref->ctor->fields[i].name, fts[i]);
    out.push_back(sel);
    for (auto& e : args_smaller(sel, pc, p)) out.push_back(std::move(e));
  }
  return out;
}

std::vector<Expr> args_smaller(const Variable& arg, const PathCondition& pc, const Program& p) {
  return args_smaller(Expr::var(arg.name, arg.type), pc, p);
}

Expr use_binders(const Expr& e, const PathCondition& pc) {
  return rewrite_bottom_up(e, [&](const Expr& n) -> Expr {
    for (auto it = pc.conjuncts.rbegin(); it != pc.conjuncts.rend(); ++it)
      if (it->kind == PathConjunct::Kind::Binding && expr_equal(it->expr, n)) return Expr::var(it->name, it->type);
    return {};
  });
}

std::vector<RuleApplication> introduce_rec_calls(const SynthesisProblem& prob, const Program& p) {
  std::vector<RuleApplication> out;
  const PathConjunct* marker = prob.pc.marker();
  if (!marker) return out;
  const FunDef* f = p.find_function(marker->name);
  if (!f) return out;
  PathCondition base = prob.pc.without_marker();
  Symbol rec = fresh_symbol("rec", prob.names());
  for (std::size_t i = 0; i < marker->args.size(); ++i) {
    for (const Expr& smaller : args_smaller(marker->args[i], prob.pc, p)) {
      std::vector<Expr> args = marker->args;
      args[i] = smaller;
      Expr call = Expr::call(f->name, {}, args, f->return_type);
      RuleApplication app;
      app.rule = "introduce_rec_calls";
      app.fingerprint = "rec(" + std::to_string(i) + ", " + print_expr(smaller) + ")";
      SynthesisProblem sub = prob;
      sub.pc = base.with(PathConjunct::binding(rec, f->return_type, call));
      // Tuple results are split into components, like tuple fields in case_split.
      std::vector<std::pair<Symbol, Expr>> parts;
      if (f->return_type.kind() == Type::Kind::Tuple) {
        Expr whole = Expr::var(rec, f->return_type);
        for (std::size_t j = 0; j < f->return_type.args().size(); ++j) {
          Symbol part(rec.str() + "_" + std::to_string(j + 1));
          Expr sel = Expr::tuple_select(whole, static_cast<int>(j + 1));
          sub.pc = sub.pc.with(PathConjunct::binding(part, f->return_type.args()[j], sel));
          parts.emplace_back(part, sel);
        }
      }
      app.subproblems.push_back(std::move(sub));
      Expr shown = use_binders(call, base);
      app.recompose = [rec, shown, parts](const std::vector<Solution>& s) {
        Expr body = s[0].term;
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) body = Expr::let(it->first, it->second, body);
        return Solution{s[0].pre, Expr::let(rec, shown, body)};
      };
      out.push_back(std::move(app));
    }
  }
  return out;
}

std::optional<Solution> ground_solve(const SynthesisProblem& prob, const Program& p, const CheckConfig& cfg,
                                     const Expr& partial) {
  ValueDomain dom(p, cfg.input_depth);
  Type out_t = prob.output_type();
  Harness h(p, prob, partial, cfg.fuel);
  ExampleStore killers;
  for (const Value& v : dom.values(out_t)) {
    Expr lit = value_to_expr(p, v, out_t);
    Harness::Installed inst = h.install(lit);
    bool killed = false;
    for (const Example& ex : killers.examples()) {
      if (h.run(inst, ex.input).outcome == TestOutcome::Fail) {
        Input in = ex.input;
        killers.record_failure(in);
        killed = true;
        break;
      }
    }
    if (killed) continue;
    CheckVerdict verdict = find_counterexample(prob, lit, p, cfg, partial);
    if (verdict.is_valid()) return Solution{Expr::boolean(true), lit};
    if (verdict.is_counterexample()) {
      killers.add(verdict.input);
      killers.record_failure(verdict.input);
    }
  }
  return std::nullopt;
}

SynthesisProblem make_initial_problem(const FunDef& f) {
  if (!f.body || f.body.kind() != ExprKind::Choose)
    throw RuleError("function " + f.name.str() + " has no choose body");
  SynthesisProblem prob;
  prob.function = f.name;
  std::vector<Expr> args;
  for (const auto& prm : f.params) {
    prob.inputs.push_back({prm.name, prm.type});
    args.push_back(Expr::var(prm.name, prm.type));
  }
  if (f.precondition && !is_true_literal(f.precondition)) prob.pc = prob.pc.with(PathConjunct::fact(f.precondition));
  prob.pc = prob.pc.with(PathConjunct::terminates(f.name, args));
  std::vector<Expr> outs;
  for (const auto& b : f.body->binders) {
    prob.outputs.push_back({b.name, b.type});
    outs.push_back(Expr::var(b.name, b.type));
  }
  Expr spec = f.body->children[0];
  if (f.postcondition) {
    Expr res = outs.size() == 1 ? outs[0] : Expr::tuple(outs);
    spec = make_and(spec, substitute(f.postcondition->predicate, {{f.postcondition->binder, res}}));
  }
  prob.spec = spec;
  return prob;
}

}  // namespace synthe
