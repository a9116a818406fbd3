#include "synthe/checker.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "synthe/harness.hpp"
#include "synthe/printer.hpp"

namespace synthe {

CheckVerdict CheckVerdict::counterexample(Input in, std::optional<EvalError> err) {
  CheckVerdict v;
  v.kind = Kind::Counterexample;
  v.input = std::move(in);
  v.error = std::move(err);
  return v;
}

CheckVerdict CheckVerdict::unknown(std::string why) {
  CheckVerdict v;
  v.kind = Kind::Unknown;
  v.reason = std::move(why);
  return v;
}

std::string CheckVerdict::str() const {
  switch (kind) {
    case Kind::Valid: return "valid";
    case Kind::Counterexample:
      return "counterexample " + input_str(input) + (error ? " (" + error->str() + ")" : std::string());
    case Kind::Unknown: return "unknown: " + reason;
  }
  return "";
}

namespace {

using InputLoop = std::function<void(const std::function<bool(const Input&)>&)>;

CheckVerdict check_loop(const SynthesisProblem& prob, const Expr& candidate, const Program& p, std::size_t fuel,
                        const Expr& partial, const InputLoop& loop) {
  Harness h(p, prob, partial, fuel);
  Harness::Installed inst = h.install(candidate);
  const BodyOverride* body = inst.body ? &*inst.body : nullptr;
  std::size_t seen = 0, starved = 0, passed = 0, inconclusive = 0;
  std::optional<CheckVerdict> found;
  loop([&](const Input& in) {
    ++seen;
    PathResult pc = h.path_condition(in, body);
    if (pc.status == PathStatus::Error) {
      if (pc.error->kind == EvalErrorKind::OutOfFuel) {
        ++starved;
        return true;
      }
      found = CheckVerdict::counterexample(in, pc.error);
      return false;
    }
    if (pc.status != PathStatus::Holds) return true;
    TestResult r = h.finish(inst, std::move(pc.env));
    if (r.outcome == TestOutcome::Fail) {
      found = CheckVerdict::counterexample(in, r.error);
      return false;
    }
    if (r.outcome == TestOutcome::Pass) ++passed;
    if (r.outcome == TestOutcome::Inconclusive) ++inconclusive;
    return true;
  });
  if (found) return *found;
  if (seen > 0 && starved == seen) return CheckVerdict::unknown("path condition ran out of fuel on every input");
  if (inconclusive > 0 && passed == 0) return CheckVerdict::unknown("candidate was inconclusive on every input");
  return CheckVerdict::valid();
}

std::vector<Type> input_types(const SynthesisProblem& prob) {
  std::vector<Type> ts;
  for (const auto& v : prob.inputs) ts.push_back(v.type);
  return ts;
}

}  // namespace

CheckVerdict find_counterexample(const SynthesisProblem& prob, const Expr& candidate, const Program& p,
                                 const CheckConfig& cfg, const Expr& partial) {
  ValueDomain dom(p, cfg.input_depth);
  auto types = input_types(prob);
  return check_loop(prob, candidate, p, cfg.fuel, partial,
                    [&](const std::function<bool(const Input&)>& f) { dom.for_each_input(types, f); });
}

CheckVerdict find_counterexample(const SynthesisProblem& prob, const Expr& candidate, const Program& p,
                                 const std::vector<Input>& inputs, std::size_t fuel, const Expr& partial) {
  return check_loop(prob, candidate, p, fuel, partial, [&](const std::function<bool(const Input&)>& f) {
    for (const auto& in : inputs)
      if (!f(in)) break;
  });
}

SatisfyingPair find_satisfying_pair(const CandidateSet& candidates, const SynthesisProblem& prob,
                                    const Program& p, const CheckConfig& cfg, const Expr& partial) {
  Harness h(p, prob, partial, cfg.fuel);
  std::vector<Harness::Installed> inst;
  inst.reserve(candidates.size());
  for (const auto& c : candidates) inst.push_back(h.install(c));
  ValueDomain dom(p, cfg.input_depth);
  SatisfyingPair out;
  std::size_t seen = 0, starved = 0;
  bool shared_pc = !h.pc_depends_on_candidate();
  dom.for_each_input(input_types(prob), [&](const Input& in) {
    ++seen;
    std::optional<PathResult> common;
    if (shared_pc) {
      common = h.path_condition(in, nullptr);
      if (common->status == PathStatus::Error && common->error->kind == EvalErrorKind::OutOfFuel) ++starved;
      if (common->status != PathStatus::Holds) return true;
    }
    for (std::size_t i = 0; i < inst.size(); ++i) {
      const BodyOverride* body = inst[i].body ? &*inst[i].body : nullptr;
      PathResult pc = common ? *common : h.path_condition(in, body);
      if (pc.status != PathStatus::Holds) continue;
      if (h.finish(inst[i], std::move(pc.env)).outcome == TestOutcome::Pass) {
        out.kind = SatisfyingPair::Kind::Found;
        out.index = i;
        out.candidate = inst[i].candidate;
        out.input = in;
        return false;
      }
    }
    return true;
  });
  if (!out.found() && seen > 0 && starved == seen) out.kind = SatisfyingPair::Kind::Unknown;
  return out;
}

// ---------------------------------------------------------------------------
// SMT-LIB2 emission

namespace {

class SmtWriter {
 public:
  explicit SmtWriter(const Program& p) : prog_(p) {}

  std::string sort(const Type& t) {
    switch (t.kind()) {
      case Type::Kind::Bool: return "Bool";
      case Type::Kind::Int:
      case Type::Kind::BigInt: return "Int";
      case Type::Kind::Tuple:
      case Type::Kind::Adt: {
        std::string name = composite_name(t);
        if (!sorts_seen_.count(name)) {
          sorts_seen_.insert(name);
          sorts_.push_back(t);
          if (t.kind() == Type::Kind::Tuple) {
            for (const auto& a : t.args()) sort(a);
          } else {
            const AdtDef* adt = prog_.find_adt(t.name());
            for (std::size_t i = 0; i < adt->ctors.size(); ++i)
              for (const auto& ft : prog_.ctor_field_types(CtorRef{adt, &adt->ctors[i], i}, t)) sort(ft);
          }
        }
        return name;
      }
      default: throw SmtError("type " + t.str() + " has no SMT sort");
    }
  }

  std::string composite_name(const Type& t) {
    std::string s = t.kind() == Type::Kind::Tuple ? "Tuple" + std::to_string(t.args().size()) : t.name().str();
    for (const auto& a : t.args()) {
      s += "_";
      s += a.kind() == Type::Kind::Tuple || a.kind() == Type::Kind::Adt ? composite_name(a) : sort(a);
    }
    return s;
  }

  std::string ctor_name(Symbol ctor, const Type& adt_type) {
    const AdtDef* adt = prog_.find_adt(adt_type.name());
    if (adt->type_params.empty()) return ctor.str();
    return ctor.str() + "_" + composite_name(adt_type);
  }

  std::string selector(Symbol ctor, Symbol field, const Type& adt_type) {
    return ctor_name(ctor, adt_type) + "_" + field.str();
  }

  std::string tuple_ctor(const Type& t) { return "mk_" + composite_name(t); }
  std::string tuple_sel(const Type& t, std::size_t i) { return composite_name(t) + "_" + std::to_string(i); }

  std::string datatypes() {
    if (sorts_.empty()) return "";
    std::ostringstream heads, bodies;
    // Field sorts may add further composites while printing.
    std::vector<std::string> decls;
    for (std::size_t k = 0; k < sorts_.size(); ++k) {
      Type t = sorts_[k];
      std::string body = "(";
      if (t.kind() == Type::Kind::Tuple) {
        body += "(" + tuple_ctor(t);
        for (std::size_t i = 0; i < t.args().size(); ++i)
          body += " (" + tuple_sel(t, i + 1) + " " + sort(t.args()[i]) + ")";
        body += ")";
      } else {
        const AdtDef* adt = prog_.find_adt(t.name());
        for (std::size_t c = 0; c < adt->ctors.size(); ++c) {
          const CtorDef& cd = adt->ctors[c];
          auto fts = prog_.ctor_field_types(CtorRef{adt, &cd, c}, t);
          if (c) body += " ";
          body += "(" + ctor_name(cd.name, t);
          for (std::size_t i = 0; i < cd.fields.size(); ++i)
            body += " (" + selector(cd.name, cd.fields[i].name, t) + " " + sort(fts[i]) + ")";
          body += ")";
        }
      }
      decls.push_back(body + ")");
    }
    std::string out = "(declare-datatypes (";
    for (std::size_t k = 0; k < sorts_.size(); ++k) out += (k ? " (" : "(") + composite_name(sorts_[k]) + " 0)";
    out += ")\n  (";
    for (std::size_t k = 0; k < decls.size(); ++k) out += (k ? "\n   " : "") + decls[k];
    return out + "))\n";
  }

  std::string expr(const Expr& e) {
    const ExprNode& n = *e;
    switch (n.kind) {
      case ExprKind::Literal: return literal(n.literal);
      case ExprKind::Var: return n.name.str();
      case ExprKind::Ctor: return app(ctor_name(n.name, n.type), n.children);
      case ExprKind::Tuple: return app(tuple_ctor(n.type), n.children);
      case ExprKind::TupleSelect:
        return "(" + tuple_sel(n.children[0].type(), static_cast<std::size_t>(n.op)) + " " + expr(n.children[0]) + ")";
      case ExprKind::FieldSelect: {
        const Type& t = n.children[0].type();
        const AdtDef* adt = prog_.find_adt(t.name());
        for (const auto& cd : adt->ctors)
          for (const auto& f : cd.fields)
            if (f.name == n.name) return "(" + selector(cd.name, f.name, t) + " " + expr(n.children[0]) + ")";
        throw SmtError("unknown field " + n.name.str());
      }
      case ExprKind::Call: {
        called_.push_back(n.name);
        return app(n.name.str(), n.children);
      }
      case ExprKind::If:
        return "(ite " + expr(n.children[0]) + " " + expr(n.children[1]) + " " + expr(n.children[2]) + ")";
      case ExprKind::Match: {
        std::string s = "m!" + std::to_string(fresh_++);
        std::string body;
        std::size_t cases = n.patterns.size();
        for (std::size_t i = cases; i-- > 0;) {
          std::vector<std::pair<std::string, std::string>> binds;
          std::vector<std::string> tests;
          pattern(n.patterns[i], s, n.children[0].type(), tests, binds);
          std::string rhs = expr(n.children[i + 1]);
          if (!binds.empty()) {
            std::string l = "(let (";
            for (std::size_t b = 0; b < binds.size(); ++b)
              l += (b ? " (" : "(") + binds[b].first + " " + binds[b].second + ")";
            rhs = l + ") " + rhs + ")";
          }
          if (i + 1 == cases) {
            body = rhs;
          } else {
            std::string cond = tests.empty() ? "true"
                               : tests.size() == 1 ? tests[0]
                                                   : "(and " + join(tests) + ")";
            body = "(ite " + cond + " " + rhs + " " + body + ")";
          }
        }
        return "(let ((" + s + " " + expr(n.children[0]) + ")) " + body + ")";
      }
      case ExprKind::Let:
        return "(let ((" + n.name.str() + " " + expr(n.children[0]) + ")) " + expr(n.children[1]) + ")";
      case ExprKind::Binary: {
        static const char* ops[] = {"+", "-", "*", "div", "mod", "<", "<=", "=", "and", "or"};
        return "(" + std::string(ops[n.op]) + " " + expr(n.children[0]) + " " + expr(n.children[1]) + ")";
      }
      case ExprKind::Unary:
        return std::string(n.unary_op() == UnaryOp::Not ? "(not " : "(- ") + expr(n.children[0]) + ")";
      case ExprKind::IsCtor:
        return "((_ is " + ctor_name(n.name, n.children[0].type()) + ") " + expr(n.children[0]) + ")";
      case ExprKind::Hole:
        if (hole_text_) return *hole_text_;
        throw SmtError("hole in emitted formula");
      case ExprKind::Choose: throw SmtError("choose in emitted formula");
    }
    return "";
  }

  std::optional<std::string> hole_text_;
  std::vector<Symbol> called_;

 private:
  std::string literal(const LitValue& v) {
    if (auto b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    BigInt n = std::holds_alternative<std::int32_t>(v) ? BigInt(std::get<std::int32_t>(v)) : std::get<BigInt>(v);
    if (n < 0) return "(- " + BigInt(-n).str() + ")";
    return n.str();
  }

  std::string app(const std::string& head, const std::vector<Expr>& args) {
    if (args.empty()) return head;
    std::string s = "(" + head;
    for (const auto& a : args) s += " " + expr(a);
    return s + ")";
  }

  static std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + xs[i];
    return s;
  }

  void pattern(const Pattern& pat, const std::string& path, const Type& t, std::vector<std::string>& tests,
               std::vector<std::pair<std::string, std::string>>& binds) {
    switch (pat.kind) {
      case Pattern::Kind::Wildcard: return;
      case Pattern::Kind::Bind:
        binds.emplace_back(pat.name.str(), path);
        if (!pat.subs.empty()) pattern(pat.subs[0], path, t, tests, binds);
        return;
      case Pattern::Kind::Tuple:
        for (std::size_t i = 0; i < pat.subs.size(); ++i)
          pattern(pat.subs[i], "(" + tuple_sel(t, i + 1) + " " + path + ")", t.args()[i], tests, binds);
        return;
      case Pattern::Kind::Ctor: {
        tests.push_back("((_ is " + ctor_name(pat.ctor, t) + ") " + path + ")");
        auto ref = prog_.find_ctor(pat.ctor);
        auto fts = prog_.ctor_field_types(*ref, t);
        for (std::size_t i = 0; i < pat.subs.size(); ++i)
          pattern(pat.subs[i], "(" + selector(pat.ctor, ref->ctor->fields[i].name, t) + " " + path + ")", fts[i],
                  tests, binds);
        return;
      }
    }
  }

  const Program& prog_;
  std::set<std::string> sorts_seen_;
  std::vector<Type> sorts_;
  int fresh_ = 0;
};

}  // namespace

std::string emit_smtlib(const SynthesisProblem& prob, const Program& p, const std::vector<Expr>& candidates,
                        SmtMode mode, const Expr& partial) {
  if (mode == SmtMode::Validate && candidates.size() != 1) throw SmtError("validate mode takes one candidate");
  if (candidates.empty()) throw SmtError("no candidates");
  SmtWriter w(p);
  Type out_t = prob.output_type();
  std::string choice;
  if (mode == SmtMode::Validate) {
    choice = w.expr(candidates[0]);
  } else {
    choice = w.expr(candidates.back());
    for (std::size_t i = candidates.size() - 1; i-- > 0;)
      choice = "(ite (= sel " + std::to_string(i) + ") " + w.expr(candidates[i]) + " " + choice + ")";
  }

  std::ostringstream formula;
  for (const auto& v : prob.inputs) formula << "(declare-const " << v.name << " " << w.sort(v.type) << ")\n";
  if (mode == SmtMode::Satisfy)
    formula << "(declare-const sel Int)\n(assert (and (<= 0 sel) (< sel " << candidates.size() << ")))\n";
  for (const auto& c : prob.pc.conjuncts) {
    if (c.kind == PathConjunct::Kind::Fact) {
      formula << "(assert " << w.expr(c.expr) << ")\n";
    } else if (c.kind == PathConjunct::Kind::Binding) {
      formula << "(define-fun " << c.name << " () " << w.sort(c.type) << " " << w.expr(c.expr) << ")\n";
    }
  }
  if (prob.outputs.size() == 1) {
    formula << "(define-fun " << prob.outputs[0].name << " () " << w.sort(out_t) << " " << choice << ")\n";
  } else {
    formula << "(define-fun out!tuple () " << w.sort(out_t) << " " << choice << ")\n";
    for (std::size_t i = 0; i < prob.outputs.size(); ++i)
      formula << "(define-fun " << prob.outputs[i].name << " () " << w.sort(prob.outputs[i].type) << " ("
              << w.composite_name(out_t) << "_" << (i + 1) << " out!tuple))\n";
  }
  std::string spec = prob.spec ? w.expr(prob.spec) : "true";
  formula << "(assert " << (mode == SmtMode::Validate ? "(not " + spec + ")" : spec) << ")\n";

  // Reachable functions, with the function under synthesis replaced by the
  // installed body.
  std::map<Symbol, std::string> bodies;
  std::vector<Symbol> order;
  std::map<Symbol, std::set<Symbol>> calls;
  std::vector<Symbol> work = w.called_;
  while (!work.empty()) {
    Symbol f = work.back();
    work.pop_back();
    if (bodies.count(f)) continue;
    const FunDef* def = p.find_function(f);
    if (!def) throw SmtError("unknown function " + f.str());
    w.called_.clear();
    std::string text;
    if (f == prob.function && partial) {
      w.hole_text_ = choice;
      text = w.expr(partial);
      w.hole_text_.reset();
    } else {
      text = w.expr(def->body);
    }
    bodies[f] = text;
    order.push_back(f);
    calls[f].insert(w.called_.begin(), w.called_.end());
    for (auto g : w.called_) work.push_back(g);
  }

  // Callees first; a single define-funs-rec group if there is mutual recursion.
  std::vector<Symbol> sorted;
  std::set<Symbol> done, active;
  bool mutual = false;
  std::function<void(Symbol)> visit = [&](Symbol f) {
    if (done.count(f)) return;
    if (active.count(f)) {
      mutual = true;
      return;
    }
    active.insert(f);
    for (auto g : calls[f])
      if (g != f) visit(g);
    active.erase(f);
    done.insert(f);
    sorted.push_back(f);
  };
  for (auto f : order) visit(f);

  auto signature = [&](Symbol f) {
    const FunDef* def = p.find_function(f);
    std::string s = f.str() + " (";
    for (std::size_t i = 0; i < def->params.size(); ++i)
      s += (i ? " (" : "(") + def->params[i].name.str() + " " + w.sort(def->params[i].type) + ")";
    return s + ") " + w.sort(def->return_type);
  };
  std::ostringstream funs;
  if (mutual) {
    funs << "(define-funs-rec (";
    for (std::size_t i = 0; i < sorted.size(); ++i) funs << (i ? "\n  (" : "(") << signature(sorted[i]) << ")";
    funs << ")\n  (";
    for (std::size_t i = 0; i < sorted.size(); ++i) funs << (i ? "\n   " : "") << bodies[sorted[i]];
    funs << "))\n";
  } else {
    for (auto f : sorted) funs << "(define-fun-rec " << signature(f) << "\n  " << bodies[f] << ")\n";
  }

  std::ostringstream out;
  out << "; " << (mode == SmtMode::Validate ? "validate" : "satisfy") << " " << prob.function << "\n";
  out << "(set-logic ALL)\n";
  out << w.datatypes() << funs.str() << formula.str() << "(check-sat)\n(get-model)\n";
  return out.str();
}

SmtDumper::SmtDumper(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

std::filesystem::path SmtDumper::write(const std::string& script) {
  char name[32];
  std::snprintf(name, sizeof name, "query_%04zu.smt2", ++count_);
  std::filesystem::path path = dir_ / name;
  std::ofstream(path) << script;
  return path;
}

}  // namespace synthe
