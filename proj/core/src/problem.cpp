#include "synthe/problem.hpp"

#include "synthe/printer.hpp"

namespace synthe {

PathConjunct PathConjunct::fact(Expr e) {
  PathConjunct c;
  c.kind = Kind::Fact;
  c.expr = std::move(e);
  return c;
}

PathConjunct PathConjunct::binding(Symbol name, Type type, Expr value) {
  PathConjunct c;
  c.kind = Kind::Binding;
  c.name = name;
  c.type = std::move(type);
  c.expr = std::move(value);
  return c;
}

PathConjunct PathConjunct::terminates(Symbol fn, std::vector<Expr> args) {
  PathConjunct c;
  c.kind = Kind::Terminates;
  c.name = fn;
  c.args = std::move(args);
  return c;
}

std::string PathConjunct::str() const {
  switch (kind) {
    case Kind::Fact:
      return print_expr(expr);
    case Kind::Binding:
      return name.str() + " <- " + print_expr(expr);
    case Kind::Terminates: {
      std::string s = "[[" + name.str() + "(";
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) s += ", ";
        s += print_expr(args[i]);
      }
      return s + ")]]";
    }
  }
  return "";
}

PathCondition PathCondition::with(PathConjunct c) const {
  PathCondition p = *this;
  p.conjuncts.push_back(std::move(c));
  return p;
}

const PathConjunct* PathCondition::marker() const {
  for (const auto& c : conjuncts)
    if (c.kind == PathConjunct::Kind::Terminates) return &c;
  return nullptr;
}

PathCondition PathCondition::without_marker() const {
  PathCondition p;
  for (const auto& c : conjuncts)
    if (c.kind != PathConjunct::Kind::Terminates) p.conjuncts.push_back(c);
  return p;
}

std::vector<Variable> PathCondition::bindings() const {
  std::vector<Variable> out;
  for (const auto& c : conjuncts)
    if (c.kind == PathConjunct::Kind::Binding) out.push_back({c.name, c.type});
  return out;
}

std::vector<Expr> PathCondition::facts() const {
  std::vector<Expr> out;
  for (const auto& c : conjuncts)
    if (c.kind == PathConjunct::Kind::Fact) out.push_back(c.expr);
  return out;
}

const PathConjunct* PathCondition::binding_of(Symbol name) const {
  for (const auto& c : conjuncts)
    if (c.kind == PathConjunct::Kind::Binding && c.name == name) return &c;
  return nullptr;
}

bool PathCondition::has_fact(const Expr& e) const {
  for (const auto& c : conjuncts)
    if (c.kind == PathConjunct::Kind::Fact && expr_equal(c.expr, e)) return true;
  return false;
}

std::string PathCondition::str() const {
  if (conjuncts.empty()) return "true";
  std::string s;
  for (std::size_t i = 0; i < conjuncts.size(); ++i) {
    if (i) s += " && ";
    s += conjuncts[i].str();
  }
  return s;
}

Type SynthesisProblem::output_type() const {
  if (outputs.size() == 1) return outputs[0].type;
  std::vector<Type> ts;
  for (const auto& o : outputs) ts.push_back(o.type);
  return Type::tuple(std::move(ts));
}

std::vector<Variable> SynthesisProblem::scope() const {
  std::vector<Variable> out = inputs;
  for (auto& b : pc.bindings()) out.push_back(b);
  return out;
}

std::set<Symbol> SynthesisProblem::names() const {
  std::set<Symbol> s;
  s.insert(function);
  for (const auto& v : inputs) s.insert(v.name);
  for (const auto& v : outputs) s.insert(v.name);
  for (const auto& c : pc.conjuncts) {
    if (c.kind == PathConjunct::Kind::Binding) s.insert(c.name);
    if (c.expr) {
      auto fv = free_vars(c.expr);
      s.insert(fv.begin(), fv.end());
    }
  }
  if (spec) {
    auto fv = free_vars(spec);
    s.insert(fv.begin(), fv.end());
  }
  return s;
}

std::string SynthesisProblem::str() const {
  std::string s = "[[ ";
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (i) s += ", ";
    s += inputs[i].name.str();
  }
  s += " < " + pc.str() + " |> " + (spec ? print_expr(spec) : std::string("true")) + " > ";
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    if (i) s += ", ";
    s += outputs[i].name.str();
  }
  return s + " ]]";
}

std::string Solution::str() const {
  return "< " + (pre ? print_expr(pre) : std::string("true")) + " | " + print_expr(term) + " >";
}

}  // namespace synthe
