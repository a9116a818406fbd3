#include "synthe/search.hpp"

#include <chrono>
#include <limits>
#include <set>

#include "synthe/harness.hpp"
#include "synthe/printer.hpp"

namespace synthe {

namespace {
constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max() / 4;
}

int SearchTree::add_root(SynthesisProblem prob) {
  nodes_.clear();
  SearchNode n;
  n.kind = SearchNode::Kind::Or;
  n.id = 0;
  n.problem = std::move(prob);
  nodes_.push_back(std::move(n));
  return 0;
}

int SearchTree::add_application(int or_id, RuleApplication app) {
  int and_id = static_cast<int>(nodes_.size());
  std::size_t depth = nodes_[or_id].rule_depth + 1;
  SearchNode a;
  a.kind = SearchNode::Kind::And;
  a.id = and_id;
  a.parent = or_id;
  std::vector<SynthesisProblem> subs = std::move(app.subproblems);
  a.app = std::move(app);
  nodes_.push_back(std::move(a));
  nodes_[or_id].alternatives.push_back(and_id);
  for (auto& s : subs) {
    SearchNode c;
    c.kind = SearchNode::Kind::Or;
    c.id = static_cast<int>(nodes_.size());
    c.parent = and_id;
    c.problem = std::move(s);
    c.rule_depth = depth;
    nodes_[and_id].children.push_back(c.id);
    nodes_.push_back(std::move(c));
  }
  return and_id;
}

void SearchTree::solve(int or_id, Solution s) {
  SearchNode& n = nodes_[or_id];
  if (n.status != SearchNode::Status::Open) return;
  n.status = SearchNode::Status::Solved;
  n.solution = std::move(s);
  if (n.parent < 0) return;
  SearchNode& a = nodes_[n.parent];
  if (a.status != SearchNode::Status::Open) return;
  std::vector<Solution> sols;
  for (int c : a.children) {
    if (nodes_[c].status != SearchNode::Status::Solved) return;
    sols.push_back(*nodes_[c].solution);
  }
  a.status = SearchNode::Status::Solved;
  a.solution = a.app.recompose(sols);
  solve(a.parent, *a.solution);
}

void SearchTree::fail(int id) {
  SearchNode& n = nodes_[id];
  if (n.status != SearchNode::Status::Open) return;
  n.status = SearchNode::Status::Failed;
  if (n.parent < 0) return;
  if (n.kind == SearchNode::Kind::Or)
    fail(n.parent);
  else
    maybe_fail_or(n.parent);
}

void SearchTree::maybe_fail_or(int or_id) {
  const SearchNode& n = nodes_[or_id];
  if (n.status != SearchNode::Status::Open || !n.expanded || n.ste_pending) return;
  for (int a : n.alternatives)
    if (nodes_[a].status != SearchNode::Status::Failed) return;
  fail(or_id);
}

void SearchTree::set_expanded(int or_id, bool ste_pending) {
  nodes_[or_id].expanded = true;
  nodes_[or_id].ste_pending = ste_pending;
  maybe_fail_or(or_id);
}

void SearchTree::ste_finished(int or_id) {
  nodes_[or_id].ste_pending = false;
  maybe_fail_or(or_id);
}

Expr SearchTree::partial_solution(int or_id) const {
  Expr term = Expr::hole(nodes_[or_id].problem.output_type());
  int cur = or_id;
  while (nodes_[cur].parent >= 0) {
    const SearchNode& a = nodes_[nodes_[cur].parent];
    std::vector<Solution> sols;
    for (int c : a.children) {
      const SearchNode& child = nodes_[c];
      if (c == cur) {
        sols.push_back({Expr::boolean(true), term});
      } else if (child.status == SearchNode::Status::Solved) {
        sols.push_back(*child.solution);
      } else {
        std::vector<Binder> bs;
        for (const auto& o : child.problem.outputs) bs.push_back({o.name, o.type});
        Expr spec = child.problem.spec ? child.problem.spec : Expr::boolean(true);
        sols.push_back({Expr::boolean(true), Expr::choose(bs, spec, child.problem.output_type())});
      }
    }
    term = a.app.recompose(sols).term;
    cur = a.parent;
  }
  return term;
}

std::size_t SearchTree::cost(int id) const {
  const SearchNode& n = nodes_[id];
  if (n.status == SearchNode::Status::Solved) return expr_size(n.solution->term);
  if (n.status == SearchNode::Status::Failed) return kInfinite;
  if (n.kind == SearchNode::Kind::And) {
    std::size_t sum = 0;
    for (int c : n.children) sum = std::min(kInfinite, sum + cost(c));
    return sum;
  }
  if (!n.expanded) return 1;
  std::size_t best = n.ste_pending ? 1 : kInfinite;
  for (int a : n.alternatives) best = std::min(best, cost(a));
  return best;
}

std::string SynthesisReport::status_str() const {
  switch (status) {
    case Status::Verified: return "Verified(" + std::to_string(verify_depth) + ")";
    case Status::SolvedUnverified: return "SolvedUnverified";
    case Status::Failed: return failure == Failure::Timeout ? "Failed(timeout)" : "Failed(exhausted)";
  }
  return "";
}

const FunDef* find_synthesis_target(const Program& p, const std::string& name) {
  auto is_choose = [](const FunDef& f) { return f.body && f.body.kind() == ExprKind::Choose; };
  if (name.empty()) {
    const FunDef* found = nullptr;
    for (const auto& f : p.functions()) {
      if (!is_choose(f)) continue;
      if (found) throw RuleError("several choose functions; pick one with --function");
      found = &f;
    }
    if (!found) throw RuleError("no function with a choose body");
    return found;
  }
  if (const FunDef* f = p.find_function(Symbol(name))) return f;
  for (const auto& f : p.functions())
    if (f.name.str().rfind(name + "$", 0) == 0) return &f;
  throw RuleError("unknown function " + name);
}

namespace {

struct Action {
  enum class Kind { Expand, Ste } kind;
  int node;
};

std::optional<Action> select(const SearchTree& t, int id) {
  const SearchNode& n = t.node(id);
  if (n.status != SearchNode::Status::Open) return std::nullopt;
  if (n.kind == SearchNode::Kind::And) {
    for (int c : n.children)
      if (auto a = select(t, c)) return a;
    return std::nullopt;
  }
  if (!n.expanded) return Action{Action::Kind::Expand, id};
  // Alternatives in creation order; STE comes last on ties.
  std::vector<std::pair<std::size_t, int>> order;
  for (int a : n.alternatives)
    if (t.node(a).status == SearchNode::Status::Open) order.emplace_back(t.cost(a), a);
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [c, a] : order) {
    if (n.ste_pending && 1 < c) return Action{Action::Kind::Ste, id};
    if (auto r = select(t, a)) return r;
  }
  if (n.ste_pending) return Action{Action::Kind::Ste, id};
  return std::nullopt;
}

}  // namespace

SynthesisReport synthesize(const Program& p, const std::string& fn, const SearchConfig& cfg) {
  auto wall_start = std::chrono::steady_clock::now();
  SynthesisReport report;
  const FunDef* target = find_synthesis_target(p, fn);
  report.function = target->name.str();
  report.program_size = program_size(p);
  report.verify_depth = cfg.verify_depth;

  Deadline deadline(std::chrono::duration<double>(cfg.timeout_seconds), cfg.clock);
  SearchTree tree;
  tree.add_root(make_initial_problem(*target));
  bool timed_out = false;
  CheckConfig check = cfg.ste.check;
  check.fuel = cfg.ste.fuel;

  while (tree.node(0).status == SearchNode::Status::Open) {
    if (deadline.expired()) {
      timed_out = true;
      break;
    }
    auto action = select(tree, 0);
    if (!action) break;
    int id = action->node;
    const SynthesisProblem prob = tree.node(id).problem;
    Expr partial = tree.partial_solution(id);
    std::string tag = "#" + std::to_string(id);

    if (action->kind == Action::Kind::Expand) {
      report.expansion_trace.push_back("expand " + tag + " " + prob.str());
      if (auto g = ground_solve(prob, p, check, partial)) {
        report.expansion_trace.push_back("ground " + tag + " " + print_expr(g->term));
        tree.solve(id, *g);
        tree.set_expanded(id, false);
        continue;
      }
      std::vector<RuleApplication> apps;
      if (tree.node(id).rule_depth < cfg.max_rule_depth) {
        if (auto a = split_disjunction(prob)) apps.push_back(std::move(*a));
        for (auto& a : introduce_rec_calls(prob, p)) apps.push_back(std::move(a));
        for (Symbol v : case_split_candidates(prob, p))
          if (auto a = case_split_adt(prob, p, v)) apps.push_back(std::move(*a));
      }
      std::set<std::string> seen;
      for (auto& a : apps) {
        if (!seen.insert(a.fingerprint).second) continue;
        std::string fp = a.fingerprint;
        int and_id = tree.add_application(id, std::move(a));
        report.expansion_trace.push_back("apply " + tag + " " + fp + " -> #" + std::to_string(and_id));
      }
      tree.set_expanded(id, true);
      continue;
    }

    Grammar g = base_grammar(prob, p, cfg.grammar);
    ExampleStore store = generate_initial_examples(prob, p, cfg.example_depth, partial, cfg.ste.fuel);
    for (const auto& in : cfg.seed_examples)
      if (in.size() == prob.inputs.size()) store.add(in);
    SteContext ctx{prob, p, partial, cfg.ste, &deadline, cfg.smt};
    SteResult r = ste(ctx, g, store);
    report.ste_trace += "node\t" + std::to_string(id) + "\n" + r.trace();
    switch (r.status) {
      case SteResult::Status::Solved:
        report.expansion_trace.push_back("ste " + tag + " solved at size " + std::to_string(r.origin_size) + ": " +
                                         print_expr(r.solution->term));
        tree.solve(id, *r.solution);
        break;
      case SteResult::Status::Exhausted:
        report.expansion_trace.push_back("ste " + tag + " exhausted");
        break;
      case SteResult::Status::Timeout:
        report.expansion_trace.push_back("ste " + tag + " timeout");
        timed_out = true;
        break;
    }
    tree.ste_finished(id);
    if (timed_out) break;
  }

  const SearchNode& root = tree.node(0);
  if (root.status == SearchNode::Status::Solved) {
    FunDef def = *target;
    def.body = root.solution->term;
    if (root.solution->pre && !is_true_literal(root.solution->pre))
      def.precondition = def.precondition ? make_and(def.precondition, root.solution->pre) : root.solution->pre;
    Program solved = p.with_function(def);
    CheckConfig final_check{cfg.verify_depth, cfg.ste.fuel};
    CheckVerdict v = find_counterexample(root.problem, def.body, solved, final_check, Expr::hole(def.return_type));
    if (v.is_valid()) {
      report.status = SynthesisReport::Status::Verified;
    } else {
      report.status = SynthesisReport::Status::SolvedUnverified;
      report.verification_note = v.str();
    }
    report.solution_size = expr_size(def.body);
    report.solution_text = print_function(def);
    report.solved_program = std::move(solved);
  } else {
    report.status = SynthesisReport::Status::Failed;
    report.failure = timed_out ? SynthesisReport::Failure::Timeout : SynthesisReport::Failure::Exhausted;
  }
  report.wall_clock = std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
  return report;
}

}  // namespace synthe
