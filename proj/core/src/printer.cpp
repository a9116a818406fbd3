#include "synthe/printer.hpp"

#include <sstream>

namespace synthe {

namespace {

constexpr int kStmt = 0;
constexpr int kOr = 1;
constexpr int kAnd = 2;
constexpr int kEq = 3;
constexpr int kCmp = 4;
constexpr int kAdd = 5;
constexpr int kMul = 6;
constexpr int kPrefix = 7;
constexpr int kPostfix = 8;

int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::Or: return kOr;
    case BinaryOp::And: return kAnd;
    case BinaryOp::Eq: return kEq;
    case BinaryOp::Lt:
    case BinaryOp::Le: return kCmp;
    case BinaryOp::Add:
    case BinaryOp::Sub: return kAdd;
    default: return kMul;
  }
}

bool is_not_equal(const Expr& e) {
  return e.kind() == ExprKind::Unary && e->unary_op() == UnaryOp::Not &&
         e->children[0].kind() == ExprKind::Binary && e->children[0]->binary_op() == BinaryOp::Eq;
}

int precedence(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Binary:
      return precedence(e->binary_op());
    case ExprKind::Unary:
      if (is_not_equal(e)) return kEq;
      return kPrefix;
    case ExprKind::If:
    case ExprKind::Match:
    case ExprKind::Choose:
      return kStmt;
    case ExprKind::Literal: {
      const auto& v = e->literal;
      if (e.type().known() && e.type().kind() == Type::Kind::BigInt) return kPostfix;
      if (auto b = std::get_if<BigInt>(&v); b && *b < 0) return kPrefix;
      if (auto i = std::get_if<std::int32_t>(&v); i && *i < 0) return kPrefix;
      return kPostfix;
    }
    default:
      return kPostfix;
  }
}

class Printer {
 public:
  std::ostringstream out;
  int indent = 0;

  void newline() {
    out << '\n';
    for (int i = 0; i < indent; ++i) out << "  ";
  }

  void print(const Expr& e, int ctx) {
    bool parens = precedence(e) < ctx;
    if (parens) out << '(';
    print_bare(e);
    if (parens) out << ')';
  }

  void print_args(const std::vector<Expr>& args, std::size_t from = 0) {
    out << '(';
    for (std::size_t i = from; i < args.size(); ++i) {
      if (i > from) out << ", ";
      print(args[i], kStmt);
    }
    out << ')';
  }

  // Prints a let chain as statements of an already-open block.
  void print_block_body(const Expr& e) {
    Expr cur = e;
    while (cur.kind() == ExprKind::Let) {
      out << "val " << cur->name.str() << " = ";
      print(cur->children[0], kStmt);
      out << ';';
      newline();
      cur = cur->children[1];
    }
    print(cur, kStmt);
  }

  void print_bare(const Expr& e) {
    const ExprNode& n = *e;
    switch (n.kind) {
      case ExprKind::Literal:
        if (n.type.known() && n.type.kind() == Type::Kind::BigInt)
          out << "BigInt(" << print_literal(n.literal) << ')';
        else
          out << print_literal(n.literal);
        return;
      case ExprKind::Var:
        out << n.name.str();
        return;
      case ExprKind::Ctor:
        out << n.name.str();
        print_args(n.children);
        return;
      case ExprKind::Tuple:
        print_args(n.children);
        return;
      case ExprKind::TupleSelect:
        print(n.children[0], kPostfix);
        out << "._" << n.op;
        return;
      case ExprKind::FieldSelect:
        print(n.children[0], kPostfix);
        out << '.' << n.name.str();
        return;
      case ExprKind::IsCtor:
        print(n.children[0], kPostfix);
        out << ".isInstanceOf[" << n.name.str() << ']';
        return;
      case ExprKind::Call:
        out << n.name.str();
        if (!n.type_args.empty()) {
          out << '[';
          for (std::size_t i = 0; i < n.type_args.size(); ++i) {
            if (i) out << ", ";
            out << print_type(n.type_args[i]);
          }
          out << ']';
        }
        print_args(n.children);
        return;
      case ExprKind::If:
        out << "if (";
        print(n.children[0], kStmt);
        out << ") ";
        print(n.children[1], kOr);
        out << " else ";
        print(n.children[2], kStmt);
        return;
      case ExprKind::Match:
        print(n.children[0], kOr);
        out << " match {";
        ++indent;
        for (std::size_t i = 0; i < n.patterns.size(); ++i) {
          newline();
          out << "case " << print_pattern(n.patterns[i]) << " =>";
          const Expr& body = n.children[i + 1];
          if (body.kind() == ExprKind::Let || body.kind() == ExprKind::Match) {
            ++indent;
            newline();
            print_block_body(body);
            --indent;
          } else {
            out << ' ';
            print(body, kStmt);
          }
        }
        --indent;
        newline();
        out << '}';
        return;
      case ExprKind::Let:
        out << '{';
        ++indent;
        newline();
        print_block_body(e);
        --indent;
        newline();
        out << '}';
        return;
      case ExprKind::Binary: {
        BinaryOp op = n.binary_op();
        int p = precedence(op);
        bool left = op == BinaryOp::Add || op == BinaryOp::Sub || op == BinaryOp::Mul || op == BinaryOp::Div ||
                    op == BinaryOp::Mod;
        bool right = op == BinaryOp::And || op == BinaryOp::Or;
        print(n.children[0], left ? p : p + 1);
        out << ' ' << op_symbol(op) << ' ';
        print(n.children[1], right ? p : p + 1);
        return;
      }
      case ExprKind::Unary:
        if (is_not_equal(e)) {
          const Expr& eq = n.children[0];
          print(eq->children[0], kEq + 1);
          out << " != ";
          print(eq->children[1], kEq + 1);
          return;
        }
        out << op_symbol(n.unary_op());
        print(n.children[0], kPrefix);
        return;
      case ExprKind::Choose:
        out << "choose { ";
        if (n.binders.size() == 1 && !n.binders[0].type.known()) {
          out << n.binders[0].name.str();
        } else {
          out << '(';
          for (std::size_t i = 0; i < n.binders.size(); ++i) {
            if (i) out << ", ";
            out << n.binders[i].name.str();
            if (n.binders[i].type.known()) out << ": " << print_type(n.binders[i].type);
          }
          out << ')';
        }
        out << " => ";
        print(n.children[0], kStmt);
        out << " }";
        return;
      case ExprKind::Hole:
        out << "???";
        return;
    }
  }
};

}  // namespace

std::string print_type(const Type& t) { return t.str(); }

std::string print_literal(const LitValue& v) {
  if (auto b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (auto i = std::get_if<std::int32_t>(&v)) return std::to_string(*i);
  return std::get<BigInt>(v).str();
}

std::string print_pattern(const Pattern& p) {
  switch (p.kind) {
    case Pattern::Kind::Wildcard:
      return "_";
    case Pattern::Kind::Bind:
      if (p.subs.empty()) return p.name.str();
      return p.name.str() + " @ " + print_pattern(p.subs[0]);
    case Pattern::Kind::Ctor:
    case Pattern::Kind::Tuple: {
      std::string s = p.kind == Pattern::Kind::Ctor ? p.ctor.str() : "";
      s += "(";
      for (std::size_t i = 0; i < p.subs.size(); ++i) {
        if (i) s += ", ";
        s += print_pattern(p.subs[i]);
      }
      return s + ")";
    }
  }
  return "_";
}

std::string print_expr(const Expr& e) {
  Printer p;
  p.print(e, kStmt);
  return p.out.str();
}

std::string print_function(const FunDef& f) {
  Printer p;
  p.out << "def " << f.name.str();
  if (!f.type_params.empty()) {
    p.out << '[';
    for (std::size_t i = 0; i < f.type_params.size(); ++i) {
      if (i) p.out << ", ";
      p.out << f.type_params[i].str();
    }
    p.out << ']';
  }
  p.out << '(';
  for (std::size_t i = 0; i < f.params.size(); ++i) {
    if (i) p.out << ", ";
    p.out << f.params[i].name.str() << ": " << print_type(f.params[i].type);
  }
  p.out << "): " << print_type(f.return_type) << " = {";
  p.indent = 1;
  if (f.precondition) {
    p.newline();
    p.out << "require(";
    p.print(f.precondition, kStmt);
    p.out << ')';
  }
  p.newline();
  p.print_block_body(f.body);
  p.indent = 0;
  p.newline();
  p.out << '}';
  if (f.postcondition) {
    p.out << " ensuring { " << f.postcondition->binder.str() << " => ";
    p.print(f.postcondition->predicate, kStmt);
    p.out << " }";
  }
  return p.out.str();
}

std::string print_adt(const AdtDef& a) {
  std::string s = "adt " + a.name.str();
  if (!a.type_params.empty()) {
    s += "[";
    for (std::size_t i = 0; i < a.type_params.size(); ++i) {
      if (i) s += ", ";
      s += a.type_params[i].str();
    }
    s += "]";
  }
  s += " =";
  for (std::size_t i = 0; i < a.ctors.size(); ++i) {
    s += i ? " | " : " ";
    s += a.ctors[i].name.str() + "(";
    for (std::size_t j = 0; j < a.ctors[i].fields.size(); ++j) {
      if (j) s += ", ";
      s += a.ctors[i].fields[j].name.str() + ": " + print_type(a.ctors[i].fields[j].type);
    }
    s += ")";
  }
  return s;
}

std::string print_program(const Program& p) {
  std::string s;
  for (const auto& a : p.adts()) s += print_adt(a) + "\n";
  for (const auto& f : p.functions()) s += "\n" + print_function(f) + "\n";
  return s;
}

}  // namespace synthe
