#include "synthe/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>

namespace synthe {

ParseError::ParseError(SourcePos pos, const std::string& msg)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + msg),
      pos_(pos),
      detail_(msg) {}

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
  bool newline_before = false;
};

std::vector<Token> lex(std::string_view src) {
  static const char* const kPuncts[] = {"???", "=>", "==", "!=", "<=", ">=", "&&", "||", "(",
                                        ")",   "{",  "}",  "[",  "]",  ",",  ":",  ";",  ".",
                                        "=",   "<",  ">",  "+",  "-",  "*",  "/",  "%",  "!",
                                        "@",   "|"};
  std::vector<Token> out;
  int line = 1, col = 1;
  bool nl = true;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
        nl = true;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.pos = {line, col};
    t.newline_before = nl;
    nl = false;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' ||
                                src[j] == '$'))
        ++j;
      t.kind = Tok::Ident;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Number;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    bool matched = false;
    for (const char* p : kPuncts) {
      std::string_view pv(p);
      if (src.substr(i, pv.size()) == pv) {
        t.kind = Tok::Punct;
        t.text = std::string(pv);
        advance(pv.size());
        out.push_back(std::move(t));
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(t.pos, std::string("unexpected character '") + c + "'");
  }
  Token end;
  end.kind = Tok::End;
  end.pos = {line, col};
  end.newline_before = true;
  out.push_back(end);
  return out;
}

const std::set<std::string>& keywords() {
  static const std::set<std::string> k = {"adt",   "def",    "val",    "if",      "else",
                                          "match", "case",   "choose", "require", "ensuring",
                                          "true",  "false"};
  return k;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::pair<std::vector<AdtDef>, std::vector<FunDef>> program() {
    std::vector<AdtDef> adts;
    std::vector<FunDef> funs;
    while (!at_end()) {
      if (is_ident("adt")) {
        adts.push_back(adt_def());
      } else if (is_ident("def")) {
        funs.push_back(fun_def());
      } else {
        fail("expected 'adt' or 'def'");
      }
    }
    return {std::move(adts), std::move(funs)};
  }

  Expr expression_only() {
    Expr e = expr();
    if (!at_end()) fail("unexpected '" + peek().text + "' after expression");
    return e;
  }

  Type type_only() {
    Type t = type();
    if (!at_end()) fail("unexpected '" + peek().text + "' after type");
    return t;
  }

 private:
  std::vector<Token> toks_;
  std::size_t idx_ = 0;
  std::set<Symbol> tparams_;

  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(idx_ + k, toks_.size() - 1)];
  }
  bool at_end() const { return peek().kind == Tok::End; }
  SourcePos pos() const { return peek().pos; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos(), msg); }

  bool is_punct(std::string_view p, std::size_t k = 0) const {
    return peek(k).kind == Tok::Punct && peek(k).text == p;
  }
  bool is_ident(std::string_view s, std::size_t k = 0) const {
    return peek(k).kind == Tok::Ident && peek(k).text == s;
  }
  bool accept(std::string_view p) {
    if (is_punct(p)) {
      ++idx_;
      return true;
    }
    return false;
  }
  void expect(std::string_view p) {
    if (!accept(p)) {
      std::string got = at_end() ? "end of input" : "'" + peek().text + "'";
      fail("expected '" + std::string(p) + "' but found " + got);
    }
  }
  void expect_keyword(std::string_view k) {
    if (!is_ident(k)) fail("expected '" + std::string(k) + "'");
    ++idx_;
  }
  Symbol identifier(const char* what = "identifier") {
    if (peek().kind != Tok::Ident || keywords().count(peek().text)) fail(std::string("expected ") + what);
    return Symbol(toks_[idx_++].text);
  }

  std::vector<Symbol> type_param_list() {
    std::vector<Symbol> out;
    if (accept("[")) {
      do {
        out.push_back(identifier("type parameter"));
      } while (accept(","));
      expect("]");
    }
    return out;
  }

  Type type() {
    if (accept("(")) {
      std::vector<Type> elems{type()};
      while (accept(",")) elems.push_back(type());
      expect(")");
      if (elems.size() == 1) return elems[0];
      return Type::tuple(std::move(elems));
    }
    Symbol name = identifier("type");
    const std::string& s = name.str();
    if (s == "Boolean" || s == "Bool") return Type::boolean();
    if (s == "Int") return Type::int32();
    if (s == "BigInt") return Type::bigint();
    if (tparams_.count(name)) return Type::var(name);
    std::vector<Type> args;
    if (accept("[")) {
      do {
        args.push_back(type());
      } while (accept(","));
      expect("]");
    }
    return Type::adt(name, std::move(args));
  }

  AdtDef adt_def() {
    AdtDef a;
    a.pos = pos();
    expect_keyword("adt");
    a.name = identifier("ADT name");
    a.type_params = type_param_list();
    tparams_ = {a.type_params.begin(), a.type_params.end()};
    expect("=");
    accept("|");
    do {
      CtorDef c;
      c.name = identifier("constructor name");
      expect("(");
      if (!is_punct(")")) {
        do {
          FieldDef f;
          f.name = identifier("field name");
          expect(":");
          f.type = type();
          c.fields.push_back(std::move(f));
        } while (accept(","));
      }
      expect(")");
      a.ctors.push_back(std::move(c));
    } while (accept("|"));
    tparams_.clear();
    return a;
  }

  FunDef fun_def() {
    FunDef f;
    f.pos = pos();
    expect_keyword("def");
    f.name = identifier("function name");
    f.type_params = type_param_list();
    tparams_ = {f.type_params.begin(), f.type_params.end()};
    expect("(");
    if (!is_punct(")")) {
      do {
        Param p;
        p.name = identifier("parameter name");
        expect(":");
        p.type = type();
        f.params.push_back(std::move(p));
      } while (accept(","));
    }
    expect(")");
    expect(":");
    f.return_type = type();
    expect("=");
    if (is_punct("{") && is_ident("require", 1)) {
      SourcePos bp = pos();
      expect("{");
      expect_keyword("require");
      expect("(");
      f.precondition = expr();
      expect(")");
      accept(";");
      f.body = block_contents(bp);
      expect("}");
    } else {
      f.body = expr();
    }
    if (is_ident("ensuring")) {
      ++idx_;
      bool brace = is_punct("{");
      if (!brace) expect("(");
      else ++idx_;
      Postcondition post;
      if (accept("(")) {
        post.binder = identifier("binder");
        if (accept(":")) type();
        expect(")");
      } else {
        post.binder = identifier("binder");
      }
      expect("=>");
      post.predicate = expr();
      expect(brace ? "}" : ")");
      f.postcondition = std::move(post);
    }
    tparams_.clear();
    return f;
  }

  // vals followed by a result expression; stops before '}' or 'case'.
  Expr block_contents(SourcePos start) {
    struct Val {
      Symbol name;
      Expr value;
      SourcePos pos;
    };
    std::vector<Val> vals;
    while (is_ident("val")) {
      SourcePos vp = pos();
      ++idx_;
      Symbol name = identifier("variable name");
      if (accept(":")) type();
      expect("=");
      Expr v = expr();
      accept(";");
      vals.push_back({name, v, vp});
    }
    if (is_punct("}") || is_ident("case") || at_end()) {
      if (vals.empty()) throw ParseError(start, "empty block");
      fail("block must end with an expression");
    }
    Expr result = expr();
    accept(";");
    for (auto it = vals.rbegin(); it != vals.rend(); ++it)
      result = Expr::let(it->name, it->value, result, it->pos);
    return result;
  }

  Expr expr() {
    if (is_ident("if")) {
      SourcePos p = pos();
      ++idx_;
      expect("(");
      Expr c = expr();
      expect(")");
      Expr t = expr();
      expect_keyword("else");
      Expr e = expr();
      return Expr::ite(c, t, e, p);
    }
    Expr e = or_expr();
    while (is_ident("match")) {
      SourcePos p = pos();
      ++idx_;
      expect("{");
      std::vector<Pattern> pats;
      std::vector<Expr> bodies;
      while (is_ident("case")) {
        ++idx_;
        pats.push_back(pattern());
        expect("=>");
        bodies.push_back(block_contents(pos()));
      }
      if (pats.empty()) fail("match needs at least one case");
      expect("}");
      e = Expr::match(e, std::move(pats), std::move(bodies), {}, p);
    }
    return e;
  }

  Pattern pattern() {
    if (peek().kind == Tok::Ident && peek().text == "_") {
      ++idx_;
      return Pattern::wildcard();
    }
    if (accept("(")) {
      std::vector<Pattern> subs{pattern()};
      while (accept(",")) subs.push_back(pattern());
      expect(")");
      if (subs.size() == 1) return subs[0];
      return Pattern::tuple(std::move(subs));
    }
    Symbol name = identifier("pattern");
    if (accept("@")) return Pattern::bind_as(name, pattern());
    if (accept("(")) {
      std::vector<Pattern> subs;
      if (!is_punct(")")) {
        do {
          subs.push_back(pattern());
        } while (accept(","));
      }
      expect(")");
      return Pattern::constructor(name, std::move(subs));
    }
    if (accept(":")) type();
    return Pattern::bind(name);
  }

  // && and || group to the right: a || b || c is a || (b || c).
  Expr or_expr() {
    Expr e = and_expr();
    if (!is_punct("||")) return e;
    SourcePos p = pos();
    ++idx_;
    return Expr::binary(BinaryOp::Or, e, or_expr(), p);
  }

  Expr and_expr() {
    Expr e = eq_expr();
    if (!is_punct("&&")) return e;
    SourcePos p = pos();
    ++idx_;
    return Expr::binary(BinaryOp::And, e, and_expr(), p);
  }

  Expr eq_expr() {
    Expr e = cmp_expr();
    if (is_punct("==") || is_punct("!=")) {
      SourcePos p = pos();
      bool neq = peek().text == "!=";
      ++idx_;
      Expr r = cmp_expr();
      e = Expr::binary(BinaryOp::Eq, e, r, p);
      if (neq) e = Expr::unary(UnaryOp::Not, e, p);
    }
    return e;
  }

  Expr cmp_expr() {
    Expr e = add_expr();
    for (const char* op : {"<", "<=", ">", ">="}) {
      if (is_punct(op)) {
        SourcePos p = pos();
        ++idx_;
        Expr r = add_expr();
        std::string_view o(op);
        if (o == "<") return Expr::binary(BinaryOp::Lt, e, r, p);
        if (o == "<=") return Expr::binary(BinaryOp::Le, e, r, p);
        if (o == ">") return Expr::binary(BinaryOp::Lt, r, e, p);
        return Expr::binary(BinaryOp::Le, r, e, p);
      }
    }
    return e;
  }

  Expr add_expr() {
    Expr e = mul_expr();
    while (is_punct("+") || is_punct("-")) {
      SourcePos p = pos();
      BinaryOp op = peek().text == "+" ? BinaryOp::Add : BinaryOp::Sub;
      ++idx_;
      e = Expr::binary(op, e, mul_expr(), p);
    }
    return e;
  }

  Expr mul_expr() {
    Expr e = unary_expr();
    while (is_punct("*") || is_punct("/") || is_punct("%")) {
      SourcePos p = pos();
      BinaryOp op = peek().text == "*"   ? BinaryOp::Mul
                    : peek().text == "/" ? BinaryOp::Div
                                         : BinaryOp::Mod;
      ++idx_;
      e = Expr::binary(op, e, unary_expr(), p);
    }
    return e;
  }

  Expr unary_expr() {
    SourcePos p = pos();
    if (accept("!")) return Expr::unary(UnaryOp::Not, unary_expr(), p);
    if (accept("-")) {
      Expr operand = unary_expr();
      if (operand.kind() == ExprKind::Literal) {
        if (auto b = std::get_if<BigInt>(&operand->literal))
          return Expr::literal(BigInt(-*b), operand.type(), p);
      }
      return Expr::unary(UnaryOp::Neg, operand, p);
    }
    return postfix_expr();
  }

  Expr postfix_expr() {
    Expr e = primary();
    while (is_punct(".")) {
      SourcePos p = pos();
      ++idx_;
      Symbol name = identifier("field name");
      const std::string& s = name.str();
      if (s == "isInstanceOf") {
        expect("[");
        Symbol ctor = identifier("constructor name");
        expect("]");
        e = Expr::is_ctor(e, ctor, p);
      } else if (s.size() > 1 && s[0] == '_' &&
                 s.find_first_not_of("0123456789", 1) == std::string::npos) {
        e = Expr::tuple_select(e, std::stoi(s.substr(1)), p);
      } else {
        e = Expr::field(e, name, {}, p);
      }
    }
    return e;
  }

  std::vector<Expr> arguments() {
    std::vector<Expr> args;
    expect("(");
    if (!is_punct(")")) {
      do {
        args.push_back(expr());
      } while (accept(","));
    }
    expect(")");
    return args;
  }

  Expr primary() {
    SourcePos p = pos();
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      ++idx_;
      return Expr::literal(BigInt(t.text), Type(), p);
    }
    if (accept("???")) return Expr::hole(Type(), p);
    if (is_punct("(")) {
      ++idx_;
      if (accept(")")) fail("empty tuple");
      std::vector<Expr> elems{expr()};
      while (accept(",")) elems.push_back(expr());
      expect(")");
      if (elems.size() == 1) return elems[0];
      return Expr::tuple(std::move(elems), p);
    }
    if (is_punct("{")) {
      ++idx_;
      Expr e = block_contents(p);
      expect("}");
      return e;
    }
    if (t.kind != Tok::Ident) fail("expected expression but found '" + t.text + "'");
    if (t.text == "true" || t.text == "false") {
      ++idx_;
      return Expr::literal(t.text == "true", Type::boolean(), p);
    }
    if (t.text == "choose") return choose();
    if (t.text == "BigInt" && is_punct("(", 1)) {
      idx_ += 2;
      Expr v = unary_expr();
      if (v.kind() != ExprKind::Literal || !std::holds_alternative<BigInt>(v->literal))
        throw ParseError(p, "BigInt(...) expects an integer literal");
      expect(")");
      return Expr::literal(v->literal, Type::bigint(), p);
    }
    if (t.text == "if") return expr();
    Symbol name = identifier("expression");
    std::vector<Type> targs;
    if (is_punct("[") && !peek().newline_before) {
      ++idx_;
      do {
        targs.push_back(type());
      } while (accept(","));
      expect("]");
      if (!is_punct("(")) fail("expected '(' after type arguments");
    }
    if (is_punct("(") && !peek().newline_before)
      return Expr::call(name, std::move(targs), arguments(), Type(), p);
    return Expr::var(name, Type(), p);
  }

  Expr choose() {
    SourcePos p = pos();
    ++idx_;
    bool brace = is_punct("{");
    if (!brace) expect("(");
    else ++idx_;
    std::vector<Binder> binders;
    if (accept("(")) {
      do {
        Binder b;
        b.name = identifier("binder");
        if (accept(":")) b.type = type();
        binders.push_back(b);
      } while (accept(","));
      expect(")");
    } else {
      binders.push_back({identifier("binder"), Type()});
    }
    expect("=>");
    Expr pred = expr();
    expect(brace ? "}" : ")");
    return Expr::choose(std::move(binders), pred, Type(), p);
  }
};

struct Arity {
  std::size_t params;
  std::size_t type_params;
};

class Resolver {
 public:
  Resolver(const std::vector<AdtDef>& adts, const std::vector<FunDef>& funs, bool check_vars)
      : check_vars_(check_vars) {
    for (const auto& a : adts) {
      if (!adts_.emplace(a.name, a.type_params.size()).second)
        throw ParseError(a.pos, "duplicate ADT '" + a.name.str() + "'");
      for (const auto& c : a.ctors) {
        if (!ctors_.emplace(c.name, Arity{c.fields.size(), a.type_params.size()}).second)
          throw ParseError(a.pos, "duplicate constructor '" + c.name.str() + "'");
        std::set<Symbol> fields;
        for (const auto& f : c.fields)
          if (!fields.insert(f.name).second)
            throw ParseError(a.pos, "duplicate field '" + f.name.str() + "' in " + c.name.str());
      }
    }
    for (const auto& f : funs) {
      if (ctors_.count(f.name))
        throw ParseError(f.pos, "function '" + f.name.str() + "' clashes with a constructor");
      if (!funs_.emplace(f.name, Arity{f.params.size(), f.type_params.size()}).second)
        throw ParseError(f.pos, "duplicate function '" + f.name.str() + "'");
    }
  }

  void check_type(const Type& t, SourcePos pos) const {
    if (!t.known()) return;
    if (t.kind() == Type::Kind::Adt) {
      auto it = adts_.find(t.name());
      if (it == adts_.end()) throw ParseError(pos, "unresolved type '" + t.name().str() + "'");
      if (it->second != t.args().size())
        throw ParseError(pos, "type '" + t.name().str() + "' expects " +
                                  std::to_string(it->second) + " argument(s), got " +
                                  std::to_string(t.args().size()));
    }
    for (const auto& a : t.args()) check_type(a, pos);
  }

  Expr resolve(const Expr& e, std::vector<Symbol>& scope) const {
    const ExprNode& n = *e;
    switch (n.kind) {
      case ExprKind::Var:
        if (check_vars_ && !in_scope(n.name, scope))
          throw ParseError(n.pos, "unresolved name '" + n.name.str() + "'");
        return e;
      case ExprKind::Call: {
        std::vector<Expr> args;
        for (const auto& c : n.children) args.push_back(resolve(c, scope));
        if (auto it = ctors_.find(n.name); it != ctors_.end()) {
          check_arity(n, it->second.params, "constructor");
          if (!n.type_args.empty())
            throw ParseError(n.pos, "constructor '" + n.name.str() + "' takes no type arguments");
          return Expr::ctor(n.name, std::move(args), Type(), n.pos);
        }
        if (auto it = funs_.find(n.name); it != funs_.end()) {
          check_arity(n, it->second.params, "function");
          if (!n.type_args.empty() && n.type_args.size() != it->second.type_params)
            throw ParseError(n.pos, "function '" + n.name.str() + "' expects " +
                                        std::to_string(it->second.type_params) +
                                        " type argument(s)");
          for (const auto& t : n.type_args) check_type(t, n.pos);
          return e.with_children(std::move(args));
        }
        if (check_vars_ || !ctors_.empty() || !funs_.empty())
          throw ParseError(n.pos, "unresolved name '" + n.name.str() + "'");
        return e.with_children(std::move(args));
      }
      case ExprKind::Let: {
        Expr v = resolve(n.children[0], scope);
        scope.push_back(n.name);
        Expr b = resolve(n.children[1], scope);
        scope.pop_back();
        return e.with_children({v, b});
      }
      case ExprKind::Match: {
        std::vector<Expr> kids{resolve(n.children[0], scope)};
        for (std::size_t i = 0; i < n.patterns.size(); ++i) {
          std::vector<Symbol> names;
          check_pattern(n.patterns[i], n.pos);
          n.patterns[i].collect_binders(names);
          std::set<Symbol> uniq(names.begin(), names.end());
          if (uniq.size() != names.size())
            throw ParseError(n.pos, "pattern binds a variable twice");
          scope.insert(scope.end(), names.begin(), names.end());
          kids.push_back(resolve(n.children[i + 1], scope));
          scope.resize(scope.size() - names.size());
        }
        return e.with_children(std::move(kids));
      }
      case ExprKind::Choose: {
        for (const auto& b : n.binders) {
          check_type(b.type, n.pos);
          scope.push_back(b.name);
        }
        Expr pred = resolve(n.children[0], scope);
        scope.resize(scope.size() - n.binders.size());
        return e.with_children({pred});
      }
      case ExprKind::IsCtor:
        if (!ctors_.count(n.name) && (check_vars_ || !ctors_.empty()))
          throw ParseError(n.pos, "unresolved constructor '" + n.name.str() + "'");
        [[fallthrough]];
      default: {
        if (n.children.empty()) return e;
        std::vector<Expr> kids;
        for (const auto& c : n.children) kids.push_back(resolve(c, scope));
        return e.with_children(std::move(kids));
      }
    }
  }

 private:
  bool check_vars_;
  std::map<Symbol, std::size_t> adts_;
  std::map<Symbol, Arity> ctors_;
  std::map<Symbol, Arity> funs_;

  static bool in_scope(Symbol s, const std::vector<Symbol>& scope) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (*it == s) return true;
    return false;
  }

  static void check_arity(const ExprNode& n, std::size_t expected, const char* what) {
    if (n.children.size() != expected)
      throw ParseError(n.pos, std::string(what) + " '" + n.name.str() + "' expects " +
                                  std::to_string(expected) + " argument(s), got " +
                                  std::to_string(n.children.size()));
  }

  void check_pattern(const Pattern& p, SourcePos pos) const {
    if (p.kind == Pattern::Kind::Ctor) {
      auto it = ctors_.find(p.ctor);
      if (it == ctors_.end())
        throw ParseError(pos, "unresolved constructor '" + p.ctor.str() + "' in pattern");
      if (it->second.params != p.subs.size())
        throw ParseError(pos, "constructor '" + p.ctor.str() + "' expects " +
                                  std::to_string(it->second.params) + " sub-pattern(s)");
    }
    for (const auto& s : p.subs) check_pattern(s, pos);
  }
};

}  // namespace

Program parse_program(std::string_view text) {
  Parser parser(lex(text));
  auto [adts, funs] = parser.program();
  Resolver r(adts, funs, true);
  for (const auto& a : adts)
    for (const auto& c : a.ctors)
      for (const auto& f : c.fields) r.check_type(f.type, a.pos);
  for (auto& f : funs) {
    for (const auto& p : f.params) r.check_type(p.type, f.pos);
    r.check_type(f.return_type, f.pos);
    std::vector<Symbol> scope;
    for (const auto& p : f.params) scope.push_back(p.name);
    if (f.precondition) f.precondition = r.resolve(f.precondition, scope);
    f.body = r.resolve(f.body, scope);
    if (f.postcondition) {
      scope.push_back(f.postcondition->binder);
      f.postcondition->predicate = r.resolve(f.postcondition->predicate, scope);
    }
  }
  return Program(std::move(adts), std::move(funs));
}

Expr parse_expr(std::string_view text, const Program* context) {
  Parser parser(lex(text));
  Expr e = parser.expression_only();
  if (!context) return e;
  Resolver r(context->adts(), context->functions(), false);
  std::vector<Symbol> scope;
  return r.resolve(e, scope);
}

Type parse_type(std::string_view text, const Program* context) {
  Parser parser(lex(text));
  Type t = parser.type_only();
  if (context) {
    Resolver r(context->adts(), context->functions(), false);
    r.check_type(t, {1, 1});
  }
  return t;
}

}  // namespace synthe
