// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tangent/core/lexer.hpp"
#include "tangent/invariants/hurwitz_radon.hpp"

namespace tangent {

using Env = std::map<std::string, std::int64_t, std::less<>>;

// Integer expressions over named parameters. Booleans are 0/1. Division and
// remainder are Euclidean (floor for positive divisors).
class Expr {
 public:
  Expr() = default;

  static Expr number(std::int64_t v) {
    auto n = std::make_shared<Node>();
    n->op = "num";
    n->value = v;
    return Expr(n);
  }

  static Expr parse(std::string_view text) {
    TokenStream ts(tokenize(text));
    Expr e = parse(ts);
    if (!ts.at_end()) throw SyntaxError("trailing input in expression", ts.peek().pos);
    return e;
  }

  static Expr parse(TokenStream& ts) { return parse_or(ts); }

  bool valid() const { return node_ != nullptr; }

  std::int64_t eval(const Env& env) const { return eval(*node_, env); }
  bool test(const Env& env) const { return eval(env) != 0; }

  std::set<std::string> names() const {
    std::set<std::string> out;
    collect(*node_, out);
    return out;
  }

  // Top-level conjuncts, used to report which bound of a constraint failed.
  std::vector<Expr> conjuncts() const {
    std::vector<Expr> out;
    split_and(node_, out);
    return out;
  }

  std::string str() const { return render(*node_, 0); }

  bool is_constant() const { return node_ && node_->op == "num"; }

 private:
  struct Node {
    std::string op;
    std::int64_t value = 0;
    std::string name;
    std::vector<std::shared_ptr<const Node>> kids;
  };
  using NodePtr = std::shared_ptr<const Node>;

  explicit Expr(NodePtr n) : node_(std::move(n)) {}

  static NodePtr make(std::string op, std::vector<NodePtr> kids) {
    auto n = std::make_shared<Node>();
    n->op = std::move(op);
    n->kids = std::move(kids);
    return n;
  }

  static Expr parse_or(TokenStream& ts) {
    NodePtr lhs = parse_and(ts).node_;
    while (ts.accept("||")) lhs = make("||", {lhs, parse_and(ts).node_});
    return Expr(lhs);
  }
  static Expr parse_and(TokenStream& ts) {
    NodePtr lhs = parse_not(ts).node_;
    while (ts.accept("&&")) lhs = make("&&", {lhs, parse_not(ts).node_});
    return Expr(lhs);
  }
  static Expr parse_not(TokenStream& ts) {
    if (ts.accept("!")) return Expr(make("!", {parse_not(ts).node_}));
    return parse_cmp(ts);
  }
  static Expr parse_cmp(TokenStream& ts) {
    NodePtr lhs = parse_add(ts).node_;
    for (const char* op : {"==", "!=", "<=", ">=", "<", ">"}) {
      if (ts.accept(op)) return Expr(make(op, {lhs, parse_add(ts).node_}));
    }
    return Expr(lhs);
  }
  static Expr parse_add(TokenStream& ts) {
    NodePtr lhs = parse_mul(ts).node_;
    for (;;) {
      if (ts.accept("+"))
        lhs = make("+", {lhs, parse_mul(ts).node_});
      else if (ts.accept("-"))
        lhs = make("-", {lhs, parse_mul(ts).node_});
      else
        return Expr(lhs);
    }
  }
  static Expr parse_mul(TokenStream& ts) {
    NodePtr lhs = parse_unary(ts).node_;
    for (;;) {
      if (ts.peek().is("*") && starts_operand(ts.peek(1))) {
        ts.next();
        lhs = make("*", {lhs, parse_unary(ts).node_});
      } else if (ts.accept("/")) {
        lhs = make("/", {lhs, parse_unary(ts).node_});
      } else if (ts.accept("%")) {
        lhs = make("%", {lhs, parse_unary(ts).node_});
      } else {
        return Expr(lhs);
      }
    }
  }
  static bool starts_operand(const Token& t) {
    return t.kind == Token::Kind::Number || t.kind == Token::Kind::Ident || t.is("(") || t.is("-");
  }
  static Expr parse_unary(TokenStream& ts) {
    if (ts.accept("-")) return Expr(make("neg", {parse_unary(ts).node_}));
    return parse_primary(ts);
  }
  static Expr parse_primary(TokenStream& ts) {
    const Token& t = ts.peek();
    if (t.kind == Token::Kind::Number) {
      ts.next();
      NodePtr n = number(t.value).node_;
      // Juxtaposition after a literal multiplies: 2n, 2(p+q).
      const Token& after = ts.peek();
      if (after.kind == Token::Kind::Ident || after.is("(")) n = make("*", {n, parse_primary(ts).node_});
      return Expr(n);
    }
    if (t.kind == Token::Kind::Ident) {
      const std::string name = t.text;
      const std::size_t pos = t.pos;
      ts.next();
      if (ts.peek().is("(") && is_function(name)) {
        ts.next();
        std::vector<NodePtr> args;
        args.push_back(parse_or(ts).node_);
        while (ts.accept(",")) args.push_back(parse_or(ts).node_);
        ts.expect(")");
        const std::size_t want = (name == "min" || name == "max") ? 2 : 1;
        if (args.size() != want) throw SyntaxError("wrong number of arguments to " + name, pos);
        return Expr(make(name, std::move(args)));
      }
      if (name == "true") return number(1);
      if (name == "false") return number(0);
      auto n = std::make_shared<Node>();
      n->op = "var";
      n->name = name;
      return Expr(n);
    }
    if (ts.accept("(")) {
      Expr e = parse_or(ts);
      ts.expect(")");
      return e;
    }
    throw SyntaxError("expected a number, name or '('", t.pos);
  }
  static bool is_function(const std::string& name) {
    return name == "min" || name == "max" || name == "abs" || name == "rho";
  }

  static std::int64_t floordiv(std::int64_t a, std::int64_t b) {
    if (b == 0) throw Error("division by zero in expression");
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  }

  static std::int64_t eval(const Node& n, const Env& env) {
    const std::string& op = n.op;
    if (op == "num") return n.value;
    if (op == "var") {
      auto it = env.find(n.name);
      if (it == env.end()) throw Error("unbound parameter '" + n.name + "'");
      return it->second;
    }
    auto k = [&](std::size_t i) { return eval(*n.kids[i], env); };
    if (op == "&&") return k(0) != 0 && k(1) != 0;
    if (op == "||") return k(0) != 0 || k(1) != 0;
    if (op == "!") return k(0) == 0;
    if (op == "neg") return -k(0);
    if (op == "abs") return std::abs(k(0));
    if (op == "rho") return invariants::hurwitz_radon(k(0));
    const std::int64_t a = k(0);
    const std::int64_t b = k(1);
    if (op == "+") return a + b;
    if (op == "-") return a - b;
    if (op == "*") return a * b;
    if (op == "/") return floordiv(a, b);
    if (op == "%") return a - b * floordiv(a, b);
    if (op == "==") return a == b;
    if (op == "!=") return a != b;
    if (op == "<=") return a <= b;
    if (op == ">=") return a >= b;
    if (op == "<") return a < b;
    if (op == ">") return a > b;
    if (op == "min") return std::min(a, b);
    if (op == "max") return std::max(a, b);
    throw Error("bad expression node " + op);
  }

  static void collect(const Node& n, std::set<std::string>& out) {
    if (n.op == "var") out.insert(n.name);
    for (const auto& c : n.kids) collect(*c, out);
  }

  static void split_and(const NodePtr& n, std::vector<Expr>& out) {
    if (n->op == "&&") {
      split_and(n->kids[0], out);
      split_and(n->kids[1], out);
    } else {
      out.push_back(Expr(n));
    }
  }

  static int precedence(const std::string& op) {
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "!") return 3;
    if (op == "==" || op == "!=" || op == "<=" || op == ">=" || op == "<" || op == ">") return 4;
    if (op == "+" || op == "-") return 5;
    if (op == "*" || op == "/" || op == "%") return 6;
    if (op == "neg") return 7;
    return 8;
  }

  static std::string render(const Node& n, int outer) {
    const int p = precedence(n.op);
    std::string s;
    if (n.op == "num") {
      s = std::to_string(n.value);
    } else if (n.op == "var") {
      s = n.name;
    } else if (n.op == "!") {
      s = "!" + render(*n.kids[0], p);
    } else if (n.op == "neg") {
      s = "-" + render(*n.kids[0], p);
    } else if (is_function(n.op)) {
      s = n.op + "(";
      for (std::size_t i = 0; i < n.kids.size(); ++i) s += (i ? ", " : "") + render(*n.kids[i], 0);
      s += ")";
    } else {
      const bool tight = p >= 5;
      const std::string sep = tight ? n.op : " " + n.op + " ";
      s = render(*n.kids[0], p) + sep + render(*n.kids[1], p + 1);
    }
    if (p < outer) s = "(" + s + ")";
    return s;
  }

  NodePtr node_;
};

}  // namespace tangent
