// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tangent/catalog/reductive.hpp"
#include "tangent/core/expr.hpp"
#include "tangent/core/lexer.hpp"

namespace tangent {

// A factor with unevaluated integer arguments, e.g. SO*(2(p+q)).
struct FactorTemplate {
  FactorKind kind = FactorKind::T;
  std::vector<Expr> args;
  bool halve = false;  // SU*(2n), SO*(2n), U*(2n) store n
  std::optional<Expr> same_as;  // the GL(2n,R) size in SU*(2n)∩GL(2n,R)

  ReductiveFactor instantiate(const Env& env) const {
    std::vector<std::int64_t> vals;
    for (const auto& a : args) vals.push_back(a.eval(env));
    if (same_as && same_as->eval(env) != vals.at(0))
      throw Error("SU*(2n)\xE2\x88\xA9GL(m,R) requires m = 2n");
    if (halve) {
      if (vals.at(0) % 2 != 0) throw Error(std::string(kind_name(kind)) + " requires an even matrix size");
      vals[0] /= 2;
    }
    for (auto v : vals)
      if (v < 0) throw Error(std::string("negative parameter for ") + kind_name(kind));
    return ReductiveFactor(kind, std::move(vals));
  }
};

struct GroupTemplate {
  bool determinant_constraint = false;
  std::vector<FactorTemplate> factors;

  ReductiveAlgebraDesc instantiate(const Env& env) const {
    ReductiveAlgebraDesc d;
    d.determinant_constraint = determinant_constraint;
    for (const auto& f : factors) d.factors.push_back(f.instantiate(env));
    return normalize(std::move(d));
  }
};

struct PairTemplate {
  GroupTemplate g;
  GroupTemplate h;
  std::vector<std::pair<std::string, Expr>> bindings;
  std::string text;
};

namespace grammar {

inline bool is_field(const Token& t) {
  return t.kind == Token::Kind::Ident && (t.text == "R" || t.text == "C" || t.text == "H");
}

struct RawFactor {
  std::string name;
  bool star = false;
  std::vector<Expr> args;
  std::string field;
  std::optional<Expr> gl_size;
  std::size_t pos = 0;
};

inline FactorTemplate resolve(RawFactor raw) {
  FactorTemplate t;
  const std::string& n = raw.name;
  const std::size_t argc = raw.args.size();
  const std::string& fld = raw.field;
  auto fail = [&]() -> FactorTemplate {
    std::string sig = n + (raw.star ? "*" : "") + "(";
    for (std::size_t i = 0; i < argc; ++i) sig += (i ? "," : "") + std::string("e");
    if (!fld.empty()) sig += (argc ? "," : "") + fld;
    throw SyntaxError("unsupported group " + sig + ")", raw.pos);
  };
  auto set = [&](FactorKind k, bool halve = false) {
    t.kind = k;
    t.args = raw.args;
    t.halve = halve;
    return t;
  };
  if (raw.gl_size) {
    if (n != "SU" || !raw.star || argc != 1 || !fld.empty()) fail();
    set(FactorKind::SUstarGLR, true);
    t.same_as = raw.gl_size;
    return t;
  }
  if (raw.star) {
    if (argc != 1 || !fld.empty()) fail();
    if (n == "SU") return set(FactorKind::SUstar, true);
    if (n == "SO") return set(FactorKind::SOstar, true);
    if (n == "U") return set(FactorKind::Ustar, true);
    return fail();
  }
  const bool orth = n == "SO" || n == "SO0" || n == "SO_0" || n == "Spin";
  if (argc == 1 && fld == "R") {
    if (n == "SL") return set(FactorKind::SL_R);
    if (n == "GL") return set(FactorKind::GL_R);
    if (n == "Sp") return set(FactorKind::Sp_R);
  }
  if (argc == 1 && fld == "C") {
    if (n == "SL") return set(FactorKind::SL_C);
    if (n == "GL") return set(FactorKind::GL_C);
    if (n == "Sp") return set(FactorKind::Sp_C);
    if (orth) return set(FactorKind::SO_C);
  }
  if (argc == 2 && fld.empty()) {
    if (n == "SU") return set(FactorKind::SU);
    if (orth) return set(FactorKind::SO0);
    if (n == "Sp") return set(FactorKind::Sp);
    if (n == "U") return set(FactorKind::U);
  }
  if (argc == 1 && fld.empty()) {
    if (n == "SU") return set(FactorKind::SU_compact);
    if (orth) return set(FactorKind::SO_compact);
    if (n == "Sp") return set(FactorKind::Sp_compact);
    if (n == "U") return set(FactorKind::U_compact);
  }
  return fail();
}

inline bool product_sign(const TokenStream& ts) {
  const Token& t = ts.peek();
  if (t.is("\xC3\x97")) return true;
  if (t.is_ident("x") || t.is_ident("X")) return true;
  return t.is("*") && ts.peek(1).kind == Token::Kind::Ident;
}

GroupTemplate parse_group(TokenStream& ts);

inline void parse_factor(TokenStream& ts, GroupTemplate& out) {
  const Token t = ts.peek();
  if (t.kind != Token::Kind::Ident) throw SyntaxError("expected a group name", t.pos);
  ts.next();
  if (t.text == "R" || t.text == "Rx") {
    if (t.text == "R" && ts.accept("^")) {
      if (!(ts.accept("\xC3\x97") || ts.accept("*") || ts.peek().is_ident("x"))) throw SyntaxError("expected R^x", ts.peek().pos);
      if (ts.peek().is_ident("x")) ts.next();
    }
    FactorTemplate f;
    f.kind = FactorKind::R_split;
    out.factors.push_back(f);
    return;
  }
  if (t.text == "T") {
    FactorTemplate f;
    f.kind = FactorKind::T;
    out.factors.push_back(f);
    return;
  }
  if (t.text == "diag") {
    ts.expect("(");
    GroupTemplate inner = parse_group(ts);
    ts.expect(")");
    if (inner.determinant_constraint) throw SyntaxError("S(...) inside diag(...)", t.pos);
    for (auto& f : inner.factors) out.factors.push_back(std::move(f));
    return;
  }
  if (t.text == "G2" || t.text == "G_2") {
    ts.expect("(");
    const Token& two = ts.next();
    if (two.kind != Token::Kind::Number || two.value != 2) throw SyntaxError("only the split form G2(2) is supported", two.pos);
    ts.expect(")");
    FactorTemplate f;
    f.kind = FactorKind::G2split;
    out.factors.push_back(f);
    return;
  }
  RawFactor raw;
  raw.name = t.text;
  raw.pos = t.pos;
  if (ts.peek().is("*") && ts.peek(1).is("(")) {
    ts.next();
    raw.star = true;
  }
  ts.expect("(");
  for (;;) {
    if (is_field(ts.peek()) && (ts.peek(1).is(")") || ts.peek(1).is(","))) {
      raw.field = ts.next().text;
    } else {
      if (!raw.field.empty()) throw SyntaxError("field letter must come last", ts.peek().pos);
      raw.args.push_back(Expr::parse(ts));
    }
    if (ts.accept(")")) break;
    ts.expect(",");
  }
  if (ts.peek().is_ident("_0")) {
    ts.next();
    if (raw.name == "SO") raw.name = "SO0";
  }
  if (ts.accept("\xE2\x88\xA9") || (ts.peek().is_ident("cap") && (ts.next(), true))) {
    const Token& gl = ts.next();
    if (!gl.is_ident("GL")) throw SyntaxError("expected GL after intersection", gl.pos);
    ts.expect("(");
    raw.gl_size = Expr::parse(ts);
    ts.expect(",");
    if (!ts.peek().is_ident("R")) throw SyntaxError("expected GL(2n,R)", ts.peek().pos);
    ts.next();
    ts.expect(")");
  }
  out.factors.push_back(resolve(std::move(raw)));
}

inline GroupTemplate parse_group(TokenStream& ts) {
  GroupTemplate g;
  if (ts.peek().is_ident("S") && ts.peek(1).is("(")) {
    ts.next();
    ts.next();
    GroupTemplate inner = parse_group(ts);
    ts.expect(")");
    if (inner.determinant_constraint) throw SyntaxError("nested S(...)", ts.peek().pos);
    inner.determinant_constraint = true;
    g = std::move(inner);
  } else if (ts.peek().is("(")) {
    ts.next();
    g = parse_group(ts);
    ts.expect(")");
  } else {
    parse_factor(ts, g);
  }
  while (product_sign(ts)) {
    ts.next();
    if (ts.peek().is_ident("S") && ts.peek(1).is("(")) throw SyntaxError("S(...) must enclose the whole product", ts.peek().pos);
    if (ts.peek().is("(")) {
      ts.next();
      GroupTemplate inner = parse_group(ts);
      ts.expect(")");
      if (inner.determinant_constraint) throw SyntaxError("S(...) must enclose the whole product", ts.peek().pos);
      for (auto& f : inner.factors) g.factors.push_back(std::move(f));
    } else {
      parse_factor(ts, g);
    }
  }
  if (g.determinant_constraint && g.factors.empty()) throw SyntaxError("empty S(...)", ts.peek().pos);
  return g;
}

}  // namespace grammar

inline GroupTemplate parse_group_template(std::string_view text) {
  TokenStream ts(tokenize(text));
  GroupTemplate g = grammar::parse_group(ts);
  if (!ts.at_end()) throw SyntaxError("trailing input after group", ts.peek().pos);
  return g;
}

inline PairTemplate parse_pair_template(std::string_view text) {
  TokenStream ts(tokenize(text));
  PairTemplate p;
  p.text = std::string(text);
  p.g = grammar::parse_group(ts);
  ts.expect("/");
  p.h = grammar::parse_group(ts);
  if (ts.peek().is_ident("with")) {
    ts.next();
    for (;;) {
      const Token& name = ts.next();
      if (name.kind != Token::Kind::Ident) throw SyntaxError("expected a parameter name", name.pos);
      ts.expect("=");
      p.bindings.emplace_back(name.text, Expr::parse(ts));
      if (!ts.accept(",")) break;
    }
  }
  if (!ts.at_end()) throw SyntaxError("unexpected input", ts.peek().pos);
  return p;
}

}  // namespace tangent
