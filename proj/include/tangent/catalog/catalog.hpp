// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tangent/catalog/certificate.hpp"
#include "tangent/catalog/pair_grammar.hpp"
#include "tangent/catalog/reductive.hpp"
#include "tangent/charweil/restriction.hpp"
#include "tangent/core/error.hpp"
#include "tangent/core/expr.hpp"
#include "tangent/invariants/invariants.hpp"
#include "tangent/weyl/group.hpp"
#include "tangent/weyl/subspace.hpp"

namespace tangent {

using Params = std::vector<std::int64_t>;

enum class FamilyKind { Standard, Riemannian, GroupManifold };

inline const char* family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::Standard: return "standard";
    case FamilyKind::Riemannian: return "riemannian";
    case FamilyKind::GroupManifold: return "group_manifold";
  }
  return "?";
}

struct ParamTransform {
  std::string family;
  std::vector<Expr> params;
};

// Where a family sits in the published tables, with the row's condition
// column and the obstruction numerals it lists.
struct TableAnnotation {
  int table = 0;
  std::string g;
  std::string h;
  std::string condition_label;
  Expr condition;
  std::vector<std::string> coverage;
  std::vector<std::string> methods;
  std::string note;
};

struct PairFamily {
  std::string id;
  FamilyKind kind = FamilyKind::Standard;
  std::string pair_text;
  PairTemplate pair;
  std::vector<std::string> params;
  Expr constraint;
  std::vector<std::vector<Expr>> symmetries;
  std::optional<ParamTransform> associated;
  std::optional<TableAnnotation> table;
  std::optional<Expr> open;  // parameter range with no known answer

  Env env(const Params& values) const {
    if (values.size() != params.size()) throw Error("family " + id + " takes " + std::to_string(params.size()) + " parameters");
    Env e;
    for (std::size_t i = 0; i < params.size(); ++i) e[params[i]] = values[i];
    return e;
  }
};

struct ASpaceData {
  weyl::WeylType weyl_type = weyl::WeylType::A;
  std::size_t rank = 0;
  weyl::RationalSubspace a;
  weyl::RationalSubspace a_h;
};

struct SymmetricPairInstance {
  std::string family_id;
  std::vector<std::string> param_names;
  Params params;
  ReductiveAlgebraDesc g;
  ReductiveAlgebraDesc h;
  std::vector<Rewrite> rewrites;
  std::optional<ASpaceData> a_space;

  Env env() const {
    Env e;
    for (std::size_t i = 0; i < params.size(); ++i) e[param_names[i]] = params[i];
    return e;
  }

  std::string pair() const { return g.str() + "/" + h.str(); }

  std::string bindings() const {
    std::string s;
    for (std::size_t i = 0; i < params.size(); ++i)
      s += (i ? ", " : "") + param_names[i] + "=" + std::to_string(params[i]);
    return s;
  }

  std::string str() const { return params.empty() ? pair() : pair() + " with " + bindings(); }

  friend bool operator==(const SymmetricPairInstance& a, const SymmetricPairInstance& b) {
    return a.family_id == b.family_id && a.params == b.params;
  }
  friend bool operator<(const SymmetricPairInstance& a, const SymmetricPairInstance& b) {
    return std::tie(a.family_id, a.params) < std::tie(b.family_id, b.params);
  }
};

struct SubspaceSpec {
  enum class Kind { Coordinates, PairedNegation, Matrix };
  Kind kind = Kind::Coordinates;
  Expr first;
  Expr count;
  std::vector<std::vector<Rational>> rows;

  weyl::RationalSubspace build(std::size_t ambient, const Env& env) const {
    switch (kind) {
      case Kind::Coordinates: {
        const auto f = first.eval(env), c = count.eval(env);
        if (f < 0 || c < 0) throw CatalogError("negative coordinate block in subspace data");
        return weyl::RationalSubspace::coordinates(ambient, static_cast<std::size_t>(f), static_cast<std::size_t>(c));
      }
      case Kind::PairedNegation: {
        // {(a_1..a_m, -a_1..-a_m)} inside Q^{2m}
        if (ambient % 2) throw CatalogError("paired negation needs an even ambient dimension");
        const std::size_t m = ambient / 2;
        std::vector<weyl::Vector> vs;
        for (std::size_t i = 0; i < m; ++i) {
          weyl::Vector v(ambient, Rational(0));
          v[i] = 1;
          v[m + i] = -1;
          vs.push_back(std::move(v));
        }
        return weyl::RationalSubspace::span(ambient, std::move(vs));
      }
      case Kind::Matrix: {
        for (const auto& r : rows)
          if (r.size() != ambient) throw CatalogError("subspace matrix row has the wrong length");
        return weyl::RationalSubspace::span(ambient, rows);
      }
    }
    throw CatalogError("bad subspace spec");
  }
};

struct WeylChoice {
  std::optional<Expr> when;
  weyl::WeylType type = weyl::WeylType::A;
};

struct ComparisonRule {
  std::string family;
  Expr condition;
  std::optional<GroupTemplate> h_prime;
  std::string h_prime_text;
  std::vector<WeylChoice> weyl;
  Expr rank;
  std::optional<SubspaceSpec> a_h;
  std::optional<SubspaceSpec> a_h_prime;

  bool has_witness() const { return h_prime && a_h && a_h_prime && !weyl.empty(); }

  weyl::WeylType weyl_type(const Env& env) const {
    for (const auto& w : weyl)
      if (!w.when || w.when->test(env)) return w.type;
    throw CatalogError("no Weyl group type applies for comparison rule on " + family);
  }
};

struct PfisterRule {
  std::string family;
  std::string field;  // "R" or "C"
  Expr n;
  Expr condition;
  bool evenness_lemma = true;
};

struct PontrjaginRule {
  std::string family;
  Expr condition;
  charweil::BundleFamily bundle = charweil::BundleFamily::ComplexGrassmannian;
  std::vector<Expr> args;
  Expr multiplicity;
};

struct AdamsRule {
  std::string family;
  Expr condition;
  std::optional<std::pair<Expr, Expr>> hurwitz_radon;  // (p, q) of SO0(p,q+1)/SO0(p,q)
  std::string cited;
};

struct ExistenceAnnotation {
  std::string family;
  Expr condition;
  std::string source;
  std::string note;
};

struct Table1Row {
  int row = 0;
  std::string pair_text;
  PairTemplate pair;
  std::string l_text;
  GroupTemplate l;
  std::vector<std::string> params;
  Expr constraint;
};

struct Table4Row {
  std::string family;
  std::string g;
  std::string h;
  std::string rank_g_text;
  std::string rank_h_text;
  Expr rank_g;
  Expr rank_h;
  std::string tag;
  std::string condition_text;
  Expr condition;
};

struct AccidentalIsomorphism {
  std::string from;
  Expr condition;
  std::string to;
  std::vector<Expr> params;
  bool enabled = true;
  std::string note;
};

namespace detail {

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline Expr expr_field(const nlohmann::json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw CatalogError(where + ": missing '" + key + "'");
  const auto& v = j.at(key);
  try {
    if (v.is_number_integer()) return Expr::number(v.get<std::int64_t>());
    return Expr::parse(v.get<std::string>());
  } catch (const SyntaxError& e) {
    throw CatalogError(where + ": bad expression for '" + key + "': " + e.what());
  }
}

inline std::string string_field(const nlohmann::json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_string()) throw CatalogError(where + ": missing string '" + key + "'");
  return j.at(key).get<std::string>();
}

inline std::vector<Expr> expr_list(const nlohmann::json& j, const std::string& where) {
  std::vector<Expr> out;
  for (const auto& v : j) {
    try {
      out.push_back(v.is_number_integer() ? Expr::number(v.get<std::int64_t>()) : Expr::parse(v.get<std::string>()));
    } catch (const SyntaxError& e) {
      throw CatalogError(where + ": " + e.what());
    }
  }
  return out;
}

inline SubspaceSpec subspace_spec(const nlohmann::json& j, const std::string& where) {
  SubspaceSpec s;
  const std::string kind = string_field(j, "kind", where);
  if (kind == "coordinates") {
    s.kind = SubspaceSpec::Kind::Coordinates;
    s.first = expr_field(j, "first", where);
    s.count = expr_field(j, "count", where);
  } else if (kind == "paired_negation") {
    s.kind = SubspaceSpec::Kind::PairedNegation;
  } else if (kind == "matrix") {
    s.kind = SubspaceSpec::Kind::Matrix;
    for (const auto& row : j.at("rows")) {
      std::vector<Rational> r;
      for (const auto& entry : row) {
        if (entry.is_array()) {
          const auto den = entry.at(1).get<std::int64_t>();
          if (den == 0) throw CatalogError(where + ": zero denominator");
          r.emplace_back(entry.at(0).get<std::int64_t>(), den);
        } else {
          r.emplace_back(entry.get<std::int64_t>());
        }
      }
      s.rows.push_back(std::move(r));
    }
  } else {
    throw CatalogError(where + ": unknown subspace kind '" + kind + "'");
  }
  return s;
}

inline bool increment(Params& t, std::int64_t hi) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (t[i] < hi) {
      ++t[i];
      return true;
    }
    t[i] = 0;
  }
  return false;
}

inline std::vector<FactorKind> kinds(const GroupTemplate& g) {
  std::vector<FactorKind> k;
  for (const auto& f : g.factors) k.push_back(f.kind);
  std::sort(k.begin(), k.end());
  return k;
}

inline std::vector<FactorKind> kinds(const ReductiveAlgebraDesc& g) {
  std::vector<FactorKind> k;
  for (const auto& f : g.factors) k.push_back(f.kind);
  std::sort(k.begin(), k.end());
  return k;
}

}  // namespace detail

class Catalog {
 public:
  static Catalog from_json(const nlohmann::json& j) {
    Catalog c;
    c.hash_ = detail::fnv1a(j.dump());
    c.version_ = j.value("version", std::string("0"));
    try {
      c.load_families(j.at("families"));
      if (j.contains("accidental_isomorphisms")) c.load_isomorphisms(j.at("accidental_isomorphisms"));
      if (j.contains("table1")) c.load_table1(j.at("table1"));
      if (j.contains("existence")) c.load_existence(j.at("existence"));
      if (j.contains("table4")) c.load_table4(j.at("table4"));
      if (j.contains("obstructions")) c.load_obstructions(j.at("obstructions"));
    } catch (const nlohmann::json::exception& e) {
      throw CatalogError(std::string("malformed catalog: ") + e.what());
    } catch (const SyntaxError& e) {
      throw CatalogError(std::string("catalog template: ") + e.what());
    }
    c.validate();
    return c;
  }

  static Catalog parse(std::string_view text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw CatalogError(std::string("catalog is not valid JSON: ") + e.what());
    }
    return from_json(j);
  }

  static Catalog load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open catalog file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
  }

  const std::string& version() const { return version_; }
  std::string hash() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
    return buf;
  }

  const std::vector<PairFamily>& families() const { return families_; }
  const PairFamily& family(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw CatalogError("no family '" + id + "' in catalog");
    return families_[it->second];
  }
  bool has_family(const std::string& id) const { return index_.count(id) != 0; }

  const std::vector<Table1Row>& table1() const { return table1_; }
  const std::vector<Table4Row>& table4() const { return table4_; }
  const std::vector<ExistenceAnnotation>& existence() const { return existence_; }
  const std::vector<AccidentalIsomorphism>& isomorphisms() const { return isomorphisms_; }
  const std::vector<ComparisonRule>& comparison_rules() const { return comparison_; }
  const std::vector<PfisterRule>& pfister_rules() const { return pfister_; }
  const std::vector<PontrjaginRule>& pontrjagin_rules() const { return pontrjagin_; }
  const std::vector<AdamsRule>& adams_rules() const { return adams_; }

  // The family's groups at the given parameters, without constraint or
  // canonical-form checks.
  SymmetricPairInstance make_instance(const PairFamily& f, const Params& params) const {
    const Env env = f.env(params);
    SymmetricPairInstance inst;
    inst.family_id = f.id;
    inst.param_names = f.params;
    inst.params = params;
    inst.g = f.pair.g.instantiate(env);
    inst.h = f.pair.h.instantiate(env);
    attach_a_space(f, env, inst);
    return inst;
  }

  SymmetricPairInstance instance(const std::string& family_id, const Params& params) const {
    const PairFamily& f = family(family_id);
    check_constraint(f, params);
    auto canon = canonical_params(f, params);
    return make_instance(f, *canon);
  }

  void check_constraint(const PairFamily& f, const Params& params) const {
    const Env env = f.env(params);
    if (f.constraint.test(env)) return;
    for (const auto& c : f.constraint.conjuncts())
      if (!c.test(env)) throw ConstraintError(f.id, c.str());
    throw ConstraintError(f.id, f.constraint.str());
  }

  // Lexicographically least parameter tuple in the symmetry orbit that
  // satisfies the constraint.
  std::optional<Params> canonical_params(const PairFamily& f, const Params& params) const {
    std::set<Params> orbit{params};
    std::vector<Params> todo{params};
    while (!todo.empty()) {
      Params cur = todo.back();
      todo.pop_back();
      const Env env = f.env(cur);
      for (const auto& sym : f.symmetries) {
        Params next;
        for (const auto& e : sym) next.push_back(e.eval(env));
        if (orbit.insert(next).second) todo.push_back(next);
      }
    }
    for (const auto& p : orbit)
      if (f.constraint.test(f.env(p))) return p;
    return std::nullopt;
  }

  // Canonical parameters within the family, then the enabled accidental
  // isomorphisms, each rewrite recorded on the instance.
  SymmetricPairInstance canonicalize(const SymmetricPairInstance& inst) const {
    const PairFamily& f = family(inst.family_id);
    auto canon = canonical_params(f, inst.params);
    if (!canon) {
      check_constraint(f, inst.params);
      throw ConstraintError(f.id, f.constraint.str());
    }
    SymmetricPairInstance out = make_instance(f, *canon);
    out.rewrites = inst.rewrites;
    for (int depth = 0; depth < 8; ++depth) {
      const AccidentalIsomorphism* iso = nullptr;
      const Env env = out.env();
      for (const auto& a : isomorphisms_)
        if (a.enabled && a.from == out.family_id && a.condition.test(env)) iso = &a;
      if (!iso) return out;
      const PairFamily& target = family(iso->to);
      Params p;
      for (const auto& e : iso->params) p.push_back(e.eval(env));
      auto tp = canonical_params(target, p);
      if (!tp) throw CatalogError("accidental isomorphism from " + iso->from + " lands outside " + iso->to);
      SymmetricPairInstance next = make_instance(target, *tp);
      Rewrite r{out.family_id, out.params, out.pair(), next.family_id, next.params, next.pair(), iso->note};
      next.rewrites = out.rewrites;
      next.rewrites.push_back(std::move(r));
      out = std::move(next);
    }
    throw CatalogError("accidental isomorphisms do not terminate");
  }

  SymmetricPairInstance associated_pair(const SymmetricPairInstance& inst) const {
    const PairFamily& f = family(inst.family_id);
    if (!f.associated) return make_instance(f, inst.params);
    const Env env = inst.env();
    Params p;
    for (const auto& e : f.associated->params) p.push_back(e.eval(env));
    const PairFamily& target = family(f.associated->family);
    auto canon = canonical_params(target, p);
    if (!canon) throw CatalogError("associated pair of " + inst.str() + " violates the constraint of " + target.id);
    return make_instance(target, *canon);
  }

  // Canonical parameter tuples in [0, bound]^k with rank_R(G) <= bound,
  // in lexicographic order.
  std::vector<SymmetricPairInstance> enumerate_instances(const PairFamily& f, std::int64_t bound) const {
    if (bound < 1) throw Error("enumeration bound must be at least 1");
    std::vector<SymmetricPairInstance> out;
    Params t(f.params.size(), 0);
    do {
      const Env env = f.env(t);
      if (!f.constraint.test(env)) continue;
      auto canon = canonical_params(f, t);
      if (!canon || *canon != t) continue;
      ReductiveAlgebraDesc g;
      try {
        g = f.pair.g.instantiate(env);
      } catch (const Error&) {
        continue;
      }
      if (invariants::real_rank(g) > bound) continue;
      out.push_back(make_instance(f, t));
    } while (detail::increment(t, bound));
    return out;
  }

  std::vector<SymmetricPairInstance> enumerate_all(std::int64_t bound) const {
    std::vector<SymmetricPairInstance> out;
    for (const auto& f : families_) {
      auto part = enumerate_instances(f, bound);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  SymmetricPairInstance parse_pair(std::string_view text) const {
    const PairTemplate tmpl = parse_pair_template(text);
    Env env;
    for (const auto& [name, e] : tmpl.bindings) env[name] = e.eval(env);
    ReductiveAlgebraDesc g, h;
    try {
      g = tmpl.g.instantiate(env);
      h = tmpl.h.instantiate(env);
    } catch (const SyntaxError&) {
      throw;
    } catch (const Error& e) {
      throw SyntaxError(e.what(), 0);
    }
    const auto gk = detail::kinds(g);
    std::int64_t hi = 0;
    for (const auto& f : g.factors)
      for (auto v : f.params) hi = std::max(hi, v);

    std::optional<std::pair<std::string, std::string>> violation;
    for (const auto& f : families_) {
      if (detail::kinds(f.pair.g) != gk) continue;
      Params t(f.params.size(), 0);
      do {
        const Env fe = f.env(t);
        ReductiveAlgebraDesc fg, fh;
        try {
          fg = f.pair.g.instantiate(fe);
          const bool straight = fg.oriented_equal(g);
          const bool flipped = fg.oriented_equal(g.swapped());
          if (!straight && !flipped) continue;
          fh = f.pair.h.instantiate(fe);
          if (!((straight && fh.oriented_equal(h)) || (flipped && fh.oriented_equal(h.swapped())))) continue;
        } catch (const Error&) {
          continue;
        }
        if (auto canon = canonical_params(f, t)) return make_instance(f, *canon);
        if (!violation) {
          std::string clause = f.constraint.str();
          for (const auto& c : f.constraint.conjuncts())
            if (!c.test(fe)) {
              clause = c.str();
              break;
            }
          violation.emplace(f.id, clause);
        }
      } while (detail::increment(t, hi));
    }
    if (violation) throw ConstraintError(violation->first, violation->second);
    throw UnknownFamilyError("no catalog family matches " + g.str() + "/" + h.str());
  }

  std::optional<SymmetricPairInstance> match_table1(const Table1Row& row, const Params& params) const {
    Env env;
    for (std::size_t i = 0; i < row.params.size(); ++i) env[row.params[i]] = params.at(i);
    if (!row.constraint.test(env)) return std::nullopt;
    SymmetricPairInstance inst;
    inst.family_id = "table1_row" + std::to_string(row.row);
    inst.param_names = row.params;
    inst.params = params;
    inst.g = row.pair.g.instantiate(env);
    inst.h = row.pair.h.instantiate(env);
    return inst;
  }

 private:
  void attach_a_space(const PairFamily& f, const Env& env, SymmetricPairInstance& inst) const {
    for (const auto& r : comparison_) {
      if (r.family != f.id || !r.has_witness()) continue;
      bool applies = false;
      try {
        applies = r.condition.test(env);
      } catch (const Error&) {
        applies = false;
      }
      if (!applies) continue;
      ASpaceData a;
      a.weyl_type = r.weyl_type(env);
      a.rank = static_cast<std::size_t>(r.rank.eval(env));
      const std::size_t ambient = a.weyl_type == weyl::WeylType::A ? a.rank + 1 : a.rank;
      a.a = weyl::RationalSubspace::whole(ambient);
      a.a_h = r.a_h->build(ambient, env);
      inst.a_space = std::move(a);
      return;
    }
  }

  void load_families(const nlohmann::json& arr) {
    for (const auto& j : arr) {
      PairFamily f;
      f.id = j.at("id").get<std::string>();
      const std::string where = "family " + f.id;
      if (index_.count(f.id)) throw CatalogError("duplicate family id " + f.id);
      const std::string kind = j.value("kind", std::string("standard"));
      if (kind == "standard")
        f.kind = FamilyKind::Standard;
      else if (kind == "riemannian")
        f.kind = FamilyKind::Riemannian;
      else if (kind == "group_manifold")
        f.kind = FamilyKind::GroupManifold;
      else
        throw CatalogError(where + ": unknown kind " + kind);
      f.pair_text = detail::string_field(j, "pair", where);
      f.pair = parse_pair_template(f.pair_text);
      f.params = j.at("params").get<std::vector<std::string>>();
      f.constraint = detail::expr_field(j, "constraint", where);
      if (j.contains("symmetries"))
        for (const auto& s : j.at("symmetries")) f.symmetries.push_back(detail::expr_list(s, where));
      if (j.contains("associated")) {
        ParamTransform t;
        t.family = j.at("associated").at("family").get<std::string>();
        t.params = detail::expr_list(j.at("associated").at("params"), where);
        f.associated = std::move(t);
      }
      if (j.contains("published")) {
        const auto& p = j.at("published");
        TableAnnotation a;
        a.table = p.at("table").get<int>();
        a.g = p.at("g").get<std::string>();
        a.h = p.at("h").get<std::string>();
        a.condition_label = p.value("condition_label", std::string());
        a.condition = detail::expr_field(p, "condition", where);
        a.coverage = p.value("coverage", std::vector<std::string>{});
        a.methods = p.value("methods", std::vector<std::string>{});
        a.note = p.value("note", std::string());
        f.table = std::move(a);
      }
      if (j.contains("open")) f.open = detail::expr_field(j, "open", where);
      index_[f.id] = families_.size();
      families_.push_back(std::move(f));
    }
  }

  void load_isomorphisms(const nlohmann::json& arr) {
    for (const auto& j : arr) {
      AccidentalIsomorphism a;
      a.from = j.at("from").get<std::string>();
      a.to = j.at("to").get<std::string>();
      a.condition = detail::expr_field(j, "condition", "isomorphism " + a.from);
      a.params = detail::expr_list(j.at("params"), "isomorphism " + a.from);
      a.enabled = j.value("enabled", true);
      a.note = j.value("note", std::string());
      isomorphisms_.push_back(std::move(a));
    }
  }

  void load_table1(const nlohmann::json& arr) {
    for (const auto& j : arr) {
      Table1Row r;
      r.row = j.at("row").get<int>();
      r.pair_text = j.at("pair").get<std::string>();
      r.pair = parse_pair_template(r.pair_text);
      r.l_text = j.at("l").get<std::string>();
      r.l = parse_group_template(r.l_text);
      r.params = j.at("params").get<std::vector<std::string>>();
      r.constraint = detail::expr_field(j, "constraint", "table1 row " + std::to_string(r.row));
      table1_.push_back(std::move(r));
    }
  }

  void load_existence(const nlohmann::json& arr) {
    for (const auto& j : arr) {
      ExistenceAnnotation e;
      e.family = j.at("family").get<std::string>();
      e.condition = detail::expr_field(j, "condition", "existence " + e.family);
      e.source = j.at("source").get<std::string>();
      e.note = j.value("note", std::string());
      existence_.push_back(std::move(e));
    }
  }

  void load_table4(const nlohmann::json& arr) {
    for (const auto& j : arr) {
      Table4Row r;
      r.family = j.at("family").get<std::string>();
      const std::string where = "table4 row " + r.family;
      r.g = j.at("g").get<std::string>();
      r.h = j.at("h").get<std::string>();
      r.rank_g_text = j.at("rank_g").get<std::string>();
      r.rank_h_text = j.at("rank_h").get<std::string>();
      r.rank_g = detail::expr_field(j, "rank_g", where);
      r.rank_h = detail::expr_field(j, "rank_h", where);
      r.tag = j.at("tag").get<std::string>();
      if (r.tag != "A" && r.tag != "B") throw CatalogError(where + ": tag must be A or B");
      r.condition_text = j.value("condition", std::string("true"));
      r.condition = Expr::parse(r.condition_text);
      table4_.push_back(std::move(r));
    }
  }

  void load_obstructions(const nlohmann::json& o) {
    if (o.contains("pfister"))
      for (const auto& j : o.at("pfister")) {
        PfisterRule r;
        r.family = j.at("family").get<std::string>();
        r.field = j.at("field").get<std::string>();
        if (r.field != "R" && r.field != "C") throw CatalogError("pfister rule field must be R or C");
        r.n = detail::expr_field(j, "n", "pfister " + r.family);
        r.condition = detail::expr_field(j, "condition", "pfister " + r.family);
        r.evenness_lemma = j.value("evenness_lemma", true);
        pfister_.push_back(std::move(r));
      }
    if (o.contains("comparison"))
      for (const auto& j : o.at("comparison")) {
        ComparisonRule r;
        r.family = j.at("family").get<std::string>();
        const std::string where = "comparison " + r.family;
        r.condition = detail::expr_field(j, "condition", where);
        if (j.contains("h_prime")) {
          r.h_prime_text = j.at("h_prime").get<std::string>();
          r.h_prime = parse_group_template(r.h_prime_text);
        }
        if (j.contains("weyl"))
          for (const auto& w : j.at("weyl")) {
            WeylChoice c;
            if (w.contains("when")) c.when = detail::expr_field(w, "when", where);
            c.type = weyl::parse_type(w.at("type").get<std::string>());
            r.weyl.push_back(std::move(c));
          }
        r.rank = j.contains("rank") ? detail::expr_field(j, "rank", where) : Expr::number(0);
        if (j.contains("a_h")) r.a_h = detail::subspace_spec(j.at("a_h"), where);
        if (j.contains("a_h_prime")) r.a_h_prime = detail::subspace_spec(j.at("a_h_prime"), where);
        comparison_.push_back(std::move(r));
      }
    if (o.contains("pontrjagin"))
      for (const auto& j : o.at("pontrjagin")) {
        PontrjaginRule r;
        r.family = j.at("family").get<std::string>();
        const std::string where = "pontrjagin " + r.family;
        r.condition = detail::expr_field(j, "condition", where);
        try {
          r.bundle = charweil::parse_family(j.at("bundle").get<std::string>());
        } catch (const UnsupportedError& e) {
          throw CatalogError(where + ": " + e.what());
        }
        r.args = detail::expr_list(j.at("args"), where);
        if (r.args.size() != 2) throw CatalogError(where + ": bundle takes two arguments");
        r.multiplicity = j.contains("multiplicity") ? detail::expr_field(j, "multiplicity", where) : Expr::number(1);
        pontrjagin_.push_back(std::move(r));
      }
    if (o.contains("adams"))
      for (const auto& j : o.at("adams")) {
        AdamsRule r;
        r.family = j.at("family").get<std::string>();
        const std::string where = "adams " + r.family;
        r.condition = detail::expr_field(j, "condition", where);
        if (j.contains("hurwitz_radon"))
          r.hurwitz_radon.emplace(detail::expr_field(j.at("hurwitz_radon"), "p", where),
                                  detail::expr_field(j.at("hurwitz_radon"), "q", where));
        r.cited = j.value("cited", std::string());
        if (!r.hurwitz_radon && r.cited.empty()) throw CatalogError(where + ": needs hurwitz_radon data or a citation");
        adams_.push_back(std::move(r));
      }
  }

  void check_names(const Expr& e, const std::vector<std::string>& allowed, const std::string& where) const {
    if (!e.valid()) return;
    for (const auto& n : e.names())
      if (std::find(allowed.begin(), allowed.end(), n) == allowed.end())
        throw CatalogError(where + ": unknown parameter '" + n + "'");
  }

  void validate() const {
    for (const auto& f : families_) {
      const std::string where = "family " + f.id;
      check_names(f.constraint, f.params, where);
      for (const auto& s : f.symmetries) {
        if (s.size() != f.params.size()) throw CatalogError(where + ": symmetry has the wrong arity");
        for (const auto& e : s) check_names(e, f.params, where);
      }
      if (f.associated) {
        const PairFamily& t = family(f.associated->family);
        if (t.params.size() != f.associated->params.size())
          throw CatalogError(where + ": associated transform has the wrong arity");
        for (const auto& e : f.associated->params) check_names(e, f.params, where);
        if (!t.associated || t.associated->family != f.id)
          throw CatalogError(where + ": association with " + t.id + " is not mutual");
      }
      if (f.table) check_names(f.table->condition, f.params, where);
      if (f.open) check_names(*f.open, f.params, where);
    }
    for (const auto& a : isomorphisms_) {
      const PairFamily& from = family(a.from);
      const PairFamily& to = family(a.to);
      check_names(a.condition, from.params, "isomorphism " + a.from);
      if (a.params.size() != to.params.size()) throw CatalogError("isomorphism " + a.from + ": wrong arity");
    }
    for (const auto& e : existence_) check_names(e.condition, family(e.family).params, "existence " + e.family);
    for (const auto& r : table4_) {
      const PairFamily& f = family(r.family);
      check_names(r.rank_g, f.params, "table4 " + r.family);
      check_names(r.rank_h, f.params, "table4 " + r.family);
      check_names(r.condition, f.params, "table4 " + r.family);
    }
    for (const auto& r : comparison_) check_names(r.condition, family(r.family).params, "comparison " + r.family);
    for (const auto& r : pfister_) check_names(r.condition, family(r.family).params, "pfister " + r.family);
    for (const auto& r : pontrjagin_) check_names(r.condition, family(r.family).params, "pontrjagin " + r.family);
    for (const auto& r : adams_) check_names(r.condition, family(r.family).params, "adams " + r.family);
  }

  std::vector<PairFamily> families_;
  std::map<std::string, std::size_t> index_;
  std::vector<AccidentalIsomorphism> isomorphisms_;
  std::vector<Table1Row> table1_;
  std::vector<ExistenceAnnotation> existence_;
  std::vector<Table4Row> table4_;
  std::vector<ComparisonRule> comparison_;
  std::vector<PfisterRule> pfister_;
  std::vector<PontrjaginRule> pontrjagin_;
  std::vector<AdamsRule> adams_;
  std::uint64_t hash_ = 0;
  std::string version_;
};

inline Certificate base_certificate(const SymmetricPairInstance& inst, Method method, StatusTag status) {
  Certificate c;
  c.method = method;
  c.status = status;
  c.family = inst.family_id;
  c.params = inst.params;
  c.pair = inst.pair();
  c.rewrites = inst.rewrites;
  return c;
}

}  // namespace tangent
