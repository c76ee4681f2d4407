// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <optional>

#include "tangent/catalog/catalog.hpp"
#include "tangent/invariants/hurwitz_radon.hpp"
#include "tangent/invariants/invariants.hpp"

namespace tangent {

inline constexpr const char* kStandardFormCitation =
    "standard compact quotient: a cocompact discrete subgroup of L acts properly and cocompactly";
inline constexpr const char* kHurwitzRadonCitation = "Adams/Hurwitz\xE2\x80\x93Radon: SO0(p,q+1)/SO0(p,q) has a compact quotient iff q < rho(p)";

namespace detail {

inline bool same_pair(const ReductiveAlgebraDesc& g1, const ReductiveAlgebraDesc& h1, const ReductiveAlgebraDesc& g2,
                      const ReductiveAlgebraDesc& h2) {
  return (g1.oriented_equal(g2) && h1.oriented_equal(h2)) ||
         (g1.oriented_equal(g2.swapped()) && h1.oriented_equal(h2.swapped()));
}

inline std::int64_t largest_param(const ReductiveAlgebraDesc& d) {
  std::int64_t m = 0;
  for (const auto& f : d.factors)
    for (auto v : f.params) m = std::max(m, v);
  return m;
}

}  // namespace detail

struct Table1Match {
  const Table1Row* row = nullptr;
  Params params;
};

inline std::optional<Table1Match> find_table1_row(const Catalog& cat, const SymmetricPairInstance& inst) {
  const std::int64_t hi = detail::largest_param(inst.g);
  for (const auto& row : cat.table1()) {
    if (row.params.size() > 1) throw CatalogError("table1 rows take at most one parameter");
    std::vector<Params> tries;
    if (row.params.empty())
      tries.push_back({});
    else
      for (std::int64_t n = 0; n <= hi; ++n) tries.push_back({n});
    for (const auto& p : tries) {
      std::optional<SymmetricPairInstance> r;
      try {
        r = cat.match_table1(row, p);
      } catch (const Error&) {
        continue;
      }
      if (r && detail::same_pair(r->g, r->h, inst.g, inst.h)) return Table1Match{&row, p};
    }
  }
  return std::nullopt;
}

inline nlohmann::ordered_json table1_data(const Table1Match& m) {
  Env env;
  for (std::size_t i = 0; i < m.row->params.size(); ++i) env[m.row->params[i]] = m.params[i];
  const auto g = m.row->pair.g.instantiate(env);
  const auto h = m.row->pair.h.instantiate(env);
  const auto l = m.row->l.instantiate(env);
  nlohmann::ordered_json d;
  d["row"] = m.row->row;
  d["row_params"] = m.params;
  // Spin(p,q) rows keep their group name; the algebra is that of SO0(p,q)
  std::string name = l.str();
  if (m.row->l_text.rfind("Spin(", 0) == 0) name = "Spin" + name.substr(name.find('('));
  d["L"] = name;
  d["L_algebra"] = l.str();
  d["d_G"] = invariants::noncompact_dim(g);
  d["d_H"] = invariants::noncompact_dim(h);
  d["d_L"] = invariants::noncompact_dim(l);
  d["cocompact_identity"] = invariants::check_cocompact_triple(g, h, l);
  return d;
}

// Hurwitz-Radon data for SO0(p,q+1)/SO0(p,q) when an Adams rule with that
// shape matches the instance.
struct HurwitzRadonCheck {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t rho = 0;
  bool exists() const { return q < rho; }
};

inline std::optional<HurwitzRadonCheck> hurwitz_radon_check(const Catalog& cat, const SymmetricPairInstance& inst) {
  const Env env = inst.env();
  for (const auto& r : cat.adams_rules()) {
    if (r.family != inst.family_id || !r.hurwitz_radon || !r.condition.test(env)) continue;
    HurwitzRadonCheck c;
    c.p = r.hurwitz_radon->first.eval(env);
    c.q = r.hurwitz_radon->second.eval(env);
    c.rho = invariants::hurwitz_radon(c.p);
    return c;
  }
  return std::nullopt;
}

inline nlohmann::ordered_json hurwitz_radon_data(const HurwitzRadonCheck& c) {
  return {{"p", c.p}, {"q", c.q}, {"rho", c.rho}, {"q_less_than_rho", c.q < c.rho}};
}

// Existence certificate from the standard-form list, the Hurwitz-Radon
// family, Riemannian and group-manifold pairs, or the catalog's existence
// annotations. Looks at the instance only; association is the engine's job.
inline std::optional<Certificate> existence_sources(const Catalog& cat, const SymmetricPairInstance& inst) {
  if (auto m = find_table1_row(cat, inst)) {
    Certificate c = base_certificate(inst, Method::StandardTable1, StatusTag::Exists);
    c.data = table1_data(*m);
    if (auto hr = hurwitz_radon_check(cat, inst); hr && hr->exists()) c.data["hurwitz_radon"] = hurwitz_radon_data(*hr);
    c.citation = kStandardFormCitation;
    return c;
  }
  if (auto hr = hurwitz_radon_check(cat, inst); hr && hr->exists()) {
    Certificate c = base_certificate(inst, Method::AdamsExistence, StatusTag::Exists);
    c.data = hurwitz_radon_data(*hr);
    c.citation = kHurwitzRadonCitation;
    return c;
  }
  const PairFamily& f = cat.family(inst.family_id);
  if (f.kind != FamilyKind::Standard) {
    Certificate c = base_certificate(inst, Method::RiemannianOrGroupManifold, StatusTag::Exists);
    c.data = {{"kind", family_kind_name(f.kind)}};
    c.citation = f.kind == FamilyKind::Riemannian
                     ? "Riemannian symmetric space: G has cocompact lattices acting on G/K"
                     : "group manifold: L x L / diag(L) is a quotient by a cocompact lattice of one factor";
    return c;
  }
  const Env env = inst.env();
  for (const auto& e : cat.existence())
    if (e.family == inst.family_id && e.condition.test(env)) {
      Certificate c = base_certificate(inst, Method::RiemannianOrGroupManifold, StatusTag::Exists);
      c.data = {{"kind", e.source}, {"note", e.note}};
      c.citation = "locally isomorphic to a group manifold";
      return c;
    }
  return std::nullopt;
}

}  // namespace tangent
