// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "tangent/catalog/catalog.hpp"
#include "tangent/invariants/invariants.hpp"
#include "tangent/obstructions/common.hpp"
#include "tangent/weyl/group.hpp"

namespace tangent::obstructions {

namespace detail {

inline nlohmann::ordered_json check_witness(const ComparisonRule& r, const SymmetricPairInstance& inst) {
  const Env env = inst.env();
  const auto hp = r.h_prime->instantiate(env);
  const auto g = invariants::invariants(inst.g);
  const auto h = invariants::invariants(inst.h);
  const auto hpi = invariants::invariants(hp);
  const auto rank = r.rank.eval(env);
  weyl::SignedPermutationGroup w{r.weyl_type(env), static_cast<std::size_t>(rank)};

  nlohmann::ordered_json d;
  d["h_prime"] = hp.str();
  d["weyl"] = w.str();
  d["d_H"] = h.d;
  d["d_H_prime"] = hpi.d;
  auto fail = [&](const std::string& why) {
    throw CatalogError("comparison witness for " + inst.str() + " fails: " + why);
  };
  if (rank != g.rank_R) fail("Weyl rank " + std::to_string(rank) + " differs from rank_R G");
  const auto a_h = r.a_h->build(w.ambient(), env);
  const auto a_hp = r.a_h_prime->build(w.ambient(), env);
  d["a_H"] = a_h.str();
  d["a_H_prime"] = a_hp.str();
  if (static_cast<std::int64_t>(a_h.dim()) != h.rank_R) fail("dim a_H differs from rank_R H");
  if (static_cast<std::int64_t>(a_hp.dim()) != hpi.rank_R) fail("dim a_H' differs from rank_R H'");
  if (hpi.d <= h.d) fail("d(H') does not exceed d(H)");
  if (w.rank > weyl::kMaxEnumerationRank) {
    d["verified"] = "not verified (bound)";
    return d;
  }
  const auto elt = weyl::subspace_in_orbit_union(a_hp, a_h, w);
  if (!elt) fail("a_H' is not inside W.a_H");
  d["element"] = elt->str();
  d["verified"] = true;
  return d;
}

inline std::optional<Certificate> comparison_on(const Catalog& cat, const SymmetricPairInstance& inst) {
  const Env env = inst.env();
  for (const auto& r : cat.comparison_rules()) {
    if (r.family != inst.family_id || !r.condition.test(env)) continue;
    Certificate c = base_certificate(inst, Method::Comparison, StatusTag::NotExists);
    if (r.has_witness()) {
      c.data = check_witness(r, inst);
    } else {
      c.data = {{"h_prime", r.h_prime_text}, {"externally_cited", true}};
    }
    c.citation = with_family_note(cat, inst, kComparison);
    return c;
  }
  return std::nullopt;
}

}  // namespace detail

inline std::optional<Certificate> comparison(const Catalog& cat, const SymmetricPairInstance& inst) {
  return with_associated(cat, inst, detail::comparison_on);
}

}  // namespace tangent::obstructions
