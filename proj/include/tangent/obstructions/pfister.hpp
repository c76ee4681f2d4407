// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tangent/catalog/catalog.hpp"
#include "tangent/invariants/invariants.hpp"
#include "tangent/obstructions/common.hpp"
#include "tangent/weyl/group.hpp"

namespace tangent::obstructions {

namespace detail {

inline bool even_spectrum(std::vector<Rational> v) {
  std::vector<Rational> neg;
  for (const auto& x : v) neg.push_back(-x);
  std::sort(v.begin(), v.end());
  std::sort(neg.begin(), neg.end());
  return v == neg;
}

// Sample trace-zero diagonals for the evenness lemma: X in W.a_H exactly
// when its eigenvalues are symmetric about zero.
inline std::vector<std::vector<Rational>> evenness_samples(std::int64_t n) {
  const std::size_t m = static_cast<std::size_t>(2 * n);
  std::vector<std::vector<Rational>> out;
  std::vector<Rational> v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = Rational(static_cast<std::int64_t>(i / 2 + 1)) * (i % 2 ? -1 : 1);
  out.push_back(v);
  for (std::size_t i = 0; i < m; ++i) v[i] = Rational(static_cast<std::int64_t>(i % n + 1)) * (i < std::size_t(n) ? 1 : -1);
  std::rotate(v.begin(), v.begin() + 1, v.end());
  out.push_back(v);
  Rational s(0);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    v[i] = Rational(static_cast<std::int64_t>(i + 1));
    s = s + v[i];
  }
  v[m - 1] = -s;
  out.push_back(v);
  for (std::size_t i = 0; i < m; ++i) v[i] = Rational(i % 2 ? -1 : 1);
  v[0] = 3;
  v[1] = -2;
  v[2] = 1;
  v[3] = -2;
  out.push_back(v);
  return out;
}

inline std::optional<Certificate> pfister_on(const Catalog& cat, const SymmetricPairInstance& inst) {
  const Env env = inst.env();
  for (const auto& r : cat.pfister_rules()) {
    if (r.family != inst.family_id || !r.condition.test(env)) continue;
    const auto n = r.n.eval(env);
    const auto g = invariants::invariants(inst.g);
    const auto h = invariants::invariants(inst.h);
    nlohmann::ordered_json d;
    d["field"] = r.field;
    d["n"] = n;
    d["d_G"] = g.d;
    d["d_H"] = h.d;
    d["d_gap"] = g.d - h.d;
    if (g.d - h.d < n)
      throw CatalogError("Pfister rule on " + inst.str() + ": d(G) - d(H) is below n");
    if (r.evenness_lemma) {
      weyl::SignedPermutationGroup w{weyl::WeylType::A, static_cast<std::size_t>(2 * n - 1)};
      if (w.rank > weyl::kMaxEnumerationRank) {
        d["evenness_check"] = "not verified (bound)";
      } else {
        const auto a_h = SubspaceSpec{SubspaceSpec::Kind::PairedNegation, {}, {}, {}}.build(w.ambient(), env);
        nlohmann::ordered_json samples = nlohmann::ordered_json::array();
        for (const auto& v : evenness_samples(n)) {
          const bool even = even_spectrum(v);
          const bool inside =
              weyl::subspace_in_orbit_union(weyl::RationalSubspace::span(v.size(), {v}), a_h, w).has_value();
          if (even != inside) throw CatalogError("evenness lemma sample disagrees on " + inst.str());
          std::vector<std::string> vs;
          for (const auto& x : v) vs.push_back(x.str());
          samples.push_back({{"diagonal", vs}, {"even", even}, {"in_W_a_H", inside}});
        }
        d["weyl"] = w.str();
        d["evenness_check"] = samples;
      }
    }
    Certificate c = base_certificate(inst, Method::Pfister, StatusTag::NotExists);
    c.data = std::move(d);
    c.citation = kPfister;
    return c;
  }
  return std::nullopt;
}

}  // namespace detail

inline std::optional<Certificate> pfister(const Catalog& cat, const SymmetricPairInstance& inst) {
  return with_associated(cat, inst, detail::pfister_on);
}

}  // namespace tangent::obstructions
