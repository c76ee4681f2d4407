// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "tangent/catalog/catalog.hpp"
#include "tangent/catalog/existence.hpp"
#include "tangent/obstructions/common.hpp"

namespace tangent::obstructions {

namespace detail {

inline std::optional<Certificate> adams_on(const Catalog& cat, const SymmetricPairInstance& inst) {
  if (auto hr = hurwitz_radon_check(cat, inst)) {
    if (hr->exists()) return std::nullopt;
    Certificate c = base_certificate(inst, Method::AdamsNonexistence, StatusTag::NotExists);
    c.data = hurwitz_radon_data(*hr);
    c.citation = std::string(kAdams) + ": SO0(p,q+1)/SO0(p,q) has no compact quotient when q >= rho(p)";
    return c;
  }
  const Env env = inst.env();
  for (const auto& r : cat.adams_rules()) {
    if (r.family != inst.family_id || r.hurwitz_radon || !r.condition.test(env)) continue;
    Certificate c = base_certificate(inst, Method::AdamsNonexistence, StatusTag::NotExists);
    c.data = {{"cited_family", r.cited}, {"condition", r.condition.str()}, {"externally_cited", true}};
    c.citation = std::string(kAdams) + ": " + r.cited;
    return c;
  }
  return std::nullopt;
}

}  // namespace detail

inline std::optional<Certificate> adams(const Catalog& cat, const SymmetricPairInstance& inst) {
  return with_associated(cat, inst, detail::adams_on);
}

}  // namespace tangent::obstructions
