// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "tangent/catalog/catalog.hpp"
#include "tangent/charweil/restriction.hpp"
#include "tangent/obstructions/common.hpp"

namespace tangent::obstructions {

namespace detail {

inline std::optional<Certificate> pontrjagin_on(const Catalog& cat, const SymmetricPairInstance& inst) {
  const Env env = inst.env();
  for (const auto& r : cat.pontrjagin_rules()) {
    if (r.family != inst.family_id || !r.condition.test(env)) continue;
    const int a = static_cast<int>(r.args[0].eval(env));
    const int b = static_cast<int>(r.args[1].eval(env));
    const auto result = charweil::p1_nonvanishing(r.bundle, a, b);
    if (!result.nonvanishing) return std::nullopt;
    Certificate c = base_certificate(inst, Method::Pontrjagin, StatusTag::NotExists);
    c.data["bundle"] = charweil::family_name(r.bundle);
    c.data["args"] = {a, b};
    // The bundle is E^{+m}; p1 scales by m, which never changes the verdict.
    c.data["multiplicity"] = r.multiplicity.eval(env);
    c.data["transcript"] = result.transcript;
    c.citation = with_family_note(cat, inst, kPontrjagin);
    return c;
  }
  return std::nullopt;
}

}  // namespace detail

inline std::optional<Certificate> pontrjagin(const Catalog& cat, const SymmetricPairInstance& inst) {
  return with_associated(cat, inst, detail::pontrjagin_on);
}

}  // namespace tangent::obstructions
