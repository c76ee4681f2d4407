// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "tangent/catalog/catalog.hpp"
#include "tangent/invariants/invariants.hpp"
#include "tangent/obstructions/common.hpp"

namespace tangent::obstructions {

namespace detail {

inline std::optional<Certificate> rank_equality(const Catalog&, const SymmetricPairInstance& inst) {
  const auto g = invariants::invariants(inst.g);
  const auto h = invariants::invariants(inst.h);
  if (g.rank_R != h.rank_R || g.d <= h.d) return std::nullopt;
  Certificate c = base_certificate(inst, Method::CalabiMarkusA, StatusTag::NotExists);
  c.data = {{"rank_G", g.rank_R}, {"rank_H", h.rank_R}, {"d_G", g.d}, {"d_H", h.d}};
  c.citation = kCalabiMarkus;
  return c;
}

}  // namespace detail

// Condition A on the pair itself, else condition B: A on the associated pair.
inline std::optional<Certificate> calabi_markus(const Catalog& cat, const SymmetricPairInstance& inst) {
  auto c = with_associated(cat, inst, detail::rank_equality);
  if (c && c->via_associated) {
    c->method = Method::CalabiMarkusB;
    c->citation = std::string(kCalabiMarkus) + ", applied to the associated pair";
  }
  return c;
}

}  // namespace tangent::obstructions
