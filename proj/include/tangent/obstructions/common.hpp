// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "tangent/catalog/catalog.hpp"

namespace tangent::obstructions {

inline constexpr const char* kCalabiMarkus = "Calabi\xE2\x80\x93Markus: rank_R G = rank_R H with G/H non-compact";
inline constexpr const char* kPfister =
    "Pfister: n odd-degree forms on an (n+1)-dimensional space have a common nonzero zero, so some X in a(V) has an "
    "even characteristic polynomial";
inline constexpr const char* kComparison = "Kobayashi comparison theorem: a_H' lies in W_G.a_H and d(H') > d(H)";
inline constexpr const char* kPontrjagin =
    "Chern\xE2\x80\x93Weil: the first Pontrjagin class of K x_{K_H} (p/p_H) is nonzero, so the bundle is not trivial";
inline constexpr const char* kAdams = "Adams/Hurwitz\xE2\x80\x93Radon";

// The family's reading note, if the catalog records one, appended to a
// citation.
inline std::string with_family_note(const Catalog& cat, const SymmetricPairInstance& inst, std::string citation) {
  const PairFamily& f = cat.family(inst.family_id);
  if (f.table && !f.table->note.empty()) citation += "; " + f.table->note;
  return citation;
}

// Runs an instance-level check on inst, then on its associated pair.
// A hit on the associated pair is reported against inst.
template <class Check>
std::optional<Certificate> with_associated(const Catalog& cat, const SymmetricPairInstance& inst, Check check) {
  if (auto c = check(cat, inst)) return c;
  const SymmetricPairInstance assoc = cat.associated_pair(inst);
  if (assoc == inst) return std::nullopt;
  auto c = check(cat, assoc);
  if (!c) return std::nullopt;
  c->via_associated = true;
  c->associated_family = assoc.family_id;
  c->associated_params = assoc.params;
  c->associated_pair = assoc.pair();
  c->family = inst.family_id;
  c->params = inst.params;
  c->pair = inst.pair();
  c->rewrites = inst.rewrites;
  return c;
}

}  // namespace tangent::obstructions
