// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "tangent/core/error.hpp"

namespace tangent {

enum class FactorKind {
  SL_R,
  SL_C,
  SU,
  SUstar,
  SO0,
  SO_C,
  SOstar,
  Sp_R,
  Sp_C,
  Sp,
  U,
  GL_R,
  GL_C,
  Ustar,
  SO_compact,
  U_compact,
  Sp_compact,
  SU_compact,
  R_split,
  T,
  SUstarGLR,
  G2split,
};

inline int arity(FactorKind k) {
  switch (k) {
    case FactorKind::SU:
    case FactorKind::SO0:
    case FactorKind::Sp:
    case FactorKind::U:
      return 2;
    case FactorKind::R_split:
    case FactorKind::T:
    case FactorKind::G2split:
      return 0;
    default:
      return 1;
  }
}

inline bool signature_kind(FactorKind k) { return arity(k) == 2; }

inline const char* kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::SL_R: return "SL_R";
    case FactorKind::SL_C: return "SL_C";
    case FactorKind::SU: return "SU";
    case FactorKind::SUstar: return "SUstar";
    case FactorKind::SO0: return "SO0";
    case FactorKind::SO_C: return "SO_C";
    case FactorKind::SOstar: return "SOstar";
    case FactorKind::Sp_R: return "Sp_R";
    case FactorKind::Sp_C: return "Sp_C";
    case FactorKind::Sp: return "Sp";
    case FactorKind::U: return "U";
    case FactorKind::GL_R: return "GL_R";
    case FactorKind::GL_C: return "GL_C";
    case FactorKind::Ustar: return "Ustar";
    case FactorKind::SO_compact: return "SO_compact";
    case FactorKind::U_compact: return "U_compact";
    case FactorKind::Sp_compact: return "Sp_compact";
    case FactorKind::SU_compact: return "SU_compact";
    case FactorKind::R_split: return "R_split";
    case FactorKind::T: return "T";
    case FactorKind::SUstarGLR: return "SUstarGLR";
    case FactorKind::G2split: return "G2split";
  }
  return "?";
}

struct ReductiveFactor {
  FactorKind kind = FactorKind::T;
  std::vector<std::int64_t> params;

  ReductiveFactor() = default;
  ReductiveFactor(FactorKind k, std::vector<std::int64_t> p) : kind(k), params(std::move(p)) {
    if (static_cast<int>(params.size()) != arity(kind))
      throw Error(std::string("wrong parameter count for ") + kind_name(kind));
    for (auto v : params)
      if (v < 0) throw Error(std::string("negative parameter for ") + kind_name(kind));
  }

  std::int64_t n() const { return params.at(0); }
  std::int64_t p() const { return params.at(0); }
  std::int64_t q() const { return params.at(1); }

  // (p,q) sorted for signature kinds; the representation used by operator==.
  ReductiveFactor canonical() const {
    ReductiveFactor f = *this;
    if (signature_kind(kind) && f.params[0] > f.params[1]) std::swap(f.params[0], f.params[1]);
    return f;
  }

  ReductiveFactor swapped() const {
    ReductiveFactor f = *this;
    if (signature_kind(kind)) std::swap(f.params[0], f.params[1]);
    return f;
  }

  auto key() const { return std::tie(kind, params); }

  bool oriented_equal(const ReductiveFactor& o) const { return key() == o.key(); }
  friend bool operator==(const ReductiveFactor& a, const ReductiveFactor& b) {
    return a.canonical().key() == b.canonical().key();
  }
  friend bool operator<(const ReductiveFactor& a, const ReductiveFactor& b) { return a.key() < b.key(); }

  std::string str() const {
    auto s = [](std::int64_t v) { return std::to_string(v); };
    switch (kind) {
      case FactorKind::SL_R: return "SL(" + s(n()) + ",R)";
      case FactorKind::SL_C: return "SL(" + s(n()) + ",C)";
      case FactorKind::SU: return "SU(" + s(p()) + "," + s(q()) + ")";
      case FactorKind::SUstar: return "SU*(" + s(2 * n()) + ")";
      case FactorKind::SO0: return "SO0(" + s(p()) + "," + s(q()) + ")";
      case FactorKind::SO_C: return "SO(" + s(n()) + ",C)";
      case FactorKind::SOstar: return "SO*(" + s(2 * n()) + ")";
      case FactorKind::Sp_R: return "Sp(" + s(n()) + ",R)";
      case FactorKind::Sp_C: return "Sp(" + s(n()) + ",C)";
      case FactorKind::Sp: return "Sp(" + s(p()) + "," + s(q()) + ")";
      case FactorKind::U: return "U(" + s(p()) + "," + s(q()) + ")";
      case FactorKind::GL_R: return "GL(" + s(n()) + ",R)";
      case FactorKind::GL_C: return "GL(" + s(n()) + ",C)";
      case FactorKind::Ustar: return "U*(" + s(2 * n()) + ")";
      case FactorKind::SO_compact: return "SO(" + s(n()) + ")";
      case FactorKind::U_compact: return "U(" + s(n()) + ")";
      case FactorKind::Sp_compact: return "Sp(" + s(n()) + ")";
      case FactorKind::SU_compact: return "SU(" + s(n()) + ")";
      case FactorKind::R_split: return "R";
      case FactorKind::T: return "T";
      case FactorKind::SUstarGLR: return "SU*(" + s(2 * n()) + ")\xE2\x88\xA9GL(" + s(2 * n()) + ",R)";
      case FactorKind::G2split: return "G2(2)";
    }
    return "?";
  }
};

// Factors whose Lie algebra is zero; they are dropped during normalization.
inline bool is_trivial(const ReductiveFactor& f) {
  switch (f.kind) {
    case FactorKind::SL_R:
    case FactorKind::SL_C:
    case FactorKind::SU_compact:
    case FactorKind::SO_compact:
    case FactorKind::SO_C:
      return f.n() <= 1;
    case FactorKind::SU:
    case FactorKind::SO0:
      return f.p() + f.q() <= 1;
    case FactorKind::Sp:
    case FactorKind::U:
      return f.p() + f.q() == 0;
    case FactorKind::R_split:
    case FactorKind::T:
    case FactorKind::G2split:
      return false;
    default:
      return f.n() == 0;
  }
}

inline ReductiveFactor normalize_factor(const ReductiveFactor& f) {
  if (!signature_kind(f.kind) || (f.p() != 0 && f.q() != 0)) return f;
  const std::int64_t m = f.p() + f.q();
  switch (f.kind) {
    case FactorKind::SU: return {FactorKind::SU_compact, {m}};
    case FactorKind::SO0: return {FactorKind::SO_compact, {m}};
    case FactorKind::Sp: return {FactorKind::Sp_compact, {m}};
    default: return {FactorKind::U_compact, {m}};
  }
}

struct ReductiveAlgebraDesc {
  std::vector<ReductiveFactor> factors;
  bool determinant_constraint = false;

  ReductiveAlgebraDesc() = default;
  ReductiveAlgebraDesc(std::vector<ReductiveFactor> f, bool det = false)
      : factors(std::move(f)), determinant_constraint(det) {}

  bool oriented_equal(const ReductiveAlgebraDesc& o) const {
    if (determinant_constraint != o.determinant_constraint || factors.size() != o.factors.size()) return false;
    auto a = factors;
    auto b = o.factors;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!a[i].oriented_equal(b[i])) return false;
    return true;
  }

  friend bool operator==(const ReductiveAlgebraDesc& a, const ReductiveAlgebraDesc& b) {
    if (a.determinant_constraint != b.determinant_constraint || a.factors.size() != b.factors.size()) return false;
    std::vector<ReductiveFactor> x, y;
    for (const auto& f : a.factors) x.push_back(f.canonical());
    for (const auto& f : b.factors) y.push_back(f.canonical());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }

  ReductiveAlgebraDesc swapped() const {
    ReductiveAlgebraDesc d = *this;
    for (auto& f : d.factors) f = f.swapped();
    return d;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "\xC3\x97" : "") + factors[i].str();
    if (factors.empty()) s = "1";
    return determinant_constraint ? "S(" + s + ")" : s;
  }
};

namespace detail {

enum class Center { None, Compact, Split, Complex };

inline Center center_of(const ReductiveFactor& f) {
  switch (f.kind) {
    case FactorKind::U:
    case FactorKind::U_compact:
      return Center::Compact;
    case FactorKind::GL_R:
    case FactorKind::Ustar:
      return Center::Split;
    case FactorKind::GL_C:
      return Center::Complex;
    default:
      return Center::None;
  }
}

inline bool is_center_line(const ReductiveFactor& f) {
  return (f.kind == FactorKind::U_compact || f.kind == FactorKind::GL_R || f.kind == FactorKind::GL_C) && f.n() == 1;
}

}  // namespace detail

// Drops trivial factors, turns definite signatures into compact factors and
// resolves S(...) when it can be absorbed: S(U(1)xU(p,q)) is U(p,q) and a
// lone S(GL(n,R)) is SL(n,R). Factors end up in a fixed order.
inline ReductiveAlgebraDesc normalize(ReductiveAlgebraDesc d) {
  std::vector<ReductiveFactor> kept;
  for (const auto& f : d.factors) {
    ReductiveFactor g = normalize_factor(f);
    if (!is_trivial(g)) kept.push_back(g);
  }
  d.factors = std::move(kept);
  if (d.determinant_constraint) {
    auto line = std::find_if(d.factors.begin(), d.factors.end(), detail::is_center_line);
    if (line != d.factors.end() && d.factors.size() > 1) {
      d.factors.erase(line);
      d.determinant_constraint = false;
    } else if (d.factors.size() == 1) {
      ReductiveFactor& f = d.factors.front();
      switch (f.kind) {
        case FactorKind::U: f = {FactorKind::SU, f.params}; break;
        case FactorKind::U_compact: f = {FactorKind::SU_compact, f.params}; break;
        case FactorKind::GL_R: f = {FactorKind::SL_R, f.params}; break;
        case FactorKind::GL_C: f = {FactorKind::SL_C, f.params}; break;
        case FactorKind::Ustar: f = {FactorKind::SUstar, f.params}; break;
        default: throw Error("S(...) around a factor without center: " + f.str());
      }
      d.determinant_constraint = false;
      if (is_trivial(f)) d.factors.clear();
    }
  }
  std::sort(d.factors.begin(), d.factors.end());
  return d;
}

}  // namespace tangent
