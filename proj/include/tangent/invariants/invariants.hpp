// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "tangent/catalog/reductive.hpp"
#include "tangent/core/error.hpp"
#include "tangent/invariants/hurwitz_radon.hpp"

namespace tangent::invariants {

struct InvariantRecord {
  std::int64_t dim_g = 0;
  std::int64_t dim_k = 0;
  std::int64_t d = 0;
  std::int64_t rank_R = 0;

  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
  InvariantRecord& operator+=(const InvariantRecord& o) {
    dim_g += o.dim_g;
    dim_k += o.dim_k;
    d += o.d;
    rank_R += o.rank_R;
    return *this;
  }
  std::string str() const {
    return "dim=" + std::to_string(dim_g) + " dim_k=" + std::to_string(dim_k) + " d=" + std::to_string(d) +
           " rank=" + std::to_string(rank_R);
  }
};

inline InvariantRecord factor_invariants(const ReductiveFactor& f) {
  using I = std::int64_t;
  auto rec = [](I dim, I dim_k, I rank) { return InvariantRecord{dim, dim_k, dim - dim_k, rank}; };
  switch (f.kind) {
    case FactorKind::SL_R: {
      const I n = f.n();
      return rec(n * n - 1, n * (n - 1) / 2, n - 1);
    }
    case FactorKind::SL_C: {
      const I n = f.n();
      return rec(2 * (n * n - 1), n * n - 1, n - 1);
    }
    case FactorKind::SU: {
      const I p = f.p(), q = f.q(), N = p + q;
      return rec(N * N - 1, p * p + q * q - 1, std::min(p, q));
    }
    case FactorKind::SUstar: {
      const I n = f.n();
      return rec(4 * n * n - 1, n * (2 * n + 1), n - 1);
    }
    case FactorKind::SO0: {
      const I p = f.p(), q = f.q(), N = p + q;
      return rec(N * (N - 1) / 2, p * (p - 1) / 2 + q * (q - 1) / 2, std::min(p, q));
    }
    case FactorKind::SO_C: {
      const I n = f.n();
      return rec(n * (n - 1), n * (n - 1) / 2, n / 2);
    }
    case FactorKind::SOstar: {
      const I n = f.n();
      return rec(n * (2 * n - 1), n * n, n / 2);
    }
    case FactorKind::Sp_R: {
      const I n = f.n();
      return rec(n * (2 * n + 1), n * n, n);
    }
    case FactorKind::Sp_C: {
      const I n = f.n();
      return rec(2 * n * (2 * n + 1), n * (2 * n + 1), n);
    }
    case FactorKind::Sp: {
      const I p = f.p(), q = f.q(), N = p + q;
      return rec(N * (2 * N + 1), p * (2 * p + 1) + q * (2 * q + 1), std::min(p, q));
    }
    case FactorKind::U: {
      const I p = f.p(), q = f.q(), N = p + q;
      return rec(N * N, p * p + q * q, std::min(p, q));
    }
    case FactorKind::GL_R: {
      const I n = f.n();
      return rec(n * n, n * (n - 1) / 2, n);
    }
    case FactorKind::GL_C: {
      const I n = f.n();
      return rec(2 * n * n, n * n, n);
    }
    case FactorKind::Ustar: {
      const I n = f.n();
      return rec(4 * n * n, n * (2 * n + 1), n);
    }
    case FactorKind::SO_compact: {
      const I n = f.n();
      return rec(n * (n - 1) / 2, n * (n - 1) / 2, 0);
    }
    case FactorKind::U_compact: {
      const I n = f.n();
      return rec(n * n, n * n, 0);
    }
    case FactorKind::Sp_compact: {
      const I n = f.n();
      return rec(n * (2 * n + 1), n * (2 * n + 1), 0);
    }
    case FactorKind::SU_compact: {
      const I n = f.n();
      return rec(n * n - 1, n * n - 1, 0);
    }
    case FactorKind::R_split:
      return rec(1, 0, 1);
    case FactorKind::T:
      return rec(1, 1, 0);
    case FactorKind::SUstarGLR: {
      // locally sl(n,C) + u(1)
      const I n = f.n();
      return rec(2 * n * n - 1, n * n, n - 1);
    }
    case FactorKind::G2split:
      return rec(14, 6, 2);
  }
  throw UnsupportedError(std::string("no invariants for ") + kind_name(f.kind));
}

// The line removed by S(...): its compact and split dimensions.
struct CenterLine {
  std::int64_t compact = 0;
  std::int64_t split = 0;
};

inline CenterLine determinant_line(const ReductiveAlgebraDesc& a) {
  std::optional<detail::Center> kind;
  for (const auto& f : a.factors) {
    const detail::Center c = detail::center_of(f);
    if (c == detail::Center::None) continue;
    if (kind && *kind != c) throw UnsupportedError("S(...) over factors with different centers: " + a.str());
    kind = c;
  }
  if (!kind) throw UnsupportedError("S(...) over factors without center: " + a.str());
  switch (*kind) {
    case detail::Center::Compact: return {1, 0};
    case detail::Center::Split: return {0, 1};
    default: return {1, 1};
  }
}

inline InvariantRecord invariants(const ReductiveAlgebraDesc& a) {
  InvariantRecord r;
  for (const auto& f : a.factors) r += factor_invariants(f);
  if (a.determinant_constraint) {
    const CenterLine line = determinant_line(a);
    r.dim_g -= line.compact + line.split;
    r.dim_k -= line.compact;
    r.d -= line.split;
    r.rank_R -= line.split;
  }
  return r;
}

inline std::int64_t real_rank(const ReductiveAlgebraDesc& a) { return invariants(a).rank_R; }
inline std::int64_t noncompact_dim(const ReductiveAlgebraDesc& a) { return invariants(a).d; }

inline bool check_cocompact_triple(const ReductiveAlgebraDesc& g, const ReductiveAlgebraDesc& h,
                                   const ReductiveAlgebraDesc& l) {
  return noncompact_dim(g) == noncompact_dim(h) + noncompact_dim(l);
}

}  // namespace tangent::invariants
