// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "tangent/catalog/reductive.hpp"
#include "tangent/core/error.hpp"
#include "tangent/core/rational.hpp"
#include "tangent/invariants/invariants.hpp"

namespace tangent::invariants {

namespace oracle {

struct GQ {
  Rational re, im;
};

using CMatrix = std::vector<std::vector<GQ>>;

inline CMatrix identity(std::size_t n) {
  CMatrix m(n, std::vector<GQ>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i].re = 1;
  return m;
}

inline CMatrix signature(std::size_t p, std::size_t q) {
  CMatrix m = identity(p + q);
  for (std::size_t i = p; i < p + q; ++i) m[i][i].re = -1;
  return m;
}

// [[0, I_n], [-I_n, 0]]
inline CMatrix symplectic(std::size_t n) {
  CMatrix m(2 * n, std::vector<GQ>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][n + i].re = 1;
    m[n + i][i].re = -1;
  }
  return m;
}

enum class Op { Id, Transpose, Conj, Adjoint };

struct Term {
  Rational coef;
  CMatrix left;
  Op op;
  CMatrix right;
};

// sum_t coef_t * left_t * op_t(X) * right_t = 0, imposed entrywise.
using MatrixEquation = std::vector<Term>;

enum class TraceCondition { None, Complex, RealPart };

struct Realization {
  std::size_t size = 0;
  std::vector<MatrixEquation> equations;
  TraceCondition trace = TraceCondition::None;
};

inline MatrixEquation real_entries(std::size_t n) {
  return {{1, identity(n), Op::Id, identity(n)}, {-1, identity(n), Op::Conj, identity(n)}};
}
inline MatrixEquation preserves_hermitian(const CMatrix& a) {
  const std::size_t n = a.size();
  return {{1, identity(n), Op::Adjoint, a}, {1, a, Op::Id, identity(n)}};
}
inline MatrixEquation preserves_bilinear(const CMatrix& a) {
  const std::size_t n = a.size();
  return {{1, identity(n), Op::Transpose, a}, {1, a, Op::Id, identity(n)}};
}
// X J = J conj(X): the quaternionic structure.
inline MatrixEquation quaternionic(std::size_t n) {
  const CMatrix j = symplectic(n);
  return {{1, identity(2 * n), Op::Id, j}, {-1, j, Op::Conj, identity(2 * n)}};
}

inline Realization realize(const ReductiveFactor& f) {
  using K = FactorKind;
  auto sz = [](std::int64_t v) { return static_cast<std::size_t>(v); };
  Realization r;
  switch (f.kind) {
    case K::SL_R:
      r.size = sz(f.n());
      r.equations = {real_entries(r.size)};
      r.trace = TraceCondition::Complex;
      break;
    case K::SL_C:
      r.size = sz(f.n());
      r.trace = TraceCondition::Complex;
      break;
    case K::SU:
    case K::U:
    case K::SU_compact:
    case K::U_compact:
    case K::T: {
      const std::size_t p = f.kind == K::T ? 1 : sz(f.params[0]);
      const std::size_t q = signature_kind(f.kind) ? sz(f.params[1]) : 0;
      r.size = p + q;
      r.equations = {preserves_hermitian(signature(p, q))};
      if (f.kind == K::SU || f.kind == K::SU_compact) r.trace = TraceCondition::Complex;
      break;
    }
    case K::SUstar:
      r.size = 2 * sz(f.n());
      r.equations = {quaternionic(sz(f.n()))};
      r.trace = TraceCondition::Complex;
      break;
    case K::Ustar:
      r.size = 2 * sz(f.n());
      r.equations = {quaternionic(sz(f.n()))};
      break;
    case K::SO0:
    case K::SO_compact: {
      const std::size_t p = sz(f.params[0]);
      const std::size_t q = f.kind == K::SO0 ? sz(f.params[1]) : 0;
      r.size = p + q;
      r.equations = {real_entries(r.size), preserves_bilinear(signature(p, q))};
      break;
    }
    case K::SO_C:
      r.size = sz(f.n());
      r.equations = {preserves_bilinear(identity(r.size))};
      break;
    case K::SOstar:
      r.size = 2 * sz(f.n());
      r.equations = {preserves_bilinear(identity(r.size)), quaternionic(sz(f.n()))};
      break;
    case K::Sp_R:
      r.size = 2 * sz(f.n());
      r.equations = {real_entries(r.size), preserves_bilinear(symplectic(sz(f.n())))};
      break;
    case K::Sp_C:
      r.size = 2 * sz(f.n());
      r.equations = {preserves_bilinear(symplectic(sz(f.n())))};
      break;
    case K::Sp:
    case K::Sp_compact: {
      const std::size_t p = sz(f.params[0]);
      const std::size_t q = f.kind == K::Sp ? sz(f.params[1]) : 0;
      const std::size_t n = p + q;
      CMatrix k = identity(2 * n);
      for (std::size_t i = 0; i < q; ++i) {
        k[p + i][p + i].re = -1;
        k[n + p + i][n + p + i].re = -1;
      }
      r.size = 2 * n;
      r.equations = {preserves_bilinear(symplectic(n)), preserves_hermitian(k)};
      break;
    }
    case K::GL_R:
      r.size = sz(f.n());
      r.equations = {real_entries(r.size)};
      break;
    case K::GL_C:
      r.size = sz(f.n());
      break;
    case K::R_split:
      r.size = 1;
      r.equations = {real_entries(1)};
      break;
    case K::SUstarGLR:
      // gl(n,C) with real trace zero, the commutant of J inside sl(2n,R)
      r.size = sz(f.n());
      r.trace = TraceCondition::RealPart;
      break;
    case K::G2split:
      throw UnsupportedError("no matrix realization for G2(2)");
  }
  return r;
}

// Sparse rank over Q of a growing set of rows; each stored row is keyed by
// its leading column and normalized so that entry is 1.
class SparseEliminator {
 public:
  using Row = std::map<std::size_t, Rational>;

  void add(Row row) {
    while (!row.empty()) {
      const auto [col, lead] = *row.begin();
      auto it = pivots_.find(col);
      if (it == pivots_.end()) {
        for (auto& [c, v] : row) v = v / lead;
        pivots_.emplace(col, std::move(row));
        return;
      }
      for (const auto& [c, v] : it->second) {
        Rational nv = row[c] - lead * v;
        if (nv.is_zero())
          row.erase(c);
        else
          row[c] = nv;
      }
    }
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, Row> pivots_;
};

class System {
 public:
  explicit System(std::size_t n) : n_(n) {}

  std::size_t vars() const { return 2 * n_ * n_; }

  void equation(std::size_t off, std::size_t m, const MatrixEquation& eq) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        SparseEliminator::Row re, im;
        for (const Term& t : eq) {
          for (std::size_t k = 0; k < m; ++k) {
            const GQ& l = t.left[i][k];
            if (l.re.is_zero() && l.im.is_zero()) continue;
            for (std::size_t c = 0; c < m; ++c) {
              const GQ& r = t.right[c][j];
              if (r.re.is_zero() && r.im.is_zero()) continue;
              const Rational cre = t.coef * (l.re * r.re - l.im * r.im);
              const Rational cim = t.coef * (l.re * r.im + l.im * r.re);
              const bool tr = t.op == Op::Transpose || t.op == Op::Adjoint;
              const bool cj = t.op == Op::Conj || t.op == Op::Adjoint;
              const std::size_t a = tr ? c : k;
              const std::size_t b = tr ? k : c;
              const std::size_t u = var(off + a, off + b);
              const std::size_t v = u + 1;
              if (!cj) {
                accumulate(re, u, cre);
                accumulate(re, v, -cim);
                accumulate(im, v, cre);
                accumulate(im, u, cim);
              } else {
                accumulate(re, u, cre);
                accumulate(re, v, cim);
                accumulate(im, v, -cre);
                accumulate(im, u, cim);
              }
            }
          }
        }
        rows_.push_back(std::move(re));
        rows_.push_back(std::move(im));
      }
    }
  }

  void trace(std::size_t off, std::size_t m, TraceCondition cond) {
    if (cond == TraceCondition::None) return;
    SparseEliminator::Row re, im;
    for (std::size_t i = 0; i < m; ++i) {
      re[var(off + i, off + i)] = 1;
      im[var(off + i, off + i) + 1] = 1;
    }
    rows_.push_back(std::move(re));
    if (cond == TraceCondition::Complex) rows_.push_back(std::move(im));
  }

  void zero_outside_blocks(const std::vector<std::pair<std::size_t, std::size_t>>& blocks) {
    std::vector<int> owner(n_, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (std::size_t i = 0; i < blocks[b].second; ++i) owner[blocks[b].first + i] = static_cast<int>(b);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (owner[i] != owner[j]) {
          rows_.push_back({{var(i, j), Rational(1)}});
          rows_.push_back({{var(i, j) + 1, Rational(1)}});
        }
  }

  // X = -X^* (compact part) or X = X^* (noncompact part).
  void cartan(bool compact) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        SparseEliminator::Row re, im;
        const Rational s = compact ? 1 : -1;
        accumulate(re, var(i, j), 1);
        accumulate(re, var(j, i), s);
        accumulate(im, var(i, j) + 1, 1);
        accumulate(im, var(j, i) + 1, -s);
        rows_.push_back(std::move(re));
        rows_.push_back(std::move(im));
      }
  }

  std::size_t free_dims() const {
    SparseEliminator e;
    for (const auto& r : rows_)
      if (!r.empty()) e.add(r);
    return vars() - e.rank();
  }

 private:
  std::size_t var(std::size_t i, std::size_t j) const { return 2 * (i * n_ + j); }

  static void accumulate(SparseEliminator::Row& row, std::size_t v, const Rational& c) {
    if (c.is_zero()) return;
    Rational s = row[v] + c;
    if (s.is_zero())
      row.erase(v);
    else
      row[v] = s;
  }

  std::size_t n_;
  std::vector<SparseEliminator::Row> rows_;
};

inline InvariantRecord count(const std::vector<Realization>& blocks, bool determinant) {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  for (const auto& b : blocks) {
    spans.emplace_back(n, b.size);
    n += b.size;
  }
  auto build = [&] {
    System s(n);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (const auto& eq : blocks[b].equations) s.equation(spans[b].first, spans[b].second, eq);
      s.trace(spans[b].first, spans[b].second, blocks[b].trace);
    }
    s.zero_outside_blocks(spans);
    if (determinant) s.trace(0, n, TraceCondition::Complex);
    return s;
  };
  System all = build();
  System k = build();
  k.cartan(true);
  System p = build();
  p.cartan(false);
  InvariantRecord rec;
  rec.dim_g = static_cast<std::int64_t>(all.free_dims());
  rec.dim_k = static_cast<std::int64_t>(k.free_dims());
  rec.d = static_cast<std::int64_t>(p.free_dims());
  rec.rank_R = -1;
  if (rec.dim_k + rec.d != rec.dim_g) throw Error("realization is not stable under the Cartan involution");
  return rec;
}

}  // namespace oracle

inline constexpr std::size_t kOracleMaxMatrixSize = 12;

inline std::size_t realization_size(const ReductiveAlgebraDesc& a) {
  std::size_t n = 0;
  for (const auto& f : a.factors) n += oracle::realize(f).size;
  return n;
}

// dim g, dim k and d counted as free real coordinates of an explicit matrix
// realization. rank_R is not computed here and is reported as -1.
inline InvariantRecord dimension_oracle(const ReductiveAlgebraDesc& a) {
  static std::mutex mu;
  static std::map<std::string, InvariantRecord> memo;
  const std::string key = a.str();
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  std::vector<oracle::Realization> blocks;
  for (const auto& f : a.factors) {
    blocks.push_back(oracle::realize(f));
    if (blocks.back().size > kOracleMaxMatrixSize)
      throw BoundError("dimension oracle: matrix size of " + f.str() + " exceeds " + std::to_string(kOracleMaxMatrixSize));
  }
  InvariantRecord rec;
  if (a.determinant_constraint) {
    rec = oracle::count(blocks, true);
  } else {
    rec.rank_R = -1;
    for (const auto& b : blocks) {
      InvariantRecord r = oracle::count({b}, false);
      rec.dim_g += r.dim_g;
      rec.dim_k += r.dim_k;
      rec.d += r.d;
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(key, rec);
  return rec;
}

}  // namespace tangent::invariants
