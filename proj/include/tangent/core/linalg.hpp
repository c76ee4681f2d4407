// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tangent::linalg {

template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
bool zero(const F& x) {
  return x == F(0);
}

// Reduced row echelon form in place. Zero rows are removed, so the row count
// afterwards is the rank. Returns the pivot column of each remaining row.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t sel = r;
    while (sel < m.size() && zero(m[sel][c])) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    const F inv = F(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || zero(m[i][c])) continue;
      const F f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref(m).size();
}

// Residual of v after elimination against rows already in reduced echelon
// form with the given pivots. Zero residual means v lies in the row span.
template <class F>
std::vector<F> reduce(const Matrix<F>& rows, const std::vector<std::size_t>& pivots, std::vector<F> v) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const F f = v[pivots[i]];
    if (zero(f)) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] - f * rows[i][j];
  }
  return v;
}

template <class F>
bool in_row_span(const Matrix<F>& rows, const std::vector<std::size_t>& pivots, const std::vector<F>& v) {
  for (const F& x : reduce(rows, pivots, v))
    if (!zero(x)) return false;
  return true;
}

template <class F>
F determinant(Matrix<F> m) {
  const std::size_t n = m.size();
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && zero(m[sel][c])) ++sel;
    if (sel == n) return F(0);
    if (sel != c) {
      std::swap(m[sel], m[c]);
      det = F(0) - det;
    }
    det = det * m[c][c];
    const F inv = F(1) / m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (zero(m[i][c])) continue;
      const F f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
    }
  }
  return det;
}

}  // namespace tangent::linalg
