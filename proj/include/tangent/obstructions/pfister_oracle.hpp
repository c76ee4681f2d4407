// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tangent/core/error.hpp"

namespace tangent::obstructions {

using CMatrix = Eigen::MatrixXcd;

struct EvennessCheck {
  std::vector<double> tau;  // tau[i] is the coefficient of x^i in det(xI - X)
  std::vector<double> eigenvalues;
  double norm = 0;  // max |eigenvalue|
  double odd_residual = 0;      // max |tau_odd| / norm^deg
  double pairing_residual = 0;  // max |l_i + l_{m-1-i}| / norm over sorted eigenvalues
  bool nonzero = false;
  bool passes(double tau_tol = 1e-9, double pair_tol = 1e-6) const {
    return nonzero && odd_residual <= tau_tol && pairing_residual <= pair_tol;
  }
};

struct PfisterWitness {
  int n = 0;
  char field = 'R';
  std::uint64_t seed = 0;
  std::size_t sample = 0;
  std::vector<CMatrix> basis;
  std::vector<double> coordinates;  // X = sum coordinates[i] * basis[i]
  CMatrix x;
  EvennessCheck check;
  bool ok = false;
  std::string failure;
};

namespace oracle_detail {

struct GaussQ {
  mpq_class re, im;
  GaussQ() : re(0), im(0) {}
  GaussQ(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussQ operator+(const GaussQ& o) const { return {re + o.re, im + o.im}; }
  GaussQ operator*(const GaussQ& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
};

using QMatrix = std::vector<std::vector<GaussQ>>;
using QPoly = std::vector<mpq_class>;  // coefficient of t^i at index i

// Faddeev-LeVerrier. Entry i of the result is the coefficient of x^i.
inline std::vector<mpq_class> char_poly(const QMatrix& a) {
  const std::size_t m = a.size();
  std::vector<mpq_class> c(m + 1);
  c[m] = 1;
  QMatrix mk(m, std::vector<GaussQ>(m));
  for (std::size_t i = 0; i < m; ++i) mk[i][i] = GaussQ(1);
  for (std::size_t k = 1; k <= m; ++k) {
    QMatrix prod(m, std::vector<GaussQ>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        GaussQ s;
        for (std::size_t l = 0; l < m; ++l) s = s + a[i][l] * mk[l][j];
        prod[i][j] = s;
      }
    GaussQ tr;
    for (std::size_t i = 0; i < m; ++i) tr = tr + prod[i][i];
    c[m - k] = -tr.re / mpq_class(static_cast<long>(k));
    mk = std::move(prod);
    for (std::size_t i = 0; i < m; ++i) mk[i][i] = mk[i][i] + GaussQ(c[m - k]);
  }
  return c;
}

inline std::vector<std::complex<double>> char_poly(const CMatrix& a) {
  const auto m = static_cast<std::size_t>(a.rows());
  std::vector<std::complex<double>> c(m + 1);
  c[m] = 1;
  CMatrix mk = CMatrix::Identity(a.rows(), a.cols());
  for (std::size_t k = 1; k <= m; ++k) {
    mk = a * mk;
    c[m - k] = -mk.trace() / static_cast<double>(k);
    mk.diagonal().array() += c[m - k];
  }
  return c;
}

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline mpq_class eval(const QPoly& p, const mpq_class& t) {
  mpq_class v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * t + p[i];
  return v;
}

inline long double eval(const QPoly& p, long double t) {
  long double v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * t + p[i].get_d();
  return v;
}

// Newton interpolation through (x_k, y_k), returned in monomial form.
inline QPoly interpolate(const std::vector<mpq_class>& xs, std::vector<mpq_class> ys) {
  const std::size_t m = xs.size();
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = m - 1; i >= j; --i) {
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  QPoly p(m, mpq_class(0));
  for (std::size_t k = m; k-- > 0;) {
    // p = p * (t - x_k) + ys[k]
    QPoly q(m, mpq_class(0));
    for (std::size_t i = 0; i + 1 < m; ++i) q[i + 1] += p[i];
    for (std::size_t i = 0; i < m; ++i) q[i] -= p[i] * xs[k];
    q[0] += ys[k];
    p = std::move(q);
  }
  trim(p);
  return p;
}

inline QPoly remainder(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

inline QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * mpq_class(static_cast<long>(i)));
  return d;
}

inline int sign(const mpq_class& v) { return sgn(v); }

class Sturm {
 public:
  explicit Sturm(QPoly p) {
    trim(p);
    seq_.push_back(p);
    QPoly d = derivative(p);
    trim(d);
    while (!d.empty()) {
      seq_.push_back(d);
      QPoly r = remainder(seq_[seq_.size() - 2], d);
      for (auto& c : r) c = -c;
      if (!r.empty()) {
        const mpq_class s = abs(r.back());
        for (auto& c : r) c /= s;
      }
      d = std::move(r);
    }
  }

  int variations(const mpq_class& t) const {
    int v = 0, last = 0;
    for (const auto& p : seq_) {
      const int s = sign(eval(p, t));
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  // Distinct real roots in (lo, hi].
  int count(const mpq_class& lo, const mpq_class& hi) const { return variations(lo) - variations(hi); }

  const QPoly& poly() const { return seq_.front(); }

 private:
  std::vector<QPoly> seq_;
};

inline mpq_class cauchy_bound(const QPoly& p) {
  mpq_class m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, mpq_class(abs(p[i] / p.back())));
  return m + 1;
}

// All distinct real roots, each refined by Sturm bisection to a width
// below 2^-bits.
inline std::vector<long double> real_roots(const QPoly& poly, int bits = 80) {
  Sturm st(poly);
  const QPoly& p = st.poly();
  if (p.size() <= 1) return {};
  const mpq_class b = cauchy_bound(p);
  std::vector<std::pair<mpq_class, mpq_class>> work{{-b, b}};
  std::vector<std::pair<mpq_class, mpq_class>> isolated;
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    const int c = st.count(lo, hi);
    if (c == 0) continue;
    if (c == 1) {
      isolated.emplace_back(lo, hi);
      continue;
    }
    const mpq_class mid = (lo + hi) / 2;
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }
  mpq_class eps = 1;
  mpz_class one = 1;
  eps /= mpq_class(mpz_class(one << bits));
  std::vector<long double> roots;
  for (auto [lo, hi] : isolated) {
    const int s_hi = sign(eval(p, hi));
    const bool simple = s_hi != 0 && sign(eval(p, lo)) == -s_hi;
    while (hi - lo > eps) {
      const mpq_class mid = (lo + hi) / 2;
      const bool left = simple ? sign(eval(p, mid)) != -s_hi : st.count(lo, mid) == 1;
      if (left)
        hi = mid;
      else
        lo = mid;
      hi.canonicalize();
      lo.canonicalize();
    }
    roots.push_back(static_cast<long double>(hi.get_d()) +
                    static_cast<long double>(mpq_class(hi - mpq_class(hi.get_d())).get_d()));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

inline mpq_class det(std::vector<std::vector<mpq_class>> a) {
  const std::size_t m = a.size();
  mpq_class d = 1;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    while (piv < m && a[piv][c] == 0) ++piv;
    if (piv == m) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < m; ++r) {
      if (a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < m; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

// Sylvester resultant of two univariate polynomials with nonzero leading
// coefficients.
inline mpq_class resultant(const QPoly& f, const QPoly& g) {
  const std::size_t df = f.size() - 1, dg = g.size() - 1, m = df + dg;
  std::vector<std::vector<mpq_class>> s(m, std::vector<mpq_class>(m, mpq_class(0)));
  for (std::size_t r = 0; r < dg; ++r)
    for (std::size_t i = 0; i <= df; ++i) s[r][r + i] = f[df - i];
  for (std::size_t r = 0; r < df; ++r)
    for (std::size_t i = 0; i <= dg; ++i) s[dg + r][r + i] = g[dg - i];
  return det(std::move(s));
}

// Bivariate polynomial: c[i][j] is the coefficient of s^i t^j.
using QPoly2 = std::vector<std::vector<mpq_class>>;

inline long double eval2(const QPoly2& p, long double s, long double t) {
  long double v = 0, si = 1;
  for (const auto& row : p) {
    long double tj = 1, acc = 0;
    for (const auto& c : row) {
      acc += c.get_d() * tj;
      tj *= t;
    }
    v += acc * si;
    si *= s;
  }
  return v;
}

inline QPoly specialize_t(const QPoly2& p, const mpq_class& t) {
  QPoly out;
  for (const auto& row : p) {
    mpq_class acc = 0, tj = 1;
    for (const auto& c : row) {
      acc += c * tj;
      tj *= t;
    }
    out.push_back(acc);
  }
  trim(out);
  return out;
}

inline QPoly2 partial_s(const QPoly2& p) {
  QPoly2 d;
  for (std::size_t i = 1; i < p.size(); ++i) {
    d.push_back(p[i]);
    for (auto& c : d.back()) c *= mpq_class(static_cast<long>(i));
  }
  if (d.empty()) d.push_back({mpq_class(0)});
  return d;
}

inline QPoly2 partial_t(const QPoly2& p) {
  QPoly2 d;
  for (const auto& row : p) {
    std::vector<mpq_class> r;
    for (std::size_t j = 1; j < row.size(); ++j) r.push_back(row[j] * mpq_class(static_cast<long>(j)));
    if (r.empty()) r.push_back(0);
    d.push_back(r);
  }
  return d;
}

class Sampler {
 public:
  Sampler(int n, char field, std::uint64_t seed, std::size_t sample) : n_(n), field_(field) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(sample), static_cast<std::uint32_t>(sample >> 32)};
    rng_.seed(seq);
  }

  QMatrix hermitian_trace_zero() {
    const std::size_t m = static_cast<std::size_t>(2 * n_);
    std::uniform_int_distribution<int> d(-9, 9);
    QMatrix a(m, std::vector<GaussQ>(m));
    long tr = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (i + 1 < m) {
        const int v = d(rng_);
        a[i][i] = GaussQ(v);
        tr += v;
      } else {
        a[i][i] = GaussQ(-tr);
      }
      for (std::size_t j = i + 1; j < m; ++j) {
        const int re = d(rng_);
        const int im = field_ == 'C' ? d(rng_) : 0;
        a[i][j] = GaussQ(re, im);
        a[j][i] = GaussQ(re, -im);
      }
    }
    return a;
  }

 private:
  int n_;
  char field_;
  std::mt19937_64 rng_;
};

inline CMatrix to_eigen(const QMatrix& a) {
  const auto m = static_cast<Eigen::Index>(a.size());
  CMatrix out(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) out(i, j) = {a[i][j].re.get_d(), a[i][j].im.get_d()};
  return out;
}

inline QMatrix combination(const std::vector<QMatrix>& basis, const std::vector<mpq_class>& c) {
  const std::size_t m = basis.front().size();
  QMatrix x(m, std::vector<GaussQ>(m));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (c[k] == 0) continue;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) x[i][j] = x[i][j] + basis[k][i][j] * GaussQ(c[k]);
  }
  return x;
}

// Odd coefficients x^{2n-3}, x^{2n-5}, ..., x^1 of det(xI - X). The
// x^{2n-1} coefficient is minus the trace and vanishes on V.
inline std::vector<mpq_class> odd_taus(const QMatrix& x) {
  const auto c = char_poly(x);
  std::vector<mpq_class> out;
  for (std::size_t i = c.size() - 4;; i -= 2) {
    out.push_back(c[i]);
    if (i < 2) break;
  }
  return out;
}

}  // namespace oracle_detail

inline EvennessCheck check_evenness(const CMatrix& x) {
  EvennessCheck r;
  const auto c = oracle_detail::char_poly(x);
  for (const auto& v : c) r.tau.push_back(v.real());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(x, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) r.eigenvalues.push_back(ev(i));
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end());
  for (double l : r.eigenvalues) r.norm = std::max(r.norm, std::abs(l));
  r.nonzero = r.norm > 0;
  if (!r.nonzero) return r;
  const std::size_t m = r.eigenvalues.size();
  for (std::size_t i = 0; i <= m; ++i) {
    const std::size_t deg = m - i;
    if (deg % 2 == 1) r.odd_residual = std::max(r.odd_residual, std::abs(c[i]) / std::pow(r.norm, double(deg)));
  }
  for (std::size_t i = 0; i < m; ++i)
    r.pairing_residual = std::max(r.pairing_residual, std::abs(r.eigenvalues[i] + r.eigenvalues[m - 1 - i]) / r.norm);
  return r;
}

namespace oracle_detail {

inline void finish(PfisterWitness& w, const std::vector<long double>& coords) {
  const auto m = w.basis.front().rows();
  w.x = CMatrix::Zero(m, m);
  w.coordinates.clear();
  long double scale = 0;
  for (auto c : coords) scale = std::max(scale, std::abs(c));
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const double c = static_cast<double>(coords[k] / scale);
    w.coordinates.push_back(c);
    w.x += c * w.basis[k];
  }
  w.check = check_evenness(w.x);
  w.ok = w.check.passes();
  if (!w.ok) w.failure = "residual check failed";
}

inline void solve_n2(PfisterWitness& w, const std::vector<QMatrix>& basis) {
  // X = t B_1 + B_2: one cubic in t.
  std::vector<mpq_class> xs, ys;
  for (long k = 0; k < 4; ++k) {
    xs.emplace_back(k);
    ys.push_back(odd_taus(combination(basis, {mpq_class(k), mpq_class(1)}))[0]);
  }
  const QPoly f = interpolate(xs, ys);
  if (f.empty()) return finish(w, {0, 1});
  if (f.size() < 4) return finish(w, {1, 0});  // the cubic vanishes at B_1
  const auto roots = real_roots(f);
  if (roots.empty()) {
    w.failure = "no real root isolated";
    return;
  }
  finish(w, {roots.front(), 1});
}

inline void solve_n3(PfisterWitness& w, const std::vector<QMatrix>& basis) {
  // X = s B_1 + t B_2 + B_3: forms of degree 3 and 5 in (s, t).
  constexpr int kGrid = 6;
  std::vector<std::vector<std::vector<mpq_class>>> vals(2, std::vector<std::vector<mpq_class>>(kGrid));
  for (long i = 0; i < kGrid; ++i)
    for (long j = 0; j < kGrid; ++j) {
      const auto o = odd_taus(combination(basis, {mpq_class(i), mpq_class(j), mpq_class(1)}));
      vals[0][i].push_back(o[0]);
      vals[1][i].push_back(o[1]);
    }
  std::vector<mpq_class> grid;
  for (long k = 0; k < kGrid; ++k) grid.emplace_back(k);
  std::vector<QPoly2> forms;
  for (int f = 0; f < 2; ++f) {
    // interpolate in t for each s, then in s for each t-coefficient
    std::vector<QPoly> in_t;
    for (int i = 0; i < kGrid; ++i) {
      QPoly p = interpolate(grid, vals[f][i]);
      p.resize(kGrid, mpq_class(0));
      in_t.push_back(p);
    }
    QPoly2 c(kGrid, std::vector<mpq_class>(kGrid, mpq_class(0)));
    for (int j = 0; j < kGrid; ++j) {
      std::vector<mpq_class> col;
      for (int i = 0; i < kGrid; ++i) col.push_back(in_t[i][j]);
      QPoly p = interpolate(grid, col);
      for (std::size_t i = 0; i < p.size(); ++i) c[i][j] = p[i];
    }
    forms.push_back(c);
  }
  const QPoly2& f3 = forms[0];
  const QPoly2& f5 = forms[1];
  const mpq_class lead3 = f3[3][0], lead5 = f5[5][0];
  if (lead3 == 0 && lead5 == 0) return finish(w, {1, 0, 0});
  if (lead3 == 0 || lead5 == 0) {
    w.failure = "degenerate leading coefficient in s";
    return;
  }
  std::vector<mpq_class> ts, rs;
  for (long k = 0; k < 16; ++k) {
    ts.emplace_back(k - 8);
    rs.push_back(resultant(specialize_t(f3, ts.back()), specialize_t(f5, ts.back())));
  }
  const QPoly res = interpolate(ts, rs);
  if (res.empty()) {
    w.failure = "resultant vanishes identically";
    return;
  }
  const QPoly2 f3s = partial_s(f3), f3t = partial_t(f3), f5s = partial_s(f5), f5t = partial_t(f5);
  for (long double t : real_roots(res)) {
    // s candidates: real roots of the cubic at this t
    Eigen::Matrix3d comp = Eigen::Matrix3d::Zero();
    std::vector<long double> cs;
    for (std::size_t i = 0; i < 4; ++i) {
      long double acc = 0, tj = 1;
      for (const auto& c : f3[i]) {
        acc += c.get_d() * tj;
        tj *= t;
      }
      cs.push_back(acc);
    }
    comp(1, 0) = 1;
    comp(2, 1) = 1;
    for (int i = 0; i < 3; ++i) comp(i, 2) = static_cast<double>(-cs[i] / cs[3]);
    Eigen::EigenSolver<Eigen::Matrix3d> es(comp, false);
    std::optional<long double> best;
    long double best_val = 0;
    for (int i = 0; i < 3; ++i) {
      const auto z = es.eigenvalues()(i);
      if (std::abs(z.imag()) > 1e-6 * (1 + std::abs(z.real()))) continue;
      const long double s = z.real();
      const long double v = std::abs(eval2(f5, s, t));
      if (!best || v < best_val) {
        best = s;
        best_val = v;
      }
    }
    if (!best) continue;
    long double s = *best, tt = t;
    for (int it = 0; it < 30; ++it) {
      const long double a = eval2(f3, s, tt), b = eval2(f5, s, tt);
      const long double j11 = eval2(f3s, s, tt), j12 = eval2(f3t, s, tt);
      const long double j21 = eval2(f5s, s, tt), j22 = eval2(f5t, s, tt);
      const long double dt = j11 * j22 - j12 * j21;
      if (dt == 0) break;
      s -= (a * j22 - b * j12) / dt;
      tt -= (j11 * b - j21 * a) / dt;
    }
    PfisterWitness trial = w;
    finish(trial, {s, tt, 1});
    if (trial.ok) {
      w = std::move(trial);
      return;
    }
  }
  w.failure = "no real common zero passed the residual checks";
}

}  // namespace oracle_detail

inline PfisterWitness pfister_sample(int n, char field, std::uint64_t seed, std::size_t sample) {
  if (n != 2 && n != 3) throw Error("pfister oracle supports n = 2 or n = 3");
  if (field != 'R' && field != 'C') throw Error("pfister oracle field must be R or C");
  oracle_detail::Sampler sampler(n, field, seed, sample);
  std::vector<oracle_detail::QMatrix> basis;
  PfisterWitness w;
  w.n = n;
  w.field = field;
  w.seed = seed;
  w.sample = sample;
  for (int k = 0; k < n; ++k) {
    basis.push_back(sampler.hermitian_trace_zero());
    w.basis.push_back(oracle_detail::to_eigen(basis.back()));
  }
  if (n == 2)
    oracle_detail::solve_n2(w, basis);
  else
    oracle_detail::solve_n3(w, basis);
  return w;
}

// The degree-3 odd coefficient on a 2-dimensional V is solved directly; this
// entry point takes V explicitly.
inline PfisterWitness pfister_on_subspace(const std::vector<CMatrix>& v) {
  if (v.size() != 2 || v[0].rows() != 4) throw Error("explicit subspaces are supported for n = 2 only");
  std::vector<oracle_detail::QMatrix> basis;
  PfisterWitness w;
  w.n = 2;
  w.field = 'C';
  for (const auto& b : v) {
    oracle_detail::QMatrix q(4, std::vector<oracle_detail::GaussQ>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) q[i][j] = oracle_detail::GaussQ(mpq_class(b(i, j).real()), mpq_class(b(i, j).imag()));
    basis.push_back(q);
    w.basis.push_back(b);
  }
  oracle_detail::solve_n2(w, basis);
  return w;
}

inline std::vector<PfisterWitness> pfister_oracle(int n, char field, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw Error("pfister oracle needs at least one sample");
  std::vector<PfisterWitness> out;
  for (std::size_t i = 0; i < samples; ++i) out.push_back(pfister_sample(n, field, seed, i));
  return out;
}

inline nlohmann::ordered_json matrix_json(const CMatrix& m, char field) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (field == 'R')
        row.push_back(m(i, j).real());
      else
        row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(row);
  }
  return rows;
}

inline nlohmann::ordered_json to_json(const PfisterWitness& w) {
  nlohmann::ordered_json j;
  j["n"] = w.n;
  j["field"] = std::string(1, w.field);
  j["seed"] = w.seed;
  j["sample"] = w.sample;
  j["ok"] = w.ok;
  if (!w.ok) j["failure"] = w.failure;
  nlohmann::ordered_json basis = nlohmann::ordered_json::array();
  for (const auto& b : w.basis) basis.push_back(matrix_json(b, w.field));
  j["basis"] = basis;
  j["coordinates"] = w.coordinates;
  if (w.x.size()) j["X"] = matrix_json(w.x, w.field);
  j["tau"] = w.check.tau;
  j["eigenvalues"] = w.check.eigenvalues;
  j["odd_residual"] = w.check.odd_residual;
  j["pairing_residual"] = w.check.pairing_residual;
  return j;
}

}  // namespace tangent::obstructions
