// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tangent/core/error.hpp"
#include "tangent/core/rational.hpp"

namespace tangent::charweil {

enum class GroupTag { U, SO, Sp };

struct Generator {
  std::string name;
  int degree = 0;
};

// Generators of the invariant polynomials of a compact classical group,
// graded by cohomological degree.
struct GeneratorSet {
  GroupTag tag = GroupTag::U;
  int n = 0;  // U(n), SO(n), Sp(n)
  std::vector<Generator> generators;

  static GeneratorSet unitary(int n) {
    GeneratorSet s{GroupTag::U, n, {}};
    for (int k = 1; k <= n; ++k) s.generators.push_back({"c" + std::to_string(k), 2 * k});
    return s;
  }
  static GeneratorSet symplectic(int n) {
    GeneratorSet s{GroupTag::Sp, n, {}};
    for (int k = 1; k <= n; ++k) s.generators.push_back({"q" + std::to_string(k), 4 * k});
    return s;
  }
  // SO(2m+1): p_1..p_m. SO(2m): p_1..p_{m-1} and e_m, with p_m = e_m^2.
  static GeneratorSet orthogonal(int n) {
    GeneratorSet s{GroupTag::SO, n, {}};
    const int m = n / 2;
    const int last_p = n % 2 ? m : m - 1;
    for (int k = 1; k <= last_p; ++k) s.generators.push_back({"p" + std::to_string(k), 4 * k});
    if (n % 2 == 0 && m >= 1) s.generators.push_back({"e" + std::to_string(m), 2 * m});
    return s;
  }

  std::string str() const {
    const char* t = tag == GroupTag::U ? "U" : tag == GroupTag::SO ? "SO" : "Sp";
    return std::string(t) + "(" + std::to_string(n) + ")";
  }
};

using Monomial = std::vector<int>;

// Tensor product of the invariant rings of several factors. Generators are
// flattened in factor order.
class Algebra {
 public:
  Algebra() = default;
  explicit Algebra(std::vector<GeneratorSet> factors) : factors_(std::move(factors)) {
    for (std::size_t f = 0; f < factors_.size(); ++f)
      for (std::size_t g = 0; g < factors_[f].generators.size(); ++g) {
        flat_.push_back({f, g});
      }
  }

  const std::vector<GeneratorSet>& factors() const { return factors_; }
  std::size_t size() const { return flat_.size(); }
  const Generator& generator(std::size_t i) const { return factors_[flat_[i].first].generators[flat_[i].second]; }
  std::size_t factor_of(std::size_t i) const { return flat_[i].first; }

  std::size_t index(std::size_t factor, const std::string& name) const {
    for (std::size_t i = 0; i < flat_.size(); ++i)
      if (flat_[i].first == factor && generator(i).name == name) return i;
    throw Error("no generator " + name + " in factor " + std::to_string(factor));
  }

  int degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * generator(i).degree;
    return d;
  }

  // All monomials of exactly the given degree, in a fixed order.
  std::vector<Monomial> monomials(int degree) const {
    std::vector<Monomial> out;
    Monomial cur(size(), 0);
    enumerate(0, degree, cur, out);
    return out;
  }

  std::string monomial_str(const Monomial& m) const {
    std::string s;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      std::string part;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (factor_of(i) != f || m[i] == 0) continue;
        if (!part.empty()) part += "*";
        part += generator(i).name;
        if (m[i] > 1) part += "^" + std::to_string(m[i]);
      }
      if (part.empty()) part = "1";
      s += (f ? "\xE2\x8A\x97" : "") + part;  // tensor sign
    }
    return s.empty() ? "1" : s;
  }

 private:
  void enumerate(std::size_t i, int remaining, Monomial& cur, std::vector<Monomial>& out) const {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    if (i == size()) return;
    const int deg = generator(i).degree;
    for (int e = remaining / deg; e >= 0; --e) {
      cur[i] = e;
      enumerate(i + 1, remaining - e * deg, cur, out);
    }
    cur[i] = 0;
  }

  std::vector<GeneratorSet> factors_;
  std::vector<std::pair<std::size_t, std::size_t>> flat_;
};

// Rational combination of monomials of one algebra; zero coefficients are
// never stored, so equality is syntactic.
class InvariantElement {
 public:
  InvariantElement() = default;
  explicit InvariantElement(const Algebra* alg) : alg_(alg) {}

  static InvariantElement one(const Algebra* alg) {
    InvariantElement e(alg);
    e.terms_[Monomial(alg->size(), 0)] = 1;
    return e;
  }
  static InvariantElement generator(const Algebra* alg, std::size_t i) {
    InvariantElement e(alg);
    Monomial m(alg->size(), 0);
    m[i] = 1;
    e.terms_[m] = 1;
    return e;
  }
  static InvariantElement monomial(const Algebra* alg, const Monomial& m, Rational c = 1) {
    InvariantElement e(alg);
    if (!c.is_zero()) e.terms_[m] = c;
    return e;
  }

  const Algebra* algebra() const { return alg_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // -1 for the zero element; throws if not homogeneous.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      const int dm = alg_->degree(m);
      if (d >= 0 && dm != d) throw Error("inhomogeneous invariant element");
      d = dm;
    }
    return d;
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  InvariantElement& operator+=(const InvariantElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  friend InvariantElement operator+(InvariantElement a, const InvariantElement& b) { return a += b; }
  friend InvariantElement operator-(InvariantElement a, const InvariantElement& b) {
    for (const auto& [m, c] : b.terms_) a.add(m, -c);
    return a;
  }
  friend InvariantElement operator*(const Rational& s, const InvariantElement& a) {
    InvariantElement r(a.alg_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.terms_) r.terms_[m] = s * c;
    return r;
  }
  friend InvariantElement operator*(const InvariantElement& a, const InvariantElement& b) {
    InvariantElement r(a.alg_ ? a.alg_ : b.alg_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(ma.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        r.add(m, ca * cb);
      }
    return r;
  }
  friend bool operator==(const InvariantElement& a, const InvariantElement& b) { return a.terms_ == b.terms_; }

  InvariantElement pow(int k) const {
    InvariantElement r = one(alg_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    // Higher monomials first reads more naturally (c1^2 before c2).
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      Rational a = c;
      if (first) {
        if (a < Rational(0)) {
          s += "-";
          a = -a;
        }
      } else {
        s += a < Rational(0) ? " - " : " + ";
        if (a < Rational(0)) a = -a;
      }
      const std::string mono = alg_->monomial_str(m);
      if (!(a == Rational(1))) s += a.str() + "*";
      s += mono;
      first = false;
    }
    return s;
  }

 private:
  void add(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    Rational v = coefficient(m) + c;
    if (v.is_zero())
      terms_.erase(m);
    else
      terms_[m] = v;
  }

  const Algebra* alg_ = nullptr;
  std::map<Monomial, Rational> terms_;
};

}  // namespace tangent::charweil
