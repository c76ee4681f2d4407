// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tangent/charweil/algebra.hpp"
#include "tangent/core/error.hpp"
#include "tangent/core/linalg.hpp"

namespace tangent::charweil {

enum class BundleFamily { ComplexGrassmannian, RealGrassmannian, QuaternionicGrassmannian, SO2p2qUpq };

inline const char* family_name(BundleFamily f) {
  switch (f) {
    case BundleFamily::ComplexGrassmannian: return "complexGrassmannian";
    case BundleFamily::RealGrassmannian: return "realGrassmannian";
    case BundleFamily::QuaternionicGrassmannian: return "quaternionicGrassmannian";
    case BundleFamily::SO2p2qUpq: return "so2p2q_upq";
  }
  return "?";
}

inline BundleFamily parse_family(const std::string& s) {
  if (s == "complexGrassmannian") return BundleFamily::ComplexGrassmannian;
  if (s == "realGrassmannian") return BundleFamily::RealGrassmannian;
  if (s == "quaternionicGrassmannian") return BundleFamily::QuaternionicGrassmannian;
  if (s == "so2p2q_upq") return BundleFamily::SO2p2qUpq;
  throw UnsupportedError("unknown bundle family '" + s + "'");
}

inline constexpr int kDefaultDegreeBound = 8;

// Images of the generators of S(k*)^K in S(k_H*)^{K_H}. The algebras are
// held by pointer so elements stay valid when the map is moved.
struct RestrictionMap {
  BundleFamily family = BundleFamily::ComplexGrassmannian;
  int a = 0;
  int b = 0;
  std::shared_ptr<Algebra> source;
  std::shared_ptr<Algebra> target;
  std::vector<InvariantElement> images;  // one per source generator
};

namespace detail {

// The k-th class of one factor written in its own generators: c_k, q_k, or
// p_k (with p_m = e_m^2 on SO(2m)). Zero above the rank, one at k = 0.
inline InvariantElement factor_class(const Algebra* alg, std::size_t factor, int k) {
  const GeneratorSet& gs = alg->factors()[factor];
  if (k == 0) return InvariantElement::one(alg);
  if (gs.tag == GroupTag::U || gs.tag == GroupTag::Sp) {
    if (k > gs.n) return InvariantElement(alg);
    return InvariantElement::generator(alg, alg->index(factor, (gs.tag == GroupTag::U ? "c" : "q") + std::to_string(k)));
  }
  const int m = gs.n / 2;
  if (k > m) return InvariantElement(alg);
  if (gs.n % 2 == 0 && k == m) {
    const auto e = InvariantElement::generator(alg, alg->index(factor, "e" + std::to_string(m)));
    return e * e;
  }
  return InvariantElement::generator(alg, alg->index(factor, "p" + std::to_string(k)));
}

// sum_{i+j=k} x_i (x) y_j over the two target factors
inline InvariantElement whitney(const Algebra* alg, int k) {
  InvariantElement out(alg);
  for (int i = 0; i <= k; ++i) out += factor_class(alg, 0, i) * factor_class(alg, 1, k - i);
  return out;
}

// Pontrjagin class p_k of the realification of the tautological bundle of
// U(n), in Chern classes: (-1)^k sum_{i+j=2k} (-1)^i c_i c_j.
inline InvariantElement pontrjagin_from_chern(const Algebra* alg, std::size_t factor, int k) {
  InvariantElement out(alg);
  for (int i = 0; i <= 2 * k; ++i) {
    const Rational sign = i % 2 ? -1 : 1;
    out += sign * (factor_class(alg, factor, i) * factor_class(alg, factor, 2 * k - i));
  }
  return (k % 2 ? Rational(-1) : Rational(1)) * out;
}

}  // namespace detail

inline RestrictionMap build_restriction(BundleFamily family, int a, int b) {
  if (a < 1 || b < 1) throw Error("restriction parameters must be positive");
  RestrictionMap r;
  r.family = family;
  r.a = a;
  r.b = b;
  switch (family) {
    case BundleFamily::ComplexGrassmannian:
      r.source = std::make_shared<Algebra>(std::vector{GeneratorSet::unitary(a + b)});
      r.target = std::make_shared<Algebra>(std::vector{GeneratorSet::unitary(a), GeneratorSet::unitary(b)});
      for (int k = 1; k <= a + b; ++k) r.images.push_back(detail::whitney(r.target.get(), k));
      break;
    case BundleFamily::QuaternionicGrassmannian:
      r.source = std::make_shared<Algebra>(std::vector{GeneratorSet::symplectic(a + b)});
      r.target = std::make_shared<Algebra>(std::vector{GeneratorSet::symplectic(a), GeneratorSet::symplectic(b)});
      for (int k = 1; k <= a + b; ++k) r.images.push_back(detail::whitney(r.target.get(), k));
      break;
    case BundleFamily::RealGrassmannian: {
      r.source = std::make_shared<Algebra>(std::vector{GeneratorSet::orthogonal(a + b)});
      r.target = std::make_shared<Algebra>(std::vector{GeneratorSet::orthogonal(a), GeneratorSet::orthogonal(b)});
      const Algebra* t = r.target.get();
      for (std::size_t g = 0; g < r.source->size(); ++g) {
        const Generator& gen = r.source->generator(g);
        if (gen.name[0] == 'p') {
          r.images.push_back(detail::whitney(t, gen.degree / 4));
        } else if (a % 2 == 0 && b % 2 == 0) {
          r.images.push_back(InvariantElement::generator(t, t->index(0, "e" + std::to_string(a / 2))) *
                             InvariantElement::generator(t, t->index(1, "e" + std::to_string(b / 2))));
        } else {
          r.images.push_back(InvariantElement(t));
        }
      }
      break;
    }
    case BundleFamily::SO2p2qUpq: {
      r.source = std::make_shared<Algebra>(std::vector{GeneratorSet::orthogonal(2 * a), GeneratorSet::orthogonal(2 * b)});
      r.target = std::make_shared<Algebra>(std::vector{GeneratorSet::unitary(a), GeneratorSet::unitary(b)});
      const Algebra* t = r.target.get();
      for (std::size_t g = 0; g < r.source->size(); ++g) {
        const Generator& gen = r.source->generator(g);
        const std::size_t f = r.source->factor_of(g);
        if (gen.name[0] == 'p')
          r.images.push_back(detail::pontrjagin_from_chern(t, f, gen.degree / 4));
        else
          r.images.push_back(detail::factor_class(t, f, f == 0 ? a : b));
      }
      break;
    }
  }
  for (std::size_t g = 0; g < r.images.size(); ++g) {
    const int d = r.images[g].degree();
    if (d >= 0 && d != r.source->generator(g).degree) throw Error("restriction image is not degree preserving");
  }
  return r;
}

struct KernelSlice {
  int degree = 0;
  std::vector<Monomial> monomials;          // coordinates of the slice
  std::vector<std::vector<Rational>> rows;  // RREF basis in those coordinates
  std::vector<std::size_t> pivots;
  std::vector<InvariantElement> basis;
};

inline std::vector<Rational> coordinates(const InvariantElement& e, const std::vector<Monomial>& monomials) {
  std::vector<Rational> v;
  v.reserve(monomials.size());
  for (const auto& m : monomials) v.push_back(e.coefficient(m));
  return v;
}

// Degree slice of the ideal generated by the positive-degree images:
// every image times every monomial of complementary degree, row reduced.
inline KernelSlice kernel_degree_piece(const RestrictionMap& map, int degree, int bound = kDefaultDegreeBound) {
  if (degree > bound) throw BoundError("degree " + std::to_string(degree) + " exceeds the bound " + std::to_string(bound));
  const Algebra* t = map.target.get();
  KernelSlice s;
  s.degree = degree;
  s.monomials = t->monomials(degree);
  std::vector<std::vector<Rational>> rows;
  for (const auto& img : map.images) {
    const int d = img.degree();
    if (d <= 0 || d > degree) continue;
    for (const auto& m : t->monomials(degree - d)) {
      const InvariantElement prod = InvariantElement::monomial(t, m) * img;
      if (!prod.is_zero()) rows.push_back(coordinates(prod, s.monomials));
    }
  }
  s.pivots = linalg::rref(rows);
  s.rows = rows;
  for (const auto& row : s.rows) {
    InvariantElement e(t);
    for (std::size_t i = 0; i < row.size(); ++i)
      if (!row[i].is_zero()) e += InvariantElement::monomial(t, s.monomials[i], row[i]);
    s.basis.push_back(std::move(e));
  }
  return s;
}

inline bool in_slice(const KernelSlice& s, const InvariantElement& e) {
  if (e.is_zero()) return true;
  if (e.degree() != s.degree) return false;
  return linalg::in_row_span(s.rows, s.pivots, coordinates(e, s.monomials));
}

// The element whose image under the Chern-Weil map is p_1 of the bundle.
inline InvariantElement p1_target(const RestrictionMap& map) {
  const Algebra* t = map.target.get();
  switch (map.family) {
    case BundleFamily::ComplexGrassmannian:
      return detail::pontrjagin_from_chern(t, 0, 1);
    case BundleFamily::RealGrassmannian:
      return detail::factor_class(t, 0, 1);
    case BundleFamily::QuaternionicGrassmannian:
      return detail::factor_class(t, 0, 1);
    case BundleFamily::SO2p2qUpq: {
      const auto c1a = detail::factor_class(t, 0, 1);
      const auto c1b = detail::factor_class(t, 1, 1);
      return detail::pontrjagin_from_chern(t, 0, 1) + detail::pontrjagin_from_chern(t, 1, 1) +
             Rational(2) * (c1a * c1b);
    }
  }
  throw UnsupportedError("no p1 target");
}

struct P1Result {
  bool nonvanishing = false;
  nlohmann::ordered_json transcript;
};

inline P1Result p1_nonvanishing(BundleFamily family, int a, int b) {
  const RestrictionMap map = build_restriction(family, a, b);
  const KernelSlice slice = kernel_degree_piece(map, 4);
  const InvariantElement target = p1_target(map);
  P1Result r;
  r.nonvanishing = !in_slice(slice, target);

  nlohmann::ordered_json images = nlohmann::ordered_json::object();
  for (std::size_t g = 0; g < map.images.size(); ++g) {
    Monomial unit(map.source->size(), 0);
    unit[g] = 1;
    images[map.source->monomial_str(unit)] = map.images[g].str();
  }
  std::vector<std::string> basis, monos;
  for (const auto& e : slice.basis) basis.push_back(e.str());
  for (const auto& m : slice.monomials) monos.push_back(map.target->monomial_str(m));
  std::vector<std::string> coords;
  for (const auto& c : coordinates(target, slice.monomials)) coords.push_back(c.str());

  auto& t = r.transcript;
  t["family"] = family_name(family);
  t["params"] = {a, b};
  t["source"] = [&] {
    std::string s;
    for (const auto& f : map.source->factors()) s += (s.empty() ? "" : "\xC3\x97") + f.str();
    return s;
  }();
  t["target"] = [&] {
    std::string s;
    for (const auto& f : map.target->factors()) s += (s.empty() ? "" : "\xC3\x97") + f.str();
    return s;
  }();
  t["images"] = images;
  t["degree"] = 4;
  t["monomials"] = monos;
  t["kernel_basis"] = basis;
  t["kernel_dim"] = slice.basis.size();
  t["slice_dim"] = slice.monomials.size();
  t["p1_element"] = target.str();
  t["p1_coordinates"] = coords;
  t["identity"] = "p1 = c1^2 - 2c2";
  t["in_kernel"] = !r.nonvanishing;
  t["nonvanishing"] = r.nonvanishing;
  return r;
}

}  // namespace tangent::charweil
