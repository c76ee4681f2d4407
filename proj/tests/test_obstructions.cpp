// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>

#include "tangent/obstructions/adams.hpp"
#include "tangent/obstructions/calabi_markus.hpp"
#include "tangent/obstructions/comparison.hpp"
#include "tangent/obstructions/pfister.hpp"
#include "tangent/obstructions/pfister_oracle.hpp"
#include "tangent/obstructions/pontrjagin.hpp"

using namespace tangent;
using namespace tangent::obstructions;

namespace {

const Catalog& cat() {
  static const Catalog c = Catalog::load(TANGENT_CATALOG_PATH);
  return c;
}

SymmetricPairInstance inst(const char* text) { return cat().canonicalize(cat().parse_pair(text)); }

// Sorted eigenvalues of a Hermitian matrix, computed without the oracle.
std::vector<double> spectrum(const CMatrix& x) {
  Eigen::ComplexEigenSolver<CMatrix> es(x);
  std::vector<double> ev;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) ev.push_back(es.eigenvalues()[i].real());
  std::sort(ev.begin(), ev.end());
  return ev;
}

// Coefficients of prod (x - l_i), lowest degree first.
std::vector<double> poly_from_roots(const std::vector<double>& roots) {
  std::vector<double> c{1.0};
  for (double r : roots) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = next;
  }
  return c;
}

CMatrix diag(std::initializer_list<double> d) {
  CMatrix m = CMatrix::Zero(d.size(), d.size());
  Eigen::Index i = 0;
  for (double v : d) m(i, i) = v, ++i;
  return m;
}

void expect_witness(const PfisterWitness& w) {
  ASSERT_TRUE(w.ok) << "sample " << w.sample << ": " << w.failure;
  ASSERT_EQ(w.basis.size(), static_cast<std::size_t>(w.n));
  const Eigen::Index m = 2 * w.n;
  CMatrix x = CMatrix::Zero(m, m);
  for (std::size_t i = 0; i < w.basis.size(); ++i) x += w.coordinates[i] * w.basis[i];
  EXPECT_LT((x - w.x).norm(), 1e-9 * (1 + x.norm()));
  EXPECT_LT((x - x.adjoint()).norm(), 1e-12 * (1 + x.norm()));
  EXPECT_LT(std::abs(x.trace()), 1e-9 * (1 + x.norm()));
  if (w.field == 'R') EXPECT_LT(x.imag().norm(), 1e-12);
  const auto ev = spectrum(x);
  const double scale = std::max(std::abs(ev.front()), std::abs(ev.back()));
  ASSERT_GT(scale, 0);
  for (std::size_t i = 0; i < ev.size(); ++i) EXPECT_LE(std::abs(ev[i] + ev[ev.size() - 1 - i]), 1e-6 * scale);
  const auto c = poly_from_roots(ev);
  for (std::size_t k = 1; k < c.size(); k += 2)
    EXPECT_LE(std::abs(c[k]), 1e-9 * std::pow(scale, static_cast<double>(c.size() - 1 - k)));
}

}  // namespace

TEST(CalabiMarkus, SpecExamples) {
  const auto a = calabi_markus(cat(), inst("SL(3,C)/SL(3,R)"));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->method, Method::CalabiMarkusA);
  EXPECT_EQ(a->data.at("rank_G"), 2);
  const auto b = calabi_markus(cat(), inst("SL(3,C)/SO(3,C)"));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->method, Method::CalabiMarkusB);
  EXPECT_TRUE(b->via_associated);
  EXPECT_EQ(b->associated_pair, "SL(3,C)/SL(3,R)");
  const auto c = calabi_markus(cat(), inst("SU(3,2)/S(U(1,1)\xC3\x97U(2,1))"));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->method, Method::CalabiMarkusA);
  EXPECT_FALSE(calabi_markus(cat(), inst("SO0(4,2)/SO0(4,1)")));
}

TEST(Pfister, SpecExamples) {
  const auto a = pfister(cat(), inst("SL(4,R)/Sp(2,R)"));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->data.at("d_gap"), 3);
  EXPECT_EQ(a->data.at("n"), 2);
  const auto b = pfister(cat(), inst("SL(4,C)/SU*(4)"));
  ASSERT_TRUE(b);
  EXPECT_TRUE(b->via_associated);
  EXPECT_EQ(b->associated_pair, "SL(4,C)/Sp(2,C)");
  EXPECT_EQ(b->data.at("d_gap"), 5);
  EXPECT_FALSE(pfister(cat(), inst("SU(2,2)/Sp(1,1)")));
}

TEST(Pfister, GapFormulas) {
  for (std::int64_t n = 2; n <= 4; ++n) {
    const auto r = pfister(cat(), cat().instance("slr_spr", {n}));
    const auto c = pfister(cat(), cat().instance("slc_spc", {n}));
    ASSERT_TRUE(r && c);
    EXPECT_EQ(r->data.at("d_gap"), n * n - 1);
    EXPECT_EQ(c->data.at("d_gap"), 2 * n * n - n - 1);
  }
}

TEST(Pfister, EvennessLemmaSamples) {
  EXPECT_TRUE(obstructions::detail::even_spectrum({1, 1, -1, -1}));
  EXPECT_TRUE(obstructions::detail::even_spectrum({2, -3, 3, -2}));
  EXPECT_FALSE(obstructions::detail::even_spectrum({3, 1, -1, -2}));
  EXPECT_FALSE(obstructions::detail::even_spectrum({1, 1, 1, -3}));
}

TEST(Comparison, SpecExamples) {
  const auto a = comparison(cat(), inst("SO0(2,2)/SO0(1,1)\xC3\x97SO0(1,1)"));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->method, Method::Comparison);
  EXPECT_FALSE(comparison(cat(), inst("Sp(2,1)/Sp(1,1)\xC3\x97Sp(1)")));
  EXPECT_TRUE(comparison(cat(), inst("Sp(2,2)/Sp(1,1)\xC3\x97Sp(1,1)")));
  const auto c = comparison(cat(), inst("SO(6,C)/SO(3,C)\xC3\x97SO(3,C)"));
  ASSERT_TRUE(c);
}

TEST(Comparison, WitnessesVerifyWhenPresent) {
  for (const auto& x : cat().enumerate_all(6)) {
    const auto c = comparison(cat(), x);
    if (!c || !c->data.contains("verified")) continue;
    EXPECT_EQ(c->data.at("verified"), true) << x.str();
    EXPECT_GT(c->data.at("d_H_prime").get<int>(), c->data.at("d_H").get<int>()) << x.str();
  }
}

TEST(Pontrjagin, SpecExamples) {
  const auto a = pontrjagin(cat(), inst("SU(1,3)/S(U(1)\xC3\x97U(1,2))"));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->data.at("transcript").at("nonvanishing"), true);
  EXPECT_TRUE(pontrjagin(cat(), inst("SO0(1,4)/SO(2)\xC3\x97SO0(1,2)")));
  for (std::int64_t q = 1; q <= 4; ++q) EXPECT_FALSE(pontrjagin(cat(), cat().instance("so_u", {1, q})));
}

TEST(Adams, SpecExamples) {
  const auto a = adams(cat(), inst("SO0(3,2)/SO0(3,1)"));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->method, Method::AdamsNonexistence);
  const auto b = adams(cat(), inst("SU(3,2)/S(U(3,1)\xC3\x97U(1))"));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->data.at("externally_cited"), true);
  EXPECT_FALSE(adams(cat(), inst("SO(8,C)/SO(7,C)")));
}

TEST(Adams, HurwitzRadonBoundary) {
  const auto so = [](std::int64_t p, std::int64_t q) { return inst(("SO0(" + std::to_string(p) + "," +
                                                                     std::to_string(q + 1) + ")/SO0(" +
                                                                     std::to_string(p) + "," + std::to_string(q) + ")")
                                                                        .c_str()); };
  EXPECT_FALSE(adams(cat(), so(8, 7)));
  EXPECT_TRUE(existence_sources(cat(), so(8, 7)));
  EXPECT_TRUE(adams(cat(), so(8, 8)));
  EXPECT_FALSE(existence_sources(cat(), so(8, 8)));
  EXPECT_TRUE(adams(cat(), so(3, 1)));
  EXPECT_FALSE(adams(cat(), so(4, 1)));
}

TEST(PfisterOracle, SpecExamples) {
  const auto yes = check_evenness(diag({1, 1, -1, -1}));
  EXPECT_TRUE(yes.passes());
  const auto no = check_evenness(diag({3, 1, -1, -2}));
  EXPECT_FALSE(no.passes());
  ASSERT_EQ(no.tau.size(), 5u);
  EXPECT_NEAR(no.tau[3], -1.0, 1e-12);

  const auto w = pfister_on_subspace({diag({1, -1, 1, -1}), diag({1, 1, -1, -1})});
  ASSERT_TRUE(w.ok) << w.failure;
  const auto ev = spectrum(w.x);
  EXPECT_NEAR(ev[0], -ev[3], 1e-9);
  EXPECT_NEAR(ev[1], -ev[2], 1e-9);
}

TEST(PfisterOracle, RandomSubspacesN2) {
  for (char field : {'R', 'C'})
    for (const auto& w : pfister_oracle(2, field, 40, 7)) expect_witness(w);
}

TEST(PfisterOracle, RandomSubspacesN3) {
  for (const auto& w : pfister_oracle(3, 'R', 4, 7)) expect_witness(w);
}

TEST(PfisterOracle, SeededDeterminism) {
  const auto a = pfister_sample(2, 'C', 99, 3), b = pfister_sample(2, 'C', 99, 3);
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  EXPECT_NE(to_json(a).dump(), to_json(pfister_sample(2, 'C', 99, 4)).dump());
  EXPECT_THROW(pfister_sample(4, 'R', 1, 0), Error);
  EXPECT_THROW(pfister_sample(2, 'H', 1, 0), Error);
}
