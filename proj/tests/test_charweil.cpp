// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "tangent/charweil/restriction.hpp"

using namespace tangent;
using namespace tangent::charweil;

namespace {

InvariantElement gen(const Algebra* a, std::size_t factor, const char* name) {
  return InvariantElement::generator(a, a->index(factor, name));
}

bool expected(BundleFamily f, int a, int b) {
  switch (f) {
    case BundleFamily::RealGrassmannian: return a >= 2 && b >= 2;
    case BundleFamily::ComplexGrassmannian: return a >= 2 || b >= 2;
    case BundleFamily::QuaternionicGrassmannian: return true;
    case BundleFamily::SO2p2qUpq: return a >= 2;
  }
  return false;
}

}  // namespace

TEST(Restriction, ComplexGrassmannianImages) {
  const auto m = build_restriction(BundleFamily::ComplexGrassmannian, 1, 2);
  const Algebra* t = m.target.get();
  ASSERT_EQ(m.images.size(), 3u);
  EXPECT_EQ(m.images[0], gen(t, 0, "c1") + gen(t, 1, "c1"));
  EXPECT_EQ(m.images[1], gen(t, 0, "c1") * gen(t, 1, "c1") + gen(t, 1, "c2"));
}

TEST(Restriction, RealGrassmannianP1) {
  const auto m = build_restriction(BundleFamily::RealGrassmannian, 2, 2);
  const Algebra* t = m.target.get();
  const Algebra* s = m.source.get();
  const auto e0 = gen(t, 0, "e1"), e1 = gen(t, 1, "e1");
  EXPECT_EQ(m.images[s->index(0, "p1")], e0 * e0 + e1 * e1);
}

TEST(Restriction, So2p2qP1IsChernIdentity) {
  const auto m = build_restriction(BundleFamily::SO2p2qUpq, 2, 2);
  const Algebra* t = m.target.get();
  const Algebra* s = m.source.get();
  const auto c1 = gen(t, 0, "c1"), c2 = gen(t, 0, "c2");
  EXPECT_EQ(m.images[s->index(0, "p1")], c1 * c1 - Rational(2) * c2);
}

TEST(KernelSlice, SpecExamples) {
  const auto cx = build_restriction(BundleFamily::ComplexGrassmannian, 1, 1);
  const auto s1 = kernel_degree_piece(cx, 4);
  EXPECT_EQ(s1.basis.size(), s1.monomials.size());

  const auto hq = build_restriction(BundleFamily::QuaternionicGrassmannian, 1, 1);
  const auto s2 = kernel_degree_piece(hq, 4);
  ASSERT_EQ(s2.basis.size(), 1u);
  const Algebra* t = hq.target.get();
  EXPECT_TRUE(in_slice(s2, gen(t, 0, "q1") + gen(t, 1, "q1")));
  EXPECT_FALSE(in_slice(s2, gen(t, 0, "q1")));

  const auto re = build_restriction(BundleFamily::RealGrassmannian, 2, 3);
  const auto s3 = kernel_degree_piece(re, 4);
  const Algebra* rt = re.target.get();
  EXPECT_TRUE(in_slice(s3, gen(rt, 0, "e1") * gen(rt, 0, "e1") + gen(rt, 1, "p1")));
  EXPECT_THROW(kernel_degree_piece(re, 10), BoundError);
}

TEST(P1, SpecExamples) {
  EXPECT_FALSE(p1_nonvanishing(BundleFamily::ComplexGrassmannian, 1, 1).nonvanishing);
  EXPECT_TRUE(p1_nonvanishing(BundleFamily::ComplexGrassmannian, 1, 2).nonvanishing);
  for (int q = 1; q <= 4; ++q) EXPECT_FALSE(p1_nonvanishing(BundleFamily::SO2p2qUpq, 1, q).nonvanishing);
  EXPECT_TRUE(p1_nonvanishing(BundleFamily::SO2p2qUpq, 2, 2).nonvanishing);
}

TEST(P1, IffGrid) {
  for (auto f : {BundleFamily::RealGrassmannian, BundleFamily::ComplexGrassmannian,
                 BundleFamily::QuaternionicGrassmannian, BundleFamily::SO2p2qUpq})
    for (int a = 1; a <= 4; ++a)
      for (int b = a; b <= 4; ++b) EXPECT_EQ(p1_nonvanishing(f, a, b).nonvanishing, expected(f, a, b))
          << family_name(f) << " " << a << "," << b;
}

TEST(P1, TranscriptRecordsDecision) {
  const auto r = p1_nonvanishing(BundleFamily::ComplexGrassmannian, 1, 2);
  EXPECT_EQ(r.transcript.at("nonvanishing"), true);
  EXPECT_EQ(r.transcript.at("in_kernel"), false);
  EXPECT_EQ(r.transcript.at("degree"), 4);
  EXPECT_FALSE(r.transcript.at("kernel_basis").empty());
}

TEST(P1, UnknownBundle) { EXPECT_THROW(parse_family("octonionicGrassmannian"), UnsupportedError); }
