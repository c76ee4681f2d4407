// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "tangent/catalog/pair_grammar.hpp"
#include "tangent/invariants/dimension_oracle.hpp"
#include "tangent/invariants/hurwitz_radon.hpp"
#include "tangent/invariants/invariants.hpp"

using namespace tangent;
using namespace tangent::invariants;

namespace {

ReductiveAlgebraDesc group(const std::string& text, const Env& env = {}) {
  return parse_group_template(text).instantiate(env);
}

// rho from the table 1,2,4,8 repeating with +8 per four doublings.
std::int64_t rho_reference(std::int64_t n) {
  int k = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++k;
  }
  static const int base[] = {1, 2, 4, 8};
  return 8 * (k / 4) + base[k % 4];
}

}  // namespace

TEST(RealRank, SpecValues) {
  EXPECT_EQ(real_rank(group("SU(3,2)")), 2);
  EXPECT_EQ(real_rank(group("SO*(10)")), 2);
  EXPECT_EQ(real_rank(group("Sp(3,C)")), 3);
  EXPECT_EQ(real_rank(group("SL(4,R)")), 3);
  EXPECT_EQ(real_rank(group("SU*(6)")), 2);
  EXPECT_EQ(real_rank(group("U*(6)")), 3);
  EXPECT_EQ(real_rank(group("SO(7,C)")), 3);
  EXPECT_EQ(real_rank(group("SO(4)")), 0);
}

TEST(NoncompactDim, SpecGaps) {
  EXPECT_EQ(noncompact_dim(group("SL(4,R)")) - noncompact_dim(group("Sp(2,R)")), 3);
  EXPECT_EQ(noncompact_dim(group("SL(4,C)")) - noncompact_dim(group("Sp(2,C)")), 5);
  for (std::int64_t n = 1; n <= 8; ++n) {
    const Env env{{"n", n}};
    EXPECT_EQ(noncompact_dim(group("SO0(2,2n)", env)), 4 * n);
    EXPECT_EQ(noncompact_dim(group("SO0(1,2n)", env)), 2 * n);
    EXPECT_EQ(noncompact_dim(group("U(1,n)", env)), 2 * n);
  }
}

TEST(NoncompactDim, DeterminantLine) {
  // split center: S(GL(p,R)xGL(q,R)) loses one noncompact dimension
  const auto split = invariants::invariants(group("S(GL(2,R)\xC3\x97GL(3,R))"));
  EXPECT_EQ(split.d, 3 + 6 - 1);
  EXPECT_EQ(split.rank_R, 4);
  const auto compact = invariants::invariants(group("S(U(2)\xC3\x97U(3))"));
  EXPECT_EQ(compact.d, 0);
  EXPECT_EQ(compact.dim_g, 4 + 9 - 1);
}

TEST(Invariants, RecordIdentities) {
  for (const char* g : {"SL(5,R)", "SU(3,2)", "SO*(8)", "Sp(2,1)", "SU*(6)", "U*(4)", "SO(6,C)", "GL(3,C)",
                        "S(U(1,1)\xC3\x97U(2,1))", "SL(3,C)\xC3\x97R"}) {
    const auto r = invariants::invariants(group(g));
    EXPECT_EQ(r.dim_g, r.dim_k + r.d) << g;
    EXPECT_GE(r.d, r.rank_R) << g;
    EXPECT_GE(r.rank_R, 0) << g;
  }
  const auto a = invariants::invariants(group("SO0(2,3)"));
  const auto b = invariants::invariants(group("Sp(2,R)"));
  auto sum = a;
  sum += b;
  EXPECT_EQ(invariants::invariants(group("SO0(2,3)\xC3\x97Sp(2,R)")), sum);
}

TEST(HurwitzRadon, SpecValues) {
  EXPECT_EQ(hurwitz_radon(1), 1);
  EXPECT_EQ(hurwitz_radon(3), 1);
  EXPECT_EQ(hurwitz_radon(4), 4);
  EXPECT_EQ(hurwitz_radon(8), 8);
  EXPECT_EQ(hurwitz_radon(16), 9);
  EXPECT_THROW(hurwitz_radon(0), Error);
}

TEST(HurwitzRadon, MatchesReferenceTo64) {
  for (std::int64_t n = 1; n <= 64; ++n) EXPECT_EQ(hurwitz_radon(n), rho_reference(n)) << n;
  for (std::int64_t n = 1; n <= 63; n += 2) EXPECT_EQ(hurwitz_radon(n), 1);
  for (std::int64_t n = 1; n <= 8; n *= 2) EXPECT_GT(hurwitz_radon(2 * n), hurwitz_radon(n));
}

TEST(CocompactTriple, SpecExamples) {
  for (std::int64_t n = 1; n <= 8; ++n) {
    const Env env{{"n", n}};
    EXPECT_TRUE(check_cocompact_triple(group("SO0(2,2n)", env), group("SO0(1,2n)", env), group("U(1,n)", env)));
    EXPECT_TRUE(check_cocompact_triple(group("SU(2,2n)", env), group("U(1,2n)", env), group("Sp(1,n)", env)));
  }
  EXPECT_FALSE(check_cocompact_triple(group("SO0(2,2)"), group("SO0(1,2)"), group("SO0(1,1)")));
}

TEST(DimensionOracle, SpecExamples) {
  EXPECT_EQ(dimension_oracle(group("SL(4,R)")).d, 9);
  EXPECT_EQ(dimension_oracle(group("Sp(2,R)")).d, 6);
  EXPECT_EQ(dimension_oracle(group("SO0(3,2)")).d, 6);
}

TEST(DimensionOracle, AgreesWithClosedForm) {
  for (const char* g : {"SL(3,R)", "SL(3,C)", "SU(2,2)", "SU*(4)", "SO0(3,3)", "SO(5,C)", "SO*(6)", "Sp(2,R)",
                        "Sp(2,C)", "Sp(1,2)", "U(2,1)", "GL(3,R)", "GL(2,C)", "U*(4)", "SU*(4)\xE2\x88\xA9GL(4,R)",
                        "S(GL(1,R)\xC3\x97GL(2,R))", "S(U(1,1)\xC3\x97U(1))", "SL(2,C)\xC3\x97R"}) {
    const auto closed = invariants::invariants(group(g));
    const auto counted = dimension_oracle(group(g));
    EXPECT_EQ(counted.dim_g, closed.dim_g) << g;
    EXPECT_EQ(counted.dim_k, closed.dim_k) << g;
    EXPECT_EQ(counted.d, closed.d) << g;
  }
}

TEST(DimensionOracle, RejectsLargeMatrices) { EXPECT_THROW(dimension_oracle(group("SL(13,R)")), BoundError); }
