// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <limits>
#include <stdexcept>

#include "tangent/core/expr.hpp"
#include "tangent/core/linalg.hpp"
#include "tangent/core/rational.hpp"

using namespace tangent;

TEST(Rational, NormalizesSignAndGcd) {
  Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(0, -5).den(), 1);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
}

TEST(Rational, FieldArithmetic) {
  const Rational a(1, 3), b(-5, 6);
  EXPECT_EQ(a + b, Rational(-1, 2));
  EXPECT_EQ(a - b, Rational(7, 6));
  EXPECT_EQ(a * b, Rational(-5, 18));
  EXPECT_EQ(a / b, Rational(-2, 5));
  EXPECT_TRUE(b < a);
  EXPECT_EQ(b.sign(), -1);
  EXPECT_DOUBLE_EQ(Rational(3, 4).to_double(), 0.75);
}

TEST(Rational, RejectsZeroDenominatorAndOverflow) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::exception);
  const Rational big(std::numeric_limits<std::int64_t>::max() / 2);
  EXPECT_THROW(big * big, std::overflow_error);
}

TEST(Linalg, RankAndDeterminant) {
  linalg::Matrix<Rational> m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(linalg::rank(m), 2u);
  EXPECT_EQ(linalg::determinant(m), Rational(0));
  linalg::Matrix<Rational> h{{Rational(1), Rational(1, 2)}, {Rational(1, 2), Rational(1, 3)}};
  EXPECT_EQ(linalg::determinant(h), Rational(1, 12));
}

TEST(Linalg, RowSpanMembership) {
  linalg::Matrix<Rational> m{{1, 1, 0}, {0, 1, 1}};
  const auto piv = linalg::rref(m);
  EXPECT_TRUE(linalg::in_row_span(m, piv, {1, 2, 1}));
  EXPECT_FALSE(linalg::in_row_span(m, piv, {1, 0, 0}));
}

namespace {
std::int64_t ev(const char* text, Env env = {}) { return Expr::parse(text).eval(env); }
}  // namespace

TEST(Expr, ArithmeticUsesFloorDivision) {
  EXPECT_EQ(ev("7/2"), 3);
  EXPECT_EQ(ev("-7/2"), -4);
  EXPECT_EQ(ev("-7%2"), 1);
  EXPECT_EQ(ev("2(3+4)"), 14);
  EXPECT_EQ(ev("2n+1", {{"n", 5}}), 11);
  EXPECT_EQ(ev("min(p,q)+max(p,q)", {{"p", 3}, {"q", 8}}), 11);
  EXPECT_EQ(ev("abs(1-4)"), 3);
  EXPECT_THROW(ev("1/0"), Error);
}

TEST(Expr, BooleanStructure) {
  const Env env{{"p", 1}, {"q", 3}};
  EXPECT_FALSE(Expr::parse("!(p==1 && (q==1 || q==3 || q==7))").test(env));
  EXPECT_TRUE(Expr::parse("p<=q && q>=2").test(env));
  EXPECT_TRUE(Expr::parse("true").test({}));
  const auto parts = Expr::parse("p>=1 && p<=q && q>=2").conjuncts();
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[2].str(), "q >= 2");
}

TEST(Expr, AcceptsUnicodeComparisons) {
  EXPECT_TRUE(Expr::parse("p\xE2\x89\xA5" "2").test({{"p", 2}}));
  EXPECT_TRUE(Expr::parse("p\xE2\x89\xA0" "3").test({{"p", 2}}));
}

TEST(Expr, HurwitzRadonFunction) {
  EXPECT_EQ(ev("rho(8)"), 8);
  EXPECT_EQ(ev("rho(16)"), 9);
  EXPECT_EQ(ev("rho(3)"), 1);
}

TEST(Expr, NamesAndRendering) {
  const auto e = Expr::parse("min(p1,q1)+min(p2,q2)");
  EXPECT_EQ(e.names(), (std::set<std::string>{"p1", "p2", "q1", "q2"}));
  EXPECT_EQ(Expr::parse(e.str()).str(), e.str());
}

TEST(Expr, SyntaxErrorsCarryPosition) {
  try {
    Expr::parse("p + * 2");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(Expr::parse("min(1)"), SyntaxError);
  EXPECT_THROW(Expr::parse("(p"), SyntaxError);
  EXPECT_THROW(Expr::parse("p").eval({}), Error);
}
