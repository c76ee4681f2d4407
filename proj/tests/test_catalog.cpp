// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tangent/catalog/catalog.hpp"
#include "tangent/catalog/existence.hpp"

using namespace tangent;

namespace {

const Catalog& cat() {
  static const Catalog c = Catalog::load(TANGENT_CATALOG_PATH);
  return c;
}

nlohmann::json catalog_json() {
  std::ifstream in(TANGENT_CATALOG_PATH);
  return nlohmann::json::parse(in);
}

std::vector<Params> params_of(const std::vector<SymmetricPairInstance>& v) {
  std::vector<Params> out;
  for (const auto& i : v) out.push_back(i.params);
  return out;
}

}  // namespace

TEST(ParsePair, SpecExamples) {
  const auto a = cat().parse_pair("SL(4,R)/Sp(2,R)");
  EXPECT_EQ(a.family_id, "slr_spr");
  EXPECT_EQ(a.params, (Params{2}));

  try {
    cat().parse_pair("SL(2,R)/Sp(1,R)");
    FAIL();
  } catch (const ConstraintError& e) {
    EXPECT_EQ(e.family(), "slr_spr");
    EXPECT_EQ(e.clause(), "n >= 2");
  }

  const auto c = cat().parse_pair("SU(1,1)/SO0(1,1)");
  EXPECT_EQ(c.family_id, "su_so");
  EXPECT_EQ(c.params, (Params{1, 1}));
}

TEST(ParsePair, Bindings) {
  const auto i = cat().parse_pair("SU(p,q)/SO0(p,q) with p=3, q=2");
  EXPECT_EQ(i.family_id, "su_so");
  EXPECT_EQ(i.params, (Params{2, 3}));
}

TEST(ParsePair, Errors) {
  EXPECT_THROW(cat().parse_pair("SL(4,R)/Sp(2,R"), SyntaxError);
  EXPECT_THROW(cat().parse_pair("SL(5,R)/Sp(2,R)"), UnknownFamilyError);
  EXPECT_THROW(cat().parse_pair("G2(2)/SO(4)"), UnknownFamilyError);
}

TEST(AssociatedPair, SpecExamples) {
  const auto slr = cat().instance("slc_slr", {3});
  EXPECT_EQ(cat().associated_pair(slr).pair(), "SL(3,C)/SO(3,C)");
  const auto suso = cat().instance("su_so", {2, 3});
  EXPECT_EQ(cat().associated_pair(suso), suso);
  const auto sostar = cat().instance("sostar_sostar", {2, 3});
  const auto a = cat().associated_pair(sostar);
  EXPECT_EQ(a.family_id, "sostar_u");
  EXPECT_EQ(a.pair(), "SO*(10)/U(2,3)");
}

TEST(AssociatedPair, InvolutiveAtBound8) {
  for (const auto& x : cat().enumerate_all(8)) {
    const auto y = cat().associated_pair(cat().associated_pair(x));
    EXPECT_EQ(y, x) << x.str();
  }
}

TEST(Canonicalize, SpecExamples) {
  const auto a = cat().canonicalize(cat().parse_pair("SO0(2,4)/SO0(1,4)"));
  EXPECT_EQ(a.pair(), "SO0(4,2)/SO0(4,1)");
  EXPECT_EQ(a.family_id, "so_soso");

  const auto b = cat().canonicalize(cat().parse_pair("Sp(2,R)/Sp(1,C)"));
  EXPECT_EQ(b.pair(), "SO0(3,2)/SO0(3,1)");
  ASSERT_EQ(b.rewrites.size(), 1u);
  EXPECT_EQ(b.rewrites[0].from_family, "spr_spc");
  EXPECT_EQ(b.rewrites[0].from_pair, "Sp(2,R)/Sp(1,C)");

  const auto c = cat().canonicalize(cat().parse_pair("SU(2,1)/S(U(1,1)\xC3\x97U(1,0))"));
  EXPECT_EQ(c.family_id, "su_ss");
  ASSERT_EQ(c.params.size(), 4u);
  EXPECT_LE(c.params[0], c.params[2]);
}

TEST(Canonicalize, IdempotentAtBound8) {
  for (const auto& x : cat().enumerate_all(8)) {
    const auto once = cat().canonicalize(x);
    const auto twice = cat().canonicalize(once);
    EXPECT_EQ(once, twice) << x.str();
    EXPECT_EQ(once.rewrites, twice.rewrites) << x.str();
  }
}

TEST(Enumerate, SpecExamples) {
  EXPECT_EQ(params_of(cat().enumerate_instances(cat().family("sunn_spr"), 3)), (std::vector<Params>{{2}, {3}}));
  EXPECT_EQ(params_of(cat().enumerate_instances(cat().family("slr_spr"), 5)), (std::vector<Params>{{2}, {3}}));
  const auto sp = cat().enumerate_instances(cat().family("sp_spsp"), 2);
  ASSERT_FALSE(sp.empty());
  for (const auto& i : sp) {
    const auto& p = i.params;
    EXPECT_LE(std::min(p[0] + p[2], p[1] + p[3]), 2);
    EXPECT_LE(p[0], p[2]);
    EXPECT_GE(p[1], 1);
    EXPECT_GE(p[3], 1);
  }
  EXPECT_THROW(cat().enumerate_instances(cat().family("slr_spr"), 0), Error);
}

TEST(Enumerate, DeterministicAndSorted) {
  const auto a = cat().enumerate_all(6), b = cat().enumerate_all(6);
  ASSERT_EQ(params_of(a), params_of(b));
  for (const auto& f : cat().families()) {
    const auto p = params_of(cat().enumerate_instances(f, 6));
    EXPECT_TRUE(std::is_sorted(p.begin(), p.end())) << f.id;
  }
}

TEST(Enumerate, RankBound) {
  for (const auto& x : cat().enumerate_all(8)) {
    EXPECT_LE(invariants::real_rank(x.g), 8) << x.str();
    EXPECT_LE(invariants::real_rank(x.h), invariants::real_rank(x.g)) << x.str();
    EXPECT_LE(invariants::real_rank(x.g), invariants::noncompact_dim(x.g)) << x.str();
  }
}

TEST(Completeness, EveryTableRowHitAtBound8) {
  for (const auto& f : cat().families()) {
    if (!f.table) continue;
    bool hit = false;
    for (const auto& x : cat().enumerate_instances(f, 8)) hit = hit || f.table->condition.test(x.env());
    EXPECT_TRUE(hit) << f.id;
  }
  for (const auto& r : cat().table4()) EXPECT_TRUE(cat().has_family(r.family)) << r.family;
}

TEST(Existence, SpecExamples) {
  const auto a = existence_sources(cat(), cat().canonicalize(cat().parse_pair("SO0(8,8)/SO0(7,8)")));
  ASSERT_TRUE(a);
  EXPECT_EQ(a->method, Method::StandardTable1);
  EXPECT_EQ(a->data.at("L"), "Spin(1,8)");

  const auto b = existence_sources(cat(), cat().canonicalize(cat().parse_pair("SO0(4,2)/SO0(4,1)")));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->method, Method::StandardTable1);
  EXPECT_EQ(b->data.at("hurwitz_radon").at("rho"), 4);
  EXPECT_EQ(b->data.at("hurwitz_radon").at("q_less_than_rho"), true);

  const auto hr = existence_sources(cat(), cat().canonicalize(cat().parse_pair("SO0(4,3)/SO0(4,2)")));
  ASSERT_TRUE(hr);
  EXPECT_EQ(hr->method, Method::AdamsExistence);
  EXPECT_EQ(hr->data.at("rho"), 4);

  EXPECT_FALSE(existence_sources(cat(), cat().canonicalize(cat().parse_pair("SO0(3,2)/SO0(3,1)"))));

  const auto r = existence_sources(cat(), cat().parse_pair("SL(3,R)/SO(3)"));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->method, Method::RiemannianOrGroupManifold);
}

TEST(CertificateJson, RoundTrip) {
  const auto inst = cat().canonicalize(cat().parse_pair("Sp(2,R)/Sp(1,C)"));
  Certificate c = base_certificate(inst, Method::AdamsNonexistence, StatusTag::NotExists);
  c.data = {{"rho", 1}, {"q", 1}};
  c.citation = "x";
  c.also = {"AdamsNonexistence"};
  c.via_associated = true;
  c.associated_family = "so_soso";
  c.associated_params = {0, 1, 3, 1};
  c.associated_pair = inst.pair();
  const auto back = certificate_from_json(to_json(c));
  EXPECT_EQ(to_json(back), to_json(c));
  EXPECT_THROW(certificate_from_json(nlohmann::ordered_json{{"method", "Pfister"}}), Error);
  EXPECT_THROW(parse_method("Guess"), Error);
}

TEST(CatalogErrors, Malformed) {
  EXPECT_THROW(Catalog::parse("{"), CatalogError);
  EXPECT_THROW(Catalog::parse("{}"), CatalogError);
  EXPECT_THROW(Catalog::load("/nonexistent/catalog.json"), CatalogError);

  auto j = catalog_json();
  j["families"][0]["constraint"] = "p >= 1 && r <= 2";
  EXPECT_THROW(Catalog::from_json(j), CatalogError);

  j = catalog_json();
  j["families"].push_back(j["families"][0]);
  EXPECT_THROW(Catalog::from_json(j), CatalogError);

  j = catalog_json();
  j["families"][0]["pair"] = "SL(p+q,C)/S(GL(p,C)";
  EXPECT_THROW(Catalog::from_json(j), CatalogError);

  j = catalog_json();
  j["families"][0]["associated"]["family"] = "slc_slr";
  EXPECT_THROW(Catalog::from_json(j), CatalogError);
}

TEST(CatalogHash, StableAndSensitive) {
  EXPECT_EQ(cat().hash(), Catalog::load(TANGENT_CATALOG_PATH).hash());
  auto j = catalog_json();
  j["version"] = "changed";
  EXPECT_NE(Catalog::from_json(j).hash(), cat().hash());
}
