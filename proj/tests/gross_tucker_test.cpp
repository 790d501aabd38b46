#include "labgraph/gross_tucker.hpp"

#include <gtest/gtest.h>

#include <random>

#include "labgraph/error.hpp"
#include "support/fixtures.hpp"
#include "support/random.hpp"

namespace labgraph {
namespace {

LabeledGraphAction ShiftedAction() {
  return LeftTranslation(SkewProduct(testing::SkewZ(), testing::kShiftedWindow));
}

TEST(DeriveEta1Test, Shifted) {
  const auto eta1 = DeriveEta1(ShiftedAction(), testing::ShiftedSections().eta0);
  EXPECT_EQ(eta1, (IdMap{{"e", "(e,0)"}, {"f", "(f,0)"}, {"g", "(g,2)"}}));
}

TEST(DeriveEta1Test, RejectsNonSection) {
  try {
    DeriveEta1(ShiftedAction(), {{"v", "(w,0)"}, {"w", "(w,2)"}});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  EXPECT_THROW(DeriveEta1(ShiftedAction(), {{"v", "(v,0)"}}), Error);
}

TEST(DeriveEta1Test, LiftFailureAtEscapeVertex) {
  try {
    DeriveEta1(ShiftedAction(), {{"v", "(v,7)"}, {"w", "(w,2)"}});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLiftFailure);
  }
}

TEST(DeriveEta1Test, FdokSourcesLandInDomain) {
  const auto tau = LeftTranslation(SkewProduct(testing::Fdok()));
  const IdMap eta0{{"v", "(v,0)"}, {"w", "(w,0)"}};
  const auto eta1 = DeriveEta1(tau, eta0);
  const auto& g = tau.graph().graph();
  for (const auto& [orbit, e] : eta1) {
    const std::string src = g.vertex_id(g.src(g.edge(e)));
    EXPECT_TRUE(src == "(v,0)" || src == "(w,0)") << e;
  }
}

TEST(DeriveEta1Test, TrivialGroup) {
  const auto base = testing::Fish();
  Cocycle zero;
  for (const auto& e : base.graph().edges()) zero.emplace(e.id, 0);
  const auto tau = LeftTranslation(SkewProduct(SkewSpec(base, Group::Cyclic(1), zero, zero)));
  EXPECT_EQ(DeriveEta1(tau, {{"v", "(v,0)"}, {"w", "(w,0)"}}),
            (IdMap{{"e", "(e,0)"}, {"f", "(f,0)"}, {"g", "(g,0)"}}));
}

TEST(DeriveCocyclesTest, Shifted) {
  const auto cd = DeriveCocycles(ShiftedAction(), testing::ShiftedSections());
  EXPECT_EQ(cd.c, (Cocycle{{"e", 1}, {"f", -1}, {"g", 3}}));
  EXPECT_EQ(cd.d, (Cocycle{{"e", 0}, {"f", 0}, {"g", 2}}));
}

TEST(DeriveCocyclesTest, NonFreeWitness) {
  // Z/2 swapping the two loops of Fish4 fixes both letters.
  const auto base = testing::Fish4();
  const LabeledGraphMorphism swap{{{"v", "w"}, {"w", "v"}},
                                  {{"vv", "ww"}, {"ww", "vv"}, {"vw", "wv"}, {"wv", "vw"}},
                                  {{"0", "0"}, {"1", "1"}}};
  const auto action = LabeledGraphAction::FromGenerators(Group::Cyclic(2), base, {{1, swap}});
  try {
    Reconstruct(action, {{{"v", "v"}}, {}, {}});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonFreeWitness);
  }
}

TEST(ReconstructTest, ShiftedVerifiesOnWindow) {
  const auto action = ShiftedAction();
  const auto rec = Reconstruct(action, testing::ShiftedSections());
  EXPECT_TRUE(rec.morphism.is_isomorphism);
  EXPECT_TRUE(rec.morphism.partial);
  EXPECT_TRUE(rec.equivariance.equivariant);
  EXPECT_GT(rec.equivariance.checked, 0u);
  // Quotient is Fish under the canonical names.
  EXPECT_TRUE(VerifyMorphism(rec.quotient.graph, testing::Fish(), IdentityMorphism(rec.quotient.graph)).is_isomorphism);
  EXPECT_EQ(rec.iso.vertex_map.at("(w,0)"), "(w,2)");
  EXPECT_EQ(rec.iso.edge_map.at("(g,1)"), "(g,3)");
}

TEST(ReconstructTest, ShiftedCocyclesAreNotLabelConsistent) {
  const auto rec = Reconstruct(ShiftedAction(), testing::ShiftedSections());
  // f and g share the label 0 but c(f) != c(g) and d(f) != d(g).
  EXPECT_EQ(rec.quotient.graph.label_id(rec.quotient.graph.graph().edge("f")),
            rec.quotient.graph.label_id(rec.quotient.graph.graph().edge("g")));
  EXPECT_NE(rec.spec.c().at("f"), rec.spec.c().at("g"));
  EXPECT_NE(rec.spec.d().at("f"), rec.spec.d().at("g"));
  EXPECT_FALSE(rec.spec.c_consistency().consistent);
  EXPECT_FALSE(rec.spec.d_consistency().consistent);
}

TEST(ReconstructTest, FdokExhaustive) {
  const auto tau = LeftTranslation(SkewProduct(testing::Fdok()));
  const auto rec = Reconstruct(tau, {{{"v", "(v,0)"}, {"w", "(w,0)"}}, {}, {}});
  EXPECT_TRUE(rec.morphism.is_isomorphism);
  EXPECT_FALSE(rec.morphism.partial);
  EXPECT_TRUE(rec.equivariance.equivariant);
  EXPECT_EQ(rec.spec.c(), testing::Fdok().c());
  EXPECT_EQ(rec.spec.d(), testing::Fdok().d());
}

TEST(ReconstructTest, TrivialGroup) {
  const auto base = testing::Fish();
  Cocycle zero;
  for (const auto& e : base.graph().edges()) zero.emplace(e.id, 0);
  const auto tau = LeftTranslation(SkewProduct(SkewSpec(base, Group::Cyclic(1), zero, zero)));
  const auto rec = Reconstruct(tau, {{{"v", "(v,0)"}, {"w", "(w,0)"}}, {}, {}});
  EXPECT_EQ(rec.spec.c(), zero);
  EXPECT_EQ(rec.spec.d(), zero);
  EXPECT_EQ(rec.iso, IdentityMorphism(tau.graph()));
}

// Every choice of eta0 on Fdok gives an equivariantly isomorphic result.
TEST(ReconstructTest, SectionIndependence) {
  const auto tau = LeftTranslation(SkewProduct(testing::Fdok()));
  std::vector<Reconstruction> all;
  for (Element i : {0, 1}) {
    for (Element j : {0, 1}) {
      IdMap eta0{{"v", "(v," + std::to_string(i) + ")"}, {"w", "(w," + std::to_string(j) + ")"}};
      all.push_back(Reconstruct(tau, {eta0, {}, {}}));
    }
  }
  for (const auto& a : all) {
    for (const auto& b : all) {
      // b.iso^-1 o a.iso between the two reconstructed skew products.
      const auto phi = Compose(Inverse(b.iso), a.iso);
      EXPECT_TRUE(VerifyMorphism(a.skew.graph, b.skew.graph, phi).is_isomorphism);
      EXPECT_TRUE(CheckEquivariance(LeftTranslation(a.skew), LeftTranslation(b.skew), phi).equivariant);
    }
  }
}

// Skew spec -> translation -> quotient -> reconstruct -> materialization
// isomorphic to the original.
TEST(ReconstructTest, RoundTripFromSkewSpec) {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 25; ++i) {
    const Group g = testing::RandomFiniteGroup(rng);
    const auto base = testing::RandomValidLabeledGraph(rng, {1, 3, 6, 2});
    Cocycle c, d;
    for (const auto& e : base.graph().edges()) {
      c.emplace(e.id, static_cast<Element>(rng() % g.order()));
      d.emplace(e.id, static_cast<Element>(rng() % g.order()));
    }
    const SkewSpec spec(base, g, c, d);
    const auto tau = LeftTranslation(SkewProduct(spec));
    IdMap eta0;
    for (const auto& v : base.graph().vertices()) eta0.emplace(v, SkewId(g, v, static_cast<Element>(rng() % g.order())));
    const auto rec = Reconstruct(tau, {eta0, {}, {}});
    EXPECT_TRUE(rec.morphism.is_isomorphism);
    EXPECT_TRUE(rec.equivariance.equivariant);
  }
}

TEST(ReconstructTest, RoundTripOnIntegerWindow) {
  const auto action = LeftTranslation(SkewProduct(testing::Nofd(), Window{-4, 4}));
  const auto rec = Reconstruct(action, {{{"v", "(v,0)"}, {"w", "(w,0)"}}, {}, {}});
  EXPECT_TRUE(rec.morphism.is_isomorphism);
  EXPECT_TRUE(rec.equivariance.equivariant);
  EXPECT_EQ(rec.spec.c(), testing::Nofd().c());
}

TEST(ReconstructLabelConsistentTest, Fdok) {
  const auto tau = LeftTranslation(SkewProduct(testing::Fdok()));
  const auto rec = ReconstructLabelConsistent(tau);
  EXPECT_TRUE(rec.spec.c_consistency().consistent);
  EXPECT_TRUE(rec.spec.d_consistency().consistent);
  EXPECT_EQ(rec.spec.d_consistency().factoring.size(), rec.quotient.graph.num_letters());
  EXPECT_EQ(rec.domain.size(), 2u);
}

TEST(ReconstructLabelConsistentTest, NofdDomainRejected) {
  const auto tau = LeftTranslation(SkewProduct(testing::Nofd(), testing::kNofdWindow));
  try {
    ReconstructLabelConsistent(tau, testing::NofdDomain());
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoFundamentalDomain);
    EXPECT_NE(std::string(e.what()).find("clause"), std::string::npos) << e.what();
  }
  EXPECT_THROW(ReconstructLabelConsistent(tau), Error);
}

TEST(ReconstructLabelConsistentTest, ScrambledActions) {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 30; ++i) {
    const Group g = testing::RandomFiniteGroup(rng);
    const auto spec = testing::RandomLabelConsistentSkew(rng, g, {1, 3, 6, 2});
    const auto action = testing::ScrambledTranslationAction(rng, spec);
    const auto rec = ReconstructLabelConsistent(action);
    EXPECT_TRUE(rec.spec.c_consistency().consistent);
    EXPECT_TRUE(rec.spec.d_consistency().consistent);
    EXPECT_TRUE(rec.morphism.is_isomorphism);
    EXPECT_TRUE(rec.equivariance.equivariant);
  }
}

}  // namespace
}  // namespace labgraph
