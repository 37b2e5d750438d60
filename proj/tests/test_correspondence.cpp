#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace grpd;

TEST(CorrespondenceTest, TwoLoopGraphIsValid) {
  CorrRef x = fixtures::o2x();
  EXPECT_EQ(x->size(), 2u);
  EXPECT_EQ(x->point_name(0), "e1");
}

TEST(CorrespondenceTest, IdentityCorrespondenceOfZ2) {
  CorrRef x = identity_correspondence(fixtures::z2());
  EXPECT_EQ(x->size(), 2u);
  Index e = x->point("e"), a = x->point("a");
  EXPECT_EQ(x->act_right(e, x->right()->arrow("a")), a);
  EXPECT_EQ(x->act_left(x->left()->arrow("a"), a), e);
}

TEST(CorrespondenceTest, FixedPointOfNonUnitIsNotFree) {
  GroupoidRef g = fixtures::z2();
  CorrespondenceSpec s{fixtures::pt(), g, {"x"}, {{"x", "⋆"}}, {{"x", "o"}}, {{"1_⋆", "x", "x"}},
                       {{"e", "x", "x"}, {"a", "x", "x"}}};
  EXPECT_GRPD_ERROR(validate_correspondence(s), ErrorKind::kAxiomViolation, "not-free", "x", "a");
}

TEST(CorrespondenceTest, MissingActionEntryIsRejected) {
  CorrespondenceSpec s = fixtures::o2x()->to_spec();
  s.ract.pop_back();
  Error e = testing_support::capture([&] { validate_correspondence(s); });
  EXPECT_EQ(e.kind(), ErrorKind::kAxiomViolation);
}

TEST(CorrespondenceTest, BrokenLeftActionIsRejected) {
  CorrespondenceSpec s = identity_correspondence(fixtures::z2())->to_spec();
  s.lact = {{"e", "e", "e"}, {"e", "a", "a"}, {"a", "e", "a"}, {"a", "a", "a"}};
  Error e = testing_support::capture([&] { validate_correspondence(s); });
  EXPECT_EQ(e.kind(), ErrorKind::kAxiomViolation);
  EXPECT_EQ(e.law(), "action");
}

TEST(CorrespondenceTest, NonCommutingActionsAreRejected) {
  // Z2 acts on Z3 by inversion from the left, Z3 by multiplication on the right.
  GroupoidRef z3 = fixtures::z3();
  CorrespondenceSpec s = identity_correspondence(z3)->to_spec();
  s.left = fixtures::z2();
  s.r = {{"e", "o"}, {"b", "o"}, {"c", "o"}};
  s.lact = {{"e", "e", "e"}, {"e", "b", "b"}, {"e", "c", "c"}, {"a", "e", "e"}, {"a", "b", "c"}, {"a", "c", "b"}};
  Error e = testing_support::capture([&] { validate_correspondence(s); });
  EXPECT_EQ(e.kind(), ErrorKind::kAxiomViolation);
  EXPECT_EQ(e.law(), "commute");
}

TEST(CorrespondenceTest, Orbits) {
  OrbitDecomposition o = orbits(*fixtures::o2x());
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o.classes[0], std::vector<Index>{0});
  EXPECT_EQ(o.classes[1], std::vector<Index>{1});

  CorrRef id = identity_correspondence(fixtures::z2());
  OrbitDecomposition one = orbits(*id);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(id->point_name(one.representative(0)), "a");

  EXPECT_EQ(orbits(*fixtures::loops({})).size(), 0u);
}

TEST(CorrespondenceTest, Bracket) {
  CorrRef x = fixtures::o2x();
  EXPECT_EQ(x->right()->arrow_name(bracket(*x, 0, 0)), "1_⋆");
  EXPECT_GRPD_ERROR(bracket(*x, 0, 1), ErrorKind::kNotSameOrbit, "bracket", "e1", "e2");

  CorrRef id = identity_correspondence(fixtures::z2());
  EXPECT_EQ(id->right()->arrow_name(bracket(*id, id->point("e"), id->point("a"))), "a");
}

TEST(CorrespondenceTest, Classify) {
  Classification c = classify(*fixtures::o2x());
  EXPECT_TRUE(c.proper);
  EXPECT_FALSE(c.tight);
  for (GroupoidRef g : {fixtures::pt(), fixtures::z2(), fixtures::pair(2), fixtures::mixed6()})
    EXPECT_TRUE(classify(*identity_correspondence(g)).tight);
  Classification empty = classify(*fixtures::loops({}));
  EXPECT_TRUE(empty.proper);
  EXPECT_FALSE(empty.tight);
}

TEST(CorrespondenceTest, SelfSimilarGroupCorrespondence) {
  GroupoidRef g = fixtures::z2();
  CorrRef x = self_similar_group_correspondence(g, {"0", "1"}, fixtures::z2_swap_pi(), fixtures::trivial_phi(g, {"0", "1"}));
  EXPECT_EQ(x->size(), 4u);
  Index p = x->point("(0,e)");
  EXPECT_EQ(x->point_name(x->act_left(g->arrow("a"), p)), "(1,e)");
  EXPECT_EQ(x->point_name(x->act_right(p, g->arrow("a"))), "(0,a)");

  GroupoidRef trivial = group_as_groupoid({{"e"}, {{"e", "e", "e"}}});
  CorrRef y = self_similar_group_correspondence(trivial, {"0", "1"}, {{{"e", "0"}, "0"}, {{"e", "1"}, "1"}},
                                                fixtures::trivial_phi(trivial, {"0", "1"}));
  EXPECT_EQ(y->size(), 2u);
  EXPECT_EQ(orbits(*y).size(), 2u);
  EXPECT_FALSE(classify(*y).tight);
}

TEST(CorrespondenceTest, BrokenCocycleIsRejected) {
  GroupoidRef g = fixtures::z2();
  PairMap phi{{{"e", "0"}, "e"}, {{"e", "1"}, "e"}, {{"a", "0"}, "a"}, {{"a", "1"}, "e"}};
  EXPECT_GRPD_ERROR(self_similar_group_correspondence(g, {"0", "1"}, fixtures::z2_swap_pi(), phi),
                    ErrorKind::kCocycleViolation, "cocycle", "a", "a", "0");
}

TEST(CorrespondenceTest, SelfSimilarGraphOverOneVertex) {
  SelfSimilarGraphData d;
  d.group = fixtures::z2();
  d.vertices = {"v"};
  d.vertex_action = {{{"e", "v"}, "v"}, {{"a", "v"}, "v"}};
  d.edges = {"x", "y"};
  d.edge_range = {{"x", "v"}, {"y", "v"}};
  d.edge_source = d.edge_range;
  d.edge_action = {{{"e", "x"}, "x"}, {{"e", "y"}, "y"}, {{"a", "x"}, "y"}, {{"a", "y"}, "x"}};
  d.restriction = {{{"e", "x"}, "e"}, {{"e", "y"}, "e"}, {{"a", "x"}, "e"}, {{"a", "y"}, "e"}};
  CorrRef x = self_similar_graph_correspondence(d);
  EXPECT_EQ(x->size(), 4u);
  Classification c = classify(*x);
  EXPECT_TRUE(c.proper);
  EXPECT_FALSE(c.tight);
}

TEST(CorrespondenceTest, SelfSimilarGraphWithTrivialGroupIsTheGraph) {
  SelfSimilarGraphData d;
  d.group = group_as_groupoid({{"e"}, {{"e", "e", "e"}}});
  d.vertices = {"v", "w"};
  d.vertex_action = {{{"e", "v"}, "v"}, {{"e", "w"}, "w"}};
  d.edges = {"f", "g", "h"};
  d.edge_range = {{"f", "v"}, {"g", "w"}, {"h", "w"}};
  d.edge_source = {{"f", "w"}, {"g", "v"}, {"h", "w"}};
  for (const auto& e : d.edges) {
    d.edge_action[{"e", e}] = e;
    d.restriction[{"e", e}] = "e";
  }
  CorrRef x = self_similar_graph_correspondence(d);
  EXPECT_EQ(x->size(), 3u);
  EXPECT_EQ(orbits(*x).size(), 3u);
  Index f = x->point("(f,e)");
  EXPECT_EQ(x->left()->object_name(x->r(f)), "v");
  EXPECT_EQ(x->right()->object_name(x->s(f)), "w");
}

TEST(CorrespondenceTest, SourceCompatibilityViolation) {
  SelfSimilarGraphData d;
  d.group = fixtures::z2();
  d.vertices = {"v", "w"};
  d.vertex_action = {{{"e", "v"}, "v"}, {{"e", "w"}, "w"}, {{"a", "v"}, "w"}, {{"a", "w"}, "v"}};
  d.edges = {"x", "y"};
  d.edge_range = {{"x", "v"}, {"y", "w"}};
  d.edge_source = {{"x", "v"}, {"y", "w"}};
  d.edge_action = {{{"e", "x"}, "x"}, {{"e", "y"}, "y"}, {{"a", "x"}, "y"}, {{"a", "y"}, "x"}};
  d.restriction = {{{"e", "x"}, "e"}, {{"e", "y"}, "e"}, {{"a", "x"}, "e"}, {{"a", "y"}, "e"}};
  Error e = testing_support::capture([&] { self_similar_graph_correspondence(d); });
  EXPECT_EQ(e.kind(), ErrorKind::kCompatibilityViolation);
  EXPECT_EQ(e.law(), "source");
}

TEST(CorrespondenceTest, CocycleGauge) {
  GroupoidRef g = fixtures::z2();
  const std::vector<std::string> letters{"0", "1"};
  PairMap phi = fixtures::trivial_phi(g, letters);
  EXPECT_EQ(cocycle_gauge(g, letters, fixtures::z2_swap_pi(), phi, {{"0", "e"}, {"1", "e"}}), phi);
  PairMap twisted = cocycle_gauge(g, letters, fixtures::z2_swap_pi(), phi, {{"0", "a"}, {"1", "e"}});
  EXPECT_EQ((twisted.at({"a", "0"})), "a");
  check_self_similar(g, letters, fixtures::z2_swap_pi(), twisted);
}

TEST(CorrespondenceTest, GaugeThereAndBackWithTrivialPermutation) {
  GroupoidRef g = fixtures::z3();
  const std::vector<std::string> letters{"0", "1"};
  PairMap pi;
  PairMap phi;
  for (const auto& h : g->arrow_names())
    for (const auto& x : letters) {
      pi[{h, x}] = x;
      phi[{h, x}] = h;
    }
  std::map<std::string, std::string> psi{{"0", "b"}, {"1", "c"}}, psi_inv{{"0", "c"}, {"1", "b"}};
  PairMap once = cocycle_gauge(g, letters, pi, phi, psi);
  EXPECT_EQ(cocycle_gauge(g, letters, pi, once, psi_inv), phi);
}

TEST(CorrespondenceProperty, BracketLawsOnRandomCorrespondences) {
  gen::Rng rng(201);
  for (int trial = 0; trial < 40; ++trial) {
    CorrRef xr = gen::random_correspondence(rng);
    const Correspondence& X = *xr;
    const FiniteGroupoid& G = *X.right();
    const FiniteGroupoid& H = *X.left();
    OrbitDecomposition orb = orbits(X);
    EXPECT_EQ(orb.size(), oracle::orbit_count(X));
    for (Index a = 0; a < X.size(); ++a) {
      EXPECT_EQ(orb.classes[orb.class_of[a]].front(), orb.representative(orb.class_of[a]));
      EXPECT_LE(orb.representative(orb.class_of[a]), a);
      for (Index b = 0; b < X.size(); ++b) {
        auto candidates = oracle::bracket_candidates(X, a, b);
        if (orb.class_of[a] != orb.class_of[b]) {
          EXPECT_TRUE(candidates.empty());
          continue;
        }
        ASSERT_EQ(candidates.size(), 1u);
        Index g = bracket(X, a, b);
        EXPECT_EQ(g, candidates[0]);
        EXPECT_EQ(G.dst(g), X.s(a));
        EXPECT_EQ(G.src(g), X.s(b));
        EXPECT_EQ(bracket(X, b, a), G.inv(g));
        EXPECT_TRUE(a != b || g == G.unit(X.s(a)));
        for (Index h : H.arrows_from(X.r(a)))
          for (Index g1 : G.arrows_to(X.s(a)))
            for (Index g2 : G.arrows_to(X.s(b))) {
              Index lhs = bracket(X, X.act_right(X.act_left(h, a), g1), X.act_right(X.act_left(h, b), g2));
              EXPECT_EQ(lhs, G.comp(G.comp(G.inv(g1), g), g2));
            }
      }
    }
  }
}

TEST(CorrespondenceProperty, ClassificationMatchesOracle) {
  gen::Rng rng(202);
  for (int trial = 0; trial < 60; ++trial) {
    CorrRef x = gen::random_correspondence(rng);
    Classification c = classify(*x);
    EXPECT_EQ(c.tight, oracle::tight(*x));
    EXPECT_TRUE(!c.tight || c.proper);
  }
}

TEST(CorrespondenceProperty, SelfSimilarOutputRoundTrips) {
  gen::Rng rng(203);
  for (int trial = 0; trial < 30; ++trial) {
    CorrRef x = gen::twisted_self_similar(rng);
    CorrRef again = validate_correspondence(x->to_spec());
    EXPECT_EQ(*x, *again);
  }
}

TEST(CorrespondenceProperty, GaugedCocyclesStayCocycles) {
  gen::Rng rng(204);
  GroupoidRef g = fixtures::z3();
  const std::vector<std::string> letters{"x", "y", "z"};
  for (int trial = 0; trial < 20; ++trial) {
    PairMap pi, phi;
    const int shift = rng.uniform(0, 2);
    const std::vector<std::string> powers{"e", "b", "c"};
    for (int h = 0; h < 3; ++h)
      for (int x = 0; x < 3; ++x) {
        pi[{powers[h], letters[x]}] = letters[(x + h * shift) % 3];
        phi[{powers[h], letters[x]}] = powers[h];
      }
    std::map<std::string, std::string> psi;
    for (const auto& x : letters) psi[x] = powers[rng.uniform(0, 2)];
    check_self_similar(g, letters, pi, cocycle_gauge(g, letters, pi, phi, psi));
  }
}
