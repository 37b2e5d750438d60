#include <gtest/gtest.h>

#include <set>

#include "expect_error.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "grpd/bicategory.hpp"
#include "oracles.hpp"

using namespace grpd;

namespace {

std::size_t pair_orbit_count(const Correspondence& X, const Correspondence& Y) {
  // Union-find over fibre-product pairs under (x, y) ~ (x·g^-1, g·y).
  const FiniteGroupoid& G = *X.right();
  std::map<std::pair<Index, Index>, std::pair<Index, Index>> parent;
  std::function<std::pair<Index, Index>(std::pair<Index, Index>)> find = [&](std::pair<Index, Index> p) {
    return parent[p] == p ? p : parent[p] = find(parent[p]);
  };
  for (Index x = 0; x < X.size(); ++x)
    for (Index y = 0; y < Y.size(); ++y)
      if (X.s(x) == Y.r(y)) parent[{x, y}] = {x, y};
  for (const auto& [p, unused] : parent)
    for (Index g : G.arrows_from(X.s(p.first))) {
      std::pair<Index, Index> q{X.act_right(p.first, G.inv(g)), Y.act_left(g, p.second)};
      parent[find(p)] = find(q);
    }
  std::size_t n = 0;
  for (const auto& [p, unused] : parent) n += find(p) == p;
  return n;
}

}  // namespace

TEST(BicategoryTest, TwoLoopGraphSquared) {
  Composite c = compose(fixtures::o2x(), fixtures::o2x());
  EXPECT_EQ(c.result->size(), 4u);
  EXPECT_EQ(c.result->point_names(), (std::vector<std::string>{"[e1,e1]", "[e1,e2]", "[e2,e1]", "[e2,e2]"}));
}

TEST(BicategoryTest, IdentityOfZ2Squared) {
  CorrRef id = identity_correspondence(fixtures::z2());
  Composite c = compose(id, id);
  EXPECT_EQ(c.result->size(), 2u);
  EXPECT_EQ(c.class_of(id->point("e"), id->point("a")), c.class_of(id->point("a"), id->point("e")));
  Unitor u = unitor_left(id);
  EXPECT_TRUE(u.arrow.bijective());
}

TEST(BicategoryTest, MismatchedEndpoints) {
  EXPECT_GRPD_ERROR(compose(fixtures::o2x(), identity_correspondence(fixtures::z2())), ErrorKind::kEndpointMismatch,
                    "compose");
}

TEST(BicategoryTest, RightUnitIsIsomorphic) {
  for (const auto& [name, x] : fixtures::corpus_correspondences()) {
    Unitor r = unitor_right(x);
    EXPECT_TRUE(r.arrow.bijective()) << name;
    Unitor l = unitor_left(x);
    EXPECT_TRUE(l.arrow.bijective()) << name;
  }
}

TEST(BicategoryTest, UnitorsOfIdentityAreMultiplication) {
  GroupoidRef g = fixtures::mixed6();
  CorrRef id = identity_correspondence(g);
  for (const Unitor& u : {unitor_left(id), unitor_right(id)}) {
    for (Index c = 0; c < u.composite.result->size(); ++c) {
      auto [h, k] = u.composite.witness[c];
      EXPECT_EQ(id->point_name(u.arrow.map[c]), g->arrow_name(g->comp(h, k)));
    }
  }
}

TEST(BicategoryTest, TwoArrows) {
  CorrRef e1 = fixtures::loops({"e1"});
  CorrRef x = fixtures::o2x();
  TwoArrow alpha = make_two_arrow(e1, x, std::map<std::string, std::string>{{"e1", "e1"}});
  EXPECT_FALSE(alpha.bijective());
  EXPECT_EQ(vertical_compose(identity_two_arrow(x), alpha), alpha);

  Composite src = compose(e1, x), tgt = compose(x, x);
  TwoArrow h = horizontal_compose(alpha, identity_two_arrow(x), src, tgt);
  EXPECT_EQ(src.result->size(), 2u);
  std::set<Index> image(h.map.begin(), h.map.end());
  EXPECT_EQ(image.size(), 2u);

  Composite xx = compose(x, x);
  TwoArrow ids = horizontal_compose(identity_two_arrow(x), identity_two_arrow(x), xx, xx);
  EXPECT_EQ(ids, identity_two_arrow(xx.result));
}

TEST(BicategoryTest, NonEquivariantMapIsRejected) {
  CorrRef x = fixtures::z2_swap_corr();
  std::map<std::string, std::string> m{{"(0,e)", "(1,e)"}, {"(1,e)", "(0,e)"}, {"(0,a)", "(0,a)"}, {"(1,a)", "(1,a)"}};
  Error e = testing_support::capture([&] { make_two_arrow(x, x, m); });
  EXPECT_EQ(e.kind(), ErrorKind::kAxiomViolation);
  EXPECT_TRUE(e.law() == "left-equivariant" || e.law() == "right-equivariant") << e.law();
  EXPECT_GRPD_ERROR(make_two_arrow(x, x, std::vector<Index>{0, 0, 1, 2}), ErrorKind::kAxiomViolation, "injective");
}

TEST(BicategoryTest, UnitorNaturality) {
  CorrRef e1 = fixtures::loops({"e1"});
  CorrRef x = fixtures::o2x();
  TwoArrow alpha = make_two_arrow(e1, x, std::map<std::string, std::string>{{"e1", "e1"}});
  CorrRef one = identity_correspondence(fixtures::pt());
  Unitor l_src = unitor_left(e1), l_tgt = unitor_left(x);
  TwoArrow whisker = horizontal_compose(identity_two_arrow(one), alpha, l_src.composite, l_tgt.composite);
  EXPECT_EQ(vertical_compose(alpha, l_src.arrow), vertical_compose(l_tgt.arrow, whisker));
  Unitor r_src = unitor_right(e1), r_tgt = unitor_right(x);
  TwoArrow whisker_r = horizontal_compose(alpha, identity_two_arrow(one), r_src.composite, r_tgt.composite);
  EXPECT_EQ(vertical_compose(alpha, r_src.arrow), vertical_compose(r_tgt.arrow, whisker_r));
}

TEST(BicategoryTest, AssociatorOnThreeLoops) {
  CorrRef x = fixtures::o2x();
  Associator a = associator(x, x, x);
  EXPECT_EQ(a.outer.result->size(), 8u);
  EXPECT_EQ(a.target.result->size(), 8u);
  EXPECT_TRUE(a.arrow.bijective());
}

TEST(BicategoryTest, AssociatorOnIdentitiesRebrackets) {
  GroupoidRef g = fixtures::z2();
  CorrRef id = identity_correspondence(g);
  Associator a = associator(id, id, id);
  EXPECT_TRUE(a.arrow.bijective());
  // Both sides collapse to the product of the three factors.
  auto product = [&](const Composite& outer, const Composite& inner, bool left_nested, Index c) {
    auto [p, q] = outer.witness[c];
    if (left_nested) {
      auto [u, v] = inner.witness[p];
      return g->comp(g->comp(u, v), q);
    }
    auto [u, v] = inner.witness[q];
    return g->comp(p, g->comp(u, v));
  };
  for (Index c = 0; c < a.outer.result->size(); ++c)
    EXPECT_EQ(product(a.outer, a.inner, false, c), product(a.target, a.first, true, a.arrow.map[c]));
}

TEST(BicategoryTest, CoherenceOnFourLoops) {
  CorrRef x = fixtures::o2x();
  CoherenceReport r = check_coherence({x, x, x, x});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checks.back().name, "pentagon");
  EXPECT_EQ(compose(x, compose(x, compose(x, x).result).result).result->size(), 16u);
}

TEST(BicategoryTest, CoherenceWithEmptyFactor) {
  CorrRef x = fixtures::o2x();
  EXPECT_TRUE(check_coherence({x, fixtures::loops({}), x, x}).ok());
}

TEST(BicategoryProperty, CompositeClassesMatchOracle) {
  gen::Rng rng(301);
  for (int trial = 0; trial < 25; ++trial) {
    auto chain = gen::random_chain(rng, 2);
    Composite c = compose(chain[0], chain[1]);
    const Correspondence& X = *chain[0];
    const Correspondence& Y = *chain[1];
    EXPECT_EQ(c.result->size(), pair_orbit_count(X, Y));
    EXPECT_EQ(*validate_correspondence(c.result->to_spec()), *c.result);
    const FiniteGroupoid& G = *X.right();
    for (Index x = 0; x < X.size(); ++x)
      for (Index y = 0; y < Y.size(); ++y) {
        if (X.s(x) != Y.r(y)) continue;
        for (Index g : G.arrows_from(X.s(x)))
          EXPECT_EQ(c.class_of(X.act_right(x, G.inv(g)), Y.act_left(g, y)), c.class_of(x, y));
        Index cls = c.class_of(x, y);
        EXPECT_EQ(c.result->r(cls), X.r(x));
        EXPECT_EQ(c.result->s(cls), Y.s(y));
      }
  }
}

TEST(BicategoryProperty, SpaceInTheMiddleGivesFibreProduct) {
  gen::Rng rng(302);
  for (int trial = 0; trial < 20; ++trial) {
    gen::Groupoid h = gen::random_groupoid(rng), k = gen::random_groupoid(rng);
    // Middle groupoid is a space: single-object components with trivial group.
    gen::Groupoid space = gen::make_groupoid({{1, 1}, {1, 1}, {1, 1}});
    CorrRef x = gen::functor_correspondence(rng, h, space, rng.uniform(1, 2));
    CorrRef y = gen::functor_correspondence(rng, space, k, 1);
    std::size_t fibre = 0;
    for (Index a = 0; a < x->size(); ++a)
      for (Index b = 0; b < y->size(); ++b) fibre += x->s(a) == y->r(b);
    EXPECT_EQ(compose(x, y).result->size(), fibre);
  }
}

TEST(BicategoryProperty, TightnessPreserved) {
  gen::Rng rng(303);
  for (int trial = 0; trial < 25; ++trial) {
    auto chain = gen::random_chain(rng, 2, 1);
    ASSERT_TRUE(classify(*chain[0]).tight);
    ASSERT_TRUE(classify(*chain[1]).tight);
    Composite c = compose(chain[0], chain[1]);
    EXPECT_TRUE(classify(*c.result).tight);
    EXPECT_TRUE(oracle::tight(*c.result));
  }
}

TEST(BicategoryProperty, RandomChainsAreCoherent) {
  gen::Rng rng(304);
  for (int trial = 0; trial < 10; ++trial) {
    auto chain = gen::random_chain(rng, rng.uniform(2, 4), 2);
    CoherenceReport r = check_coherence(chain);
    for (const auto& c : r.checks) EXPECT_TRUE(c.ok) << c.name;
  }
}
