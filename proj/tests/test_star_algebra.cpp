#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fixtures.hpp"
#include "generators.hpp"
#include "grpd/star_algebra.hpp"
#include "oracles.hpp"

using namespace grpd;

namespace {

AlgebraElement delta(const GroupoidRef& g, const std::string& id, Scalar c = 1) {
  return AlgebraElement::delta(g, g->arrow(id), c);
}

std::string pair_arrow(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

ArrowSet random_slice(gen::Rng& rng, const GroupoidRef& g) {
  // Greedy: shuffled arrows, keep those with fresh source and fresh target.
  std::vector<Index> order(g->num_arrows());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng.engine());
  std::vector<bool> src(g->num_objects()), dst(g->num_objects());
  std::vector<Index> keep;
  for (Index a : order) {
    if (src[g->src(a)] || dst[g->dst(a)] || rng.coin()) continue;
    src[g->src(a)] = dst[g->dst(a)] = true;
    keep.push_back(a);
  }
  return ArrowSet::of(g, keep);
}

}  // namespace

TEST(StarAlgebraTest, GroupAlgebraOfZ2) {
  GroupoidRef g = fixtures::z2();
  AlgebraElement a = delta(g, "a");
  EXPECT_EQ(convolve(a, a), delta(g, "e"));
  AlgebraElement s = delta(g, "e") + a;
  EXPECT_EQ(convolve(s, s), Scalar(2) * s);
  EXPECT_EQ(involute(delta(g, "e", Scalar(0, 1))), delta(g, "e", Scalar(0, -1)));
  EXPECT_NEAR(operator_norm(s), 2.0, 1e-12);
  EXPECT_NEAR(operator_norm(delta(g, "e", Scalar(0, 1))), 1.0, 1e-12);
  EXPECT_NEAR(operator_norm(delta(g, "e") - a), 2.0, 1e-12);
}

TEST(StarAlgebraTest, ThreeCycleConvolution) {
  GroupoidRef g = fixtures::z3();
  EXPECT_EQ(convolve(delta(g, "b"), delta(g, "b")), delta(g, "c"));
  EXPECT_EQ(involute(delta(g, "b", Scalar(mpq_class(1, 2), 3))), delta(g, "c", Scalar(mpq_class(1, 2), -3)));
}

TEST(StarAlgebraTest, ComposableSupportOnly) {
  GroupoidRef g = fixtures::pair(2);
  EXPECT_TRUE(convolve(delta(g, "(1,1)"), delta(g, "(2,2)")).is_zero());
  EXPECT_EQ(convolve(delta(g, "(1,2)"), delta(g, "(2,1)")), delta(g, "(1,1)"));
}

TEST(StarAlgebraTest, IndicatorOfUnitsIsIdentity) {
  GroupoidRef g = fixtures::mixed6();
  AlgebraElement one = indicator(units_of(g));
  gen::Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    AlgebraElement a = gen::element(rng, g);
    EXPECT_EQ(convolve(one, a), a);
    EXPECT_EQ(convolve(a, one), a);
  }
}

TEST(StarAlgebraTest, RegularRepresentationBlocks) {
  GroupoidRef g = fixtures::mixed6();
  RegularRepresentation rho(g);
  ASSERT_EQ(rho.blocks().size(), 3u);
  std::size_t total = 0;
  for (const auto& b : rho.blocks()) total += b.basis.size();
  EXPECT_EQ(total, g->num_arrows());
  EXPECT_TRUE(rho.faithful_on_basis());
}

TEST(StarAlgebraTest, PairGroupoidIsMatrixAlgebra) {
  for (int n = 1; n <= 5; ++n) {
    GroupoidRef g = fixtures::pair(n);
    EXPECT_EQ(g->num_arrows(), static_cast<std::size_t>(n * n));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            AlgebraElement expect(g);
            if (j == k) expect = delta(g, pair_arrow(i, l));
            EXPECT_EQ(convolve(delta(g, pair_arrow(i, j)), delta(g, pair_arrow(k, l))), expect);
          }
    RegularRepresentation rho(g);
    EXPECT_TRUE(rho.faithful_on_basis());
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        auto blocks = rho.apply(delta(g, pair_arrow(i, j)));
        for (std::size_t b = 0; b < blocks.size(); ++b) {
          const auto& basis = rho.blocks()[b].basis;
          for (std::size_t r = 0; r < basis.size(); ++r)
            for (std::size_t c = 0; c < basis.size(); ++c) {
              // Basis vector (m, x) goes to (i, x) when m == j.
              bool hit = g->arrow_name(basis[c]).substr(1, 1) == std::to_string(j) &&
                         g->arrow_name(basis[r]).substr(1, 1) == std::to_string(i);
              EXPECT_EQ(blocks[b].at(r, c), Scalar(hit ? 1 : 0));
            }
        }
      }
  }
}

TEST(StarAlgebraProperty, AssociativeInvolutiveAlgebra) {
  gen::Rng rng(201);
  for (int trial = 0; trial < 200; ++trial) {
    GroupoidRef g = gen::random_groupoid(rng).ref;
    AlgebraElement a = gen::element(rng, g), b = gen::element(rng, g), c = gen::element(rng, g);
    Scalar z = gen::scalar(rng);
    EXPECT_EQ(convolve(convolve(a, b), c), convolve(a, convolve(b, c)));
    EXPECT_EQ(involute(involute(a)), a);
    EXPECT_EQ(involute(convolve(a, b)), convolve(involute(b), involute(a)));
    EXPECT_EQ(involute(z * a + b), z.conj() * involute(a) + involute(b));
    EXPECT_EQ(convolve(a, b + c), convolve(a, b) + convolve(a, c));
  }
}

TEST(StarAlgebraProperty, ConvolutionMatchesOracle) {
  gen::Rng rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    GroupoidRef g = gen::random_groupoid(rng, 3).ref;
    AlgebraElement a = gen::element(rng, g, 6), b = gen::element(rng, g, 6);
    EXPECT_EQ(convolve(a, b), oracle::convolve(a, b));
    EXPECT_EQ(involute(a), oracle::involute(a));
  }
}

TEST(StarAlgebraProperty, CStarIdentity) {
  gen::Rng rng(203);
  for (int trial = 0; trial < 100; ++trial) {
    GroupoidRef g = gen::random_groupoid(rng, 3).ref;
    AlgebraElement a = gen::element(rng, g, 6);
    double n = operator_norm(a);
    EXPECT_NEAR(operator_norm(convolve(involute(a), a)), n * n, 1e-9 * std::max(1.0, n * n));
    EXPECT_NEAR(n, oracle::norm(a), 1e-9 * std::max(1.0, n));
  }
}

TEST(StarAlgebraProperty, NormIsSubmultiplicative) {
  gen::Rng rng(204);
  for (int trial = 0; trial < 100; ++trial) {
    GroupoidRef g = gen::random_groupoid(rng).ref;
    AlgebraElement a = gen::element(rng, g), b = gen::element(rng, g);
    EXPECT_LE(operator_norm(convolve(a, b)), operator_norm(a) * operator_norm(b) + 1e-9);
    EXPECT_LE(operator_norm(a + b), operator_norm(a) + operator_norm(b) + 1e-9);
  }
}

TEST(StarAlgebraProperty, SliceIndicatorsArePartialIsometries) {
  gen::Rng rng(205);
  for (int trial = 0; trial < 100; ++trial) {
    GroupoidRef g = gen::random_groupoid(rng, 3).ref;
    ArrowSet s = random_slice(rng, g);
    ASSERT_TRUE(is_slice(s));
    AlgebraElement f = indicator(s);
    EXPECT_LE(operator_norm(f), 1.0 + 1e-12);
    EXPECT_EQ(convolve(involute(f), f), indicator(slice_product(slice_inverse(s), s)));
    ArrowSet t = random_slice(rng, g);
    EXPECT_EQ(convolve(f, indicator(t)), indicator(slice_product(s, t)));
  }
}

TEST(StarAlgebraProperty, UnitSupportedElementsFormSubalgebra) {
  gen::Rng rng(206);
  for (int trial = 0; trial < 100; ++trial) {
    GroupoidRef g = gen::random_groupoid(rng, 3).ref;
    AlgebraElement a(g), b(g);
    for (Index x = 0; x < g->num_objects(); ++x) {
      a.add(g->unit(x), gen::scalar(rng));
      b.add(g->unit(x), gen::scalar(rng));
    }
    AlgebraElement ab = convolve(a, b);
    for (const auto& [i, c] : ab.terms()) EXPECT_TRUE(g->is_unit(i));
    EXPECT_EQ(convolve(a, b), convolve(b, a));
  }
}
