#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "expect_error.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "grpd/diagram.hpp"
#include "grpd/io.hpp"
#include "grpd/kgraph.hpp"

using namespace grpd;

namespace {

FunctorRef load_fibration(const std::filesystem::path& p) {
  return io::fibration_from_json(io::load_json(p), p.parent_path());
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Product system of O2X over N truncated at `top`: X_n = n-fold composite,
// sigma concatenates. `scramble` relabels the letters of products X_1 X_2.
Diagram o2x_powers(int top, bool scramble = false) {
  CategoryRef index = truncated_monoid_category({top});
  GroupoidRef pt = fixtures::pt();
  std::vector<CorrRef> arrows(index->num_morphisms());
  std::vector<CorrRef> power(top + 1);
  power[1] = fixtures::o2x();
  for (int n = 2; n <= top; ++n) power[n] = compose(power[n - 1], power[1]).result;
  for (int n = 1; n <= top; ++n) arrows[index->morphism(degree_name({n}))] = power[n];
  // Points of the n-fold composite are words; locate a concatenation by name.
  auto word = [&](Index p, Index x) {
    std::string s = arrows[p]->point_name(x), out;
    for (char c : s)
      if (c != '[' && c != ']' && c != ',') out += c;
    return out;
  };
  auto sigma = [&, arrows, scramble](Index p, Index q, Index x, Index y) -> Index {
    std::string target = word(p, x) + word(q, y);
    if (scramble && index->morphism_name(p) == "[1]" && index->morphism_name(q) == "[2]")
      for (char& c : target) c = c == '1' ? '2' : c == '2' ? '1' : c;
    Index pq = index->comp(p, q);
    for (Index z = 0; z < arrows[pq]->size(); ++z)
      if (word(pq, z) == target) return z;
    return 0;
  };
  return Diagram(index, std::vector<GroupoidRef>{pt}, arrows, sigma);
}

}  // namespace

TEST(CategoryTest, TruncatedMonoid) {
  CategoryRef c = truncated_monoid_category({2, 1});
  EXPECT_EQ(c->num_objects(), 1u);
  EXPECT_EQ(c->num_morphisms(), 6u);
  EXPECT_TRUE(c->truncated());
  Index a = c->morphism("[1,0]"), b = c->morphism("[0,1]");
  EXPECT_EQ(c->comp(a, b), c->morphism("[1,1]"));
  EXPECT_EQ(c->comp(c->morphism("[2,0]"), a), kNone);
  EXPECT_EQ(c->factorizations(c->morphism("[1,1]")).size(), 4u);
}

TEST(CategoryTest, FunctorMustPreserveComposition) {
  CategoryRef base = truncated_monoid_category({2});
  FunctorRef f = load_fibration(fixtures::corpus("O2X_PATH.json"));
  FunctorSpec s = f->to_spec();
  s.on_morphisms["e1.e2"] = "[1]";
  Error e = testing_support::capture([&] { validate_functor(s); });
  EXPECT_EQ(e.kind(), ErrorKind::kNotAFunctor);
  EXPECT_EQ(e.law(), "composition");
}

TEST(ConducheTest, PathCategoryOfTwoLoops) {
  FunctorRef f = load_fibration(fixtures::corpus("O2X_PATH.json"));
  EXPECT_TRUE(check_conduche(*f).ok);
  RowFinitenessReport r = is_row_finite(*f);
  EXPECT_TRUE(r.row_finite);
}

TEST(ConducheTest, RankTwoGraphs) {
  for (bool swap : {false, true}) {
    KGraph g = validate_kgraph(fixtures::kg21(swap));
    FunctorRef f = kgraph_path_category(g, {2, 2});
    EXPECT_TRUE(check_conduche(*f).ok) << swap;
    RowFinitenessReport r = is_row_finite(*f);
    EXPECT_TRUE(r.row_finite);
    std::map<std::string, std::size_t> counts;
    for (const auto& c : r.counts) counts[f->base()->morphism_name(c.base_morphism)] = c.count;
    EXPECT_EQ(counts["[1,0]"], 2u);
    EXPECT_EQ(counts["[0,1]"], 1u);
    EXPECT_EQ(counts["[1,1]"], 2u);
    EXPECT_EQ(counts["[2,2]"], 4u);
  }
}

TEST(ConducheTest, MissingLift) {
  FunctorRef f = load_fibration(fixtures::data("CONDUCHE_ZERO.json"));
  ConducheReport r = check_conduche(*f);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.morphism, "f");
  EXPECT_EQ(r.first, "[1]");
  EXPECT_EQ(r.second, "[1]");
  EXPECT_EQ(r.lifts, 0u);
  EXPECT_GRPD_ERROR(require_conduche(*f), ErrorKind::kNotConduche, "unique-factorization", "f", "[1]", "[1]", "0");
}

TEST(ConducheTest, AmbiguousLift) {
  FunctorRef f = load_fibration(fixtures::data("CONDUCHE_TWO.json"));
  ConducheReport r = check_conduche(*f);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.morphism, "h");
  EXPECT_EQ(r.lifts, 2u);
  EXPECT_THROW(fibration_to_diagram(*f), Error);
}

TEST(DiagramTest, FibrationRoundTrip) {
  FunctorRef f = load_fibration(fixtures::corpus("O2X_PATH.json"));
  Diagram d = fibration_to_diagram(*f);
  EXPECT_EQ(fiber(d, "[2]").fiber->size(), 4u);
  EXPECT_EQ(fiber(d, "[1]").fiber->size(), 2u);
  DiagramReport r = validate_diagram(d);
  EXPECT_EQ(r.pairs, 6u);
  FunctorRef back = diagram_to_fibration(d);
  std::map<std::string, std::string> objects, morphisms;
  for (const auto& o : f->total()->object_names()) objects[o] = o;
  for (const auto& m : f->total()->morphism_names()) morphisms[m] = m;
  EXPECT_TRUE(is_isomorphism(*f, *back, objects, morphisms));
  morphisms["e1"] = "e2";
  morphisms["e2"] = "e1";
  EXPECT_FALSE(is_isomorphism(*f, *back, objects, morphisms));
}

TEST(DiagramTest, KGraphFibers) {
  KGraph g = validate_kgraph(fixtures::kg21(true));
  Diagram d = kgraph_diagram(g, {2, 2});
  validate_diagram(d);
  EXPECT_EQ(fiber(d, "[2,0]").fiber->size(), 4u);
  EXPECT_EQ(fiber(d, "[1,1]").fiber->size(), 2u);
  ProductFiber unit = fiber(d, "[0,0]");
  EXPECT_TRUE(d.index()->is_identity(unit.morphism));
  EXPECT_EQ(*unit.fiber, *identity_correspondence(d.node(0)));
  EXPECT_GRPD_ERROR(fiber(d, "[3,0]"), ErrorKind::kUnknownWord, "fiber", "[3,0]");
}

TEST(DiagramTest, KGraphRoundTrip) {
  for (bool swap : {false, true}) {
    KGraph g = validate_kgraph(fixtures::kg21(swap));
    FunctorRef paths = kgraph_path_category(g, {1, 1});
    FunctorRef back = diagram_to_fibration(kgraph_diagram(g, {1, 1}));
    EXPECT_EQ(back->total()->num_morphisms(), paths->total()->num_morphisms());
    EXPECT_TRUE(check_conduche(*back).ok);
  }
}

TEST(DiagramTest, MultiplicationIsAssociative) {
  Diagram d = o2x_powers(3);
  DiagramReport r = validate_diagram(d);
  EXPECT_GT(r.triples, 0u);
  Index one = d.index()->morphism("[1]"), two = d.index()->morphism("[2]");
  CorrRef x1 = d.arrow(one), x2 = d.arrow(two);
  gen::Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    ModuleElement a = gen::module_element(rng, x1), b = gen::module_element(rng, x1), c = gen::module_element(rng, x1);
    EXPECT_EQ(multiply(d, two, one, multiply(d, one, one, a, b), c), multiply(d, one, two, a, multiply(d, one, one, b, c)));
  }
  ModuleElement e1 = ModuleElement::delta(x1, x1->point("e1"));
  ModuleElement e2 = ModuleElement::delta(x1, x1->point("e2"));
  EXPECT_EQ(multiply(d, one, one, e1, e2), ModuleElement::delta(x2, x2->point("[e1,e2]")));
}

TEST(DiagramTest, InconsistentMultiplication) {
  Diagram d = o2x_powers(3, true);
  Error e = testing_support::capture([&] { validate_diagram(d); });
  EXPECT_EQ(e.kind(), ErrorKind::kCoherenceViolation);
  EXPECT_EQ(e.law(), "associativity");
}

TEST(DiagramTest, NonEquivariantMultiplication) {
  CategoryRef index = truncated_monoid_category({2});
  GroupoidRef z2 = fixtures::z2();
  CorrRef id = identity_correspondence(z2);
  std::vector<CorrRef> arrows(index->num_morphisms(), id);
  Diagram d(index, {z2}, arrows, [](Index, Index, Index, Index) -> Index { return 0; });
  Error e = testing_support::capture([&] { validate_diagram(d); });
  EXPECT_EQ(e.kind(), ErrorKind::kCoherenceViolation);
  EXPECT_EQ(e.law().rfind("multiplication-", 0), 0u) << e.law();
  EXPECT_GRPD_ERROR(diagram_to_fibration(d), ErrorKind::kNodeNotDiscrete, "node", "o");
}

TEST(DiagramTest, MismatchedArrow) {
  CategoryRef index = truncated_monoid_category({1});
  std::vector<CorrRef> arrows(index->num_morphisms(), fixtures::o2x());
  EXPECT_GRPD_ERROR(Diagram(index, {fixtures::z2()}, arrows, [](Index, Index, Index, Index) -> Index { return 0; }),
                    ErrorKind::kEndpointMismatch, "diagram arrow");
}

TEST(KGraphTest, FactorizationRules) {
  EXPECT_GRPD_ERROR(validate_kgraph(io::kgraph_from_json(io::load_json(fixtures::data("KG21_MISSING.json"))).spec),
                    ErrorKind::kFactorizationNotBijective, "missing", "b2", "c1");
  EXPECT_GRPD_ERROR(validate_kgraph(io::kgraph_from_json(io::load_json(fixtures::data("KG3_HEXAGON.json"))).spec),
                    ErrorKind::kHexagonViolation, "hexagon");
  KGraph g = validate_kgraph(fixtures::kg21(true));
  auto [c, b] = g.swap(g.edge("b1"), g.edge("c1"));
  EXPECT_EQ(c, g.edge("c1"));
  EXPECT_EQ(b, g.edge("b2"));
  EXPECT_EQ(g.paths_of_degree({2, 1}).size(), 4u);
}

TEST(PresentationTest, Goldens) {
  EXPECT_EQ(kgraph_presentation(validate_kgraph(fixtures::o2x_graph())).text(),
            read_file(fixtures::golden("O2X_present.txt")));
  EXPECT_EQ(kgraph_presentation(validate_kgraph(fixtures::kg21(false))).text(),
            read_file(fixtures::golden("KG21_ID_present.txt")));
  EXPECT_EQ(kgraph_presentation(validate_kgraph(fixtures::kg21(true))).text(),
            read_file(fixtures::golden("KG21_SWAP_present.txt")));
  EXPECT_EQ(cuntz_pimsner_presentation(*load_fibration(fixtures::corpus("O2X_PATH.json"))).text(),
            read_file(fixtures::golden("O2X_PATH_present.txt")));
}

TEST(PresentationTest, PathPresentationContainsGraphRelations) {
  Presentation full = cuntz_pimsner_presentation(*load_fibration(fixtures::corpus("O2X_PATH.json")));
  Presentation small = kgraph_presentation(validate_kgraph(fixtures::o2x_graph()));
  for (std::size_t i = 2; i < 6; ++i)
    for (const auto& rel : small.relations[i])
      EXPECT_NE(std::find(full.relations[i].begin(), full.relations[i].end(), rel), full.relations[i].end()) << rel;
}
