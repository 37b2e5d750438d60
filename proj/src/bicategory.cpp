#include "grpd/bicategory.hpp"

#include <algorithm>

#include "grpd/error.hpp"

namespace grpd {

namespace {

void require_composable(const CorrRef& x, const CorrRef& y) {
  if (!same_groupoid(x->right(), y->left())) fail(ErrorKind::kEndpointMismatch, "compose");
}

}  // namespace

Composite compose(const CorrRef& xr, const CorrRef& yr) {
  require_composable(xr, yr);
  const Correspondence& X = *xr;
  const Correspondence& Y = *yr;
  const FiniteGroupoid& G = *X.right();
  const std::size_t ny = Y.size();

  Composite out;
  out.left_factor = xr;
  out.right_factor = yr;
  out.pair_class.assign(X.size() * ny, kNone);
  std::vector<std::pair<Index, Index>> witness;
  for (Index x = 0; x < X.size(); ++x)
    for (Index y = 0; y < ny; ++y) {
      if (X.s(x) != Y.r(y) || out.pair_class[x * ny + y] != kNone) continue;
      // Pairs are visited in lexicographic order, so (x, y) is the least of its class.
      const Index c = witness.size();
      witness.emplace_back(x, y);
      for (Index g : G.arrows_from(X.s(x))) out.pair_class[X.act_right(x, G.inv(g)) * ny + Y.act_left(g, y)] = c;
    }

  const FiniteGroupoid& H = *X.left();
  const FiniteGroupoid& K = *Y.right();
  const std::size_t n = witness.size();
  CorrespondenceTables t{X.left(), Y.right(), {}, {}, {}, std::vector<Index>(H.num_arrows() * n, kNone),
                         std::vector<Index>(n * K.num_arrows(), kNone)};
  for (Index c = 0; c < n; ++c) {
    auto [x, y] = witness[c];
    t.carrier.push_back("[" + X.point_name(x) + "," + Y.point_name(y) + "]");
    t.r.push_back(X.r(x));
    t.s.push_back(Y.s(y));
    for (Index h : H.arrows_from(X.r(x))) t.lact[h * n + c] = out.pair_class[X.act_left(h, x) * ny + y];
    for (Index k : K.arrows_to(Y.s(y))) t.ract[c * K.num_arrows() + k] = out.pair_class[x * ny + Y.act_right(y, k)];
  }
  out.result = validate_correspondence(std::move(t));

  // Validation sorted the carrier by name; renumber classes to match.
  std::vector<Index> renumber(n);
  for (Index c = 0; c < n; ++c) {
    auto [x, y] = witness[c];
    renumber[c] = out.result->point("[" + X.point_name(x) + "," + Y.point_name(y) + "]");
  }
  out.witness.assign(n, {});
  for (Index c = 0; c < n; ++c) out.witness[renumber[c]] = witness[c];
  for (Index& c : out.pair_class)
    if (c != kNone) c = renumber[c];
  return out;
}

bool TwoArrow::bijective() const {
  std::vector<Index> image = map;
  std::sort(image.begin(), image.end());
  return image.size() == target->size() && std::adjacent_find(image.begin(), image.end()) == image.end();
}

TwoArrow make_two_arrow(CorrRef source, CorrRef target, std::vector<Index> map) {
  const Correspondence& A = *source;
  const Correspondence& B = *target;
  if (!same_groupoid(A.left(), B.left()) || !same_groupoid(A.right(), B.right()))
    fail(ErrorKind::kEndpointMismatch, "two-arrow");
  if (map.size() != A.size()) input_error("two-arrow map must cover the source carrier");
  for (Index y : map)
    if (y >= B.size()) input_error("two-arrow map leaves the target carrier");
  std::vector<Index> image = map;
  std::sort(image.begin(), image.end());
  if (auto dup = std::adjacent_find(image.begin(), image.end()); dup != image.end())
    fail(ErrorKind::kAxiomViolation, "injective", {B.point_name(*dup)});
  const FiniteGroupoid& H = *A.left();
  const FiniteGroupoid& G = *A.right();
  for (Index x = 0; x < A.size(); ++x) {
    if (B.r(map[x]) != A.r(x) || B.s(map[x]) != A.s(x)) fail(ErrorKind::kAxiomViolation, "anchor", {A.point_name(x)});
    for (Index h : H.arrows_from(A.r(x)))
      if (map[A.act_left(h, x)] != B.act_left(h, map[x]))
        fail(ErrorKind::kAxiomViolation, "left-equivariant", {H.arrow_name(h), A.point_name(x)});
    for (Index g : G.arrows_to(A.s(x)))
      if (map[A.act_right(x, g)] != B.act_right(map[x], g))
        fail(ErrorKind::kAxiomViolation, "right-equivariant", {A.point_name(x), G.arrow_name(g)});
  }
  return {std::move(source), std::move(target), std::move(map)};
}

TwoArrow make_two_arrow(CorrRef source, CorrRef target, const std::map<std::string, std::string>& named) {
  std::vector<Index> map(source->size(), kNone);
  for (const auto& [a, b] : named) map[source->point(a)] = target->point(b);
  for (Index x = 0; x < map.size(); ++x)
    if (map[x] == kNone) input_error("two-arrow map missing '" + source->point_name(x) + "'");
  return make_two_arrow(std::move(source), std::move(target), std::move(map));
}

TwoArrow identity_two_arrow(const CorrRef& x) {
  std::vector<Index> map(x->size());
  for (Index p = 0; p < map.size(); ++p) map[p] = p;
  return {x, x, std::move(map)};
}

TwoArrow vertical_compose(const TwoArrow& outer, const TwoArrow& inner) {
  if (inner.target != outer.source && !(*inner.target == *outer.source))
    fail(ErrorKind::kEndpointMismatch, "vertical compose");
  std::vector<Index> map(inner.map.size());
  for (Index p = 0; p < map.size(); ++p) map[p] = outer.map[inner.map[p]];
  return {inner.source, outer.target, std::move(map)};
}

TwoArrow horizontal_compose(const TwoArrow& a, const TwoArrow& b, const Composite& src, const Composite& tgt) {
  std::vector<Index> map(src.result->size());
  for (Index c = 0; c < map.size(); ++c) {
    auto [x, y] = src.witness[c];
    map[c] = tgt.class_of(a.map[x], b.map[y]);
  }
  return make_two_arrow(src.result, tgt.result, std::move(map));
}

Unitor unitor_left(const CorrRef& x) {
  Composite c = compose(identity_correspondence(x->left()), x);
  std::vector<Index> map(c.result->size());
  for (Index k = 0; k < map.size(); ++k) {
    auto [h, p] = c.witness[k];
    map[k] = x->act_left(h, p);
  }
  TwoArrow arrow = make_two_arrow(c.result, x, std::move(map));
  return {std::move(c), std::move(arrow)};
}

Unitor unitor_right(const CorrRef& x) {
  Composite c = compose(x, identity_correspondence(x->right()));
  std::vector<Index> map(c.result->size());
  for (Index k = 0; k < map.size(); ++k) {
    auto [p, g] = c.witness[k];
    map[k] = x->act_right(p, g);
  }
  TwoArrow arrow = make_two_arrow(c.result, x, std::move(map));
  return {std::move(c), std::move(arrow)};
}

TwoArrow associator(const Composite& outer, const Composite& inner, const Composite& first, const Composite& target) {
  if (outer.right_factor != inner.result || target.left_factor != first.result)
    input_error("associator composites do not fit together");
  std::vector<Index> map(outer.result->size());
  for (Index c = 0; c < map.size(); ++c) {
    auto [x1, yz] = outer.witness[c];
    auto [x2, x3] = inner.witness[yz];
    map[c] = target.class_of(first.class_of(x1, x2), x3);
  }
  return make_two_arrow(outer.result, target.result, std::move(map));
}

Associator associator(const CorrRef& x1, const CorrRef& x2, const CorrRef& x3) {
  Associator a;
  a.inner = compose(x2, x3);
  a.outer = compose(x1, a.inner.result);
  a.first = compose(x1, x2);
  a.target = compose(a.first.result, x3);
  a.arrow = associator(a.outer, a.inner, a.first, a.target);
  return a;
}

bool CoherenceReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CoherenceCheck& c) { return c.ok; });
}

namespace {

CoherenceCheck compare(std::string name, const TwoArrow& lhs, const TwoArrow& rhs) {
  CoherenceCheck check{std::move(name), true, {}};
  for (Index c = 0; c < lhs.map.size(); ++c)
    if (lhs.map[c] != rhs.map[c]) {
      check.ok = false;
      check.counterexample.push_back(lhs.source->point_name(c));
    }
  return check;
}

CoherenceCheck bijective(std::string name, const TwoArrow& a) {
  CoherenceCheck check{std::move(name), a.bijective(), {}};
  return check;
}

}  // namespace

CoherenceReport check_coherence(const std::vector<CorrRef>& chain) {
  if (chain.size() < 2 || chain.size() > 4) input_error("coherence needs 2 to 4 correspondences");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) require_composable(chain[i], chain[i + 1]);
  CoherenceReport report;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    std::string tag = "X" + std::to_string(i + 1);
    report.checks.push_back(bijective("left-unitor " + tag, unitor_left(chain[i]).arrow));
    report.checks.push_back(bijective("right-unitor " + tag, unitor_right(chain[i]).arrow));
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const CorrRef& x = chain[i];
    const CorrRef& y = chain[i + 1];
    Unitor rho = unitor_right(x);   // X∘1 => X
    Unitor lambda = unitor_left(y); // 1∘Y => Y
    Composite x_1y = compose(x, lambda.composite.result);
    Composite x1_y = compose(rho.composite.result, y);
    Composite xy = compose(x, y);
    TwoArrow assoc = associator(x_1y, lambda.composite, rho.composite, x1_y);
    TwoArrow lhs = vertical_compose(horizontal_compose(rho.arrow, identity_two_arrow(y), x1_y, xy), assoc);
    TwoArrow rhs = horizontal_compose(identity_two_arrow(x), lambda.arrow, x_1y, xy);
    std::string tag = "X" + std::to_string(i + 1) + ",X" + std::to_string(i + 2);
    report.checks.push_back(compare("triangle " + tag, lhs, rhs));
  }
  for (std::size_t i = 0; i + 2 < chain.size(); ++i) {
    Associator a = associator(chain[i], chain[i + 1], chain[i + 2]);
    report.checks.push_back(bijective("associator X" + std::to_string(i + 1), a.arrow));
  }
  if (chain.size() == 4) {
    const CorrRef &x1 = chain[0], &x2 = chain[1], &x3 = chain[2], &x4 = chain[3];
    Composite x34 = compose(x3, x4);
    Composite x2_34 = compose(x2, x34.result);
    Composite source = compose(x1, x2_34.result);
    Composite x12 = compose(x1, x2);
    Composite x12_34 = compose(x12.result, x34.result);
    Composite x12_3 = compose(x12.result, x3);
    Composite target = compose(x12_3.result, x4);
    Composite x23 = compose(x2, x3);
    Composite x23_4 = compose(x23.result, x4);
    Composite x1_234 = compose(x1, x23_4.result);
    Composite x1_23 = compose(x1, x23.result);
    Composite x1_23__4 = compose(x1_23.result, x4);

    TwoArrow route_a = vertical_compose(associator(x12_34, x34, x12_3, target),
                                        associator(source, x2_34, x12, x12_34));
    TwoArrow step1 = horizontal_compose(identity_two_arrow(x1), associator(x2_34, x34, x23, x23_4), source, x1_234);
    TwoArrow step2 = associator(x1_234, x23_4, x1_23, x1_23__4);
    TwoArrow step3 = horizontal_compose(associator(x1_23, x23, x12, x12_3), identity_two_arrow(x4), x1_23__4, target);
    TwoArrow route_b = vertical_compose(step3, vertical_compose(step2, step1));
    report.checks.push_back(compare("pentagon", route_a, route_b));
  }
  return report;
}

}  // namespace grpd
