#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grpd/correspondence.hpp"

namespace grpd {

// X ∘ Y: pairs (x, y) with s(x) = r(y) modulo (x, y) ~ (x·g^-1, g·y).
// Each class is named "[x,y]" after its least pair.
struct Composite {
  CorrRef left_factor;
  CorrRef right_factor;
  CorrRef result;
  std::vector<Index> pair_class;                  // |X| * |Y|, kNone off the fibre product
  std::vector<std::pair<Index, Index>> witness;  // least pair of each result point

  Index class_of(Index x, Index y) const { return pair_class[x * right_factor->size() + y]; }
};

// Throws EndpointMismatch when X's right groupoid is not Y's left groupoid.
Composite compose(const CorrRef& x, const CorrRef& y);

// An injective, anchor-preserving, biequivariant map source -> target.
struct TwoArrow {
  CorrRef source;
  CorrRef target;
  std::vector<Index> map;

  bool bijective() const;
  friend bool operator==(const TwoArrow& a, const TwoArrow& b) { return a.map == b.map; }
};

// Failures throw EndpointMismatch or AxiomViolation with law "injective",
// "anchor", "left-equivariant", "right-equivariant".
TwoArrow make_two_arrow(CorrRef source, CorrRef target, std::vector<Index> map);
TwoArrow make_two_arrow(CorrRef source, CorrRef target, const std::map<std::string, std::string>& map);
TwoArrow identity_two_arrow(const CorrRef& x);
TwoArrow vertical_compose(const TwoArrow& outer, const TwoArrow& inner);  // outer ∘ inner

// [x, y] -> [a(x), b(y)] from `src` = X1∘Y1 to `tgt` = X2∘Y2.
TwoArrow horizontal_compose(const TwoArrow& a, const TwoArrow& b, const Composite& src, const Composite& tgt);

struct Unitor {
  Composite composite;
  TwoArrow arrow;
};

Unitor unitor_left(const CorrRef& x);   // 1_H ∘ X => X, [h, x] -> h·x
Unitor unitor_right(const CorrRef& x);  // X ∘ 1_G => X, [x, g] -> x·g

// [x1, [x2, x3]] -> [[x1, x2], x3] from `outer` = X1∘(X2∘X3) to
// `target` = (X1∘X2)∘X3. `inner` is X2∘X3 and `first` is X1∘X2.
TwoArrow associator(const Composite& outer, const Composite& inner, const Composite& first, const Composite& target);

struct Associator {
  Composite inner, outer, first, target;
  TwoArrow arrow;
};

Associator associator(const CorrRef& x1, const CorrRef& x2, const CorrRef& x3);

struct CoherenceCheck {
  std::string name;
  bool ok = true;
  std::vector<std::string> counterexample;  // class ids where the two sides differ
};

struct CoherenceReport {
  std::vector<CoherenceCheck> checks;
  bool ok() const;
};

// Chains of 2 to 4 composable correspondences. Checks unitor and associator
// bijectivity, the triangle for each adjacent pair and, for four factors,
// the pentagon.
CoherenceReport check_coherence(const std::vector<CorrRef>& chain);

}  // namespace grpd
