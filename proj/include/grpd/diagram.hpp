#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "grpd/bicategory.hpp"
#include "grpd/category.hpp"
#include "grpd/hilbert_module.hpp"

namespace grpd {

// A diagram over a finite (possibly truncated) index category: a groupoid per
// object, a correspondence X_p per morphism p and multiplications
// sigma_{p,q} : X_p ∘ X_q => X_{pq} for every defined composite pq.
class Diagram {
 public:
  struct Multiplication {
    Index p, q;
    Composite composite;
    std::vector<Index> map;  // composite class -> point of X_{pq}
  };

  // Maps a representative pair (x in X_p, y in X_q) to a point of X_{pq}.
  using Sigma = std::function<Index(Index p, Index q, Index x, Index y)>;

  // Identity morphisms always carry the identity correspondence of their node
  // and the unitors; `arrows` entries for identities are ignored. Throws
  // EndpointMismatch when an arrow does not join its nodes.
  Diagram(CategoryRef index, std::vector<GroupoidRef> nodes, std::vector<CorrRef> arrows, const Sigma& sigma);

  const CategoryRef& index() const { return index_; }
  const GroupoidRef& node(Index x) const { return nodes_[x]; }
  const CorrRef& arrow(Index p) const { return arrows_[p]; }
  // nullptr when pq is undefined.
  const Multiplication* multiplication(Index p, Index q) const;

 private:
  CategoryRef index_;
  std::vector<GroupoidRef> nodes_;
  std::vector<CorrRef> arrows_;
  std::vector<Multiplication> mults_;
  std::vector<Index> mult_slot_;  // p * |morphisms| + q -> mults_ index
};

struct DiagramReport {
  std::size_t pairs = 0;
  std::size_t triples = 0;
};

// Checks every multiplication is a biequivariant bijection and every
// associativity square commutes. Throws CoherenceViolation.
DiagramReport validate_diagram(const Diagram& d);

struct ProductFiber {
  Index morphism;
  CorrRef fiber;
};

// Throws UnknownWord when `word` is not a morphism of the index.
ProductFiber fiber(const Diagram& d, std::string_view word);

// sigma_{p,q}(mu(a ⊗ b)) in S(X_{pq}).
ModuleElement multiply(const Diagram& d, Index p, Index q, const ModuleElement& a, const ModuleElement& b);

// Nodes are the fibres over objects (as spaces whose units carry the
// identity ids), X_g is the set of morphisms over g and sigma is composition.
// Requires the Conduché property.
Diagram fibration_to_diagram(const Functor& f);

// Inverse construction for diagrams of spaces. Throws NodeNotDiscrete.
FunctorRef diagram_to_fibration(const Diagram& d);

}  // namespace grpd
