#pragma once

#include <vector>

#include "grpd/groupoid.hpp"
#include "grpd/numerics.hpp"
#include "grpd/supported.hpp"

namespace grpd {

using AlgebraElement = Supported<FiniteGroupoid>;

// (a * b)(g) = sum over h with r(h) = r(g) of a(h) b(h^-1 g).
AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b);
// a*(g) = conj(a(g^-1)).
AlgebraElement involute(const AlgebraElement& a);
// Indicator function of a set of arrows.
AlgebraElement indicator(const ArrowSet& s);

// Left regular representation: one block per object x acting on l2 of the
// arrows with source x.
class RegularRepresentation {
 public:
  struct Block {
    Index object;
    std::vector<Index> basis;
  };

  explicit RegularRepresentation(GroupoidRef g);

  const std::vector<Block>& blocks() const { return blocks_; }
  std::vector<ScalarMatrix> apply(const AlgebraElement& a) const;
  // Rank of the span of the images of the delta basis equals the number of arrows.
  bool faithful_on_basis() const;

 private:
  GroupoidRef groupoid_;
  std::vector<Block> blocks_;
};

// Largest singular value over all blocks of the regular representation.
double operator_norm(const AlgebraElement& a, const PowerMethodOptions& options = {});

}  // namespace grpd
