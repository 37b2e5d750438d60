#include "grpd/star_algebra.hpp"

#include <algorithm>

#include "grpd/error.hpp"

namespace grpd {

AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b) {
  if (!same_groupoid(a.space(), b.space())) fail(ErrorKind::kGroupoidMismatch, "convolve");
  const FiniteGroupoid& G = *a.space();
  AlgebraElement out(a.space());
  for (const auto& [h, x] : a.terms())
    for (const auto& [k, y] : b.terms())
      if (G.composable(h, k)) out.add(G.comp(h, k), x * y);
  return out;
}

AlgebraElement involute(const AlgebraElement& a) {
  const FiniteGroupoid& G = *a.space();
  AlgebraElement out(a.space());
  for (const auto& [g, x] : a.terms()) out.add(G.inv(g), x.conj());
  return out;
}

AlgebraElement indicator(const ArrowSet& s) {
  AlgebraElement out(s.groupoid);
  for (Index g : s.members) out.add(g, 1);
  return out;
}

RegularRepresentation::RegularRepresentation(GroupoidRef g) : groupoid_(std::move(g)) {
  for (Index x = 0; x < groupoid_->num_objects(); ++x) blocks_.push_back({x, groupoid_->arrows_from(x)});
}

std::vector<ScalarMatrix> RegularRepresentation::apply(const AlgebraElement& a) const {
  if (!same_groupoid(a.space(), groupoid_)) fail(ErrorKind::kGroupoidMismatch, "regular representation");
  const FiniteGroupoid& G = *groupoid_;
  std::vector<ScalarMatrix> out;
  for (const Block& b : blocks_) {
    const std::size_t n = b.basis.size();
    ScalarMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = a.at(G.comp(b.basis[i], G.inv(b.basis[j])));
    out.push_back(std::move(m));
  }
  return out;
}

bool RegularRepresentation::faithful_on_basis() const {
  std::vector<std::vector<Scalar>> rows;
  for (Index g = 0; g < groupoid_->num_arrows(); ++g) {
    std::vector<Scalar> row;
    for (const ScalarMatrix& m : apply(AlgebraElement::delta(groupoid_, g)))
      row.insert(row.end(), m.data.begin(), m.data.end());
    rows.push_back(std::move(row));
  }
  return exact_rank(std::move(rows)) == groupoid_->num_arrows();
}

double operator_norm(const AlgebraElement& a, const PowerMethodOptions& options) {
  double best = 0.0;
  for (const ScalarMatrix& m : RegularRepresentation(a.space()).apply(a))
    best = std::max(best, largest_singular_value(to_complex(m), options));
  return best;
}

}  // namespace grpd
