#pragma once

#include <map>
#include <utility>
#include <vector>

#include "grpd/bicategory.hpp"
#include "grpd/star_algebra.hpp"

namespace grpd {

using ModuleElement = Supported<Correspondence>;

// (v * b)(x) = sum over g with r(g) = s(x) of v(x·g) b(g^-1).
ModuleElement right_action(const ModuleElement& v, const AlgebraElement& b);
// <v|w>(g) = sum over x with s(x) = r(g) of conj(v(x)) w(x·g).
AlgebraElement inner(const ModuleElement& v, const ModuleElement& w);
// (a * v)(x) = sum over h with r(h) = r(x) of a(h) v(h^-1·x).
ModuleElement left_action(const AlgebraElement& a, const ModuleElement& v);

// Elements a_i with <v|v> = sum a_i * a_i^*.
std::vector<AlgebraElement> positivity_witness(const ModuleElement& v);
bool verify_positivity(const ModuleElement& v, const std::vector<AlgebraElement>& witness);

// theta_{a,b}(v) = a * <b|v>.
struct RankOne {
  ModuleElement a;
  ModuleElement b;
};

// Rank-one operators summing to multiplication by f on orbit classes. f is
// keyed by class index of orbits(x); missing classes count as zero.
std::vector<RankOne> left_multiplier_rank_ones(const CorrRef& x, const std::map<Index, Scalar>& f);
ModuleElement apply_rank_ones(const std::vector<RankOne>& ops, const ModuleElement& v);

// Finite sum of elementary tensors in S(X) ⊗ S(Y).
using Tensor = std::vector<std::pair<ModuleElement, ModuleElement>>;

// <f1 ⊗ f2 | f3 ⊗ f4> = <f2 | <f1|f3> * f4>, extended sesquilinearly.
AlgebraElement tensor_inner(const Tensor& a, const Tensor& b);

// mu(f1 ⊗ f2)([x,y]) = sum over h with r(h) = s(x) of f1(x·h) f2(h^-1·y).
ModuleElement mu(const Composite& xy, const Tensor& t);

// Extension by zero along a 2-arrow.
ModuleElement push_forward(const TwoArrow& a, const ModuleElement& v);

// Norm of v -> a * v as an operator on the module, computed in the induced
// representation on l2(s^-1(u)) for each object u of the right groupoid.
double left_action_norm(const AlgebraElement& a, const CorrRef& x, const PowerMethodOptions& options = {});

// Smallest eigenvalue over blocks of [rho(<v_i|v_j>)].
double gram_min_eigenvalue(const std::vector<ModuleElement>& family);

}  // namespace grpd
