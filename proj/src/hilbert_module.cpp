#include "grpd/hilbert_module.hpp"

#include <algorithm>
#include <set>

#include "grpd/error.hpp"

namespace grpd {

namespace {

void require_right(const ModuleElement& v, const AlgebraElement& b) {
  if (!same_groupoid(v.space()->right(), b.space())) fail(ErrorKind::kGroupoidMismatch, "right coefficient");
}

void require_same(const ModuleElement& v, const ModuleElement& w) {
  if (v.space() != w.space() && !(*v.space() == *w.space())) fail(ErrorKind::kEndpointMismatch, "module element");
}

}  // namespace

ModuleElement right_action(const ModuleElement& v, const AlgebraElement& b) {
  require_right(v, b);
  const Correspondence& X = *v.space();
  const FiniteGroupoid& G = *X.right();
  ModuleElement out(v.space());
  // x·g = y with g = k^-1 means x = y·k.
  for (const auto& [y, c] : v.terms())
    for (const auto& [k, d] : b.terms())
      if (X.s(y) == G.dst(k)) out.add(X.act_right(y, k), c * d);
  return out;
}

AlgebraElement inner(const ModuleElement& v, const ModuleElement& w) {
  require_same(v, w);
  const Correspondence& X = *v.space();
  AlgebraElement out(X.right());
  const OrbitDecomposition orb = orbits(X);
  for (const auto& [x, c] : v.terms())
    for (const auto& [y, d] : w.terms())
      if (orb.class_of[x] == orb.class_of[y]) out.add(bracket(X, x, y), c.conj() * d);
  return out;
}

ModuleElement left_action(const AlgebraElement& a, const ModuleElement& v) {
  const Correspondence& X = *v.space();
  if (!same_groupoid(X.left(), a.space())) fail(ErrorKind::kGroupoidMismatch, "left coefficient");
  const FiniteGroupoid& H = *X.left();
  ModuleElement out(v.space());
  for (const auto& [h, c] : a.terms())
    for (const auto& [y, d] : v.terms())
      if (H.src(h) == X.r(y)) out.add(X.act_left(h, y), c * d);
  return out;
}

std::vector<AlgebraElement> positivity_witness(const ModuleElement& v) {
  const Correspondence& X = *v.space();
  const OrbitDecomposition orb = orbits(X);
  std::set<Index> touched;
  for (const auto& [x, c] : v.terms()) touched.insert(orb.class_of[x]);
  // First-fit partition of the class representatives into s-injective sets.
  std::vector<std::vector<Index>> parts;
  std::vector<std::set<Index>> sources;
  for (Index cls : touched) {
    Index rep = orb.representative(cls);
    std::size_t k = 0;
    while (k < parts.size() && sources[k].count(X.s(rep))) ++k;
    if (k == parts.size()) {
      parts.emplace_back();
      sources.emplace_back();
    }
    parts[k].push_back(rep);
    sources[k].insert(X.s(rep));
  }
  std::vector<AlgebraElement> out;
  for (const auto& part : parts) {
    ModuleElement ind(v.space());
    for (Index x : part) ind.add(x, 1);
    out.push_back(inner(v, ind));
  }
  return out;
}

bool verify_positivity(const ModuleElement& v, const std::vector<AlgebraElement>& witness) {
  AlgebraElement sum(v.space()->right());
  for (const AlgebraElement& a : witness) sum += convolve(a, involute(a));
  return sum == inner(v, v);
}

std::vector<RankOne> left_multiplier_rank_ones(const CorrRef& x, const std::map<Index, Scalar>& f) {
  const Correspondence& X = *x;
  const OrbitDecomposition orb = orbits(X);
  std::vector<std::vector<Index>> parts;
  std::vector<std::set<Index>> sources;
  for (const auto& [cls, value] : f) {
    if (cls >= orb.size()) input_error("orbit class out of range");
    if (value.is_zero()) continue;
    Index rep = orb.representative(cls);
    std::size_t k = 0;
    while (k < parts.size() && sources[k].count(X.s(rep))) ++k;
    if (k == parts.size()) {
      parts.emplace_back();
      sources.emplace_back();
    }
    parts[k].push_back(rep);
    sources[k].insert(X.s(rep));
  }
  std::vector<RankOne> out;
  for (const auto& part : parts) {
    ModuleElement weighted(x), ind(x);
    for (Index p : part) {
      weighted.add(p, f.at(orb.class_of[p]));
      ind.add(p, 1);
    }
    out.push_back({std::move(weighted), std::move(ind)});
  }
  return out;
}

ModuleElement apply_rank_ones(const std::vector<RankOne>& ops, const ModuleElement& v) {
  ModuleElement out(v.space());
  for (const RankOne& op : ops) out += right_action(op.a, inner(op.b, v));
  return out;
}

AlgebraElement tensor_inner(const Tensor& a, const Tensor& b) {
  if (a.empty() || b.empty()) {
    const Tensor& some = a.empty() ? b : a;
    if (some.empty()) input_error("tensor_inner needs at least one term");
    return AlgebraElement(some.front().second.space()->right());
  }
  AlgebraElement out(a.front().second.space()->right());
  for (const auto& [f1, f2] : a)
    for (const auto& [f3, f4] : b) out += inner(f2, left_action(inner(f1, f3), f4));
  return out;
}

ModuleElement mu(const Composite& xy, const Tensor& t) {
  const Correspondence& X = *xy.left_factor;
  const Correspondence& Y = *xy.right_factor;
  ModuleElement out(xy.result);
  for (const auto& [f1, f2] : t) {
    if (f1.space() != xy.left_factor && !(*f1.space() == X)) fail(ErrorKind::kEndpointMismatch, "mu left factor");
    if (f2.space() != xy.right_factor && !(*f2.space() == Y)) fail(ErrorKind::kEndpointMismatch, "mu right factor");
    // Each term f1(x·h) f2(h^-1·y) lands on the class of (x·h, h^-1·y).
    for (const auto& [x, c] : f1.terms())
      for (const auto& [y, d] : f2.terms())
        if (X.s(x) == Y.r(y)) out.add(xy.class_of(x, y), c * d);
  }
  return out;
}

ModuleElement push_forward(const TwoArrow& a, const ModuleElement& v) {
  if (v.space() != a.source && !(*v.space() == *a.source)) fail(ErrorKind::kEndpointMismatch, "push forward");
  ModuleElement out(a.target);
  for (const auto& [x, c] : v.terms()) out.add(a.map[x], c);
  return out;
}

double left_action_norm(const AlgebraElement& a, const CorrRef& x, const PowerMethodOptions& options) {
  const Correspondence& X = *x;
  if (!same_groupoid(X.left(), a.space())) fail(ErrorKind::kGroupoidMismatch, "left coefficient");
  const FiniteGroupoid& H = *X.left();
  double best = 0.0;
  for (Index u = 0; u < X.right()->num_objects(); ++u) {
    std::vector<Index> basis;
    for (Index p = 0; p < X.size(); ++p)
      if (X.s(p) == u) basis.push_back(p);
    ComplexMatrix m(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (const auto& [h, c] : a.terms())
        if (H.src(h) == X.r(basis[j])) {
          Index target = X.act_left(h, basis[j]);
          auto i = std::lower_bound(basis.begin(), basis.end(), target) - basis.begin();
          m.at(i, j) += c.to_complex();
        }
    best = std::max(best, largest_singular_value(m, options));
  }
  return best;
}

double gram_min_eigenvalue(const std::vector<ModuleElement>& family) {
  if (family.empty()) return 0.0;
  const GroupoidRef& G = family.front().space()->right();
  RegularRepresentation rho(G);
  const std::size_t k = family.size();
  std::vector<std::vector<std::vector<ScalarMatrix>>> entries(k, std::vector<std::vector<ScalarMatrix>>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) entries[i][j] = rho.apply(inner(family[i], family[j]));
  double best = 0.0;
  bool first = true;
  for (std::size_t b = 0; b < rho.blocks().size(); ++b) {
    const std::size_t n = rho.blocks()[b].basis.size();
    ComplexMatrix m(k * n, k * n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) m.at(i * n + p, j * n + q) = entries[i][j][b].at(p, q).to_complex();
    double low = min_hermitian_eigenvalue(m);
    best = first ? low : std::min(best, low);
    first = false;
  }
  return best;
}

}  // namespace grpd
