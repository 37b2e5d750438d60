#include "grpd/correspondence.hpp"

#include <algorithm>
#include <numeric>

#include "grpd/error.hpp"

namespace grpd {

namespace {

[[noreturn]] void axiom(std::string law, std::vector<std::string> witness) {
  fail(ErrorKind::kAxiomViolation, std::move(law), std::move(witness));
}

std::optional<Index> lookup(const std::vector<std::string>& sorted, std::string_view id) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), id);
  if (it == sorted.end() || *it != id) return std::nullopt;
  return static_cast<Index>(it - sorted.begin());
}

std::vector<std::string> sorted_names(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  auto dup = std::adjacent_find(names.begin(), names.end());
  if (dup != names.end()) input_error("duplicate id '" + *dup + "'");
  return names;
}

Index require(const std::vector<std::string>& sorted, const std::string& id, const char* what) {
  if (auto i = lookup(sorted, id)) return *i;
  input_error(std::string("unknown ") + what + " '" + id + "'");
}

// Resolves a {g, a} -> value map into a dense |group| x |names| table.
std::vector<Index> resolve_table(const FiniteGroupoid& group, const std::vector<std::string>& names,
                                 const PairMap& map, const std::vector<std::string>& values, const char* what) {
  std::vector<Index> out(group.num_arrows() * names.size(), kNone);
  for (const auto& [key, value] : map) {
    Index g = group.arrow(key.first);
    Index a = require(names, key.second, "letter");
    out[g * names.size() + a] = require(values, value, what);
  }
  for (Index g = 0; g < group.num_arrows(); ++g)
    for (Index a = 0; a < names.size(); ++a)
      if (out[g * names.size() + a] == kNone)
        input_error(std::string(what) + " missing for (" + group.arrow_name(g) + "," + names[a] + ")");
  return out;
}

void require_group(const GroupoidRef& g) {
  if (!g || g->num_objects() != 1) input_error("expected a group (single-object groupoid)");
}

}  // namespace

class CorrespondenceBuilder {
 public:
  static CorrRef build(CorrespondenceTables t);
};

std::optional<Index> Correspondence::find_point(std::string_view id) const { return lookup(points_, id); }

Index Correspondence::point(std::string_view id) const {
  if (auto x = find_point(id)) return *x;
  input_error("unknown point '" + std::string(id) + "'");
}

CorrespondenceSpec Correspondence::to_spec() const {
  CorrespondenceSpec spec;
  spec.left = left_;
  spec.right = right_;
  spec.carrier = points_;
  const FiniteGroupoid& H = *left_;
  const FiniteGroupoid& G = *right_;
  for (Index x = 0; x < points_.size(); ++x) {
    spec.r[points_[x]] = H.object_name(r_[x]);
    spec.s[points_[x]] = G.object_name(s_[x]);
  }
  for (Index h = 0; h < H.num_arrows(); ++h)
    for (Index x = 0; x < points_.size(); ++x)
      if (Index y = act_left(h, x); y != kNone) spec.lact.push_back({H.arrow_name(h), points_[x], points_[y]});
  for (Index x = 0; x < points_.size(); ++x)
    for (Index g = 0; g < G.num_arrows(); ++g)
      if (Index y = act_right(x, g); y != kNone) spec.ract.push_back({G.arrow_name(g), points_[x], points_[y]});
  return spec;
}

bool operator==(const Correspondence& a, const Correspondence& b) {
  return same_groupoid(a.left_, b.left_) && same_groupoid(a.right_, b.right_) && a.points_ == b.points_ &&
         a.r_ == b.r_ && a.s_ == b.s_ && a.lact_ == b.lact_ && a.ract_ == b.ract_;
}

CorrRef CorrespondenceBuilder::build(CorrespondenceTables t) {
  if (!t.left || !t.right) input_error("correspondence needs both groupoids");
  const FiniteGroupoid& H = *t.left;
  const FiniteGroupoid& G = *t.right;
  const std::size_t n = t.carrier.size();
  if (t.r.size() != n || t.s.size() != n || t.lact.size() != H.num_arrows() * n ||
      t.ract.size() != n * G.num_arrows())
    input_error("correspondence tables have the wrong shape");

  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return t.carrier[a] < t.carrier[b]; });
  std::vector<Index> rank(n);
  for (Index k = 0; k < n; ++k) rank[order[k]] = k;
  auto remap = [&](Index old) -> Index {
    if (old == kNone) return kNone;
    if (old >= n) axiom("table", {"point index out of range"});
    return rank[old];
  };

  auto out = std::make_shared<Correspondence>();
  Correspondence& X = *out;
  X.left_ = t.left;
  X.right_ = t.right;
  X.points_.resize(n);
  X.r_.resize(n);
  X.s_.resize(n);
  X.lact_.assign(H.num_arrows() * n, kNone);
  X.ract_.assign(n * G.num_arrows(), kNone);
  for (Index old = 0; old < n; ++old) {
    Index x = rank[old];
    X.points_[x] = t.carrier[old];
    if (t.r[old] >= H.num_objects() || t.s[old] >= G.num_objects()) axiom("table", {"anchor of " + t.carrier[old]});
    X.r_[x] = t.r[old];
    X.s_[x] = t.s[old];
    for (Index h = 0; h < H.num_arrows(); ++h) X.lact_[h * n + x] = remap(t.lact[h * n + old]);
    for (Index g = 0; g < G.num_arrows(); ++g) X.ract_[x * G.num_arrows() + g] = remap(t.ract[old * G.num_arrows() + g]);
  }
  if (auto dup = std::adjacent_find(X.points_.begin(), X.points_.end()); dup != X.points_.end())
    axiom("table", {"duplicate point " + *dup});

  const auto& P = X.points_;
  auto hn = [&](Index h) { return H.arrow_name(h); };
  auto gn = [&](Index g) { return G.arrow_name(g); };

  for (Index h = 0; h < H.num_arrows(); ++h)
    for (Index x = 0; x < n; ++x) {
      bool defined = X.act_left(h, x) != kNone;
      if (H.src(h) == X.r(x) && !defined) axiom("table", {hn(h), P[x]});
      if (H.src(h) != X.r(x) && defined) axiom("domain", {hn(h), P[x]});
    }
  for (Index x = 0; x < n; ++x)
    for (Index g = 0; g < G.num_arrows(); ++g) {
      bool defined = X.act_right(x, g) != kNone;
      if (X.s(x) == G.dst(g) && !defined) axiom("table", {P[x], gn(g)});
      if (X.s(x) != G.dst(g) && defined) axiom("domain", {P[x], gn(g)});
    }

  for (Index h = 0; h < H.num_arrows(); ++h)
    for (Index x = 0; x < n; ++x)
      if (Index y = X.act_left(h, x); y != kNone && X.r(y) != H.dst(h)) axiom("anchor", {hn(h), P[x]});
  for (Index x = 0; x < n; ++x)
    for (Index g = 0; g < G.num_arrows(); ++g)
      if (Index y = X.act_right(x, g); y != kNone && X.s(y) != G.src(g)) axiom("anchor", {P[x], gn(g)});

  for (Index x = 0; x < n; ++x) {
    if (X.act_left(H.unit(X.r(x)), x) != x) axiom("unit", {hn(H.unit(X.r(x))), P[x]});
    if (X.act_right(x, G.unit(X.s(x))) != x) axiom("unit", {P[x], gn(G.unit(X.s(x)))});
  }

  for (Index x = 0; x < n; ++x) {
    for (Index h2 : H.arrows_from(X.r(x)))
      for (Index h1 : H.arrows_from(H.dst(h2)))
        if (X.act_left(H.comp(h1, h2), x) != X.act_left(h1, X.act_left(h2, x)))
          axiom("action", {hn(h1), hn(h2), P[x]});
    for (Index g1 : G.arrows_to(X.s(x)))
      for (Index g2 : G.arrows_to(G.src(g1)))
        if (X.act_right(x, G.comp(g1, g2)) != X.act_right(X.act_right(x, g1), g2))
          axiom("action", {P[x], gn(g1), gn(g2)});
  }

  for (Index x = 0; x < n; ++x) {
    for (Index h : H.arrows_from(X.r(x)))
      if (X.s(X.act_left(h, x)) != X.s(x)) axiom("commute", {hn(h), P[x]});
    for (Index g : G.arrows_to(X.s(x)))
      if (X.r(X.act_right(x, g)) != X.r(x)) axiom("commute", {P[x], gn(g)});
    for (Index h : H.arrows_from(X.r(x)))
      for (Index g : G.arrows_to(X.s(x)))
        if (X.act_right(X.act_left(h, x), g) != X.act_left(h, X.act_right(x, g)))
          axiom("commute", {hn(h), P[x], gn(g)});
  }

  for (Index x = 0; x < n; ++x)
    for (Index g : G.arrows_to(X.s(x)))
      if (X.act_right(x, g) == x && !G.is_unit(g)) axiom("not-free", {P[x], gn(g)});
  return out;
}

CorrRef validate_correspondence(CorrespondenceTables tables) { return CorrespondenceBuilder::build(std::move(tables)); }

CorrRef validate_correspondence(const CorrespondenceSpec& spec) {
  if (!spec.left || !spec.right) input_error("correspondence needs both groupoids");
  const FiniteGroupoid& H = *spec.left;
  const FiniteGroupoid& G = *spec.right;
  const std::vector<std::string> names = sorted_names(spec.carrier);
  const std::size_t n = names.size();
  auto pt = [&](const std::string& id) {
    if (auto x = lookup(names, id)) return *x;
    axiom("table", {"unknown point " + id});
  };
  CorrespondenceTables t{spec.left, spec.right, names, std::vector<Index>(n, kNone), std::vector<Index>(n, kNone),
                         std::vector<Index>(H.num_arrows() * n, kNone), std::vector<Index>(n * G.num_arrows(), kNone)};
  for (const auto& [x, o] : spec.r) {
    auto obj = H.find_object(o);
    if (!obj) axiom("table", {"unknown object " + o});
    t.r[pt(x)] = *obj;
  }
  for (const auto& [x, o] : spec.s) {
    auto obj = G.find_object(o);
    if (!obj) axiom("table", {"unknown object " + o});
    t.s[pt(x)] = *obj;
  }
  for (Index x = 0; x < n; ++x)
    if (t.r[x] == kNone || t.s[x] == kNone) axiom("table", {"missing anchor for " + names[x]});
  for (const auto& [h, x, y] : spec.lact) {
    auto a = H.find_arrow(h);
    if (!a) axiom("table", {"unknown arrow " + h});
    Index& slot = t.lact[*a * n + pt(x)];
    if (slot != kNone) axiom("table", {"duplicate lact", h, x});
    slot = pt(y);
  }
  for (const auto& [g, x, y] : spec.ract) {
    auto a = G.find_arrow(g);
    if (!a) axiom("table", {"unknown arrow " + g});
    Index& slot = t.ract[pt(x) * G.num_arrows() + *a];
    if (slot != kNone) axiom("table", {"duplicate ract", g, x});
    slot = pt(y);
  }
  return CorrespondenceBuilder::build(std::move(t));
}

CorrRef identity_correspondence(const GroupoidRef& g) {
  const FiniteGroupoid& G = *g;
  const std::size_t n = G.num_arrows();
  CorrespondenceTables t{g, g, G.arrow_names(), {}, {}, std::vector<Index>(n * n, kNone),
                         std::vector<Index>(n * n, kNone)};
  for (Index a = 0; a < n; ++a) {
    t.r.push_back(G.dst(a));
    t.s.push_back(G.src(a));
    for (Index b = 0; b < n; ++b) {
      if (G.composable(b, a)) t.lact[b * n + a] = G.comp(b, a);
      if (G.composable(a, b)) t.ract[a * n + b] = G.comp(a, b);
    }
  }
  return validate_correspondence(std::move(t));
}

OrbitDecomposition orbits(const Correspondence& x) {
  const FiniteGroupoid& G = *x.right();
  OrbitDecomposition out;
  out.class_of.assign(x.size(), kNone);
  for (Index p = 0; p < x.size(); ++p) {
    if (out.class_of[p] != kNone) continue;
    std::vector<Index> cls;
    for (Index g : G.arrows_to(x.s(p))) cls.push_back(x.act_right(p, g));
    std::sort(cls.begin(), cls.end());
    for (Index q : cls) out.class_of[q] = out.classes.size();
    out.classes.push_back(std::move(cls));
  }
  return out;
}

Index bracket(const Correspondence& x, Index x1, Index x2) {
  for (Index g : x.right()->arrows_to(x.s(x1)))
    if (x.act_right(x1, g) == x2) return g;
  fail(ErrorKind::kNotSameOrbit, "bracket", {x.point_name(x1), x.point_name(x2)});
}

Classification classify(const Correspondence& x) {
  OrbitDecomposition orb = orbits(x);
  std::vector<int> hits(x.left()->num_objects(), 0);
  for (Index c = 0; c < orb.size(); ++c) ++hits[x.r(orb.representative(c))];
  Classification out;
  out.tight = std::all_of(hits.begin(), hits.end(), [](int k) { return k == 1; });
  return out;
}

void check_self_similar(const GroupoidRef& group, const std::vector<std::string>& alphabet, const PairMap& pi,
                        const PairMap& phi) {
  require_group(group);
  const FiniteGroupoid& G = *group;
  const std::vector<std::string> A = sorted_names(alphabet);
  const std::size_t k = A.size();
  std::vector<Index> p = resolve_table(G, A, pi, A, "pi");
  std::vector<Index> f = resolve_table(G, A, phi, G.arrow_names(), "phi");
  const Index e = G.unit(0);
  for (Index a = 0; a < k; ++a)
    if (p[e * k + a] != a) fail(ErrorKind::kNotAnAction, "unit", {G.arrow_name(e), A[a]});
  for (Index g = 0; g < G.num_arrows(); ++g)
    for (Index h = 0; h < G.num_arrows(); ++h)
      for (Index a = 0; a < k; ++a)
        if (p[G.comp(g, h) * k + a] != p[g * k + p[h * k + a]])
          fail(ErrorKind::kNotAnAction, "compatibility", {G.arrow_name(g), G.arrow_name(h), A[a]});
  for (Index g = 0; g < G.num_arrows(); ++g)
    for (Index h = 0; h < G.num_arrows(); ++h)
      for (Index a = 0; a < k; ++a)
        if (f[G.comp(g, h) * k + a] != G.comp(f[g * k + p[h * k + a]], f[h * k + a]))
          fail(ErrorKind::kCocycleViolation, "cocycle", {G.arrow_name(g), G.arrow_name(h), A[a]});
}

CorrRef self_similar_group_correspondence(const GroupoidRef& group, const std::vector<std::string>& alphabet,
                                          const PairMap& pi, const PairMap& phi) {
  check_self_similar(group, alphabet, pi, phi);
  const FiniteGroupoid& G = *group;
  const std::vector<std::string> A = sorted_names(alphabet);
  const std::size_t k = A.size(), m = G.num_arrows(), n = k * m;
  std::vector<Index> p = resolve_table(G, A, pi, A, "pi");
  std::vector<Index> f = resolve_table(G, A, phi, G.arrow_names(), "phi");
  auto point = [&](Index a, Index g) { return a * m + g; };
  CorrespondenceTables t{group, group, {}, std::vector<Index>(n, 0), std::vector<Index>(n, 0),
                         std::vector<Index>(m * n, kNone), std::vector<Index>(n * m, kNone)};
  for (Index a = 0; a < k; ++a)
    for (Index g = 0; g < m; ++g) t.carrier.push_back("(" + A[a] + "," + G.arrow_name(g) + ")");
  for (Index a = 0; a < k; ++a)
    for (Index g = 0; g < m; ++g)
      for (Index h = 0; h < m; ++h) {
        t.lact[h * n + point(a, g)] = point(p[h * k + a], G.comp(f[h * k + a], g));
        t.ract[point(a, g) * m + h] = point(a, G.comp(g, h));
      }
  return validate_correspondence(std::move(t));
}

CorrRef self_similar_graph_correspondence(const SelfSimilarGraphData& d) {
  require_group(d.group);
  const FiniteGroupoid& Gam = *d.group;
  const std::vector<std::string> V = sorted_names(d.vertices);
  const std::vector<std::string> E = sorted_names(d.edges);
  GroupoidRef gv = transformation_groupoid(d.group, V, d.vertex_action);
  const FiniteGroupoid& GV = *gv;
  const std::size_t m = Gam.num_arrows(), ke = E.size(), kv = V.size();
  std::vector<Index> vact = resolve_table(Gam, V, d.vertex_action, V, "vertex action");
  std::vector<Index> eact = resolve_table(Gam, E, d.edge_action, E, "edge action");
  std::vector<Index> res = resolve_table(Gam, E, d.restriction, Gam.arrow_names(), "restriction");
  std::vector<Index> rE(ke, kNone), sE(ke, kNone);
  for (const auto& [e, v] : d.edge_range) rE[require(E, e, "edge")] = require(V, v, "vertex");
  for (const auto& [e, v] : d.edge_source) sE[require(E, e, "edge")] = require(V, v, "vertex");
  for (Index e = 0; e < ke; ++e)
    if (rE[e] == kNone || sE[e] == kNone) input_error("edge '" + E[e] + "' needs range and source");

  const Index unit = Gam.unit(0);
  for (Index e = 0; e < ke; ++e)
    if (eact[unit * ke + e] != e) fail(ErrorKind::kNotAnAction, "unit", {Gam.arrow_name(unit), E[e]});
  for (Index g = 0; g < m; ++g)
    for (Index h = 0; h < m; ++h)
      for (Index e = 0; e < ke; ++e) {
        if (eact[Gam.comp(g, h) * ke + e] != eact[g * ke + eact[h * ke + e]])
          fail(ErrorKind::kNotAnAction, "compatibility", {Gam.arrow_name(g), Gam.arrow_name(h), E[e]});
        if (res[Gam.comp(g, h) * ke + e] != Gam.comp(res[g * ke + eact[h * ke + e]], res[h * ke + e]))
          fail(ErrorKind::kCocycleViolation, "cocycle", {Gam.arrow_name(g), Gam.arrow_name(h), E[e]});
      }
  for (Index g = 0; g < m; ++g)
    for (Index e = 0; e < ke; ++e) {
      Index ge = eact[g * ke + e];
      if (rE[ge] != vact[g * kv + rE[e]]) fail(ErrorKind::kCompatibilityViolation, "range", {Gam.arrow_name(g), E[e]});
      if (sE[ge] != vact[res[g * ke + e] * kv + sE[e]])
        fail(ErrorKind::kCompatibilityViolation, "source", {Gam.arrow_name(g), E[e]});
    }

  // Arrow (k, v) of the transformation groupoid.
  std::vector<Index> arrow_of(m * kv);
  for (Index k = 0; k < m; ++k)
    for (Index v = 0; v < kv; ++v) arrow_of[k * kv + v] = GV.arrow("(" + Gam.arrow_name(k) + "," + V[v] + ")");
  std::vector<Index> group_of(GV.num_arrows()), vertex_of(GV.num_arrows());
  for (Index k = 0; k < m; ++k)
    for (Index v = 0; v < kv; ++v) {
      group_of[arrow_of[k * kv + v]] = k;
      vertex_of[arrow_of[k * kv + v]] = v;
    }
  // GV objects are the vertices in the same sorted order.
  const std::size_t n = ke * m, na = GV.num_arrows();
  auto point = [&](Index e, Index g) { return e * m + g; };
  CorrespondenceTables t{gv, gv, {}, std::vector<Index>(n), std::vector<Index>(n), std::vector<Index>(na * n, kNone),
                         std::vector<Index>(n * na, kNone)};
  for (Index e = 0; e < ke; ++e)
    for (Index g = 0; g < m; ++g) {
      Index x = point(e, g);
      t.carrier.push_back("(" + E[e] + "," + Gam.arrow_name(g) + ")");
      t.r[x] = rE[e];
      t.s[x] = vact[Gam.inv(g) * kv + sE[e]];
    }
  for (Index e = 0; e < ke; ++e)
    for (Index g = 0; g < m; ++g) {
      Index x = point(e, g);
      for (Index a = 0; a < na; ++a) {
        Index k = group_of[a], v = vertex_of[a];
        if (vact[k * kv + v] == t.s[x]) t.ract[x * na + a] = point(e, Gam.comp(g, k));
        if (v == rE[e]) t.lact[a * n + x] = point(eact[k * ke + e], Gam.comp(res[k * ke + e], g));
      }
    }
  return validate_correspondence(std::move(t));
}

PairMap cocycle_gauge(const GroupoidRef& group, const std::vector<std::string>& alphabet, const PairMap& pi,
                      const PairMap& phi, const std::map<std::string, std::string>& psi) {
  require_group(group);
  const FiniteGroupoid& G = *group;
  const std::vector<std::string> A = sorted_names(alphabet);
  const std::size_t k = A.size();
  std::vector<Index> p = resolve_table(G, A, pi, A, "pi");
  std::vector<Index> f = resolve_table(G, A, phi, G.arrow_names(), "phi");
  std::vector<Index> q(k, kNone);
  for (const auto& [a, g] : psi) q[require(A, a, "letter")] = G.arrow(g);
  for (Index a = 0; a < k; ++a)
    if (q[a] == kNone) input_error("gauge missing letter '" + A[a] + "'");
  PairMap out;
  for (Index h = 0; h < G.num_arrows(); ++h)
    for (Index a = 0; a < k; ++a) {
      Index value = G.comp(G.comp(G.inv(q[p[h * k + a]]), f[h * k + a]), q[a]);
      out[{G.arrow_name(h), A[a]}] = G.arrow_name(value);
    }
  return out;
}

}  // namespace grpd
