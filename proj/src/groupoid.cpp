#include "grpd/groupoid.hpp"

#include <algorithm>
#include <set>

#include "grpd/error.hpp"

namespace grpd {

namespace {

std::optional<Index> lookup(const std::vector<std::string>& sorted, std::string_view id) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), id);
  if (it == sorted.end() || *it != id) return std::nullopt;
  return static_cast<Index>(it - sorted.begin());
}

[[noreturn]] void axiom(std::string law, std::vector<std::string> witness) {
  fail(ErrorKind::kAxiomViolation, std::move(law), std::move(witness));
}

std::vector<std::string> sorted_unique(std::vector<std::string> ids, const char* what) {
  std::sort(ids.begin(), ids.end());
  auto dup = std::adjacent_find(ids.begin(), ids.end());
  if (dup != ids.end()) axiom("table", {std::string("duplicate ") + what + " " + *dup});
  return ids;
}

}  // namespace

class GroupoidBuilder {
 public:
  static GroupoidRef build(const GroupoidSpec& spec);
};

std::optional<Index> FiniteGroupoid::find_object(std::string_view id) const { return lookup(objects_, id); }
std::optional<Index> FiniteGroupoid::find_arrow(std::string_view id) const { return lookup(arrows_, id); }

Index FiniteGroupoid::object(std::string_view id) const {
  if (auto x = find_object(id)) return *x;
  input_error("unknown object '" + std::string(id) + "'");
}

Index FiniteGroupoid::arrow(std::string_view id) const {
  if (auto g = find_arrow(id)) return *g;
  input_error("unknown arrow '" + std::string(id) + "'");
}

GroupoidSpec FiniteGroupoid::to_spec() const {
  GroupoidSpec spec;
  spec.objects = objects_;
  for (Index g = 0; g < arrows_.size(); ++g) {
    spec.arrows.push_back({arrows_[g], objects_[src_[g]], objects_[dst_[g]]});
    spec.inv[arrows_[g]] = arrows_[inv_[g]];
  }
  for (Index x = 0; x < objects_.size(); ++x) spec.unit[objects_[x]] = arrows_[unit_[x]];
  for (Index g = 0; g < arrows_.size(); ++g)
    for (Index h : to_[src_[g]]) spec.comp.push_back({arrows_[g], arrows_[h], arrows_[comp(g, h)]});
  return spec;
}

bool operator==(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  return a.objects_ == b.objects_ && a.arrows_ == b.arrows_ && a.src_ == b.src_ && a.dst_ == b.dst_ &&
         a.unit_ == b.unit_ && a.inv_ == b.inv_ && a.comp_ == b.comp_;
}

bool same_groupoid(const GroupoidRef& a, const GroupoidRef& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

GroupoidRef GroupoidBuilder::build(const GroupoidSpec& spec) {
  auto out = std::make_shared<FiniteGroupoid>();
  FiniteGroupoid& G = *out;
  G.objects_ = sorted_unique(spec.objects, "object");
  std::vector<std::string> ids;
  for (const auto& a : spec.arrows) ids.push_back(a.id);
  G.arrows_ = sorted_unique(std::move(ids), "arrow");
  const std::size_t n = G.arrows_.size();
  const std::size_t m = G.objects_.size();

  auto obj = [&](const std::string& id) {
    if (auto x = G.find_object(id)) return *x;
    axiom("table", {"unknown object " + id});
  };
  auto arr = [&](const std::string& id) {
    if (auto g = G.find_arrow(id)) return *g;
    axiom("table", {"unknown arrow " + id});
  };

  G.src_.assign(n, kNone);
  G.dst_.assign(n, kNone);
  for (const auto& a : spec.arrows) {
    Index g = arr(a.id);
    G.src_[g] = obj(a.src);
    G.dst_[g] = obj(a.dst);
  }

  G.unit_.assign(m, kNone);
  for (const auto& [x, u] : spec.unit) G.unit_[obj(x)] = arr(u);
  for (Index x = 0; x < m; ++x)
    if (G.unit_[x] == kNone) axiom("table", {"missing unit for " + G.objects_[x]});

  G.inv_.assign(n, kNone);
  for (const auto& [g, h] : spec.inv) G.inv_[arr(g)] = arr(h);
  for (Index g = 0; g < n; ++g)
    if (G.inv_[g] == kNone) axiom("table", {"missing inverse for " + G.arrows_[g]});

  G.comp_.assign(n * n, kNone);
  for (const auto& [g, h, gh] : spec.comp) {
    Index a = arr(g), b = arr(h), c = arr(gh);
    if (G.comp_[a * n + b] != kNone) axiom("table", {"duplicate comp " + g, h});
    if (G.src_[a] != G.dst_[b]) axiom("domain", {g, h});
    G.comp_[a * n + b] = c;
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (G.src_[a] == G.dst_[b] && G.comp_[a * n + b] == kNone) axiom("domain", {G.arrows_[a], G.arrows_[b]});

  G.from_.assign(m, {});
  G.to_.assign(m, {});
  for (Index g = 0; g < n; ++g) {
    G.from_[G.src_[g]].push_back(g);
    G.to_[G.dst_[g]].push_back(g);
  }

  auto name = [&](Index g) { return G.arrows_[g]; };
  for (Index g = 0; g < n; ++g) {
    Index h = G.inv_[g];
    if (G.src_[h] != G.dst_[g] || G.dst_[h] != G.src_[g] || G.inv_[h] != g) axiom("inverse", {name(g), name(h)});
  }
  for (Index x = 0; x < m; ++x) {
    Index u = G.unit_[x];
    if (G.src_[u] != x || G.dst_[u] != x) axiom("unit-law", {G.objects_[x], name(u)});
  }
  for (Index g = 0; g < n; ++g) {
    if (G.comp(G.unit_[G.dst_[g]], g) != g) axiom("unit-law", {name(G.unit_[G.dst_[g]]), name(g)});
    if (G.comp(g, G.unit_[G.src_[g]]) != g) axiom("unit-law", {name(g), name(G.unit_[G.src_[g]])});
  }
  for (Index g = 0; g < n; ++g) {
    Index h = G.inv_[g];
    if (G.comp(g, h) != G.unit_[G.dst_[g]]) axiom("unit-law", {name(g), name(h)});
    if (G.comp(h, g) != G.unit_[G.src_[g]]) axiom("unit-law", {name(h), name(g)});
  }
  for (Index a = 0; a < n; ++a)
    for (Index b : G.to_[G.src_[a]]) {
      Index c = G.comp(a, b);
      if (G.src_[c] != G.src_[b] || G.dst_[c] != G.dst_[a]) axiom("endpoints", {name(a), name(b)});
    }
  for (Index a = 0; a < n; ++a)
    for (Index b : G.to_[G.src_[a]])
      for (Index c : G.to_[G.src_[b]])
        if (G.comp(G.comp(a, b), c) != G.comp(a, G.comp(b, c))) axiom("associativity", {name(a), name(b), name(c)});
  return out;
}

GroupoidRef validate_groupoid(const GroupoidSpec& spec) { return GroupoidBuilder::build(spec); }

GroupoidRef group_as_groupoid(const GroupTable& table) {
  const std::vector<std::string> elems = sorted_unique(table.elements, "element");
  const std::size_t n = elems.size();
  if (n == 0) axiom("identity", {});
  auto idx = [&](const std::string& id) {
    if (auto x = lookup(elems, id)) return *x;
    axiom("table", {"unknown element " + id});
  };
  std::vector<Index> mul(n * n, kNone);
  for (const auto& [a, b, ab] : table.products) {
    Index i = idx(a), j = idx(b);
    if (mul[i * n + j] != kNone) axiom("table", {"duplicate product", a, b});
    mul[i * n + j] = idx(ab);
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (mul[i * n + j] == kNone) axiom("table", {"missing product", elems[i], elems[j]});

  Index e = kNone;
  for (Index c = 0; c < n && e == kNone; ++c) {
    bool ok = true;
    for (Index x = 0; x < n && ok; ++x) ok = mul[c * n + x] == x && mul[x * n + c] == x;
    if (ok) e = c;
  }
  if (e == kNone) axiom("identity", {});
  std::vector<Index> inv(n, kNone);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y)
      if (mul[x * n + y] == e && mul[y * n + x] == e) inv[x] = y;
    if (inv[x] == kNone) axiom("inverse", {elems[x]});
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (mul[mul[a * n + b] * n + c] != mul[a * n + mul[b * n + c]])
          axiom("associativity", {elems[a], elems[b], elems[c]});

  GroupoidSpec spec;
  spec.objects = {"o"};
  for (Index x = 0; x < n; ++x) {
    spec.arrows.push_back({elems[x], "o", "o"});
    spec.inv[elems[x]] = elems[inv[x]];
    for (Index y = 0; y < n; ++y) spec.comp.push_back({elems[x], elems[y], elems[mul[x * n + y]]});
  }
  spec.unit["o"] = elems[e];
  return validate_groupoid(spec);
}

GroupoidRef space_as_groupoid(const std::vector<std::string>& points) {
  GroupoidSpec spec;
  spec.objects = points;
  for (const auto& p : points) {
    std::string u = "1_" + p;
    spec.arrows.push_back({u, p, p});
    spec.unit[p] = u;
    spec.inv[u] = u;
    spec.comp.push_back({u, u, u});
  }
  return validate_groupoid(spec);
}

GroupoidRef pair_groupoid(const std::vector<std::string>& points) {
  auto arrow = [](const std::string& i, const std::string& j) { return "(" + i + "," + j + ")"; };
  GroupoidSpec spec;
  spec.objects = points;
  for (const auto& i : points) {
    spec.unit[i] = arrow(i, i);
    for (const auto& j : points) {
      spec.arrows.push_back({arrow(i, j), j, i});
      spec.inv[arrow(i, j)] = arrow(j, i);
      for (const auto& k : points) spec.comp.push_back({arrow(i, j), arrow(j, k), arrow(i, k)});
    }
  }
  return validate_groupoid(spec);
}

GroupoidRef transformation_groupoid(const GroupoidRef& group, const std::vector<std::string>& points,
                                    const PairMap& action) {
  const FiniteGroupoid& G = *group;
  if (G.num_objects() != 1) input_error("transformation groupoid needs a group (single object)");
  const std::vector<std::string> V = sorted_unique(points, "point");
  auto pt = [&](const std::string& id) {
    if (auto v = lookup(V, id)) return *v;
    input_error("unknown point '" + id + "'");
  };
  const std::size_t n = G.num_arrows();
  std::vector<Index> act(n * V.size(), kNone);
  for (const auto& [key, result] : action) act[G.arrow(key.first) * V.size() + pt(key.second)] = pt(result);
  for (Index g = 0; g < n; ++g)
    for (Index v = 0; v < V.size(); ++v)
      if (act[g * V.size() + v] == kNone) input_error("action missing (" + G.arrow_name(g) + "," + V[v] + ")");
  auto at = [&](Index g, Index v) { return act[g * V.size() + v]; };

  const Index e = G.unit(0);
  for (Index v = 0; v < V.size(); ++v)
    if (at(e, v) != v) fail(ErrorKind::kNotAnAction, "unit", {G.arrow_name(e), V[v]});
  for (Index g = 0; g < n; ++g)
    for (Index h = 0; h < n; ++h)
      for (Index v = 0; v < V.size(); ++v)
        if (at(G.comp(g, h), v) != at(g, at(h, v)))
          fail(ErrorKind::kNotAnAction, "compatibility", {G.arrow_name(g), G.arrow_name(h), V[v]});

  auto arrow = [&](Index g, Index v) { return "(" + G.arrow_name(g) + "," + V[v] + ")"; };
  GroupoidSpec spec;
  spec.objects = V;
  for (Index v = 0; v < V.size(); ++v) spec.unit[V[v]] = arrow(e, v);
  for (Index g = 0; g < n; ++g)
    for (Index v = 0; v < V.size(); ++v) {
      spec.arrows.push_back({arrow(g, v), V[v], V[at(g, v)]});
      spec.inv[arrow(g, v)] = arrow(G.inv(g), at(g, v));
      for (Index h = 0; h < n; ++h) spec.comp.push_back({arrow(g, at(h, v)), arrow(h, v), arrow(G.comp(g, h), v)});
    }
  return validate_groupoid(spec);
}

ArrowSet ArrowSet::of(GroupoidRef g, std::vector<Index> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return {std::move(g), std::move(members)};
}

ArrowSet ArrowSet::named(GroupoidRef g, const std::vector<std::string>& ids) {
  std::vector<Index> members;
  for (const auto& id : ids) members.push_back(g->arrow(id));
  return of(std::move(g), std::move(members));
}

bool ArrowSet::contains(Index g) const { return std::binary_search(members.begin(), members.end(), g); }

bool is_slice(const ArrowSet& s) {
  std::set<Index> srcs, dsts;
  for (Index g : s.members)
    if (!srcs.insert(s.groupoid->src(g)).second || !dsts.insert(s.groupoid->dst(g)).second) return false;
  return true;
}

ArrowSet units_of(const GroupoidRef& g) {
  std::vector<Index> members;
  for (Index x = 0; x < g->num_objects(); ++x) members.push_back(g->unit(x));
  return ArrowSet::of(g, std::move(members));
}

ArrowSet slice_product(const ArrowSet& v, const ArrowSet& w) {
  if (!same_groupoid(v.groupoid, w.groupoid)) fail(ErrorKind::kGroupoidMismatch, "slice product");
  std::vector<Index> out;
  for (Index a : v.members)
    for (Index b : w.members)
      if (v.groupoid->composable(a, b)) out.push_back(v.groupoid->comp(a, b));
  return ArrowSet::of(v.groupoid, std::move(out));
}

ArrowSet slice_inverse(const ArrowSet& v) {
  std::vector<Index> out;
  for (Index a : v.members) out.push_back(v.groupoid->inv(a));
  return ArrowSet::of(v.groupoid, std::move(out));
}

}  // namespace grpd
