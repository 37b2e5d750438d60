#include "grpd/kgraph.hpp"

#include <algorithm>
#include <functional>

#include "grpd/error.hpp"

namespace grpd {

namespace {

std::optional<Index> lookup(const std::vector<std::string>& sorted, std::string_view id) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), id);
  if (it == sorted.end() || *it != id) return std::nullopt;
  return static_cast<Index>(it - sorted.begin());
}

[[noreturn]] void not_bijective(std::string law, std::vector<std::string> witness) {
  fail(ErrorKind::kFactorizationNotBijective, std::move(law), std::move(witness));
}

}  // namespace

Index KGraph::edge(std::string_view id) const {
  if (auto e = lookup(edges_, id)) return *e;
  input_error("unknown edge '" + std::string(id) + "'");
}

std::pair<Index, Index> KGraph::swap(Index e, Index f) const {
  auto it = swap_.find({e, f});
  if (it == swap_.end()) not_bijective("missing", {edges_[e], edges_[f]});
  return it->second;
}

Path KGraph::normalize(Path p) const {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (color_[p[i]] > color_[p[i + 1]]) {
        std::tie(p[i], p[i + 1]) = swap(p[i], p[i + 1]);
        changed = true;
      }
  }
  return p;
}

std::vector<int> KGraph::degree(const Path& p) const {
  std::vector<int> d(rank_, 0);
  for (Index e : p) ++d[color_[e]];
  return d;
}

std::vector<Path> KGraph::paths_of_degree(const std::vector<int>& degree) const {
  std::vector<std::size_t> colors;
  for (std::size_t c = 0; c < degree.size(); ++c) colors.insert(colors.end(), degree[c], c);
  std::vector<Path> out;
  Path current;
  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    if (k == colors.size()) {
      out.push_back(current);
      return;
    }
    for (Index e : by_color_[colors[k]]) {
      if (k > 0 && source_[current.back()] != range_[e]) continue;
      current.push_back(e);
      extend(k + 1);
      current.pop_back();
    }
  };
  if (!colors.empty()) extend(0);
  return out;
}

std::string KGraph::path_name(const Path& p, Index vertex) const {
  if (p.empty()) return "1_" + vertices_[vertex];
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "." : "") + edges_[p[i]];
  return out;
}

std::pair<Path, Index> KGraph::act_path(Index g, const Path& p) const {
  const std::size_t n = edges_.size();
  Path out;
  for (Index e : p) {
    out.push_back(edge_act_[g * n + e]);
    g = restriction_[g * n + e];
  }
  return {out, g};
}

KGraph validate_kgraph(const KGraphSpec& spec) {
  KGraph k;
  if (spec.colors.empty()) input_error("k-graph needs at least one color");
  k.rank_ = spec.colors.size();
  k.vertices_ = spec.vertices;
  std::sort(k.vertices_.begin(), k.vertices_.end());
  if (std::adjacent_find(k.vertices_.begin(), k.vertices_.end()) != k.vertices_.end()) input_error("duplicate vertex");
  std::vector<const EdgeDecl*> decls;
  std::vector<std::size_t> decl_color;
  for (std::size_t c = 0; c < spec.colors.size(); ++c)
    for (const auto& e : spec.colors[c]) {
      k.edges_.push_back(e.id);
      decls.push_back(&e);
      decl_color.push_back(c);
    }
  std::sort(k.edges_.begin(), k.edges_.end());
  if (std::adjacent_find(k.edges_.begin(), k.edges_.end()) != k.edges_.end()) input_error("duplicate edge id");
  const std::size_t n = k.edges_.size();
  k.color_.resize(n);
  k.range_.resize(n);
  k.source_.resize(n);
  k.by_color_.assign(k.rank_, {});
  auto vertex = [&](const std::string& id) {
    if (auto v = lookup(k.vertices_, id)) return *v;
    input_error("unknown vertex '" + id + "'");
  };
  for (std::size_t i = 0; i < decls.size(); ++i) {
    Index e = k.edge(decls[i]->id);
    k.color_[e] = decl_color[i];
    k.range_[e] = vertex(decls[i]->range);
    k.source_[e] = vertex(decls[i]->source);
  }
  for (Index e = 0; e < n; ++e) k.by_color_[k.color_[e]].push_back(e);

  const auto& E = k.edges_;
  for (const auto& [lhs, rhs] : spec.factorizations) {
    Index b = k.edge(lhs.first), c = k.edge(lhs.second);
    Index c2 = k.edge(rhs.first), b2 = k.edge(rhs.second);
    bool ok = k.source_[b] == k.range_[c] && k.source_[c2] == k.range_[b2] && k.color_[b] == k.color_[b2] &&
              k.color_[c] == k.color_[c2] && k.color_[b] != k.color_[c] && k.range_[b] == k.range_[c2] &&
              k.source_[c] == k.source_[b2];
    if (!ok) not_bijective("malformed", {E[b], E[c], E[c2], E[b2]});
    for (auto [from, to] : {std::pair{std::pair{b, c}, std::pair{c2, b2}}, std::pair{std::pair{c2, b2}, std::pair{b, c}}}) {
      auto [it, inserted] = k.swap_.emplace(from, to);
      if (!inserted && it->second != to) not_bijective("duplicate", {E[from.first], E[from.second]});
    }
  }
  for (Index e = 0; e < n; ++e)
    for (Index f = 0; f < n; ++f)
      if (k.source_[e] == k.range_[f] && k.color_[e] != k.color_[f] && !k.swap_.count({e, f}))
        not_bijective("missing", {E[e], E[f]});

  if (k.rank_ >= 3) {
    auto apply = [&](Path p, std::initializer_list<std::size_t> positions) {
      for (std::size_t i : positions) std::tie(p[i], p[i + 1]) = k.swap(p[i], p[i + 1]);
      return p;
    };
    for (Index e = 0; e < n; ++e)
      for (Index f = 0; f < n; ++f) {
        if (k.source_[e] != k.range_[f] || k.color_[e] == k.color_[f]) continue;
        for (Index g = 0; g < n; ++g) {
          if (k.source_[f] != k.range_[g] || k.color_[g] == k.color_[e] || k.color_[g] == k.color_[f]) continue;
          if (apply({e, f, g}, {0, 1, 0}) != apply({e, f, g}, {1, 0, 1}))
            fail(ErrorKind::kHexagonViolation, "hexagon", {E[e], E[f], E[g]});
        }
      }
  }

  if (spec.group) {
    const KGraphGroupBlock& blk = *spec.group;
    if (!blk.group || blk.group->num_objects() != 1) input_error("k-graph group block needs a group");
    const FiniteGroupoid& G = *blk.group;
    k.group_ = blk.group;
    k.vertex_action_ = blk.vertex_action;
    const std::size_t m = G.num_arrows(), nv = k.vertices_.size();
    auto table = [&](const PairMap& map, const std::vector<std::string>& names, auto value, std::size_t width) {
      std::vector<Index> out(m * width, kNone);
      for (const auto& [key, result] : map) {
        auto i = lookup(names, key.second);
        if (!i) input_error("unknown id '" + key.second + "' in group block");
        out[G.arrow(key.first) * width + *i] = value(result);
      }
      if (std::count(out.begin(), out.end(), kNone)) input_error("group block tables must be total");
      return out;
    };
    k.vertex_act_ = table(blk.vertex_action, k.vertices_, vertex, nv);
    k.edge_act_ = table(blk.edge_action, E, [&](const std::string& id) { return k.edge(id); }, n);
    k.restriction_ = table(blk.restriction, E, [&](const std::string& id) { return G.arrow(id); }, n);
    // Validates the vertex action.
    transformation_groupoid(blk.group, k.vertices_, blk.vertex_action);
    const Index unit = G.unit(0);
    for (Index e = 0; e < n; ++e)
      if (k.edge_act_[unit * n + e] != e) fail(ErrorKind::kNotAnAction, "unit", {G.arrow_name(unit), E[e]});
    for (Index g = 0; g < m; ++g)
      for (Index h = 0; h < m; ++h)
        for (Index e = 0; e < n; ++e) {
          if (k.edge_act_[G.comp(g, h) * n + e] != k.edge_act_[g * n + k.edge_act_[h * n + e]])
            fail(ErrorKind::kNotAnAction, "compatibility", {G.arrow_name(g), G.arrow_name(h), E[e]});
          if (k.restriction_[G.comp(g, h) * n + e] !=
              G.comp(k.restriction_[g * n + k.edge_act_[h * n + e]], k.restriction_[h * n + e]))
            fail(ErrorKind::kCocycleViolation, "cocycle", {G.arrow_name(g), G.arrow_name(h), E[e]});
        }
    for (Index g = 0; g < m; ++g)
      for (Index e = 0; e < n; ++e) {
        Index ge = k.edge_act_[g * n + e];
        if (k.color_[ge] != k.color_[e]) fail(ErrorKind::kCompatibilityViolation, "color", {G.arrow_name(g), E[e]});
        if (k.range_[ge] != k.act_vertex(g, k.range_[e]))
          fail(ErrorKind::kCompatibilityViolation, "range", {G.arrow_name(g), E[e]});
        if (k.source_[ge] != k.act_vertex(k.restriction_[g * n + e], k.source_[e]))
          fail(ErrorKind::kCompatibilityViolation, "source", {G.arrow_name(g), E[e]});
      }
    for (const auto& [from, to] : k.swap_) {
      if (k.color_[from.first] > k.color_[from.second]) continue;
      for (Index g = 0; g < m; ++g) {
        auto [direct, g1] = k.act_path(g, {from.first, from.second});
        auto [swapped, g2] = k.act_path(g, {to.first, to.second});
        if (k.normalize(swapped) != direct || g1 != g2)
          fail(ErrorKind::kCompatibilityViolation, "factorization", {G.arrow_name(g), E[from.first], E[from.second]});
      }
    }
  }
  return k;
}

namespace {

struct PathMorphism {
  Path path;
  Index range, source;
  std::vector<int> degree;
  std::string name;
};

std::vector<std::vector<int>> degrees_in(const std::vector<int>& box) {
  std::vector<std::vector<int>> out{{}};
  for (int bound : box) {
    std::vector<std::vector<int>> next;
    for (const auto& d : out)
      for (int k = 0; k <= bound; ++k) {
        next.push_back(d);
        next.back().push_back(k);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<PathMorphism> path_morphisms(const KGraph& g, const std::vector<int>& degree) {
  std::vector<PathMorphism> out;
  if (std::all_of(degree.begin(), degree.end(), [](int d) { return d == 0; })) {
    for (Index v = 0; v < g.vertices().size(); ++v) out.push_back({{}, v, v, degree, g.path_name({}, v)});
    return out;
  }
  for (const Path& p : g.paths_of_degree(degree))
    out.push_back({p, g.range(p.front()), g.source(p.back()), degree, g.path_name(p, 0)});
  return out;
}

void require_box(const KGraph& g, const std::vector<int>& box) {
  if (box.size() != g.rank()) input_error("degree box must have one bound per color");
}

}  // namespace

FunctorRef kgraph_path_category(const KGraph& g, const std::vector<int>& box) {
  require_box(g, box);
  CategoryRef base = truncated_monoid_category(box);
  std::vector<PathMorphism> all;
  for (const auto& d : degrees_in(box))
    for (auto& m : path_morphisms(g, d)) all.push_back(std::move(m));
  CategorySpec spec;
  spec.truncated = true;
  spec.objects = g.vertices();
  FunctorSpec functor{nullptr, base, {}, {}};
  for (const auto& v : g.vertices()) functor.on_objects[v] = "o";
  std::map<std::pair<Path, Index>, std::string> name_of;  // (path, vertex for empty paths)
  for (const auto& m : all) {
    spec.morphisms.push_back({m.name, g.vertices()[m.source], g.vertices()[m.range]});
    functor.on_morphisms[m.name] = degree_name(m.degree);
    if (m.path.empty()) spec.identity[g.vertices()[m.range]] = m.name;
    name_of[{m.path, m.path.empty() ? m.range : 0}] = m.name;
  }
  for (const auto& a : all)
    for (const auto& b : all) {
      if (a.source != b.range) continue;
      bool inside = true;
      for (std::size_t c = 0; c < box.size(); ++c) inside = inside && a.degree[c] + b.degree[c] <= box[c];
      if (!inside) continue;
      Path p = a.path;
      p.insert(p.end(), b.path.begin(), b.path.end());
      p = g.normalize(std::move(p));
      spec.comp.push_back({a.name, b.name, name_of.at({p, p.empty() ? a.range : 0})});
    }
  functor.total = validate_category(spec);
  return validate_functor(functor);
}

Diagram kgraph_diagram(const KGraph& g, const std::vector<int>& box) {
  require_box(g, box);
  if (!g.has_group()) return fibration_to_diagram(*kgraph_path_category(g, box));

  const FiniteGroupoid& G = *g.group();
  CategoryRef index = truncated_monoid_category(box);
  GroupoidRef node = transformation_groupoid(g.group(), g.vertices(), g.vertex_action_);
  std::vector<CorrRef> arrows(index->num_morphisms());
  // Per morphism: the path and group element behind each carrier point.
  std::vector<std::vector<std::pair<Path, Index>>> decode(index->num_morphisms());
  std::vector<std::map<Path, std::string>> names(index->num_morphisms());
  for (const auto& d : degrees_in(box)) {
    Index p = index->morphism(degree_name(d));
    if (index->is_identity(p)) continue;
    SelfSimilarGraphData data{g.group(), g.vertices(), g.vertex_action_, {}, {}, {}, {}, {}};
    for (const auto& m : path_morphisms(g, d)) {
      data.edges.push_back(m.name);
      data.edge_range[m.name] = g.vertices()[m.range];
      data.edge_source[m.name] = g.vertices()[m.source];
      names[p][m.path] = m.name;
    }
    for (const auto& m : path_morphisms(g, d))
      for (Index h = 0; h < G.num_arrows(); ++h) {
        auto [image, rest] = g.act_path(h, m.path);
        data.edge_action[{G.arrow_name(h), m.name}] = names[p].at(image);
        data.restriction[{G.arrow_name(h), m.name}] = G.arrow_name(rest);
      }
    arrows[p] = self_similar_graph_correspondence(data);
    decode[p].resize(arrows[p]->size());
    for (const auto& m : path_morphisms(g, d))
      for (Index h = 0; h < G.num_arrows(); ++h)
        decode[p][arrows[p]->point("(" + m.name + "," + G.arrow_name(h) + ")")] = {m.path, h};
  }
  auto sigma = [&](Index p, Index q, Index x, Index y) -> Index {
    auto [mu, gx] = decode[p][x];
    auto [nu, hy] = decode[q][y];
    auto [moved, rest] = g.act_path(gx, nu);
    Path joined = mu;
    joined.insert(joined.end(), moved.begin(), moved.end());
    Index pq = index->comp(p, q);
    return arrows[pq]->point("(" + names[pq].at(g.normalize(joined)) + "," + G.arrow_name(G.comp(rest, hy)) + ")");
  };
  std::vector<GroupoidRef> nodes{node};
  return Diagram(index, nodes, arrows, sigma);
}

Presentation kgraph_presentation(const KGraph& g) {
  const auto& V = g.vertices();
  const auto& E = g.edges();
  auto P = [&](Index v) { return "P_" + V[v]; };
  auto S = [&](Index e) { return "S_" + E[e]; };
  Presentation out;
  for (Index v = 0; v < V.size(); ++v) out.generators.push_back(P(v));
  for (Index e = 0; e < E.size(); ++e) out.generators.push_back(S(e));
  auto& rel = out.relations;
  for (Index v = 0; v < V.size(); ++v)
    for (Index w = v + 1; w < V.size(); ++w) rel[0].push_back(P(v) + " " + P(w) + " = 0");
  for (Index e = 0; e < E.size(); ++e)
    for (Index f = 0; f < E.size(); ++f)
      if (g.source(e) == g.range(f) && g.color(e) < g.color(f)) {
        auto [f2, e2] = g.swap(e, f);
        rel[1].push_back(S(e) + " " + S(f) + " = " + S(f2) + " " + S(e2));
      }
  for (Index v = 0; v < V.size(); ++v) rel[2].push_back(P(v) + " = S_" + g.path_name({}, v));
  for (Index e = 0; e < E.size(); ++e) {
    rel[3].push_back(S(e) + "* " + S(e) + " = " + P(g.source(e)));
    for (Index f = 0; f < E.size(); ++f)
      if (f != e && g.color(f) == g.color(e)) rel[4].push_back(S(f) + "* " + S(e) + " = 0");
  }
  for (Index v = 0; v < V.size(); ++v)
    for (std::size_t c = 0; c < g.rank(); ++c) {
      std::vector<std::string> terms;
      for (Index e = 0; e < E.size(); ++e)
        if (g.color(e) == c && g.range(e) == v) terms.push_back(S(e) + " " + S(e) + "*");
      std::sort(terms.begin(), terms.end());
      if (terms.empty()) {
        rel[5].push_back(P(v) + " = 0");
        continue;
      }
      std::string lhs;
      for (std::size_t k = 0; k < terms.size(); ++k) lhs += (k ? " + " : "") + terms[k];
      rel[5].push_back(lhs + " = " + P(v));
    }
  out.canonicalize();
  return out;
}

}  // namespace grpd
