#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grpd/category.hpp"
#include "grpd/diagram.hpp"

namespace grpd {

struct EdgeDecl {
  std::string id;
  std::string range;
  std::string source;
};

using EdgePath = std::pair<std::string, std::string>;  // {left, right}: left∘right

// Self-similar group data on the skeleton; edge actions must preserve colors.
struct KGraphGroupBlock {
  GroupoidRef group;
  PairMap vertex_action;  // {g, v} -> g·v
  PairMap edge_action;    // {g, e} -> g·e
  PairMap restriction;    // {g, e} -> g|e
};

struct KGraphSpec {
  std::vector<std::string> vertices;
  std::vector<std::vector<EdgeDecl>> colors;
  // {{b, c}, {c', b'}} meaning b∘c = c'∘b' with colors of b, b' equal.
  std::vector<std::pair<EdgePath, EdgePath>> factorizations;
  std::optional<KGraphGroupBlock> group;
};

// Paths are kept in normal form: edges left (range end) to right with
// non-decreasing colors.
using Path = std::vector<Index>;

class KGraph {
 public:
  std::size_t rank() const { return rank_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::string>& edges() const { return edges_; }
  std::size_t color(Index e) const { return color_[e]; }
  Index range(Index e) const { return range_[e]; }
  Index source(Index e) const { return source_[e]; }
  Index edge(std::string_view id) const;

  // The unique (f', e') of swapped colors with e∘f = f'∘e'.
  std::pair<Index, Index> swap(Index e, Index f) const;
  Path normalize(Path p) const;
  std::vector<int> degree(const Path& p) const;
  std::vector<Path> paths_of_degree(const std::vector<int>& degree) const;
  std::string path_name(const Path& p, Index vertex) const;  // "1_v" for the empty path at v

  bool has_group() const { return group_ != nullptr; }
  const GroupoidRef& group() const { return group_; }
  Index act_vertex(Index g, Index v) const { return vertex_act_[g * vertices_.size() + v]; }
  // Letterwise action on a normal-form path; returns {g·p, g|p}.
  std::pair<Path, Index> act_path(Index g, const Path& p) const;

 private:
  friend KGraph validate_kgraph(const KGraphSpec& spec);
  std::size_t rank_ = 0;
  std::vector<std::string> vertices_, edges_;
  std::vector<std::size_t> color_;
  std::vector<Index> range_, source_;
  std::vector<std::vector<Index>> by_color_;
  std::map<std::pair<Index, Index>, std::pair<Index, Index>> swap_;
  GroupoidRef group_;
  PairMap vertex_action_;
  std::vector<Index> vertex_act_, edge_act_, restriction_;
  friend Diagram kgraph_diagram(const KGraph& g, const std::vector<int>& box);
};

// Throws FactorizationNotBijective, HexagonViolation (rank >= 3) or, with a
// group block, NotAnAction / CocycleViolation / CompatibilityViolation.
KGraph validate_kgraph(const KGraphSpec& spec);

// Path category truncated at `box` over the truncated N^k, with the degree
// functor.
FunctorRef kgraph_path_category(const KGraph& g, const std::vector<int>& box);

// Product-system diagram over the truncated N^k. With a group block the node is
// the transformation groupoid and X_n is the self-similar graph
// correspondence on paths of degree n.
Diagram kgraph_diagram(const KGraph& g, const std::vector<int>& box);

// Relations on vertices and edges only; family (2) lists the commuting squares.
Presentation kgraph_presentation(const KGraph& g);

}  // namespace grpd
