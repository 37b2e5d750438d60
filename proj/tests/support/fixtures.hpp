#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "grpd/correspondence.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/io.hpp"
#include "grpd/kgraph.hpp"
#include "grpd/self_similar.hpp"

namespace fixtures {

using namespace grpd;

inline std::filesystem::path corpus(const std::string& name = "") { return std::filesystem::path(GRPD_CORPUS_DIR) / name; }
inline std::filesystem::path data(const std::string& name = "") { return std::filesystem::path(GRPD_TEST_DATA_DIR) / name; }
inline std::filesystem::path golden(const std::string& name) { return std::filesystem::path(GRPD_GOLDEN_DIR) / name; }

inline GroupTable cyclic_table(const std::vector<std::string>& names) {
  GroupTable t{names, {}};
  const std::size_t n = names.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t.products.push_back({names[i], names[j], names[(i + j) % n]});
  return t;
}

inline GroupoidRef pt() {
  GroupoidSpec s;
  s.objects = {"⋆"};
  s.arrows = {{"1_⋆", "⋆", "⋆"}};
  s.unit = {{"⋆", "1_⋆"}};
  s.inv = {{"1_⋆", "1_⋆"}};
  s.comp = {{"1_⋆", "1_⋆", "1_⋆"}};
  return validate_groupoid(s);
}

inline GroupoidRef z2() { return group_as_groupoid(cyclic_table({"e", "a"})); }
inline GroupoidRef z3() { return group_as_groupoid(cyclic_table({"e", "b", "c"})); }
inline GroupoidRef pair(int n) {
  std::vector<std::string> pts;
  for (int i = 1; i <= n; ++i) pts.push_back(std::to_string(i));
  return pair_groupoid(pts);
}

// PAIR2 and Z2 side by side: objects 1, 2, o.
inline GroupoidRef mixed6() {
  GroupoidSpec a = pair(2)->to_spec();
  GroupoidSpec b = z2()->to_spec();
  a.objects.insert(a.objects.end(), b.objects.begin(), b.objects.end());
  a.arrows.insert(a.arrows.end(), b.arrows.begin(), b.arrows.end());
  a.unit.insert(b.unit.begin(), b.unit.end());
  a.inv.insert(b.inv.begin(), b.inv.end());
  a.comp.insert(a.comp.end(), b.comp.begin(), b.comp.end());
  return validate_groupoid(a);
}

// Edges as loops at the single object of PT.
inline CorrRef loops(const std::vector<std::string>& edges) {
  GroupoidRef p = pt();
  CorrespondenceSpec s{p, p, edges, {}, {}, {}, {}};
  for (const auto& e : edges) {
    s.r[e] = "⋆";
    s.s[e] = "⋆";
    s.lact.push_back({"1_⋆", e, e});
    s.ract.push_back({"1_⋆", e, e});
  }
  return validate_correspondence(s);
}

inline CorrRef o2x() { return loops({"e1", "e2"}); }

inline PairMap z2_swap_pi() {
  return {{{"e", "0"}, "0"}, {{"e", "1"}, "1"}, {{"a", "0"}, "1"}, {{"a", "1"}, "0"}};
}
inline PairMap trivial_phi(const GroupoidRef& g, const std::vector<std::string>& alphabet) {
  PairMap phi;
  for (const auto& h : g->arrow_names())
    for (const auto& x : alphabet) phi[{h, x}] = g->arrow_name(g->unit(0));
  return phi;
}

inline SelfSimilarAction adding_machine() {
  AutomatonSpec s;
  s.alphabet = {"0", "1"};
  s.generators = {"a"};
  s.perm = {{"a", {{"0", "1"}, {"1", "0"}}}};
  s.restrict = {{"a", {{"0", {}}, {"1", {"a"}}}}};
  return SelfSimilarAction::automaton(s);
}

inline SelfSimilarAction z2_swap() {
  GroupoidRef g = z2();
  return SelfSimilarAction::finite({g, {"0", "1"}, z2_swap_pi(), trivial_phi(g, {"0", "1"})});
}

// Points "(x,g)" for x a letter and g in Z2.
inline CorrRef z2_swap_corr() {
  GroupoidRef g = z2();
  return self_similar_group_correspondence(g, {"0", "1"}, z2_swap_pi(), trivial_phi(g, {"0", "1"}));
}

// One vertex, blue loops b1, b2, red loop c1 and b_i c1 = c1 b_theta(i).
inline KGraphSpec kg21(bool swap) {
  KGraphSpec s;
  s.vertices = {"v"};
  s.colors = {{{"b1", "v", "v"}, {"b2", "v", "v"}}, {{"c1", "v", "v"}}};
  s.factorizations = {{{"b1", "c1"}, {"c1", swap ? "b2" : "b1"}}, {{"b2", "c1"}, {"c1", swap ? "b1" : "b2"}}};
  return s;
}

inline KGraphSpec o2x_graph() {
  KGraphSpec s;
  s.vertices = {"⋆"};
  s.colors = {{{"e1", "⋆", "⋆"}, {"e2", "⋆", "⋆"}}};
  return s;
}

// Every correspondence in the corpus directory.
inline std::vector<std::pair<std::string, CorrRef>> corpus_correspondences() {
  std::vector<std::pair<std::string, CorrRef>> out;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(corpus()))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files)
    if (io::detect_kind(io::load_json(f)) == io::FileKind::kCorrespondence)
      out.emplace_back(f.stem().string(), io::load_correspondence(f));
  return out;
}

}  // namespace fixtures
