#pragma once

#include <memory>
#include <string>
#include <vector>

#include "grpd/groupoid.hpp"

namespace grpd {

// Raw correspondence data: a left H-space and right G-space on `carrier`.
// Action entries are {actor, point, result}: h·x for lact, x·g for ract.
struct CorrespondenceSpec {
  GroupoidRef left;
  GroupoidRef right;
  std::vector<std::string> carrier;
  std::map<std::string, std::string> r;
  std::map<std::string, std::string> s;
  std::vector<Triple> lact;
  std::vector<Triple> ract;
};

// Index-level form used by constructions. lact is |H| x |X| (h, x) -> h·x and
// ract is |X| x |G| (x, g) -> x·g, kNone where undefined. Names need not be
// sorted; validation reorders them.
struct CorrespondenceTables {
  GroupoidRef left;
  GroupoidRef right;
  std::vector<std::string> carrier;
  std::vector<Index> r, s;
  std::vector<Index> lact, ract;
};

class Correspondence {
 public:
  const GroupoidRef& left() const { return left_; }
  const GroupoidRef& right() const { return right_; }

  std::size_t size() const { return points_.size(); }
  const std::string& point_name(Index x) const { return points_[x]; }
  const std::vector<std::string>& point_names() const { return points_; }
  std::optional<Index> find_point(std::string_view id) const;
  Index point(std::string_view id) const;  // throws InputError when unknown

  Index r(Index x) const { return r_[x]; }
  Index s(Index x) const { return s_[x]; }
  // h·x, or kNone unless s(h) == r(x).
  Index act_left(Index h, Index x) const { return lact_[h * points_.size() + x]; }
  // x·g, or kNone unless s(x) == r(g).
  Index act_right(Index x, Index g) const { return ract_[x * right_->num_arrows() + g]; }

  CorrespondenceSpec to_spec() const;

  friend bool operator==(const Correspondence& a, const Correspondence& b);

 private:
  friend class CorrespondenceBuilder;
  GroupoidRef left_, right_;
  std::vector<std::string> points_;
  std::vector<Index> r_, s_, lact_, ract_;
};

using CorrRef = std::shared_ptr<const Correspondence>;

// Failures throw AxiomViolation with law one of "table", "domain", "anchor",
// "unit", "action", "commute", "not-free" (witness {x, g}).
CorrRef validate_correspondence(const CorrespondenceSpec& spec);
CorrRef validate_correspondence(CorrespondenceTables tables);

// The correspondence G <- G given by G acting on itself.
CorrRef identity_correspondence(const GroupoidRef& g);

struct OrbitDecomposition {
  // Classes in order of their least point; each class sorted.
  std::vector<std::vector<Index>> classes;
  std::vector<Index> class_of;

  std::size_t size() const { return classes.size(); }
  Index representative(Index c) const { return classes[c].front(); }
};

OrbitDecomposition orbits(const Correspondence& x);

// The unique g with x1·g = x2; throws NotSameOrbit otherwise.
Index bracket(const Correspondence& x, Index x1, Index x2);

struct Classification {
  bool proper = true;
  bool tight = false;
};

Classification classify(const Correspondence& x);

// Carrier A x G with h·(a,g) = (pi_h(a), phi(h,a)·g) and right
// multiplication. pi and phi are keyed by {h, a}.
CorrRef self_similar_group_correspondence(const GroupoidRef& group, const std::vector<std::string>& alphabet,
                                          const PairMap& pi, const PairMap& phi);

struct SelfSimilarGraphData {
  GroupoidRef group;
  std::vector<std::string> vertices;
  PairMap vertex_action;  // {g, v} -> g·v
  std::vector<std::string> edges;
  std::map<std::string, std::string> edge_range, edge_source;
  PairMap edge_action;  // {g, e} -> g·e
  PairMap restriction;  // {g, e} -> g|e
};

// Correspondence over the transformation groupoid of the vertex action with
// carrier E x Gamma, r(e,g) = r(e), s(e,g) = g^-1·s(e).
CorrRef self_similar_graph_correspondence(const SelfSimilarGraphData& data);

// phi^psi(h, x) = psi(pi_h x)^-1 phi(h, x) psi(x). psi maps letters to arrows.
PairMap cocycle_gauge(const GroupoidRef& group, const std::vector<std::string>& alphabet, const PairMap& pi,
                      const PairMap& phi, const std::map<std::string, std::string>& psi);

// Throws NotAnAction / CocycleViolation(h1, h2, x).
void check_self_similar(const GroupoidRef& group, const std::vector<std::string>& alphabet, const PairMap& pi,
                        const PairMap& phi);

}  // namespace grpd
