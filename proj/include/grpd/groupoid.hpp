#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grpd {

using Index = std::size_t;
inline constexpr Index kNone = static_cast<Index>(-1);

using Triple = std::array<std::string, 3>;

struct ArrowDecl {
  std::string id;
  std::string src;
  std::string dst;
};

// Raw description of a groupoid as read from a file; ids are resolved and all
// laws checked by validate_groupoid.
struct GroupoidSpec {
  std::vector<std::string> objects;
  std::vector<ArrowDecl> arrows;
  std::map<std::string, std::string> unit;
  std::map<std::string, std::string> inv;
  std::vector<Triple> comp;  // {g, h, g·h}, defined iff src(g) == dst(h)
};

// Immutable finite groupoid. Objects and arrows are stored in lexicographic
// id order; indices follow that order.
class FiniteGroupoid {
 public:
  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }

  const std::string& object_name(Index x) const { return objects_[x]; }
  const std::string& arrow_name(Index g) const { return arrows_[g]; }
  const std::vector<std::string>& object_names() const { return objects_; }
  const std::vector<std::string>& arrow_names() const { return arrows_; }

  std::optional<Index> find_object(std::string_view id) const;
  std::optional<Index> find_arrow(std::string_view id) const;
  Index object(std::string_view id) const;  // throws InputError when unknown
  Index arrow(std::string_view id) const;

  Index src(Index g) const { return src_[g]; }
  Index dst(Index g) const { return dst_[g]; }
  Index unit(Index x) const { return unit_[x]; }
  Index inv(Index g) const { return inv_[g]; }
  bool is_unit(Index g) const { return unit_[src_[g]] == g; }
  bool composable(Index g, Index h) const { return src_[g] == dst_[h]; }
  // g·h, or kNone when src(g) != dst(h).
  Index comp(Index g, Index h) const { return comp_[g * arrows_.size() + h]; }

  const std::vector<Index>& arrows_from(Index x) const { return from_[x]; }  // src == x
  const std::vector<Index>& arrows_to(Index x) const { return to_[x]; }      // dst == x

  GroupoidSpec to_spec() const;

  friend bool operator==(const FiniteGroupoid& a, const FiniteGroupoid& b);

 private:
  friend class GroupoidBuilder;
  std::vector<std::string> objects_;
  std::vector<std::string> arrows_;
  std::vector<Index> src_, dst_, unit_, inv_, comp_;
  std::vector<std::vector<Index>> from_, to_;
};

using GroupoidRef = std::shared_ptr<const FiniteGroupoid>;

bool same_groupoid(const GroupoidRef& a, const GroupoidRef& b);

// Checks every law and returns the canonical groupoid. Failures throw
// Error(AxiomViolation, law, witness) with law one of
// "table", "domain", "inverse", "unit-law", "endpoints", "associativity".
GroupoidRef validate_groupoid(const GroupoidSpec& spec);

struct GroupTable {
  std::vector<std::string> elements;
  std::vector<Triple> products;  // {a, b, a·b}
};

// Single-object groupoid with object "o". Laws: "table", "identity",
// "inverse", "associativity".
GroupoidRef group_as_groupoid(const GroupTable& table);
GroupoidRef space_as_groupoid(const std::vector<std::string>& points);
// Arrows "(i,j)" with src j and dst i, so (i,j)·(j,k) = (i,k).
GroupoidRef pair_groupoid(const std::vector<std::string>& points);

// Arrows "(g,v)" with src v and dst g·v. `action` maps {g, v} to g·v for
// every arrow g of the single-object groupoid `group`.
using PairMap = std::map<std::pair<std::string, std::string>, std::string>;
GroupoidRef transformation_groupoid(const GroupoidRef& group, const std::vector<std::string>& points,
                                    const PairMap& action);

// A set of arrows of a fixed groupoid, kept sorted.
struct ArrowSet {
  GroupoidRef groupoid;
  std::vector<Index> members;

  static ArrowSet of(GroupoidRef g, std::vector<Index> members);
  static ArrowSet named(GroupoidRef g, const std::vector<std::string>& ids);
  bool contains(Index g) const;
  friend bool operator==(const ArrowSet& a, const ArrowSet& b) { return a.members == b.members; }
};

bool is_slice(const ArrowSet& s);
ArrowSet units_of(const GroupoidRef& g);
ArrowSet slice_product(const ArrowSet& v, const ArrowSet& w);  // {vw : composable}
ArrowSet slice_inverse(const ArrowSet& v);

}  // namespace grpd
