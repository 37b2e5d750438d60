#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grpd/groupoid.hpp"

namespace grpd {

struct MorphismDecl {
  std::string id;
  std::string src;
  std::string dst;
};

// comp entries {f, g, f∘g} with src(f) == dst(g). A truncated category may
// leave composites undefined as long as the defined part is closed under
// factorization.
struct CategorySpec {
  std::vector<std::string> objects;
  std::vector<MorphismDecl> morphisms;
  std::map<std::string, std::string> identity;
  std::vector<Triple> comp;
  bool truncated = false;
};

class FiniteCategory {
 public:
  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return morphisms_.size(); }
  const std::string& object_name(Index x) const { return objects_[x]; }
  const std::string& morphism_name(Index f) const { return morphisms_[f]; }
  const std::vector<std::string>& object_names() const { return objects_; }
  const std::vector<std::string>& morphism_names() const { return morphisms_; }
  std::optional<Index> find_object(std::string_view id) const;
  std::optional<Index> find_morphism(std::string_view id) const;
  Index object(std::string_view id) const;
  Index morphism(std::string_view id) const;

  bool truncated() const { return truncated_; }
  Index src(Index f) const { return src_[f]; }
  Index dst(Index f) const { return dst_[f]; }
  Index identity(Index x) const { return identity_[x]; }
  bool is_identity(Index f) const { return identity_[src_[f]] == f; }
  // f∘g, or kNone when not composable or truncated away.
  Index comp(Index f, Index g) const { return comp_[f * morphisms_.size() + g]; }
  // Pairs (f, g) with f∘g == h.
  const std::vector<std::pair<Index, Index>>& factorizations(Index h) const { return factorizations_[h]; }

  CategorySpec to_spec() const;
  friend bool operator==(const FiniteCategory& a, const FiniteCategory& b);

 private:
  friend class CategoryBuilder;
  std::vector<std::string> objects_, morphisms_;
  std::vector<Index> src_, dst_, identity_, comp_;
  std::vector<std::vector<std::pair<Index, Index>>> factorizations_;
  bool truncated_ = false;
};

using CategoryRef = std::shared_ptr<const FiniteCategory>;

// Laws: "table", "domain", "identity", "endpoints", "associativity",
// "factor-closure".
CategoryRef validate_category(const CategorySpec& spec);

// N^k restricted to degrees <= box componentwise, one object "o". Morphisms
// are named by degree, e.g. "[1,0]".
CategoryRef truncated_monoid_category(const std::vector<int>& box);
std::string degree_name(const std::vector<int>& degree);

struct FunctorSpec {
  CategoryRef total;
  CategoryRef base;
  std::map<std::string, std::string> on_objects;
  std::map<std::string, std::string> on_morphisms;
};

class Functor;
using FunctorRef = std::shared_ptr<const Functor>;

class Functor {
 public:
  const CategoryRef& total() const { return total_; }
  const CategoryRef& base() const { return base_; }
  Index object_image(Index x) const { return objects_[x]; }
  Index morphism_image(Index f) const { return morphisms_[f]; }
  FunctorSpec to_spec() const;
  friend bool operator==(const Functor& a, const Functor& b);

 private:
  friend FunctorRef validate_functor(const FunctorSpec& spec);
  CategoryRef total_, base_;
  std::vector<Index> objects_, morphisms_;
};

// Throws NotAFunctor with law "table", "endpoints", "identity" or "composition".
FunctorRef validate_functor(const FunctorSpec& spec);

// Checks that the given id maps are mutually inverse bijections between the
// total categories that commute with composition and the projections.
bool is_isomorphism(const Functor& a, const Functor& b, const std::map<std::string, std::string>& objects,
                    const std::map<std::string, std::string>& morphisms);

struct ConducheReport {
  bool ok = true;
  // First failure: a morphism, a factorization (first, then second) of its
  // image and the number of lifts found.
  std::string morphism, first, second;
  std::size_t lifts = 0;
};

ConducheReport check_conduche(const Functor& f);
void require_conduche(const Functor& f);  // throws NotConduche

struct RowCount {
  Index object;         // in the total category
  Index base_morphism;  // ending at the image of object
  std::size_t count;    // morphisms ending at object over base_morphism
};

struct RowFinitenessReport {
  bool row_finite = true;
  std::vector<RowCount> counts;
};

RowFinitenessReport is_row_finite(const Functor& f);

// Generators and relations grouped by family (1)-(6), each family sorted.
struct Presentation {
  std::vector<std::string> generators;
  std::array<std::vector<std::string>, 6> relations;

  void canonicalize();
  std::string text() const;
};

// Instantiates the six relation families over the (finite, possibly
// truncated) total category. S of an identity is rewritten to P and
// instances that only restate that the P_X are projections are dropped.
Presentation cuntz_pimsner_presentation(const Functor& f);

}  // namespace grpd
