#include "grpd/category.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

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

[[noreturn]] void not_functor(std::string law, std::vector<std::string> witness) {
  fail(ErrorKind::kNotAFunctor, std::move(law), std::move(witness));
}

std::vector<std::string> sorted_unique(std::vector<std::string> ids, const char* what) {
  std::sort(ids.begin(), ids.end());
  auto dup = std::adjacent_find(ids.begin(), ids.end());
  if (dup != ids.end()) axiom("table", {std::string("duplicate ") + what + " " + *dup});
  return ids;
}

}  // namespace

class CategoryBuilder {
 public:
  static CategoryRef build(const CategorySpec& spec);
};

std::optional<Index> FiniteCategory::find_object(std::string_view id) const { return lookup(objects_, id); }
std::optional<Index> FiniteCategory::find_morphism(std::string_view id) const { return lookup(morphisms_, id); }

Index FiniteCategory::object(std::string_view id) const {
  if (auto x = find_object(id)) return *x;
  input_error("unknown object '" + std::string(id) + "'");
}

Index FiniteCategory::morphism(std::string_view id) const {
  if (auto f = find_morphism(id)) return *f;
  input_error("unknown morphism '" + std::string(id) + "'");
}

CategorySpec FiniteCategory::to_spec() const {
  CategorySpec spec;
  spec.objects = objects_;
  spec.truncated = truncated_;
  for (Index f = 0; f < morphisms_.size(); ++f)
    spec.morphisms.push_back({morphisms_[f], objects_[src_[f]], objects_[dst_[f]]});
  for (Index x = 0; x < objects_.size(); ++x) spec.identity[objects_[x]] = morphisms_[identity_[x]];
  for (Index f = 0; f < morphisms_.size(); ++f)
    for (Index g = 0; g < morphisms_.size(); ++g)
      if (Index h = comp(f, g); h != kNone) spec.comp.push_back({morphisms_[f], morphisms_[g], morphisms_[h]});
  return spec;
}

bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
  return a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_ && a.src_ == b.src_ && a.dst_ == b.dst_ &&
         a.identity_ == b.identity_ && a.comp_ == b.comp_ && a.truncated_ == b.truncated_;
}

CategoryRef CategoryBuilder::build(const CategorySpec& spec) {
  auto out = std::make_shared<FiniteCategory>();
  FiniteCategory& C = *out;
  C.truncated_ = spec.truncated;
  C.objects_ = sorted_unique(spec.objects, "object");
  std::vector<std::string> ids;
  for (const auto& m : spec.morphisms) ids.push_back(m.id);
  C.morphisms_ = sorted_unique(std::move(ids), "morphism");
  const std::size_t n = C.morphisms_.size();
  auto obj = [&](const std::string& id) {
    if (auto x = C.find_object(id)) return *x;
    axiom("table", {"unknown object " + id});
  };
  auto mor = [&](const std::string& id) {
    if (auto f = C.find_morphism(id)) return *f;
    axiom("table", {"unknown morphism " + id});
  };
  C.src_.assign(n, kNone);
  C.dst_.assign(n, kNone);
  for (const auto& m : spec.morphisms) {
    C.src_[mor(m.id)] = obj(m.src);
    C.dst_[mor(m.id)] = obj(m.dst);
  }
  C.identity_.assign(C.objects_.size(), kNone);
  for (const auto& [x, f] : spec.identity) C.identity_[obj(x)] = mor(f);
  for (Index x = 0; x < C.objects_.size(); ++x)
    if (C.identity_[x] == kNone) axiom("table", {"missing identity for " + C.objects_[x]});
  C.comp_.assign(n * n, kNone);
  for (const auto& [f, g, fg] : spec.comp) {
    Index a = mor(f), b = mor(g);
    if (C.comp_[a * n + b] != kNone) axiom("table", {"duplicate comp", f, g});
    if (C.src_[a] != C.dst_[b]) axiom("domain", {f, g});
    C.comp_[a * n + b] = mor(fg);
  }
  const auto& M = C.morphisms_;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (!C.truncated_ && C.src_[a] == C.dst_[b] && C.comp(a, b) == kNone) axiom("domain", {M[a], M[b]});

  for (Index x = 0; x < C.objects_.size(); ++x) {
    Index u = C.identity_[x];
    if (C.src_[u] != x || C.dst_[u] != x) axiom("identity", {C.objects_[x], M[u]});
  }
  for (Index f = 0; f < n; ++f) {
    if (C.comp(C.identity_[C.dst_[f]], f) != f) axiom("identity", {M[C.identity_[C.dst_[f]]], M[f]});
    if (C.comp(f, C.identity_[C.src_[f]]) != f) axiom("identity", {M[f], M[C.identity_[C.src_[f]]]});
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (Index c = C.comp(a, b); c != kNone && (C.src_[c] != C.src_[b] || C.dst_[c] != C.dst_[a]))
        axiom("endpoints", {M[a], M[b]});
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      Index ab = C.comp(a, b);
      for (Index c = 0; c < n; ++c) {
        if (C.src_[b] != C.dst_[c]) continue;
        Index bc = C.comp(b, c);
        Index left = ab == kNone ? kNone : C.comp(ab, c);
        Index right = bc == kNone ? kNone : C.comp(a, bc);
        if (left != kNone && right != kNone && left != right) axiom("associativity", {M[a], M[b], M[c]});
        // In a truncation a triple composite is defined both ways or neither.
        if ((left == kNone) != (right == kNone)) axiom("factor-closure", {M[a], M[b], M[c]});
      }
    }
  C.factorizations_.assign(n, {});
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (Index c = C.comp(a, b); c != kNone) C.factorizations_[c].emplace_back(a, b);
  return out;
}

CategoryRef validate_category(const CategorySpec& spec) { return CategoryBuilder::build(spec); }

std::string degree_name(const std::vector<int>& degree) {
  std::string out = "[";
  for (std::size_t i = 0; i < degree.size(); ++i) out += (i ? "," : "") + std::to_string(degree[i]);
  return out + "]";
}

CategoryRef truncated_monoid_category(const std::vector<int>& box) {
  if (box.empty()) input_error("degree box needs at least one color");
  std::vector<std::vector<int>> degrees{{}};
  for (int bound : box) {
    if (bound < 0) input_error("negative degree bound");
    std::vector<std::vector<int>> next;
    for (const auto& d : degrees)
      for (int k = 0; k <= bound; ++k) {
        next.push_back(d);
        next.back().push_back(k);
      }
    degrees = std::move(next);
  }
  CategorySpec spec;
  spec.objects = {"o"};
  spec.truncated = true;
  spec.identity["o"] = degree_name(std::vector<int>(box.size(), 0));
  for (const auto& d : degrees) spec.morphisms.push_back({degree_name(d), "o", "o"});
  for (const auto& a : degrees)
    for (const auto& b : degrees) {
      std::vector<int> sum(box.size());
      bool inside = true;
      for (std::size_t i = 0; i < box.size(); ++i) {
        sum[i] = a[i] + b[i];
        inside = inside && sum[i] <= box[i];
      }
      if (inside) spec.comp.push_back({degree_name(a), degree_name(b), degree_name(sum)});
    }
  return validate_category(spec);
}

FunctorSpec Functor::to_spec() const {
  FunctorSpec spec{total_, base_, {}, {}};
  for (Index x = 0; x < total_->num_objects(); ++x)
    spec.on_objects[total_->object_name(x)] = base_->object_name(objects_[x]);
  for (Index f = 0; f < total_->num_morphisms(); ++f)
    spec.on_morphisms[total_->morphism_name(f)] = base_->morphism_name(morphisms_[f]);
  return spec;
}

bool operator==(const Functor& a, const Functor& b) {
  return *a.total_ == *b.total_ && *a.base_ == *b.base_ && a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_;
}

FunctorRef validate_functor(const FunctorSpec& spec) {
  if (!spec.total || !spec.base) input_error("functor needs total and base categories");
  const FiniteCategory& E = *spec.total;
  const FiniteCategory& C = *spec.base;
  auto out = std::make_shared<Functor>();
  out->total_ = spec.total;
  out->base_ = spec.base;
  out->objects_.assign(E.num_objects(), kNone);
  out->morphisms_.assign(E.num_morphisms(), kNone);
  for (const auto& [x, y] : spec.on_objects) {
    auto a = E.find_object(x);
    auto b = C.find_object(y);
    if (!a || !b) not_functor("table", {x, y});
    out->objects_[*a] = *b;
  }
  for (const auto& [f, g] : spec.on_morphisms) {
    auto a = E.find_morphism(f);
    auto b = C.find_morphism(g);
    if (!a || !b) not_functor("table", {f, g});
    out->morphisms_[*a] = *b;
  }
  for (Index x = 0; x < E.num_objects(); ++x)
    if (out->objects_[x] == kNone) not_functor("table", {E.object_name(x)});
  for (Index f = 0; f < E.num_morphisms(); ++f)
    if (out->morphisms_[f] == kNone) not_functor("table", {E.morphism_name(f)});
  const Functor& F = *out;
  for (Index f = 0; f < E.num_morphisms(); ++f) {
    Index g = F.morphism_image(f);
    if (C.src(g) != F.object_image(E.src(f)) || C.dst(g) != F.object_image(E.dst(f)))
      not_functor("endpoints", {E.morphism_name(f)});
  }
  for (Index x = 0; x < E.num_objects(); ++x)
    if (F.morphism_image(E.identity(x)) != C.identity(F.object_image(x))) not_functor("identity", {E.object_name(x)});
  for (Index a = 0; a < E.num_morphisms(); ++a)
    for (Index b = 0; b < E.num_morphisms(); ++b) {
      Index ab = E.comp(a, b);
      if (ab == kNone) continue;
      if (C.comp(F.morphism_image(a), F.morphism_image(b)) != F.morphism_image(ab))
        not_functor("composition", {E.morphism_name(a), E.morphism_name(b)});
    }
  return out;
}

bool is_isomorphism(const Functor& a, const Functor& b, const std::map<std::string, std::string>& objects,
                    const std::map<std::string, std::string>& morphisms) {
  const FiniteCategory& E1 = *a.total();
  const FiniteCategory& E2 = *b.total();
  if (!(*a.base() == *b.base())) return false;
  if (E1.num_objects() != E2.num_objects() || E1.num_morphisms() != E2.num_morphisms()) return false;
  std::vector<Index> ob(E1.num_objects(), kNone), mo(E1.num_morphisms(), kNone);
  for (const auto& [x, y] : objects) {
    auto i = E1.find_object(x);
    auto j = E2.find_object(y);
    if (!i || !j) return false;
    ob[*i] = *j;
  }
  for (const auto& [f, g] : morphisms) {
    auto i = E1.find_morphism(f);
    auto j = E2.find_morphism(g);
    if (!i || !j) return false;
    mo[*i] = *j;
  }
  auto bijective = [](std::vector<Index> v) {
    if (std::count(v.begin(), v.end(), kNone)) return false;
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (!bijective(ob) || !bijective(mo)) return false;
  for (Index x = 0; x < E1.num_objects(); ++x)
    if (a.object_image(x) != b.object_image(ob[x]) || mo[E1.identity(x)] != E2.identity(ob[x])) return false;
  for (Index f = 0; f < E1.num_morphisms(); ++f) {
    if (a.morphism_image(f) != b.morphism_image(mo[f])) return false;
    if (ob[E1.src(f)] != E2.src(mo[f]) || ob[E1.dst(f)] != E2.dst(mo[f])) return false;
    for (Index g = 0; g < E1.num_morphisms(); ++g) {
      Index fg = E1.comp(f, g);
      Index image = E2.comp(mo[f], mo[g]);
      if ((fg == kNone) != (image == kNone)) return false;
      if (fg != kNone && mo[fg] != image) return false;
    }
  }
  return true;
}

ConducheReport check_conduche(const Functor& F) {
  const FiniteCategory& E = *F.total();
  const FiniteCategory& C = *F.base();
  ConducheReport report;
  for (Index phi = 0; phi < E.num_morphisms(); ++phi) {
    std::map<std::pair<Index, Index>, std::size_t> lifts;
    for (auto [second, first] : E.factorizations(phi)) ++lifts[{F.morphism_image(first), F.morphism_image(second)}];
    for (auto [rho, lambda] : C.factorizations(F.morphism_image(phi))) {
      auto it = lifts.find({lambda, rho});
      std::size_t count = it == lifts.end() ? 0 : it->second;
      if (count != 1) {
        report.ok = false;
        report.morphism = E.morphism_name(phi);
        report.first = C.morphism_name(lambda);
        report.second = C.morphism_name(rho);
        report.lifts = count;
        return report;
      }
    }
  }
  return report;
}

void require_conduche(const Functor& f) {
  ConducheReport r = check_conduche(f);
  if (!r.ok) fail(ErrorKind::kNotConduche, "unique-factorization", {r.morphism, r.first, r.second, std::to_string(r.lifts)});
}

RowFinitenessReport is_row_finite(const Functor& F) {
  const FiniteCategory& E = *F.total();
  const FiniteCategory& C = *F.base();
  RowFinitenessReport report;
  for (Index x = 0; x < E.num_objects(); ++x)
    for (Index beta = 0; beta < C.num_morphisms(); ++beta) {
      if (C.dst(beta) != F.object_image(x)) continue;
      std::size_t count = 0;
      for (Index f = 0; f < E.num_morphisms(); ++f)
        if (E.dst(f) == x && F.morphism_image(f) == beta) ++count;
      report.counts.push_back({x, beta, count});
    }
  return report;
}

void Presentation::canonicalize() {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (auto& family : relations) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
  }
}

std::string Presentation::text() const {
  std::ostringstream os;
  os << "GENERATORS\n";
  for (const auto& g : generators) os << g << "\n";
  for (std::size_t k = 0; k < relations.size(); ++k) {
    os << "RELATIONS(" << k + 1 << ")\n";
    for (const auto& r : relations[k]) os << r << "\n";
  }
  return os.str();
}

Presentation cuntz_pimsner_presentation(const Functor& F) {
  require_conduche(F);
  const FiniteCategory& E = *F.total();
  const FiniteCategory& C = *F.base();
  auto P = [&](Index x) { return "P_" + E.object_name(x); };
  auto S = [&](Index f) { return E.is_identity(f) ? P(E.src(f)) : "S_" + E.morphism_name(f); };

  Presentation out;
  for (Index x = 0; x < E.num_objects(); ++x) out.generators.push_back(P(x));
  for (Index f = 0; f < E.num_morphisms(); ++f)
    if (!E.is_identity(f)) out.generators.push_back(S(f));

  auto& rel = out.relations;
  for (Index x = 0; x < E.num_objects(); ++x)
    for (Index y = x + 1; y < E.num_objects(); ++y) rel[0].push_back(P(x) + " " + P(y) + " = 0");
  for (Index a = 0; a < E.num_morphisms(); ++a)
    for (Index b = 0; b < E.num_morphisms(); ++b) {
      Index ab = E.comp(a, b);
      if (ab == kNone || E.is_identity(a) || E.is_identity(b)) continue;
      rel[1].push_back(S(ab) + " = " + S(a) + " " + S(b));
    }
  for (Index x = 0; x < E.num_objects(); ++x) rel[2].push_back(P(x) + " = S_" + E.morphism_name(E.identity(x)));
  for (Index a = 0; a < E.num_morphisms(); ++a) {
    if (E.is_identity(a)) continue;
    rel[3].push_back(S(a) + "* " + S(a) + " = " + P(E.src(a)));
    for (Index b = 0; b < E.num_morphisms(); ++b)
      if (b != a && !E.is_identity(b) && F.morphism_image(a) == F.morphism_image(b))
        rel[4].push_back(S(b) + "* " + S(a) + " = 0");
  }
  for (Index x = 0; x < E.num_objects(); ++x)
    for (Index g = 0; g < C.num_morphisms(); ++g) {
      if (C.is_identity(g) || C.dst(g) != F.object_image(x)) continue;
      std::vector<std::string> terms;
      for (Index a = 0; a < E.num_morphisms(); ++a)
        if (E.dst(a) == x && F.morphism_image(a) == g) terms.push_back(S(a) + " " + S(a) + "*");
      std::sort(terms.begin(), terms.end());
      if (terms.empty()) {
        rel[5].push_back(P(x) + " = 0");
        continue;
      }
      std::string lhs;
      for (std::size_t k = 0; k < terms.size(); ++k) lhs += (k ? " + " : "") + terms[k];
      rel[5].push_back(lhs + " = " + P(x));
    }
  out.canonicalize();
  return out;
}

}  // namespace grpd
