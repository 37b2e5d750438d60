#include "grpd/diagram.hpp"

#include <algorithm>
#include <set>

#include "grpd/error.hpp"

namespace grpd {

Diagram::Diagram(CategoryRef index, std::vector<GroupoidRef> nodes, std::vector<CorrRef> arrows, const Sigma& sigma)
    : index_(std::move(index)), nodes_(std::move(nodes)), arrows_(std::move(arrows)) {
  const FiniteCategory& C = *index_;
  if (nodes_.size() != C.num_objects() || arrows_.size() != C.num_morphisms())
    input_error("diagram needs one node per object and one correspondence per morphism");
  for (Index x = 0; x < C.num_objects(); ++x) {
    if (!nodes_[x]) input_error("diagram node '" + C.object_name(x) + "' is missing");
    arrows_[C.identity(x)] = identity_correspondence(nodes_[x]);
  }
  for (Index p = 0; p < C.num_morphisms(); ++p) {
    if (!arrows_[p]) input_error("diagram arrow '" + C.morphism_name(p) + "' is missing");
    if (!same_groupoid(arrows_[p]->left(), nodes_[C.dst(p)]) || !same_groupoid(arrows_[p]->right(), nodes_[C.src(p)]))
      fail(ErrorKind::kEndpointMismatch, "diagram arrow", {C.morphism_name(p)});
  }
  const std::size_t n = C.num_morphisms();
  mult_slot_.assign(n * n, kNone);
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q) {
      Index pq = C.comp(p, q);
      if (pq == kNone) continue;
      Multiplication m{p, q, compose(arrows_[p], arrows_[q]), {}};
      const Correspondence& X = *arrows_[p];
      const Correspondence& Y = *arrows_[q];
      m.map.resize(m.composite.result->size());
      for (Index c = 0; c < m.map.size(); ++c) {
        auto [x, y] = m.composite.witness[c];
        if (C.is_identity(p))
          m.map[c] = Y.act_left(x, y);
        else if (C.is_identity(q))
          m.map[c] = X.act_right(x, y);
        else
          m.map[c] = sigma(p, q, x, y);
        if (m.map[c] >= arrows_[pq]->size())
          fail(ErrorKind::kCoherenceViolation, "multiplication-range", {C.morphism_name(p), C.morphism_name(q)});
      }
      mult_slot_[p * n + q] = mults_.size();
      mults_.push_back(std::move(m));
    }
}

const Diagram::Multiplication* Diagram::multiplication(Index p, Index q) const {
  Index slot = mult_slot_[p * index_->num_morphisms() + q];
  return slot == kNone ? nullptr : &mults_[slot];
}

DiagramReport validate_diagram(const Diagram& d) {
  const FiniteCategory& C = *d.index();
  const std::size_t n = C.num_morphisms();
  DiagramReport report;
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q) {
      const auto* m = d.multiplication(p, q);
      if (!m) continue;
      ++report.pairs;
      TwoArrow a;
      try {
        a = make_two_arrow(m->composite.result, d.arrow(C.comp(p, q)), m->map);
      } catch (const Error& e) {
        fail(ErrorKind::kCoherenceViolation, "multiplication-" + e.law(), {C.morphism_name(p), C.morphism_name(q)});
      }
      if (!a.bijective())
        fail(ErrorKind::kCoherenceViolation, "multiplication-bijective", {C.morphism_name(p), C.morphism_name(q)});
    }

  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q) {
      Index pq = C.comp(p, q);
      if (pq == kNone) continue;
      for (Index t = 0; t < n; ++t) {
        Index qt = C.comp(q, t);
        if (qt == kNone || C.comp(pq, t) == kNone) continue;
        ++report.triples;
        const auto* m_pq = d.multiplication(p, q);
        const auto* m_qt = d.multiplication(q, t);
        const auto* m_p_qt = d.multiplication(p, qt);
        const auto* m_pq_t = d.multiplication(pq, t);
        const Correspondence& X = *d.arrow(p);
        const Correspondence& Y = *d.arrow(q);
        const Correspondence& Z = *d.arrow(t);
        for (Index x = 0; x < X.size(); ++x)
          for (Index y = 0; y < Y.size(); ++y) {
            if (X.s(x) != Y.r(y)) continue;
            for (Index z = 0; z < Z.size(); ++z) {
              if (Y.s(y) != Z.r(z)) continue;
              Index lhs = m_p_qt->map[m_p_qt->composite.class_of(x, m_qt->map[m_qt->composite.class_of(y, z)])];
              Index rhs = m_pq_t->map[m_pq_t->composite.class_of(m_pq->map[m_pq->composite.class_of(x, y)], z)];
              if (lhs != rhs)
                fail(ErrorKind::kCoherenceViolation, "associativity",
                     {C.morphism_name(p), C.morphism_name(q), C.morphism_name(t),
                      "[" + X.point_name(x) + ",[" + Y.point_name(y) + "," + Z.point_name(z) + "]]"});
            }
          }
      }
    }
  return report;
}

ProductFiber fiber(const Diagram& d, std::string_view word) {
  auto p = d.index()->find_morphism(word);
  if (!p) fail(ErrorKind::kUnknownWord, "fiber", {std::string(word)});
  return {*p, d.arrow(*p)};
}

ModuleElement multiply(const Diagram& d, Index p, Index q, const ModuleElement& a, const ModuleElement& b) {
  const auto* m = d.multiplication(p, q);
  if (!m) fail(ErrorKind::kUnknownWord, "product undefined", {d.index()->morphism_name(p), d.index()->morphism_name(q)});
  ModuleElement product = mu(m->composite, {{a, b}});
  ModuleElement out(d.arrow(d.index()->comp(p, q)));
  for (const auto& [c, v] : product.terms()) out.add(m->map[c], v);
  return out;
}

Diagram fibration_to_diagram(const Functor& F) {
  require_conduche(F);
  const FiniteCategory& E = *F.total();
  const FiniteCategory& C = *F.base();
  std::vector<GroupoidRef> nodes(C.num_objects());
  for (Index x = 0; x < C.num_objects(); ++x) {
    GroupoidSpec spec;
    for (Index X = 0; X < E.num_objects(); ++X) {
      if (F.object_image(X) != x) continue;
      const std::string& o = E.object_name(X);
      const std::string& u = E.morphism_name(E.identity(X));
      spec.objects.push_back(o);
      spec.arrows.push_back({u, o, o});
      spec.unit[o] = u;
      spec.inv[u] = u;
      spec.comp.push_back({u, u, u});
    }
    nodes[x] = validate_groupoid(spec);
  }
  std::vector<CorrRef> arrows(C.num_morphisms());
  for (Index g = 0; g < C.num_morphisms(); ++g) {
    if (C.is_identity(g)) continue;
    const FiniteGroupoid& H = *nodes[C.dst(g)];
    const FiniteGroupoid& G = *nodes[C.src(g)];
    CorrespondenceSpec spec{nodes[C.dst(g)], nodes[C.src(g)], {}, {}, {}, {}, {}};
    for (Index f = 0; f < E.num_morphisms(); ++f) {
      if (F.morphism_image(f) != g) continue;
      const std::string& id = E.morphism_name(f);
      const std::string& r = E.object_name(E.dst(f));
      const std::string& s = E.object_name(E.src(f));
      spec.carrier.push_back(id);
      spec.r[id] = r;
      spec.s[id] = s;
      spec.lact.push_back({H.arrow_name(H.unit(H.object(r))), id, id});
      spec.ract.push_back({G.arrow_name(G.unit(G.object(s))), id, id});
    }
    arrows[g] = validate_correspondence(spec);
  }
  for (Index x = 0; x < C.num_objects(); ++x) arrows[C.identity(x)] = identity_correspondence(nodes[x]);
  auto sigma = [&](Index p, Index q, Index x, Index y) -> Index {
    const Correspondence& Xp = *arrows[p];
    const Correspondence& Xq = *arrows[q];
    Index a = E.morphism(Xp.point_name(x));
    Index b = E.morphism(Xq.point_name(y));
    Index ab = E.comp(a, b);
    if (ab == kNone) input_error("total category lacks composite " + E.morphism_name(a) + "∘" + E.morphism_name(b));
    return arrows[C.comp(p, q)]->point(E.morphism_name(ab));
  };
  return Diagram(F.base(), nodes, arrows, sigma);
}

FunctorRef diagram_to_fibration(const Diagram& d) {
  const FiniteCategory& C = *d.index();
  CategorySpec total;
  total.truncated = C.truncated();
  FunctorSpec functor{nullptr, d.index(), {}, {}};
  for (Index x = 0; x < C.num_objects(); ++x) {
    const FiniteGroupoid& G = *d.node(x);
    if (G.num_arrows() != G.num_objects()) fail(ErrorKind::kNodeNotDiscrete, "node", {C.object_name(x)});
    for (Index o = 0; o < G.num_objects(); ++o) {
      total.objects.push_back(G.object_name(o));
      functor.on_objects[G.object_name(o)] = C.object_name(x);
    }
  }
  // Morphism ids: points of every X_p; identities come from the node units.
  struct Origin {
    Index p, point;
  };
  std::map<std::string, Origin> origin;
  for (Index p = 0; p < C.num_morphisms(); ++p) {
    const Correspondence& X = *d.arrow(p);
    for (Index x = 0; x < X.size(); ++x) {
      const std::string& id = X.point_name(x);
      if (!origin.emplace(id, Origin{p, x}).second) input_error("morphism id '" + id + "' is not unique across fibres");
      total.morphisms.push_back({id, X.right()->object_name(X.s(x)), X.left()->object_name(X.r(x))});
      functor.on_morphisms[id] = C.morphism_name(p);
      if (C.is_identity(p)) total.identity[X.left()->object_name(X.r(x))] = id;
    }
  }
  for (const auto& [id_a, a] : origin)
    for (const auto& [id_b, b] : origin) {
      const auto* m = d.multiplication(a.p, b.p);
      if (!m) continue;
      const Correspondence& X = *d.arrow(a.p);
      const Correspondence& Y = *d.arrow(b.p);
      if (X.s(a.point) != Y.r(b.point)) continue;
      Index target = m->map[m->composite.class_of(a.point, b.point)];
      total.comp.push_back({id_a, id_b, d.arrow(C.comp(a.p, b.p))->point_name(target)});
    }
  functor.total = validate_category(total);
  return validate_functor(functor);
}

}  // namespace grpd
