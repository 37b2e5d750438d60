#include "grpd/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "grpd/error.hpp"

namespace grpd::io {

namespace {

void require_keys(const Json& j, std::initializer_list<const char*> required, std::initializer_list<const char*> optional,
                  const char* what) {
  if (!j.is_object()) input_error(std::string(what) + " must be a JSON object");
  std::set<std::string> known;
  for (const char* k : required) {
    known.insert(k);
    if (!j.contains(k)) input_error(std::string(what) + " is missing key '" + k + "'");
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) input_error(std::string(what) + " has unknown key '" + key + "'");
}

std::vector<std::string> strings(const Json& j) { return j.get<std::vector<std::string>>(); }

std::map<std::string, std::string> string_map(const Json& j) { return j.get<std::map<std::string, std::string>>(); }

std::vector<Triple> triples(const Json& j) {
  std::vector<Triple> out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) input_error("expected a triple, got " + t.dump());
    out.push_back({t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>()});
  }
  return out;
}

PairMap pair_map(const Json& j) {
  PairMap out;
  for (const auto& [a, b, c] : triples(j))
    if (!out.emplace(std::make_pair(a, b), c).second) input_error("duplicate entry (" + a + "," + b + ")");
  return out;
}

Scalar scalar(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_array() && j.size() == 4 && std::all_of(j.begin(), j.end(), [](const Json& v) { return v.is_number_integer(); })) {
    if (j[1].get<long>() == 0 || j[3].get<long>() == 0) input_error("zero denominator in " + j.dump());
    mpq_class re(j[0].get<long>(), j[1].get<long>()), im(j[2].get<long>(), j[3].get<long>());
    re.canonicalize();
    im.canonicalize();
    return Scalar(re, im);
  }
  input_error("scalar must be an integer, a string or [re_num, re_den, im_num, im_den], got " + j.dump());
}

// Runs a parser and turns JSON type errors into input errors.
template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    input_error(std::string("malformed ") + what + ": " + e.what());
  }
}

Json resolve(const Json& j, const fs::path& base) {
  if (j.is_string()) return load_json(base / j.get<std::string>());
  return j;
}

GroupoidRef group_from_json(const Json& raw, const fs::path& base) {
  Json j = resolve(raw, base);
  if (j.is_object() && j.contains("elements")) {
    require_keys(j, {"elements", "products"}, {}, "group table");
    return guarded("group table", [&] { return group_as_groupoid({strings(j["elements"]), triples(j["products"])}); });
  }
  return groupoid_from_json(j, base);
}

}  // namespace

Json load_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) input_error("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    input_error("cannot parse '" + path.string() + "': " + e.what());
  }
}

GroupoidRef groupoid_from_json(const Json& raw, const fs::path& base) {
  Json j = resolve(raw, base);
  require_keys(j, {"objects", "arrows", "unit", "inv", "comp"}, {}, "groupoid");
  GroupoidSpec spec = guarded("groupoid", [&] {
    GroupoidSpec s;
    s.objects = strings(j["objects"]);
    for (const auto& a : j["arrows"]) {
      require_keys(a, {"id", "src", "dst"}, {}, "arrow");
      s.arrows.push_back({a["id"].get<std::string>(), a["src"].get<std::string>(), a["dst"].get<std::string>()});
    }
    s.unit = string_map(j["unit"]);
    s.inv = string_map(j["inv"]);
    s.comp = triples(j["comp"]);
    return s;
  });
  return validate_groupoid(spec);
}

GroupoidRef load_groupoid(const fs::path& path) { return groupoid_from_json(load_json(path), path.parent_path()); }

CorrRef correspondence_from_json(const Json& j, const fs::path& base) {
  require_keys(j, {"left", "right", "carrier", "r", "s", "lact", "ract"}, {}, "correspondence");
  CorrespondenceSpec spec;
  spec.left = groupoid_from_json(j["left"], base);
  spec.right = j["right"] == j["left"] ? spec.left : groupoid_from_json(j["right"], base);
  guarded("correspondence", [&] {
    spec.carrier = strings(j["carrier"]);
    spec.r = string_map(j["r"]);
    spec.s = string_map(j["s"]);
    spec.lact = triples(j["lact"]);
    spec.ract = triples(j["ract"]);
    return 0;
  });
  return validate_correspondence(spec);
}

CorrRef load_correspondence(const fs::path& path) {
  return correspondence_from_json(load_json(path), path.parent_path());
}

AlgebraElement element_from_json(const Json& j, const GroupoidRef& g) {
  if (!j.is_object()) input_error("element must be an object of id -> scalar");
  AlgebraElement out(g);
  for (const auto& [id, value] : j.items()) out.add(g->arrow(id), scalar(value));
  return out;
}

ModuleElement module_element_from_json(const Json& j, const CorrRef& x) {
  if (!j.is_object()) input_error("module element must be an object of id -> scalar");
  ModuleElement out(x);
  for (const auto& [id, value] : j.items()) out.add(x->point(id), scalar(value));
  return out;
}

Tensor tensor_from_json(const Json& j, const CorrRef& x, const CorrRef& y) {
  if (!j.is_array()) input_error("tensor must be an array of [left, right] pairs");
  Tensor out;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) input_error("tensor term must be a pair");
    out.emplace_back(module_element_from_json(term[0], x), module_element_from_json(term[1], y));
  }
  return out;
}

CategoryRef category_from_json(const Json& j) {
  require_keys(j, {"objects", "morphisms", "identity", "comp"}, {"truncated"}, "category");
  CategorySpec spec = guarded("category", [&] {
    CategorySpec s;
    s.objects = strings(j["objects"]);
    for (const auto& m : j["morphisms"]) {
      require_keys(m, {"id", "src", "dst"}, {}, "morphism");
      s.morphisms.push_back({m["id"].get<std::string>(), m["src"].get<std::string>(), m["dst"].get<std::string>()});
    }
    s.identity = string_map(j["identity"]);
    s.comp = triples(j["comp"]);
    s.truncated = j.value("truncated", false);
    return s;
  });
  return validate_category(spec);
}

FunctorRef fibration_from_json(const Json& j, const fs::path& base) {
  require_keys(j, {"total", "base", "on_objects", "on_morphisms"}, {}, "fibration");
  FunctorSpec spec;
  spec.total = category_from_json(resolve(j["total"], base));
  spec.base = category_from_json(resolve(j["base"], base));
  guarded("fibration", [&] {
    spec.on_objects = string_map(j["on_objects"]);
    spec.on_morphisms = string_map(j["on_morphisms"]);
    return 0;
  });
  return validate_functor(spec);
}

KGraphFile kgraph_from_json(const Json& j, const fs::path& base) {
  require_keys(j, {"vertices", "edges", "factorization"}, {"group", "truncation"}, "k-graph");
  KGraphFile out;
  guarded("k-graph", [&] {
    out.spec.vertices = strings(j["vertices"]);
    for (const auto& color : j["edges"]) {
      std::vector<EdgeDecl> edges;
      for (const auto& e : color) {
        require_keys(e, {"id", "r", "s"}, {}, "edge");
        edges.push_back({e["id"].get<std::string>(), e["r"].get<std::string>(), e["s"].get<std::string>()});
      }
      out.spec.colors.push_back(std::move(edges));
    }
    for (const auto& f : j["factorization"]) {
      if (!f.is_array() || f.size() != 2 || f[0].size() != 2 || f[1].size() != 2)
        input_error("factorization entries are [[b, c], [c', b']]");
      out.spec.factorizations.push_back({{f[0][0].get<std::string>(), f[0][1].get<std::string>()},
                                         {f[1][0].get<std::string>(), f[1][1].get<std::string>()}});
    }
    out.box = j.contains("truncation") ? j["truncation"].get<std::vector<int>>()
                                       : std::vector<int>(out.spec.colors.size(), 2);
    return 0;
  });
  if (j.contains("group")) {
    const Json& g = j["group"];
    require_keys(g, {"group", "vertex_action", "edge_action", "restriction"}, {}, "k-graph group block");
    KGraphGroupBlock block;
    block.group = group_from_json(g["group"], base);
    guarded("k-graph group block", [&] {
      block.vertex_action = pair_map(g["vertex_action"]);
      block.edge_action = pair_map(g["edge_action"]);
      block.restriction = pair_map(g["restriction"]);
      return 0;
    });
    out.spec.group = std::move(block);
  }
  return out;
}

SelfSimilarAction selfsim_from_json(const Json& j, const fs::path& base) {
  if (j.is_object() && j.contains("group")) {
    require_keys(j, {"group", "alphabet", "pi", "phi"}, {}, "self-similar action");
    FiniteActionSpec spec;
    spec.group = group_from_json(j["group"], base);
    guarded("self-similar action", [&] {
      spec.alphabet = strings(j["alphabet"]);
      spec.pi = pair_map(j["pi"]);
      spec.phi = pair_map(j["phi"]);
      return 0;
    });
    return SelfSimilarAction::finite(spec);
  }
  require_keys(j, {"alphabet", "generators", "perm", "restrict"}, {}, "automaton");
  AutomatonSpec spec = guarded("automaton", [&] {
    AutomatonSpec s;
    s.alphabet = strings(j["alphabet"]);
    s.generators = strings(j["generators"]);
    s.perm = j["perm"].get<std::map<std::string, std::map<std::string, std::string>>>();
    s.restrict = j["restrict"].get<std::map<std::string, std::map<std::string, std::vector<std::string>>>>();
    return s;
  });
  return SelfSimilarAction::automaton(spec);
}

FileKind detect_kind(const Json& j) {
  if (!j.is_object()) return FileKind::kUnknown;
  if (j.contains("carrier")) return FileKind::kCorrespondence;
  if (j.contains("on_objects")) return FileKind::kFibration;
  if (j.contains("vertices")) return FileKind::kKGraph;
  if (j.contains("alphabet")) return FileKind::kSelfSimilar;
  if (j.contains("morphisms")) return FileKind::kCategory;
  if (j.contains("arrows")) return FileKind::kGroupoid;
  return FileKind::kUnknown;
}

Json to_json(const FiniteGroupoid& g) {
  GroupoidSpec spec = g.to_spec();
  Json arrows = Json::array();
  for (const auto& a : spec.arrows) arrows.push_back({{"id", a.id}, {"src", a.src}, {"dst", a.dst}});
  return {{"objects", spec.objects}, {"arrows", arrows}, {"unit", spec.unit}, {"inv", spec.inv}, {"comp", spec.comp}};
}

Json to_json(const Correspondence& x) {
  CorrespondenceSpec spec = x.to_spec();
  return {{"left", to_json(*spec.left)}, {"right", to_json(*spec.right)}, {"carrier", spec.carrier},
          {"r", spec.r},                 {"s", spec.s},                   {"lact", spec.lact},
          {"ract", spec.ract}};
}

Json to_json(const AlgebraElement& a) {
  Json out = Json::object();
  for (const auto& [g, c] : a.terms()) out[a.space()->arrow_name(g)] = c.str();
  return out;
}

Json to_json(const ModuleElement& v) {
  Json out = Json::object();
  for (const auto& [x, c] : v.terms()) out[v.space()->point_name(x)] = c.str();
  return out;
}

}  // namespace grpd::io
