#include "grpd/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "grpd/bicategory.hpp"
#include "grpd/diagram.hpp"
#include "grpd/error.hpp"
#include "grpd/hilbert_module.hpp"
#include "grpd/io.hpp"
#include "grpd/kgraph.hpp"
#include "grpd/self_similar.hpp"

namespace grpd::cli {

namespace {

using io::Json;
namespace fs = std::filesystem;

struct Outcome {
  Json json = Json::object();
  std::string text;
  int code = 0;
};

std::string fixed(double v, int digits = 12) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

Json error_json(const Error& e) {
  return {{"kind", std::string(to_string(e.kind()))}, {"law", e.law()}, {"witness", e.witness()}};
}

std::vector<std::string> split_tokens(const std::string& s, bool per_char) {
  std::vector<std::string> out;
  if (s.find_first_of(", ") != std::string::npos) {
    std::string cur;
    for (char c : s) {
      if (c == ',' || c == ' ') {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
  }
  if (per_char) {
    for (char c : s) out.emplace_back(1, c);
    return out;
  }
  if (!s.empty()) out.push_back(s);
  return out;
}

Json presentation_json(const Presentation& p) {
  Json rel = Json::object();
  for (std::size_t k = 0; k < p.relations.size(); ++k) rel[std::to_string(k + 1)] = p.relations[k];
  return {{"generators", p.generators}, {"relations", rel}};
}

// ---- subcommands -----------------------------------------------------------

Outcome corr_validate(const std::string& file) {
  CorrRef x = io::load_correspondence(file);
  Classification c = classify(*x);
  Outcome o;
  o.json = {{"points", x->size()}, {"orbits", orbits(*x).size()}, {"proper", c.proper}, {"tight", c.tight}};
  o.text = "valid correspondence: " + std::to_string(x->size()) + " points, " + std::to_string(orbits(*x).size()) +
           " orbits\n";
  return o;
}

Outcome corr_bracket(const std::string& file, const std::string& a, const std::string& b) {
  CorrRef x = io::load_correspondence(file);
  Index g = bracket(*x, x->point(a), x->point(b));
  Outcome o;
  o.json = {{"bracket", x->right()->arrow_name(g)}};
  o.text = x->right()->arrow_name(g) + "\n";
  return o;
}

Outcome corr_classify(const std::string& file) {
  CorrRef x = io::load_correspondence(file);
  Classification c = classify(*x);
  Outcome o;
  o.json = {{"proper", c.proper}, {"tight", c.tight}};
  o.text = std::string("proper: ") + (c.proper ? "true" : "false") + "\ntight: " + (c.tight ? "true" : "false") + "\n";
  return o;
}

Outcome compose_cmd(const std::string& a, const std::string& b, const std::string& output) {
  Composite c = compose(io::load_correspondence(a), io::load_correspondence(b));
  Json composite = io::to_json(*c.result);
  Outcome o;
  o.json = {{"points", c.result->size()}};
  if (output.empty()) {
    o.json["composite"] = composite;
    o.text = composite.dump(2) + "\n";
  } else {
    std::ofstream out(output);
    if (!out) input_error("cannot write '" + output + "'");
    out << composite.dump(2) << "\n";
    o.json["written"] = output;
    o.text = "wrote " + std::to_string(c.result->size()) + " points to " + output + "\n";
  }
  return o;
}

Outcome coherence_cmd(const std::vector<std::string>& files) {
  std::vector<CorrRef> chain;
  for (const auto& f : files) chain.push_back(io::load_correspondence(f));
  CoherenceReport report = check_coherence(chain);
  Outcome o;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"ok", c.ok}, {"counterexample", c.counterexample}});
    o.text += (c.ok ? "PASS " : "FAIL ") + c.name + "\n";
  }
  o.json = {{"checks", checks}};
  o.code = report.ok() ? 0 : 1;
  return o;
}

Outcome algebra_norm(const std::string& gfile, const std::string& efile) {
  GroupoidRef g = io::load_groupoid(gfile);
  AlgebraElement a = io::element_from_json(io::load_json(efile), g);
  double n = operator_norm(a);
  Outcome o;
  o.json = {{"norm", fixed(n)}};
  o.text = fixed(n) + "\n";
  return o;
}

Outcome algebra_table(const std::string& gfile) {
  GroupoidRef g = io::load_groupoid(gfile);
  const FiniteGroupoid& G = *g;
  Outcome o;
  Json table = Json::array();
  for (Index a = 0; a < G.num_arrows(); ++a)
    for (Index b = 0; b < G.num_arrows(); ++b) {
      if (!G.composable(a, b)) continue;
      const std::string& ab = G.arrow_name(G.comp(a, b));
      table.push_back({G.arrow_name(a), G.arrow_name(b), ab});
      o.text += G.arrow_name(a) + " * " + G.arrow_name(b) + " = " + ab + "\n";
    }
  o.json = {{"table", table}};
  return o;
}

Outcome module_inner(const std::string& xfile, const std::string& f1, const std::string& f2) {
  CorrRef x = io::load_correspondence(xfile);
  AlgebraElement ip = inner(io::module_element_from_json(io::load_json(f1), x),
                            io::module_element_from_json(io::load_json(f2), x));
  Outcome o;
  o.json = {{"inner", io::to_json(ip)}};
  o.text = io::to_json(ip).dump() + "\n";
  return o;
}

Outcome module_positivity(const std::string& xfile, const std::string& f) {
  CorrRef x = io::load_correspondence(xfile);
  ModuleElement v = io::module_element_from_json(io::load_json(f), x);
  std::vector<AlgebraElement> w = positivity_witness(v);
  bool ok = verify_positivity(v, w);
  Outcome o;
  Json list = Json::array();
  for (const auto& a : w) {
    list.push_back(io::to_json(a));
    o.text += io::to_json(a).dump() + "\n";
  }
  o.json = {{"witness", list}, {"verified", ok}};
  o.text += std::string("verified: ") + (ok ? "true" : "false") + "\n";
  o.code = ok ? 0 : 1;
  return o;
}

Outcome module_mu(const std::string& xfile, const std::string& yfile, const std::string& tfile) {
  CorrRef x = io::load_correspondence(xfile);
  CorrRef y = io::load_correspondence(yfile);
  Composite c = compose(x, y);
  ModuleElement m = mu(c, io::tensor_from_json(io::load_json(tfile), x, y));
  Outcome o;
  o.json = {{"mu", io::to_json(m)}};
  o.text = io::to_json(m).dump() + "\n";
  return o;
}

// A k-graph file stands for the degree functor of its truncated path category.
bool is_kgraph_file(const Json& j) { return io::detect_kind(j) == io::FileKind::kKGraph; }

Outcome conduche_check(const std::string& file) {
  Json j = io::load_json(file);
  FunctorRef f;
  if (is_kgraph_file(j)) {
    io::KGraphFile kf = io::kgraph_from_json(j, fs::path(file).parent_path());
    f = kgraph_path_category(validate_kgraph(kf.spec), kf.box);
  } else {
    f = io::fibration_from_json(j, fs::path(file).parent_path());
  }
  ConducheReport r = check_conduche(*f);
  RowFinitenessReport rows = is_row_finite(*f);
  Outcome o;
  o.json = {{"conduche", r.ok}, {"row_finite", rows.row_finite}};
  if (r.ok) {
    o.text = "Conduché: yes\n";
  } else {
    o.json["witness"] = {{"morphism", r.morphism}, {"first", r.first}, {"second", r.second}, {"lifts", r.lifts}};
    o.text = "Conduché: no (" + r.morphism + " over " + r.second + "∘" + r.first + " has " + std::to_string(r.lifts) +
             " lifts)\n";
    o.code = 1;
  }
  return o;
}

Outcome conduche_present(const std::string& file) {
  Json j = io::load_json(file);
  Presentation p = is_kgraph_file(j)
                       ? kgraph_presentation(validate_kgraph(io::kgraph_from_json(j, fs::path(file).parent_path()).spec))
                       : cuntz_pimsner_presentation(*io::fibration_from_json(j, fs::path(file).parent_path()));
  Outcome o;
  o.json = presentation_json(p);
  o.text = p.text();
  return o;
}

io::KGraphFile load_kgraph(const std::string& file) {
  return io::kgraph_from_json(io::load_json(file), fs::path(file).parent_path());
}

Outcome kgraph_check(const std::string& file) {
  io::KGraphFile kf = load_kgraph(file);
  KGraph g = validate_kgraph(kf.spec);
  ConducheReport c = check_conduche(*kgraph_path_category(g, kf.box));
  DiagramReport d = validate_diagram(kgraph_diagram(g, kf.box));
  Outcome o;
  o.json = {{"rank", g.rank()},       {"vertices", g.vertices().size()}, {"edges", g.edges().size()},
            {"conduche", c.ok},       {"truncation", kf.box},            {"pairs", d.pairs},
            {"triples", d.triples},   {"self_similar", g.has_group()}};
  o.text = "k-graph of rank " + std::to_string(g.rank()) + ": factorizations bijective, path category " +
           (c.ok ? "Conduché" : "not Conduché") + ", diagram coherent on " + std::to_string(d.triples) + " triples\n";
  o.code = c.ok ? 0 : 1;
  return o;
}

Outcome kgraph_present(const std::string& file) {
  Presentation p = kgraph_presentation(validate_kgraph(load_kgraph(file).spec));
  Outcome o;
  o.json = presentation_json(p);
  o.text = p.text();
  return o;
}

SelfSimilarAction load_selfsim(const std::string& file) {
  return io::selfsim_from_json(io::load_json(file), fs::path(file).parent_path());
}

Outcome selfsim_act(const std::string& file, const std::string& gword, const std::string& word) {
  SelfSimilarAction a = load_selfsim(file);
  bool single = std::all_of(a.alphabet().begin(), a.alphabet().end(), [](const std::string& l) { return l.size() == 1; });
  Word w = a.parse_word(split_tokens(word, single));
  Word out = act_on_word(a, a.parse_group_word(split_tokens(gword, false)), w);
  Outcome o;
  o.json = {{"result", a.format_word(out)}};
  o.text = a.format_word(out) + "\n";
  return o;
}

Outcome selfsim_cocycle(const std::string& file, int depth) {
  SelfSimilarAction a = load_selfsim(file);
  CocycleReport r = check_cocycle(a, depth);
  Outcome o;
  o.json = {{"exact", r.exact}, {"depth", r.depth}, {"checks", r.checks}};
  o.text = r.exact ? "cocycle verified exactly\n" : "cocycle verified to depth " + std::to_string(r.depth) + "\n";
  return o;
}

Outcome selfsim_faithful(const std::string& file, int length, int depth) {
  SelfSimilarAction a = load_selfsim(file);
  FaithfulnessReport r = faithfulness_report(a, length, depth);
  Outcome o;
  o.json = {{"max_length", r.max_length}, {"depth", r.depth}, {"trivial_words", r.trivial_words}};
  if (r.trivial_words.empty()) o.text = "no nontrivial word acts trivially\n";
  for (const auto& w : r.trivial_words) o.text += "acts trivially: " + w + "\n";
  return o;
}

// ---- suite -----------------------------------------------------------------

std::string digest(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::uint64_t h = 1469598103934665603ULL;
  for (char c; in.get(c);) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-3, 3);
  return Scalar(mpq_class(d(rng)), mpq_class(d(rng)));
}

template <class Space>
Supported<Space> random_supported(const std::shared_ptr<const Space>& space, std::size_t n, std::mt19937_64& rng) {
  Supported<Space> out(space);
  std::uniform_int_distribution<Index> pick(0, n - 1);
  std::uniform_int_distribution<int> terms(1, 4);
  for (int k = terms(rng); k > 0 && n > 0; --k) out.add(pick(rng), random_scalar(rng));
  return out;
}

struct CheckList {
  Json checks = Json::array();
  bool ok = true;
  void add(const std::string& fixture, const std::string& name, bool pass, const std::string& detail = "") {
    Json c = {{"fixture", fixture}, {"check", name}, {"status", pass ? "pass" : "fail"}};
    if (!detail.empty()) c["detail"] = detail;
    checks.push_back(c);
    ok = ok && pass;
  }
  // Runs f, recording a failure if it throws.
  void run(const std::string& fixture, const std::string& name, const std::function<bool()>& f) {
    try {
      add(fixture, name, f());
    } catch (const Error& e) {
      add(fixture, name, false, e.what());
    }
  }
};

void suite_groupoid(const std::string& name, const GroupoidRef& g, std::mt19937_64& rng, CheckList& out) {
  const std::size_t n = g->num_arrows();
  if (n == 0) {
    out.add(name, "laws", true);
    return;
  }
  auto el = [&] { return random_supported(g, n, rng); };
  out.run(name, "convolution-associative", [&] {
    for (int k = 0; k < 20; ++k) {
      AlgebraElement a = el(), b = el(), c = el();
      if (!(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)))) return false;
    }
    return true;
  });
  out.run(name, "involution", [&] {
    for (int k = 0; k < 20; ++k) {
      AlgebraElement a = el(), b = el();
      if (!(involute(convolve(a, b)) == convolve(involute(b), involute(a))) || !(involute(involute(a)) == a))
        return false;
    }
    return true;
  });
  out.run(name, "c-star-identity", [&] {
    for (int k = 0; k < 10; ++k) {
      AlgebraElement a = el();
      double lhs = operator_norm(convolve(involute(a), a));
      double rhs = std::pow(operator_norm(a), 2);
      if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, rhs)) return false;
    }
    return true;
  });
  out.run(name, "faithful", [&] { return RegularRepresentation(g).faithful_on_basis(); });
}

void suite_correspondence(const std::string& name, const CorrRef& x, std::mt19937_64& rng, CheckList& out) {
  const Correspondence& X = *x;
  const FiniteGroupoid& H = *X.left();
  const FiniteGroupoid& G = *X.right();
  out.run(name, "bracket-laws", [&] {
    OrbitDecomposition orb = orbits(X);
    for (Index a = 0; a < X.size(); ++a)
      for (Index b = 0; b < X.size(); ++b) {
        if (orb.class_of[a] != orb.class_of[b]) continue;
        Index g = bracket(X, a, b);
        if (G.dst(g) != X.s(a) || G.src(g) != X.s(b) || bracket(X, b, a) != G.inv(g)) return false;
        if (a == b && !G.is_unit(g)) return false;
        for (Index h : H.arrows_from(X.r(a)))
          for (Index g1 : G.arrows_to(X.s(a)))
            for (Index g2 : G.arrows_to(X.s(b))) {
              Index lhs = bracket(X, X.act_right(X.act_left(h, a), g1), X.act_right(X.act_left(h, b), g2));
              if (lhs != G.comp(G.comp(G.inv(g1), g), g2)) return false;
            }
      }
    return true;
  });
  if (X.size() == 0) return;
  auto mod = [&] { return random_supported(x, X.size(), rng); };
  out.run(name, "positivity", [&] {
    for (int k = 0; k < 10; ++k) {
      ModuleElement v = mod();
      if (!verify_positivity(v, positivity_witness(v))) return false;
    }
    return true;
  });
  out.run(name, "inner-product", [&] {
    for (int k = 0; k < 10; ++k) {
      ModuleElement v = mod(), w = mod();
      AlgebraElement b = random_supported(X.right(), G.num_arrows(), rng);
      AlgebraElement a = random_supported(X.left(), H.num_arrows(), rng);
      if (!(involute(inner(v, w)) == inner(w, v))) return false;
      if (!(inner(v, right_action(w, b)) == convolve(inner(v, w), b))) return false;
      if (!(inner(left_action(a, v), w) == inner(v, left_action(involute(a), w)))) return false;
    }
    return true;
  });
  out.run(name, "coherence", [&] { return check_coherence({x, identity_correspondence(X.right())}).ok(); });
  out.run(name, "mu-isometry", [&] {
    CorrRef one = identity_correspondence(X.right());
    Composite c = compose(x, one);
    for (int k = 0; k < 5; ++k) {
      Tensor s{{mod(), random_supported(one, one->size(), rng)}};
      Tensor t{{mod(), random_supported(one, one->size(), rng)}};
      if (!(inner(mu(c, s), mu(c, t)) == tensor_inner(s, t))) return false;
    }
    return true;
  });
}

void suite_fibration(const std::string& name, const FunctorRef& f, CheckList& out) {
  ConducheReport r = check_conduche(*f);
  out.add(name, "conduche", r.ok, r.ok ? "" : r.morphism + " over " + r.second + "∘" + r.first);
  if (!r.ok) return;
  out.run(name, "round-trip", [&] {
    FunctorRef back = diagram_to_fibration(fibration_to_diagram(*f));
    std::map<std::string, std::string> objects, morphisms;
    for (const auto& o : f->total()->object_names()) objects[o] = o;
    for (const auto& m : f->total()->morphism_names()) morphisms[m] = m;
    return is_isomorphism(*f, *back, objects, morphisms);
  });
  out.run(name, "presentation", [&] { return !cuntz_pimsner_presentation(*f).generators.empty(); });
}

void suite_kgraph(const std::string& name, const io::KGraphFile& kf, CheckList& out) {
  out.run(name, "factorization", [&] {
    KGraph g = validate_kgraph(kf.spec);
    return true;
  });
  out.run(name, "path-category-conduche", [&] {
    return check_conduche(*kgraph_path_category(validate_kgraph(kf.spec), kf.box)).ok;
  });
  out.run(name, "diagram-coherence", [&] {
    validate_diagram(kgraph_diagram(validate_kgraph(kf.spec), kf.box));
    return true;
  });
}

void suite_selfsim(const std::string& name, const SelfSimilarAction& a, std::mt19937_64& rng, CheckList& out) {
  out.run(name, "cocycle", [&] {
    check_cocycle(a, 6);
    return true;
  });
  out.run(name, "action", [&] {
    std::uniform_int_distribution<Index> letter(0, a.alphabet().size() - 1);
    std::uniform_int_distribution<Index> gen(0, a.generators().size() - 1);
    std::bernoulli_distribution flip(0.5);
    for (int k = 0; k < 20; ++k) {
      GroupWord g{{gen(rng), flip(rng)}}, h{{gen(rng), flip(rng)}};
      Word w;
      for (int i = 0; i < 8; ++i) w.push_back(letter(rng));
      GroupWord gh = g;
      gh.insert(gh.end(), h.begin(), h.end());
      if (act_on_word(a, gh, w) != act_on_word(a, g, act_on_word(a, h, w))) return false;
      if (act_on_word(a, inverse(g), act_on_word(a, g, w)) != w) return false;
    }
    return true;
  });
  if (a.is_finite()) out.run(name, "correspondence", [&] { return to_correspondence(a)->size() > 0; });
}

}  // namespace

SuiteResult run_suite(const fs::path& dir, std::uint64_t seed, bool timing) {
  if (!fs::is_directory(dir)) input_error("suite needs a directory, got '" + dir.string() + "'");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::mt19937_64 rng(seed);
  CheckList checks;
  Json inputs = Json::array();
  Json times = Json::object();
  for (const fs::path& path : files) {
    const std::string name = path.filename().string();
    inputs.push_back({{"file", name}, {"digest", digest(path)}});
    auto start = std::chrono::steady_clock::now();
    try {
      Json j = io::load_json(path);
      const fs::path base = path.parent_path();
      switch (io::detect_kind(j)) {
        case io::FileKind::kGroupoid: {
          GroupoidRef g = io::groupoid_from_json(j, base);
          checks.add(name, "laws", true);
          suite_groupoid(name, g, rng, checks);
          break;
        }
        case io::FileKind::kCorrespondence: {
          CorrRef x = io::correspondence_from_json(j, base);
          checks.add(name, "laws", true);
          suite_correspondence(name, x, rng, checks);
          break;
        }
        case io::FileKind::kCategory:
          io::category_from_json(j);
          checks.add(name, "laws", true);
          break;
        case io::FileKind::kFibration: {
          FunctorRef f = io::fibration_from_json(j, base);
          checks.add(name, "functor", true);
          suite_fibration(name, f, checks);
          break;
        }
        case io::FileKind::kKGraph:
          suite_kgraph(name, io::kgraph_from_json(j, base), checks);
          break;
        case io::FileKind::kSelfSimilar: {
          SelfSimilarAction a = io::selfsim_from_json(j, base);
          checks.add(name, "load", true);
          suite_selfsim(name, a, rng, checks);
          break;
        }
        case io::FileKind::kUnknown:
          checks.add(name, "load", false, "unrecognised fixture");
          break;
      }
    } catch (const Error& e) {
      checks.add(name, "load", false, e.what());
    }
    if (timing)
      times[name] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  SuiteResult result;
  result.report = {{"command", "suite"}, {"seed", seed}, {"inputs", inputs}, {"checks", checks.checks},
                   {"status", checks.ok ? "pass" : "fail"}};
  if (timing) result.report["timing_ms"] = times;
  result.exit_code = checks.ok ? 0 : 1;
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite groupoid correspondences toolkit", "grpd"};
  app.require_subcommand(1);
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  if (const char* env = std::getenv("GRPD_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: GRPD_SEED must be an unsigned integer\n";
      return 2;
    }
  }
  std::function<Outcome()> action;
  std::string command;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_flag("--json", json, "Machine-readable output");
    return sub;
  };
  std::string a1, a2, a3, output;
  std::vector<std::string> files;
  int depth = 8, length = 4;
  bool timing = false;

  CLI::App* corr = app.add_subcommand("corr", "Correspondence tools")->require_subcommand(1);
  CLI::App* c_val = leaf(corr, "validate", "Validate a correspondence");
  c_val->add_option("file", a1)->required();
  c_val->callback([&] { command = "corr validate"; action = [&] { return corr_validate(a1); }; });
  CLI::App* c_br = leaf(corr, "bracket", "Right inner product of two points");
  c_br->add_option("file", a1)->required();
  c_br->add_option("x1", a2)->required();
  c_br->add_option("x2", a3)->required();
  c_br->callback([&] { command = "corr bracket"; action = [&] { return corr_bracket(a1, a2, a3); }; });
  CLI::App* c_cl = leaf(corr, "classify", "Properness and tightness");
  c_cl->add_option("file", a1)->required();
  c_cl->callback([&] { command = "corr classify"; action = [&] { return corr_classify(a1); }; });

  CLI::App* comp = leaf(&app, "compose", "Compose two correspondences");
  comp->add_option("X", a1)->required();
  comp->add_option("Y", a2)->required();
  comp->add_option("-o,--output", output, "Write the composite here");
  comp->callback([&] { command = "compose"; action = [&] { return compose_cmd(a1, a2, output); }; });

  CLI::App* coh = leaf(&app, "coherence", "Unitor, associator, triangle and pentagon checks");
  coh->add_option("files", files)->required()->expected(2, 4);
  coh->callback([&] { command = "coherence"; action = [&] { return coherence_cmd(files); }; });

  CLI::App* alg = app.add_subcommand("algebra", "Convolution algebra tools")->require_subcommand(1);
  CLI::App* a_norm = leaf(alg, "norm", "Operator norm in the regular representation");
  a_norm->add_option("groupoid", a1)->required();
  a_norm->add_option("element", a2)->required();
  a_norm->callback([&] { command = "algebra norm"; action = [&] { return algebra_norm(a1, a2); }; });
  CLI::App* a_tab = leaf(alg, "table", "Structure constants on the delta basis");
  a_tab->add_option("groupoid", a1)->required();
  a_tab->callback([&] { command = "algebra table"; action = [&] { return algebra_table(a1); }; });

  CLI::App* mod = app.add_subcommand("module", "Hilbert module tools")->require_subcommand(1);
  CLI::App* m_in = leaf(mod, "inner", "Inner product of two module elements");
  m_in->add_option("corr", a1)->required();
  m_in->add_option("xi", a2)->required();
  m_in->add_option("eta", a3)->required();
  m_in->callback([&] { command = "module inner"; action = [&] { return module_inner(a1, a2, a3); }; });
  CLI::App* m_pos = leaf(mod, "positivity", "Sum-of-squares witness for <xi|xi>");
  m_pos->add_option("corr", a1)->required();
  m_pos->add_option("xi", a2)->required();
  m_pos->callback([&] { command = "module positivity"; action = [&] { return module_positivity(a1, a2); }; });
  CLI::App* m_mu = leaf(mod, "mu", "Tensor product map into the composite");
  m_mu->add_option("X", a1)->required();
  m_mu->add_option("Y", a2)->required();
  m_mu->add_option("tensor", a3)->required();
  m_mu->callback([&] { command = "module mu"; action = [&] { return module_mu(a1, a2, a3); }; });

  CLI::App* con = app.add_subcommand("conduche", "Conduché fibrations")->require_subcommand(1);
  CLI::App* k_chk = leaf(con, "check", "Unique factorization lifting");
  k_chk->add_option("file", a1)->required();
  k_chk->callback([&] { command = "conduche check"; action = [&] { return conduche_check(a1); }; });
  CLI::App* k_pre = leaf(con, "present", "Generators and relations");
  k_pre->add_option("file", a1)->required();
  k_pre->callback([&] { command = "conduche present"; action = [&] { return conduche_present(a1); }; });

  CLI::App* kg = app.add_subcommand("kgraph", "Higher-rank graphs")->require_subcommand(1);
  CLI::App* g_chk = leaf(kg, "check", "Factorization, hexagon and product-system checks");
  g_chk->add_option("file", a1)->required();
  g_chk->callback([&] { command = "kgraph check"; action = [&] { return kgraph_check(a1); }; });
  CLI::App* g_pre = leaf(kg, "present", "Generators and relations on vertices and edges");
  g_pre->add_option("file", a1)->required();
  g_pre->callback([&] { command = "kgraph present"; action = [&] { return kgraph_present(a1); }; });

  CLI::App* ss = app.add_subcommand("selfsim", "Self-similar actions")->require_subcommand(1);
  CLI::App* s_act = leaf(ss, "act", "Act on a word");
  s_act->add_option("file", a1)->required();
  s_act->add_option("group_word", a2)->required();
  s_act->add_option("word", a3)->required();
  s_act->callback([&] { command = "selfsim act"; action = [&] { return selfsim_act(a1, a2, a3); }; });
  CLI::App* s_coc = leaf(ss, "cocycle", "Check the cocycle identity");
  s_coc->add_option("file", a1)->required();
  s_coc->add_option("--depth", depth, "Word length for automata")->check(CLI::Range(1, 16));
  s_coc->callback([&] { command = "selfsim cocycle"; action = [&] { return selfsim_cocycle(a1, depth); }; });
  CLI::App* s_fai = leaf(ss, "faithful", "List short words acting trivially");
  s_fai->add_option("file", a1)->required();
  s_fai->add_option("--length", length, "Maximum group word length")->check(CLI::Range(0, 8));
  s_fai->add_option("--depth", depth, "Word length tested")->check(CLI::Range(0, 12));
  s_fai->callback([&] {
    command = "selfsim faithful";
    if (s_fai->count("--depth") == 0) depth = 6;
    action = [&] { return selfsim_faithful(a1, length, depth); };
  });

  CLI::App* suite = leaf(&app, "suite", "Run invariant checks over a fixture directory");
  suite->add_option("dir", a1)->required();
  suite->add_option("--seed", seed, "Random seed (default 42, or GRPD_SEED)");
  suite->add_flag("--timing", timing, "Include per-fixture timings");
  suite->callback([&] {
    command = "suite";
    action = [&] {
      SuiteResult r = run_suite(a1, seed, timing);
      Outcome o;
      o.json = r.report;
      o.code = r.exit_code;
      for (const auto& c : r.report["checks"])
        o.text += (c["status"] == "pass" ? "PASS " : "FAIL ") + c["fixture"].get<std::string>() + " " +
                  c["check"].get<std::string>() + (c.contains("detail") ? " (" + c["detail"].get<std::string>() + ")" : "") +
                  "\n";
      if (timing)
        for (const auto& [file, ms] : r.report["timing_ms"].items()) o.text += "time " + file + " " + fixed(ms.get<double>(), 1) + " ms\n";
      o.text += std::string("suite: ") + (r.exit_code == 0 ? "pass" : "fail") + "\n";
      return o;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  int code = 0;
  Json report;
  try {
    Outcome o = action();
    code = o.code;
    if (json) {
      report = o.json;
      if (command != "suite") {
        report["command"] = command;
        report["status"] = code == 0 ? "pass" : "fail";
      }
    } else {
      out << o.text;
    }
  } catch (const Error& e) {
    code = is_input_error(e.kind()) ? 2 : 1;
    if (json)
      report = {{"command", command}, {"status", code == 1 ? "fail" : "error"}, {"error", error_json(e)}};
    else
      err << (code == 1 ? "validation failure: " : "input error: ") << e.what() << "\n";
  } catch (const std::exception& e) {
    code = 2;
    if (json)
      report = {{"command", command}, {"status", "error"}, {"error", {{"kind", "InputError"}, {"law", e.what()}}}};
    else
      err << "input error: " << e.what() << "\n";
  }
  if (json) out << report.dump(2) << "\n";
  return code;
}

}  // namespace grpd::cli
