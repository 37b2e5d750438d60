#include "grpd/self_similar.hpp"

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

std::vector<std::string> sorted_unique(std::vector<std::string> ids, const char* what) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) input_error(std::string("duplicate ") + what);
  return ids;
}

std::vector<Word> all_words(std::size_t alphabet, int length) {
  std::vector<Word> out{{}};
  for (int i = 0; i < length; ++i) {
    std::vector<Word> next;
    for (const Word& w : out)
      for (Index x = 0; x < alphabet; ++x) {
        next.push_back(w);
        next.back().push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

GroupWord reduce(GroupWord g) {
  GroupWord out;
  for (const Letter& l : g) {
    if (!out.empty() && out.back().generator == l.generator && out.back().inverse != l.inverse)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

GroupWord inverse(const GroupWord& g) {
  GroupWord out(g.rbegin(), g.rend());
  for (Letter& l : out) l.inverse = !l.inverse;
  return out;
}

SelfSimilarAction SelfSimilarAction::finite(const FiniteActionSpec& spec) {
  check_self_similar(spec.group, spec.alphabet, spec.pi, spec.phi);
  SelfSimilarAction a;
  a.group_ = spec.group;
  a.finite_spec_ = spec;
  const FiniteGroupoid& G = *spec.group;
  a.alphabet_ = sorted_unique(spec.alphabet, "letter");
  a.generators_ = G.arrow_names();
  const std::size_t k = a.alphabet_.size();
  a.perm_.assign(G.num_arrows() * k, kNone);
  a.inverse_perm_.assign(G.num_arrows() * k, kNone);
  a.restrict_.assign(G.num_arrows() * k, {});
  for (Index g = 0; g < G.num_arrows(); ++g)
    for (Index x = 0; x < k; ++x) {
      Index y = *lookup(a.alphabet_, spec.pi.at({G.arrow_name(g), a.alphabet_[x]}));
      a.perm_[g * k + x] = y;
      a.inverse_perm_[g * k + y] = x;
      Index h = G.arrow(spec.phi.at({G.arrow_name(g), a.alphabet_[x]}));
      if (!G.is_unit(h)) a.restrict_[g * k + x] = {Letter{h, false}};
    }
  return a;
}

SelfSimilarAction SelfSimilarAction::automaton(const AutomatonSpec& spec) {
  SelfSimilarAction a;
  a.alphabet_ = sorted_unique(spec.alphabet, "letter");
  a.generators_ = sorted_unique(spec.generators, "generator");
  const std::size_t k = a.alphabet_.size();
  const std::size_t m = a.generators_.size();
  a.perm_.assign(m * k, kNone);
  a.inverse_perm_.assign(m * k, kNone);
  a.restrict_.assign(m * k, {});
  for (Index s = 0; s < m; ++s) {
    const std::string& name = a.generators_[s];
    auto perm = spec.perm.find(name);
    auto rest = spec.restrict.find(name);
    if (perm == spec.perm.end() || rest == spec.restrict.end())
      input_error("generator '" + name + "' needs perm and restrict");
    for (const auto& [x, y] : perm->second) {
      Index from = a.parse_word({x}).front();
      Index to = a.parse_word({y}).front();
      a.perm_[s * k + from] = to;
      if (a.inverse_perm_[s * k + to] != kNone) input_error("perm of '" + name + "' is not a bijection");
      a.inverse_perm_[s * k + to] = from;
    }
    for (Index x = 0; x < k; ++x)
      if (a.perm_[s * k + x] == kNone) input_error("perm of '" + name + "' is not total");
    for (const auto& [x, tokens] : rest->second) a.restrict_[s * k + a.parse_word({x}).front()] = reduce(a.parse_group_word(tokens));
    if (rest->second.size() != k) input_error("restrict of '" + name + "' is not total");
  }
  for (const auto& [name, unused] : spec.perm)
    if (!lookup(a.generators_, name)) input_error("perm names unknown generator '" + name + "'");
  for (const auto& [name, unused] : spec.restrict)
    if (!lookup(a.generators_, name)) input_error("restrict names unknown generator '" + name + "'");
  return a;
}

Word SelfSimilarAction::parse_word(const std::vector<std::string>& letters) const {
  Word out;
  for (const auto& l : letters) {
    auto x = lookup(alphabet_, l);
    if (!x) fail(ErrorKind::kUnknownLetter, "word", {l});
    out.push_back(*x);
  }
  return out;
}

GroupWord SelfSimilarAction::parse_group_word(const std::vector<std::string>& tokens) const {
  GroupWord out;
  for (const auto& t : tokens) {
    bool inv = t.size() > 3 && t.compare(t.size() - 3, 3, "^-1") == 0;
    std::string base = inv ? t.substr(0, t.size() - 3) : t;
    auto s = lookup(generators_, base);
    if (!s) fail(ErrorKind::kUnknownLetter, "group word", {t});
    out.push_back({*s, inv});
  }
  return out;
}

std::string SelfSimilarAction::format_word(const Word& w) const {
  bool single = std::all_of(alphabet_.begin(), alphabet_.end(), [](const std::string& l) { return l.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i && !single ? "," : "") + alphabet_[w[i]];
  return out;
}

std::string SelfSimilarAction::format_group_word(const GroupWord& g) const {
  if (g.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i)
    out += (i ? " " : "") + generators_[g[i].generator] + (g[i].inverse ? "^-1" : "");
  return out;
}

Index SelfSimilarAction::pi(Letter s, Index x) const {
  const std::size_t k = alphabet_.size();
  return s.inverse ? inverse_perm_[s.generator * k + x] : perm_[s.generator * k + x];
}

GroupWord SelfSimilarAction::restriction(Letter s, Index x) const {
  const std::size_t k = alphabet_.size();
  if (!s.inverse) return restrict_[s.generator * k + x];
  // e = (s s^-1)|x = s|(s^-1 x) · s^-1|x
  return inverse(restrict_[s.generator * k + inverse_perm_[s.generator * k + x]]);
}

std::pair<Index, GroupWord> act_on_letter(const SelfSimilarAction& a, const GroupWord& g, Index x) {
  GroupWord rest;
  for (auto it = g.rbegin(); it != g.rend(); ++it) {
    GroupWord r = a.restriction(*it, x);
    rest.insert(rest.begin(), r.begin(), r.end());
    x = a.pi(*it, x);
  }
  return {x, reduce(std::move(rest))};
}

Word act_on_word(const SelfSimilarAction& a, const GroupWord& g, const Word& w) {
  std::map<std::pair<GroupWord, Index>, std::pair<Index, GroupWord>> memo;
  GroupWord state = reduce(g);
  Word out;
  for (Index x : w) {
    if (x >= a.alphabet().size()) fail(ErrorKind::kUnknownLetter, "word", {std::to_string(x)});
    auto key = std::make_pair(state, x);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, act_on_letter(a, state, x)).first;
    out.push_back(it->second.first);
    state = it->second.second;
  }
  return out;
}

namespace {

// Applies generators one at a time, right to left, recursing on restrictions
// without memoisation or reduction.
Word apply_sequential(const SelfSimilarAction& a, const GroupWord& g, Word w);

Word apply_generator(const SelfSimilarAction& a, Letter s, const Word& w) {
  if (w.empty()) return w;
  Word out{a.pi(s, w.front())};
  Word tail = apply_sequential(a, a.restriction(s, w.front()), Word(w.begin() + 1, w.end()));
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

Word apply_sequential(const SelfSimilarAction& a, const GroupWord& g, Word w) {
  for (auto it = g.rbegin(); it != g.rend(); ++it) w = apply_generator(a, *it, w);
  return w;
}

}  // namespace

CocycleReport check_cocycle(const SelfSimilarAction& a, int depth) {
  CocycleReport report;
  if (a.is_finite()) {
    const FiniteActionSpec& spec = a.finite_spec();
    check_self_similar(spec.group, spec.alphabet, spec.pi, spec.phi);
    report.exact = true;
    report.checks = spec.group->num_arrows() * spec.group->num_arrows() * a.alphabet().size();
    return report;
  }
  report.depth = depth;
  std::vector<Letter> letters;
  for (Index s = 0; s < a.generators().size(); ++s) {
    letters.push_back({s, false});
    letters.push_back({s, true});
  }
  const std::vector<Word> tails = all_words(a.alphabet().size(), std::max(depth - 1, 0));
  for (Letter h1 : letters)
    for (Letter h2 : letters)
      for (Index x = 0; x < a.alphabet().size(); ++x) {
        ++report.checks;
        auto [y, rest] = act_on_letter(a, {h1, h2}, x);
        // h1|(h2 x) · h2|x from the individual restrictions.
        GroupWord expected = a.restriction(h1, a.pi(h2, x));
        GroupWord r2 = a.restriction(h2, x);
        expected.insert(expected.end(), r2.begin(), r2.end());
        auto witness = [&] {
          return std::vector<std::string>{a.format_group_word({h1}), a.format_group_word({h2}), a.alphabet()[x]};
        };
        if (y != a.pi(h1, a.pi(h2, x))) fail(ErrorKind::kCocycleViolation, "cocycle", witness());
        for (const Word& tail : tails) {
          Word full{x};
          full.insert(full.end(), tail.begin(), tail.end());
          Word direct = apply_sequential(a, {h1, h2}, full);
          Word via = act_on_word(a, rest, tail);
          Word split = act_on_word(a, expected, tail);
          if (direct.front() != y || !std::equal(via.begin(), via.end(), direct.begin() + 1) || via != split)
            fail(ErrorKind::kCocycleViolation, "cocycle", witness());
        }
      }
  return report;
}

FaithfulnessReport faithfulness_report(const SelfSimilarAction& a, int max_length, int depth) {
  FaithfulnessReport report{max_length, depth, {}};
  const std::vector<Word> words = all_words(a.alphabet().size(), depth);
  auto trivial = [&](const GroupWord& g) {
    for (const Word& w : words)
      if (act_on_word(a, g, w) != w) return false;
    return true;
  };
  if (a.is_finite()) {
    const FiniteGroupoid& G = *a.group();
    for (Index g = 0; g < G.num_arrows(); ++g)
      if (!G.is_unit(g) && trivial({Letter{g, false}})) report.trivial_words.push_back(G.arrow_name(g));
    return report;
  }
  GroupWord current;
  std::function<void()> extend = [&] {
    if (!current.empty() && trivial(current)) report.trivial_words.push_back(a.format_group_word(current));
    if (static_cast<int>(current.size()) == max_length) return;
    for (Index s = 0; s < a.generators().size(); ++s)
      for (bool inv : {false, true}) {
        Letter l{s, inv};
        if (!current.empty() && current.back().generator == s && current.back().inverse != inv) continue;
        current.push_back(l);
        extend();
        current.pop_back();
      }
  };
  extend();
  return report;
}

CorrRef to_correspondence(const SelfSimilarAction& a) {
  if (!a.is_finite()) fail(ErrorKind::kInfiniteGroup, "to_correspondence");
  const FiniteActionSpec& spec = a.finite_spec();
  return self_similar_group_correspondence(spec.group, spec.alphabet, spec.pi, spec.phi);
}

}  // namespace grpd
