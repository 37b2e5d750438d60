#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grpd/correspondence.hpp"

namespace grpd {

// A generator token: index into SelfSimilarAction::generators(), inverted or not.
struct Letter {
  Index generator;
  bool inverse = false;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using GroupWord = std::vector<Letter>;  // product, applied right to left
using Word = std::vector<Index>;        // over the alphabet

// Restriction data for an automaton generator: letter -> group word.
struct AutomatonSpec {
  std::vector<std::string> alphabet;
  std::vector<std::string> generators;
  std::map<std::string, std::map<std::string, std::string>> perm;
  std::map<std::string, std::map<std::string, std::vector<std::string>>> restrict;  // tokens "s" or "s^-1"
};

struct FiniteActionSpec {
  GroupoidRef group;
  std::vector<std::string> alphabet;
  PairMap pi;
  PairMap phi;
};

// A self-similar action on words over a finite alphabet, given either by a
// finite group with (pi, phi) tables or by an automaton. For finite groups
// the generators are the group elements.
class SelfSimilarAction {
 public:
  static SelfSimilarAction finite(const FiniteActionSpec& spec);
  static SelfSimilarAction automaton(const AutomatonSpec& spec);

  bool is_finite() const { return group_ != nullptr; }
  const GroupoidRef& group() const { return group_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<std::string>& generators() const { return generators_; }

  Word parse_word(const std::vector<std::string>& letters) const;        // throws UnknownLetter
  GroupWord parse_group_word(const std::vector<std::string>& tokens) const;  // throws UnknownLetter
  std::string format_word(const Word& w) const;
  std::string format_group_word(const GroupWord& g) const;

  Index pi(Letter s, Index x) const;
  GroupWord restriction(Letter s, Index x) const;  // s|x, freely reduced

  const FiniteActionSpec& finite_spec() const { return finite_spec_; }

 private:
  GroupoidRef group_;
  FiniteActionSpec finite_spec_;
  std::vector<std::string> alphabet_, generators_;
  std::vector<Index> perm_, inverse_perm_;  // generator * |A| + x
  std::vector<GroupWord> restrict_;         // generator * |A| + x
};

GroupWord reduce(GroupWord g);
GroupWord inverse(const GroupWord& g);

// g·(x w) = g(x) (g|x · w), letter by letter with memoised restrictions.
Word act_on_word(const SelfSimilarAction& a, const GroupWord& g, const Word& w);

// {g(x), g|x} for a whole group word.
std::pair<Index, GroupWord> act_on_letter(const SelfSimilarAction& a, const GroupWord& g, Index x);

struct CocycleReport {
  bool exact = false;  // finite group: decided exactly
  int depth = 0;       // automaton: checked on words up to this length
  std::size_t checks = 0;
};

// Throws CocycleViolation(h1, h2, x) or NotAnAction. For automata the
// restriction of a product is compared against the direct action on all
// words of length < depth.
CocycleReport check_cocycle(const SelfSimilarAction& a, int depth = 8);

struct FaithfulnessReport {
  int max_length = 0;
  int depth = 0;
  std::vector<std::string> trivial_words;  // nonempty reduced words acting trivially
};

FaithfulnessReport faithfulness_report(const SelfSimilarAction& a, int max_length, int depth);

// Throws InfiniteGroup for automaton actions.
CorrRef to_correspondence(const SelfSimilarAction& a);

}  // namespace grpd
