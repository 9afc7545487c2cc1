#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lrb/poset.hpp"
#include "lrb/semigroup.hpp"

namespace lrb {

// Prefix-closed language of repetition-free words over single-character
// letters, with all maximal (basic) words of equal length. The empty word is
// labeled "-".
class GreedoidLanguage {
 public:
  static GreedoidLanguage from_basic_words(const std::vector<std::string>& basic);
  // Text file with one basic word per line, or a JSON array of strings.
  static GreedoidLanguage from_file(const std::string& path);

  const std::vector<std::string>& words() const { return words_; }  // sorted (length, lex)
  const std::vector<char>& alphabet() const { return alphabet_; }
  int word_rank() const { return rank_; }
  bool feasible(const std::string& word) const;
  std::vector<std::string> basic_words() const;

  // Weak exchange: longer feasible words lend a letter to shorter ones.
  bool exchange_holds() const;
  // Strong exchange: a violating pair (alpha, beta) if the language is not an
  // interval greedoid, nothing otherwise.
  std::optional<std::pair<std::string, std::string>> interval_violation() const;

  // Left-to-right composition: letters of the right word are appended when
  // feasibility (and repetition-freeness) survives.
  std::string compose(const std::string& a, const std::string& b) const;

  // Classes of equal feasible-continuation sets, ordered by reachability
  // ([a] <= [b] iff some feasible extension of a lands in [b]). Labels are
  // "[w]" for the first representative.
  FinitePoset flats_poset() const;
  std::vector<int> flat_of_words() const;  // word index -> flats_poset index

  // The word semigroup, with no axiom guarantees (used for counterexamples).
  LrbSemigroup word_semigroup() const;
  // Verified LRB over an interval greedoid, with the flats lattice as its
  // support. Throws StructureError (with the violating pair) otherwise.
  LrbSemigroup lrb() const;
  SupportStructure lrb_support(const LrbSemigroup& s) const;

  static std::string empty_label() { return "-"; }

 private:
  std::vector<std::string> words_;
  std::vector<char> alphabet_;
  int rank_ = 0;
  std::set<std::string> word_set_;
  mutable std::vector<int> flats_cache_;
  mutable std::optional<FinitePoset> flats_poset_cache_;
  void build_flats() const;
};

// Rooted digraph with uniquely labeled edges; node names are strings, edge
// labels single characters.
struct RootedDigraph {
  struct Edge {
    char label;
    std::string from, to;
  };
  std::string root;
  std::vector<std::string> nodes;
  std::vector<Edge> edges;

  static RootedDigraph from_json_text(const std::string& text);
  static RootedDigraph from_json_file(const std::string& path);
};

// Words whose prefixes grow a tree away from the root (each edge leaves the
// reached set and enters a new node).
GreedoidLanguage branching_greedoid(const RootedDigraph& g);

// Node sets of branchings, as sorted name lists.
std::vector<std::vector<std::string>> reachable_sets(const RootedDigraph& g);

// X plus everything one edge away from X u {root}. X must be reachable; every
// set between X and dom(X) is verified reachable.
std::vector<std::string> domination_set(const RootedDigraph& g,
                                        const std::vector<std::string>& reached);

// Per reachable set X: the number c_X of feasible completions to a basic
// word (checked independent of the representative), dom(X), and the
// inclusion-exclusion multiplicity m_X over the interval [X, dom(X)].
struct BranchingRow {
  std::vector<std::string> nodes;
  long long completions;  // c_X
  std::vector<std::string> dom;
  long long multiplicity;  // m_X
};
std::vector<BranchingRow> branching_spectrum_data(const RootedDigraph& g);

std::string node_set_label(const std::vector<std::string>& nodes);

}  // namespace lrb
