#include "lrb/greedoid.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "lrb/errors.hpp"

namespace lrb {

namespace {

bool word_order(const std::string& a, const std::string& b) {
  return std::make_pair(a.size(), a) < std::make_pair(b.size(), b);
}

}  // namespace

GreedoidLanguage GreedoidLanguage::from_basic_words(const std::vector<std::string>& basic) {
  GreedoidLanguage g;
  if (basic.empty()) throw StructureError("language needs at least one basic word");
  std::set<char> letters;
  for (const auto& w : basic) {
    std::set<char> seen;
    for (char c : w) {
      if (c == '-' || !std::isgraph(static_cast<unsigned char>(c)))
        throw ParseError(std::string("bad letter: ") + c);
      if (!seen.insert(c).second) throw StructureError("repeated letter in word " + w);
      letters.insert(c);
    }
    for (size_t k = 0; k <= w.size(); ++k) g.word_set_.insert(w.substr(0, k));
  }
  g.rank_ = static_cast<int>(basic.front().size());
  for (const auto& w : basic)
    if (static_cast<int>(w.size()) != g.rank_)
      throw StructureError("basic words of unequal length: " + w);
  // No longer word may extend a basic one (they are maximal by definition of
  // prefixes), but a shorter maximal word would violate equal basic length.
  g.words_.assign(g.word_set_.begin(), g.word_set_.end());
  std::sort(g.words_.begin(), g.words_.end(), word_order);
  g.alphabet_.assign(letters.begin(), letters.end());
  for (const auto& w : g.words_) {
    if (static_cast<int>(w.size()) == g.rank_) continue;
    bool extendable = false;
    for (char c : g.alphabet_)
      if (g.word_set_.count(w + c)) {
        extendable = true;
        break;
      }
    if (!extendable) throw StructureError("maximal word of non-basic length: " + w);
  }
  return g;
}

GreedoidLanguage GreedoidLanguage::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  std::vector<std::string> basic;
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad language JSON: ") + e.what());
    }
    for (const auto& w : j) basic.push_back(w.get<std::string>());
  } else {
    std::stringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (!line.empty()) basic.push_back(line);
    }
  }
  return from_basic_words(basic);
}

bool GreedoidLanguage::feasible(const std::string& word) const {
  return word_set_.count(word == empty_label() ? "" : word) > 0;
}

std::vector<std::string> GreedoidLanguage::basic_words() const {
  std::vector<std::string> out;
  for (const auto& w : words_)
    if (static_cast<int>(w.size()) == rank_) out.push_back(w);
  return out;
}

bool GreedoidLanguage::exchange_holds() const {
  for (const auto& a : words_)
    for (const auto& b : words_) {
      if (a.size() <= b.size()) continue;
      bool found = false;
      for (char c : a)
        if (word_set_.count(b + c)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

std::optional<std::pair<std::string, std::string>> GreedoidLanguage::interval_violation()
    const {
  for (const auto& a : words_)
    for (const auto& b : words_) {
      if (a.size() <= b.size()) continue;
      size_t need = a.size() - b.size();
      // Subwords of a with `need` letters, in lexicographic position order.
      std::vector<int> pick(need);
      std::function<bool(size_t, size_t)> search = [&](size_t idx, size_t from) {
        if (idx == need) {
          std::string w = b;
          for (size_t i = 0; i < need; ++i) w += a[pick[i]];
          return word_set_.count(w) > 0;
        }
        for (size_t pos = from; pos + (need - idx) <= a.size(); ++pos) {
          pick[idx] = static_cast<int>(pos);
          if (search(idx + 1, pos + 1)) return true;
        }
        return false;
      };
      if (!search(0, 0)) return std::make_pair(a, b);
    }
  return std::nullopt;
}

std::string GreedoidLanguage::compose(const std::string& a, const std::string& b) const {
  std::string left = (a == empty_label()) ? "" : a;
  std::string right = (b == empty_label()) ? "" : b;
  if (!word_set_.count(left)) throw DomainError("infeasible word: " + a);
  if (!word_set_.count(right)) throw DomainError("infeasible word: " + b);
  std::string out = left;
  for (char c : right) {
    if (out.find(c) != std::string::npos) continue;
    if (word_set_.count(out + c)) out += c;
  }
  return out;
}

void GreedoidLanguage::build_flats() const {
  if (flats_poset_cache_) return;
  int n = static_cast<int>(words_.size());
  // Continuation set of each word, as sorted index lists.
  std::vector<std::vector<int>> continuations(n);
  std::map<std::string, int> id;
  for (int i = 0; i < n; ++i) id[words_[i]] = i;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::string& w = words_[j];
      if (w.size() < words_[i].size()) continue;
      if (w.compare(0, words_[i].size(), words_[i]) != 0) continue;
      continuations[i].push_back(j);  // continuation = suffix after the prefix
    }
  }
  // Two words are equivalent iff the suffix sets agree.
  std::vector<std::vector<std::string>> suffixes(n);
  for (int i = 0; i < n; ++i)
    for (int j : continuations[i])
      suffixes[i].push_back(words_[j].substr(words_[i].size()));
  for (auto& s : suffixes) std::sort(s.begin(), s.end());
  flats_cache_.assign(n, -1);
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    for (size_t c = 0; c < reps.size(); ++c)
      if (suffixes[i] == suffixes[reps[c]]) {
        flats_cache_[i] = static_cast<int>(c);
        break;
      }
    if (flats_cache_[i] < 0) {
      flats_cache_[i] = static_cast<int>(reps.size());
      reps.push_back(i);
    }
  }
  int m = static_cast<int>(reps.size());
  std::vector<std::string> labels(m);
  for (int c = 0; c < m; ++c)
    labels[c] = "[" + (words_[reps[c]].empty() ? empty_label() : words_[reps[c]]) + "]";
  // [a] <= [b] iff some feasible continuation of a lands in [b].
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (int i = 0; i < n; ++i)
    for (int j : continuations[i]) leq[flats_cache_[i]][flats_cache_[j]] = true;
  flats_poset_cache_ = FinitePoset::from_predicate(
      labels, [leq](int a, int b) { return leq[a][b]; });
}

FinitePoset GreedoidLanguage::flats_poset() const {
  build_flats();
  return *flats_poset_cache_;
}

std::vector<int> GreedoidLanguage::flat_of_words() const {
  build_flats();
  return flats_cache_;
}

LrbSemigroup GreedoidLanguage::word_semigroup() const {
  std::vector<std::string> labels;
  std::map<std::string, int> id;
  for (size_t i = 0; i < words_.size(); ++i) {
    labels.push_back(words_[i].empty() ? empty_label() : words_[i]);
    id[words_[i]] = static_cast<int>(i);
  }
  auto words = words_;
  auto self = *this;
  return LrbSemigroup(std::move(labels), id.at(""), [self, words, id](int a, int b) {
    return id.at(self.compose(words[a], words[b]));
  });
}

LrbSemigroup GreedoidLanguage::lrb() const {
  if (!exchange_holds()) throw StructureError("exchange axiom fails");
  if (auto v = interval_violation())
    throw StructureError("not an interval greedoid: no subword of " + v->first +
                         " extends " + (v->second.empty() ? empty_label() : v->second));
  LrbSemigroup s = word_semigroup();
  LrbVerifyReport rep = s.verify();
  if (!rep.ok()) throw StructureError("word composition is not an LRB:\n" + rep.summary());
  return s;
}

SupportStructure GreedoidLanguage::lrb_support(const LrbSemigroup& s) const {
  FinitePoset flats = flats_poset();
  FiniteLattice claimed = FiniteLattice::from_poset(flats);
  auto flat_of = flat_of_words();
  std::vector<int> supp(s.size());
  for (int i = 0; i < s.size(); ++i) {
    std::string w = s.label(i) == empty_label() ? "" : s.label(i);
    auto it = std::lower_bound(words_.begin(), words_.end(), w, word_order);
    supp[i] = flat_of[static_cast<int>(it - words_.begin())];
  }
  return s.build_support_checked(claimed, supp);
}

RootedDigraph RootedDigraph::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad digraph JSON: ") + e.what());
  }
  if (!j.contains("root") || !j.contains("edges"))
    throw ParseError("digraph JSON needs \"root\" and \"edges\"");
  RootedDigraph g;
  g.root = j["root"].get<std::string>();
  std::set<std::string> nodes{g.root};
  std::set<char> labels;
  for (const auto& e : j["edges"]) {
    std::string label = e.at("label").get<std::string>();
    if (label.size() != 1) throw ParseError("edge labels must be single characters: " + label);
    if (!labels.insert(label[0]).second) throw ParseError("duplicate edge label: " + label);
    RootedDigraph::Edge edge{label[0], e.at("from").get<std::string>(),
                             e.at("to").get<std::string>()};
    nodes.insert(edge.from);
    nodes.insert(edge.to);
    g.edges.push_back(std::move(edge));
  }
  g.nodes.assign(nodes.begin(), nodes.end());
  return g;
}

RootedDigraph RootedDigraph::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

namespace {

void grow_branchings(const RootedDigraph& g, std::set<std::string>& reached, std::string& word,
                     std::vector<std::string>& all, size_t cap) {
  all.push_back(word);
  if (all.size() > cap) throw CapacityError("branching language too large");
  for (const auto& e : g.edges) {
    if (!reached.count(e.from) || reached.count(e.to)) continue;
    reached.insert(e.to);
    word.push_back(e.label);
    grow_branchings(g, reached, word, all, cap);
    word.pop_back();
    reached.erase(e.to);
  }
}

}  // namespace

GreedoidLanguage branching_greedoid(const RootedDigraph& g) {
  std::set<std::string> reached{g.root};
  std::string word;
  std::vector<std::string> all;
  grow_branchings(g, reached, word, all, 100000);
  size_t rank = 0;
  for (const auto& w : all) rank = std::max(rank, w.size());
  std::vector<std::string> basic;
  for (const auto& w : all)
    if (w.size() == rank) basic.push_back(w);
  return GreedoidLanguage::from_basic_words(basic);
}

std::vector<std::vector<std::string>> reachable_sets(const RootedDigraph& g) {
  std::set<std::vector<std::string>> sets;
  std::set<std::string> reached{g.root};
  std::function<void()> grow = [&]() {
    std::vector<std::string> key;
    for (const auto& v : reached)
      if (v != g.root) key.push_back(v);
    if (!sets.insert(key).second) return;
    for (const auto& e : g.edges) {
      if (!reached.count(e.from) || reached.count(e.to)) continue;
      reached.insert(e.to);
      grow();
      reached.erase(e.to);
    }
  };
  grow();
  return {sets.begin(), sets.end()};
}

std::vector<std::string> domination_set(const RootedDigraph& g,
                                        const std::vector<std::string>& reached) {
  auto all = reachable_sets(g);
  std::vector<std::string> sorted = reached;
  std::sort(sorted.begin(), sorted.end());
  if (std::find(all.begin(), all.end(), sorted) == all.end())
    throw DomainError("set is not reachable: " + node_set_label(sorted));
  std::set<std::string> dom(sorted.begin(), sorted.end());
  std::set<std::string> from(sorted.begin(), sorted.end());
  from.insert(g.root);
  for (const auto& e : g.edges)
    if (from.count(e.from) && !from.count(e.to)) dom.insert(e.to);
  std::vector<std::string> extra;
  for (const auto& v : dom)
    if (!std::binary_search(sorted.begin(), sorted.end(), v)) extra.push_back(v);
  // Every set between reached and dom must itself be reachable.
  for (uint32_t mask = 0; mask < (1u << extra.size()); ++mask) {
    std::vector<std::string> candidate = sorted;
    for (size_t i = 0; i < extra.size(); ++i)
      if (mask & (1u << i)) candidate.push_back(extra[i]);
    std::sort(candidate.begin(), candidate.end());
    if (std::find(all.begin(), all.end(), candidate) == all.end())
      throw StructureError("interval below the domination set is not reachable");
  }
  return {dom.begin(), dom.end()};
}

std::string node_set_label(const std::vector<std::string>& nodes) {
  if (nodes.empty()) return "{}";
  std::string out;
  for (const auto& v : nodes) {
    if (!out.empty()) out += ",";
    out += v;
  }
  return out;
}

std::vector<BranchingRow> branching_spectrum_data(const RootedDigraph& g) {
  GreedoidLanguage lang = branching_greedoid(g);
  std::map<char, const RootedDigraph::Edge*> edge_of;
  for (const auto& e : g.edges) edge_of[e.label] = &e;
  auto nodes_of_word = [&](const std::string& w) {
    std::vector<std::string> nodes;
    for (char c : w) nodes.push_back(edge_of.at(c)->to);
    std::sort(nodes.begin(), nodes.end());
    return nodes;
  };
  // c_X: completions to a basic word, checked across every representative.
  std::map<std::vector<std::string>, long long> completions;
  for (const auto& w : lang.words()) {
    long long c = 0;
    for (const auto& b : lang.basic_words()) {
      if (b.size() < w.size()) continue;
      if (b.compare(0, w.size(), w) == 0) ++c;
    }
    auto key = nodes_of_word(w);
    auto it = completions.find(key);
    if (it == completions.end())
      completions[key] = c;
    else if (it->second != c)
      throw StructureError("completion count depends on the representative at " +
                           node_set_label(key));
  }
  std::vector<BranchingRow> rows;
  for (const auto& [nodes, c] : completions) {
    auto dom = domination_set(g, nodes);
    std::vector<std::string> extra;
    for (const auto& v : dom)
      if (!std::binary_search(nodes.begin(), nodes.end(), v)) extra.push_back(v);
    long long m = 0;
    for (uint32_t mask = 0; mask < (1u << extra.size()); ++mask) {
      std::vector<std::string> y = nodes;
      int added = 0;
      for (size_t i = 0; i < extra.size(); ++i)
        if (mask & (1u << i)) {
          y.push_back(extra[i]);
          ++added;
        }
      std::sort(y.begin(), y.end());
      auto it = completions.find(y);
      if (it == completions.end())
        throw StructureError("unreachable set inside a domination interval");
      m += ((added % 2 == 0) ? 1 : -1) * it->second;
    }
    rows.push_back({nodes, c, dom, m});
  }
  std::sort(rows.begin(), rows.end(), [](const BranchingRow& a, const BranchingRow& b) {
    return std::make_pair(a.nodes.size(), node_set_label(a.nodes)) <
           std::make_pair(b.nodes.size(), node_set_label(b.nodes));
  });
  return rows;
}

}  // namespace lrb
