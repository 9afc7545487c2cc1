#include <doctest.h>

#include <algorithm>

#include "lrb/errors.hpp"
#include "lrb/greedoid.hpp"
#include "lrb/poset.hpp"
#include "test_util.hpp"

using namespace lrb;

namespace {

// Length-3 repetition-free words over {x,y,z,w} that neither are a
// permutation of {x,y,z} nor start with zw or wz.
GreedoidLanguage fourteen_word_language() {
  std::string letters = "xyzw";
  std::vector<std::string> basic;
  for (char a : letters)
    for (char b : letters)
      for (char c : letters) {
        if (a == b || a == c || b == c) continue;
        std::string w{a, b, c};
        bool xyz_perm = w.find('w') == std::string::npos;
        bool zw_start = (w[0] == 'z' && w[1] == 'w') || (w[0] == 'w' && w[1] == 'z');
        if (!xyz_perm && !zw_start) basic.push_back(w);
      }
  REQUIRE(basic.size() == 14);
  return GreedoidLanguage::from_basic_words(basic);
}

RootedDigraph example_digraph() {
  RootedDigraph g;
  g.root = "r";
  g.nodes = {"1", "2", "3", "r"};
  g.edges = {{'a', "r", "1"}, {'b', "r", "3"}, {'c', "1", "2"}, {'e', "1", "3"},
             {'d', "3", "2"}};
  return g;
}

}  // namespace

TEST_CASE("the fourteen-word language breaks associativity at (x, z, w)") {
  GreedoidLanguage g = fourteen_word_language();
  CHECK(g.exchange_holds());
  CHECK(g.compose("x", "yzw") == "xyw");
  CHECK(g.compose(g.compose("x", "z"), "w") == "xzw");
  CHECK(g.compose("x", g.compose("z", "w")) == "xz");

  auto rep = g.word_semigroup().verify();
  CHECK(rep.has_identity);
  CHECK(rep.idempotent);
  CHECK_FALSE(rep.associative);

  CHECK(g.interval_violation().has_value());
  CHECK_THROWS_AS(g.lrb(), StructureError);
}

TEST_CASE("branching language of the five-edge digraph") {
  GreedoidLanguage g = branching_greedoid(example_digraph());
  CHECK(g.basic_words() == std::vector<std::string>{"abc", "abd", "acb", "ace", "aec",
                                                    "aed", "bac", "bad", "bda"});
  CHECK(g.words().size() == 17);
  CHECK(g.exchange_holds());
  CHECK_FALSE(g.interval_violation().has_value());
  CHECK(g.compose("a", "bda") == "abd");

  LrbSemigroup s = g.lrb();
  CHECK(s.verify().ok());
  SupportStructure sup = g.lrb_support(s);
  CHECK(sup.lattice.size() == 7);
  CHECK(check_semimodular(sup.lattice));
}

TEST_CASE("flats posets") {
  GreedoidLanguage g = branching_greedoid(example_digraph());
  FinitePoset flats = g.flats_poset();
  CHECK(flats.size() == 7);
  // Reachable node sets under inclusion: everything but {2}.
  auto sets = reachable_sets(example_digraph());
  CHECK(sets.size() == 7);
  std::vector<std::string> labels;
  for (const auto& s : sets) labels.push_back(node_set_label(s));
  FinitePoset by_inclusion = FinitePoset::from_predicate(labels, [&](int a, int b) {
    return std::includes(sets[b].begin(), sets[b].end(), sets[a].begin(), sets[a].end());
  });
  CHECK(find_isomorphism(flats, by_inclusion).has_value());

  // The rank-1 matroid on two parallel elements has a two-chain of flats.
  GreedoidLanguage u12 = GreedoidLanguage::from_basic_words({"a", "b"});
  CHECK(u12.flats_poset().size() == 2);

  // The rank-2 uniform matroid on three elements: bottom, three points, top.
  GreedoidLanguage u23 =
      GreedoidLanguage::from_basic_words({"ab", "ac", "ba", "bc", "ca", "cb"});
  CHECK_FALSE(u23.interval_violation().has_value());
  CHECK(u23.flats_poset().size() == 5);

  GreedoidLanguage single = GreedoidLanguage::from_basic_words({"a"});
  CHECK(single.flats_poset().size() == 2);
}

TEST_CASE("domination sets") {
  RootedDigraph g = example_digraph();
  CHECK(domination_set(g, {}) == std::vector<std::string>{"1", "3"});
  CHECK(domination_set(g, {"1"}) == std::vector<std::string>{"1", "2", "3"});
  CHECK(domination_set(g, {"1", "2", "3"}) == std::vector<std::string>{"1", "2", "3"});
  CHECK_THROWS_AS(domination_set(g, {"2"}), DomainError);
}

TEST_CASE("branching spectrum data matches the hand table") {
  auto rows = branching_spectrum_data(example_digraph());
  REQUIRE(rows.size() == 7);
  auto find = [&](const std::string& label) {
    for (const auto& r : rows)
      if (node_set_label(r.nodes) == label) return r;
    throw DomainError("missing row " + label);
  };
  auto check_row = [&](const std::string& label, long long c, const std::string& dom,
                       long long m) {
    auto r = find(label);
    CHECK(r.completions == c);
    CHECK(node_set_label(r.dom) == dom);
    CHECK(r.multiplicity == m);
  };
  check_row("{}", 9, "1,3", 2);
  check_row("1", 6, "1,2,3", 3);
  check_row("3", 3, "1,2,3", 1);
  check_row("1,2", 2, "1,2,3", 1);
  check_row("1,3", 2, "1,2,3", 1);
  check_row("2,3", 1, "1,2,3", 0);
  check_row("1,2,3", 1, "1,2,3", 1);
  long long total = 0;
  for (const auto& r : rows) total += r.multiplicity;
  CHECK(total == 9);
}

TEST_CASE("single and parallel edges") {
  RootedDigraph single;
  single.root = "r";
  single.nodes = {"1", "r"};
  single.edges = {{'a', "r", "1"}};
  GreedoidLanguage g = branching_greedoid(single);
  CHECK(g.words().size() == 2);
  auto rows = branching_spectrum_data(single);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].completions == 1);
  CHECK(node_set_label(rows[0].dom) == "1");
  CHECK(rows[0].multiplicity == 0);
  CHECK(rows[1].multiplicity == 1);

  RootedDigraph parallel;
  parallel.root = "r";
  parallel.nodes = {"1", "r"};
  parallel.edges = {{'a', "r", "1"}, {'b', "r", "1"}};
  CHECK(branching_greedoid(parallel).basic_words() == std::vector<std::string>{"a", "b"});
}

TEST_CASE("random branching greedoids are interval greedoids with lattice flats") {
  test::Rng rng(4242);
  std::vector<std::string> nodes{"1", "2", "3"};
  for (int trial = 0; trial < 25; ++trial) {
    RootedDigraph g;
    g.root = "r";
    g.nodes = nodes;
    g.nodes.push_back("r");
    int edge_count = 1 + rng.below(5);
    std::string labels = "abcdefg";
    for (int e = 0; e < edge_count; ++e) {
      std::string from = (rng.below(4) == 0) ? "r" : nodes[rng.below(3)];
      std::string to = nodes[rng.below(3)];
      if (from == to) continue;
      g.edges.push_back({labels[static_cast<size_t>(e)], from, to});
    }
    GreedoidLanguage lang = branching_greedoid(g);
    CHECK(lang.exchange_holds());
    CHECK_FALSE(lang.interval_violation().has_value());
    if (lang.words().size() > 1) {
      LrbSemigroup s = lang.lrb();
      SupportStructure sup = lang.lrb_support(s);
      CHECK(check_semimodular(sup.lattice));
      // alpha o beta = alpha exactly when [beta] <= [alpha].
      for (int a = 0; a < s.size(); ++a)
        for (int b = 0; b < s.size(); ++b)
          CHECK((s.compose(a, b) == a) == sup.lattice.leq(sup.supp[b], sup.supp[a]));
    }
  }
}

TEST_CASE("language file parsing") {
  CHECK_THROWS_AS(GreedoidLanguage::from_basic_words({"ab", "c"}), StructureError);
  CHECK_THROWS_AS(GreedoidLanguage::from_basic_words({"aa"}), StructureError);
  CHECK_THROWS_AS(GreedoidLanguage::from_basic_words({}), StructureError);
}
