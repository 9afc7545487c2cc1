#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "lrb/poset.hpp"
#include "lrb/rational.hpp"
#include "lrb/semigroup.hpp"

namespace lrb::test {

// Small deterministic generator for property-style tests.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed ? seed : 1) {}
  uint64_t next() {
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    return state * 0x2545F4914F6CDD1Dull;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

inline FiniteLattice boolean_lattice(int k) {
  int n = 1 << k;
  std::vector<std::string> labels;
  for (int mask = 0; mask < n; ++mask) {
    std::string label = "{";
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) {
        if (label.size() > 1) label += ",";
        label += std::to_string(i + 1);
      }
    labels.push_back(label + "}");
  }
  FinitePoset p = FinitePoset::from_predicate(
      labels, [](int a, int b) { return (a & b) == a; });
  return FiniteLattice::from_poset(p);
}

inline FiniteLattice pentagon() {
  std::vector<std::string> labels{"0", "a", "b", "c", "1"};
  std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}, {1, 3}};
  return FiniteLattice::from_poset(FinitePoset(labels, pairs, true));
}

// Positive rational weights over the given labels, scaled to sum to one.
inline std::vector<std::pair<std::string, Rational>> random_unit_weights(
    Rng& rng, const std::vector<std::string>& labels) {
  std::vector<std::pair<std::string, Rational>> out;
  Rational total = 0;
  for (const auto& l : labels) {
    Rational w(1 + rng.below(20), 1 + rng.below(20));
    w.canonicalize();  // mpq_class(p, q) stores the fraction as given
    out.emplace_back(l, w);
    total += w;
  }
  for (auto& [l, w] : out) w /= total;
  return out;
}

// Exhaustive isomorphism-of-semigroups search, feasible for small tables.
inline bool semigroups_isomorphic(const LrbSemigroup& a, const LrbSemigroup& b) {
  if (a.size() != b.size()) return false;
  int n = a.size();
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  auto consistent = [&](int depth) {
    for (int i = 0; i <= depth; ++i)
      for (int j = 0; j <= depth; ++j) {
        int c = a.compose(i, j);
        if (c <= depth && image[c] != b.compose(image[i], image[j])) return false;
        if (c > depth && image[c] != -1) continue;
      }
    return true;
  };
  std::function<bool(int)> place = [&](int depth) {
    if (depth == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      image[depth] = w;
      used[w] = true;
      if (consistent(depth) && place(depth + 1)) return true;
      used[w] = false;
      image[depth] = -1;
    }
    return false;
  };
  return place(0);
}

}  // namespace lrb::test
