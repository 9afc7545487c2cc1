#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lrb {

// Finite poset over opaque string labels. The full order relation is stored
// densely (bit rows); construction verifies reflexivity, antisymmetry and
// transitivity, or computes the reflexive-transitive closure of the given
// pairs first. Instances are immutable after construction and safe to share
// across threads.
class FinitePoset {
 public:
  FinitePoset() = default;  // empty poset
  FinitePoset(std::vector<std::string> labels,
              const std::vector<std::pair<int, int>>& leq_pairs,
              bool transitively_close = true);

  static FinitePoset from_predicate(std::vector<std::string> labels,
                                    const std::function<bool(int, int)>& leq);
  static FinitePoset chain(int k);
  static FinitePoset antichain(int k);

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  // Throws DomainError for unknown labels.
  int index_of(const std::string& label) const;
  bool contains(const std::string& label) const;

  bool leq(int i, int j) const { return bit(i, j); }
  bool less(int i, int j) const { return i != j && bit(i, j); }
  // True when j covers i.
  bool covers(int i, int j) const;

  std::vector<int> up_set(int i) const;
  std::vector<int> down_set(int i) const;
  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  std::optional<int> unique_minimum() const;
  std::optional<int> unique_maximum() const;

  // Rank: explicit if supplied via with_ranks, otherwise the longest chain
  // from a minimal element. ranked() is true when every cover step raises
  // rank by exactly one.
  FinitePoset with_ranks(std::vector<int> ranks) const;
  int rank(int i) const;
  int length() const;  // max rank
  bool ranked() const;

  // Moebius function by the standard recursion, memoized. Requires x <= y.
  long long mobius(int x, int y) const;

  FinitePoset opposite() const;
  // Adjoins a new bottom/top only where the poset lacks a unique one.
  FinitePoset with_bounds(const std::string& bottom_label = "^0",
                          const std::string& top_label = "^1") const;
  // Adjoins a new bottom and top unconditionally.
  FinitePoset with_new_bounds(const std::string& bottom_label = "^0",
                              const std::string& top_label = "^1") const;
  FinitePoset induced(const std::vector<int>& subset) const;

 private:
  friend class FiniteLattice;
  bool bit(int i, int j) const {
    return (rel_[static_cast<size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1u;
  }
  void set_bit(int i, int j) {
    rel_[static_cast<size_t>(i) * words_ + (j >> 6)] |= (uint64_t{1} << (j & 63));
  }
  void finish_construction(bool transitively_close);
  void compute_ranks() const;

  int n_ = 0;
  size_t words_ = 0;
  std::vector<std::string> labels_;
  std::vector<uint64_t> rel_;  // rel_[i*words_ + w]: bits j with i <= j
  mutable std::vector<int> ranks_;
  bool explicit_ranks_ = false;
  mutable std::vector<long long> mobius_memo_;  // n*n, sentinel LLONG_MIN
  std::vector<std::pair<std::string, int>> index_;  // sorted label -> id
};

// Moebius number of a poset: mu(0,1) after adjoining a *new* bottom and top,
// computed by alternating chain counts (the reduced Euler characteristic of
// the order complex).
long long mobius_number(const FinitePoset& p);

// True iff mu(x,y) == (-1)^(rk y - rk x) for all x <= y after adjoining the
// missing bounds. Throws DomainError when the input is not ranked.
bool check_eulerian_with_bounds(const FinitePoset& p);

// Exact poset isomorphism search (invariant refinement + backtracking).
// Returns the image of each p-index in q, if any isomorphism exists.
std::optional<std::vector<int>> find_isomorphism(const FinitePoset& p,
                                                 const FinitePoset& q);

class FiniteLattice : public FinitePoset {
 public:
  // Verifies that every pair has a least upper bound and a greatest lower
  // bound; throws StructureError otherwise.
  static FiniteLattice from_poset(const FinitePoset& p);

  int join(int i, int j) const { return join_[static_cast<size_t>(i) * size() + j]; }
  int meet(int i, int j) const { return meet_[static_cast<size_t>(i) * size() + j]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  FiniteLattice opposite_lattice() const;

 private:
  std::vector<int> join_, meet_;
  int bottom_ = -1, top_ = -1;
};

// The lattice of closed intervals [x,y] of a base lattice, ordered
// componentwise. Element labels are "(x;y)".
class IntervalLattice : public FiniteLattice {
 public:
  static IntervalLattice build(const FiniteLattice& base);

  const FiniteLattice& base() const { return base_; }
  std::pair<int, int> interval(int i) const { return pairs_[i]; }
  int index_of_interval(int lo, int hi) const;
  static std::string interval_label(const FiniteLattice& base, int lo, int hi);

 private:
  FiniteLattice base_;
  std::vector<std::pair<int, int>> pairs_;
};

// Moebius function of Int(L) in product form: mu(x,x')*mu(y,y') when x' <= y,
// else 0. Arguments are intervals (x,y) <= (x',y') of the base lattice;
// throws DomainError otherwise.
long long mobius_interval_product(const FiniteLattice& base,
                                  std::pair<int, int> a, std::pair<int, int> b);

// Upper semimodularity: x^y covered by x implies y covered by x v y.
bool check_semimodular(const FiniteLattice& l);

// Report for the generalized region-count identity driven by a surjection
// f : P -> Q. Conditions, in order:
//   0: P and Q are ranked, of the same length
//   1: Q has a unique maximal element
//   2: P with new bounds adjoined is Eulerian
//   3: f is order-preserving, rank-preserving and surjective
//   4: mobius_number(f^{-1}(Q_{<=x})) == (-1)^rk(x) for all x in Q
//   5: (-1)^(r-rk(x)) mu_Q(x, 1) >= 0 for all x in Q
// The identity compares |max(P)| against the unsigned Moebius sum over Q with
// an extra bottom adjoined.
struct GenZaslavskyReport {
  bool conditions[6] = {false, false, false, false, false, false};
  std::string detail[6];
  long long max_count = 0;
  long long mobius_sum = 0;
  bool identity_ok = false;
  bool all_ok() const;
  std::string summary() const;
};

GenZaslavskyReport generalized_zaslavsky_check(const FinitePoset& p,
                                               const FinitePoset& q,
                                               const std::vector<int>& f);

}  // namespace lrb
