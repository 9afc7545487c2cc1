#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "lrb/partition.hpp"
#include "lrb/rational.hpp"
#include "lrb/semigroup.hpp"

namespace lrb {

// n books in classes (the blocks of an unordered partition), one shelf per
// class, shelves listed top first. Every shelf holds exactly the books of its
// class, in shelf order.
class LibraryState {
 public:
  LibraryState(SetPartition classes, std::vector<std::vector<int>> shelves);
  static LibraryState from_json_text(const std::string& text);
  static LibraryState from_json_file(const std::string& path);

  const SetPartition& classes() const { return classes_; }
  const std::vector<std::vector<int>>& shelves() const { return shelves_; }
  int book_count() const { return classes_.ground_size(); }

  // The pair [p, s]: p the ordered partition of classes by shelf order, s the
  // reading-order permutation.
  OrderedPartition shelf_partition() const;
  OrderedPartition reading_order() const;
  PartitionInterval as_interval() const { return {shelf_partition(), reading_order()}; }
  static LibraryState from_interval(const SetPartition& classes, const PartitionInterval& iv);

  std::string to_json() const;
  // One line per shelf, top first, books space-separated.
  std::string render() const;
  bool operator==(const LibraryState&) const = default;

 private:
  SetPartition classes_;
  std::vector<std::vector<int>> shelves_;
};

// Fiber of the interval semigroup over [classes, singletons]: intervals
// [q, t] whose coarse support coarsens the classification. n <= 7.
LrbSemigroup library_fiber(const SetPartition& classes);
SupportStructure library_fiber_support(const SetPartition& classes, const LrbSemigroup& fiber);

// One walk step [p,s] -> [q,t] o [p,s]. Throws DomainError when [q,t] is not
// in the fiber of the state's classification.
LibraryState apply_interval(const LibraryState& state, const OrderedPartition& q,
                            const OrderedPartition& t);

// Subset step: shelves touched by E move to the top in induced order, then E
// moves to the front of each shelf in induced order. Empty and full E fix
// every state.
LibraryState apply_borrow(const LibraryState& state, const std::set<int>& borrowed);

// The interval [q_E, t_E] realizing a subset step.
PartitionInterval borrow_interval(const SetPartition& classes, const std::set<int>& borrowed);

std::string subset_label(const std::set<int>& subset);
std::set<int> parse_subset(const std::string& text);

// Weight distributions on braid-face labels. Weights must be nonnegative
// with total at most 1; any deficit implicitly sits on the identity.
std::map<std::string, Rational> tsetlin_distribution(int n,
                                                     const std::map<int, Rational>& book_weights);
std::map<std::string, Rational> subset_distribution(
    int n, const std::map<std::set<int>, Rational>& subset_weights);
// Same driving data pushed onto fiber labels [q_E, t_E].
std::map<std::string, Rational> library_subset_distribution(
    const SetPartition& classes, const std::map<std::set<int>, Rational>& subset_weights);

// Eigenvalue labels for the subset-driven library walk: pairs (alpha, beta)
// of unordered partitions with beta refining the classification and the
// classification refining alpha. The subsets listed per row are those whose
// step contributes to the row's eigenvalue; the multiplicity comes from the
// factorial formula (beta's block sizes, and alpha's block sizes counted in
// whole classes).
struct LibraryEigenRow {
  SetPartition alpha;
  SetPartition beta;
  long long multiplicity;
};
std::vector<LibraryEigenRow> library_spectrum_labels(const SetPartition& classes);
bool library_subset_contributes(const SetPartition& classes, const std::set<int>& subset,
                                const SetPartition& alpha, const SetPartition& beta);

}  // namespace lrb
