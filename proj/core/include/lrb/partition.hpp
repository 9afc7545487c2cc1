#pragma once

#include <string>
#include <vector>

#include "lrb/poset.hpp"
#include "lrb/semigroup.hpp"

namespace lrb {

// Partition of {1..n} into ordered nonempty blocks. Blocks keep their given
// order; members of a block are stored ascending. Serialization is "257|3|146"
// for n <= 9 and comma-separated ("2,5,7|3|1,4,6") once two-digit ids appear.
class OrderedPartition {
 public:
  OrderedPartition(int n, std::vector<std::vector<int>> blocks);
  static OrderedPartition whole(int n);                       // <[n]>
  static OrderedPartition parse(const std::string& text, int n = 0);

  int ground_size() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  bool is_permutation() const { return block_count() == n_; }

  // Blocks are the pairwise intersections ordered lexicographically by
  // (this-block, other-block) index, empty ones skipped.
  OrderedPartition compose(const OrderedPartition& other) const;
  // True iff other refines this compatibly (this o other == other).
  bool refined_by(const OrderedPartition& other) const;

  std::string to_string() const;
  auto operator<=>(const OrderedPartition&) const = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

// Unordered set partition; blocks sorted ascending inside and by least
// member across. Same textual format as OrderedPartition.
class SetPartition {
 public:
  SetPartition(int n, std::vector<std::vector<int>> blocks);
  static SetPartition of(const OrderedPartition& p);  // forget block order
  static SetPartition singletons(int n);
  static SetPartition whole(int n);
  static SetPartition parse(const std::string& text, int n = 0);

  int ground_size() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  bool refines(const SetPartition& other) const;
  int block_of(int element) const;

  std::string to_string() const;
  auto operator<=>(const SetPartition&) const = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

std::vector<OrderedPartition> all_ordered_partitions(int n);  // n <= 7
std::vector<SetPartition> all_set_partitions(int n);

// Partition lattice on {1..n}, ordered by refinement with the singleton
// partition at the bottom (atoms are the single-merge partitions).
FiniteLattice partition_lattice(int n);

// Face semigroup of the braid arrangement: all ordered partitions of {1..n}
// under the intersection-table composition. Identity is <[n]>.
LrbSemigroup braid_face_semigroup(int n);

// Support structure of the braid face semigroup: the partition lattice
// upside down (whole set at the bottom), map = forget block order. Checked
// against the quotient construction.
SupportStructure braid_face_support(const LrbSemigroup& s);

// Interval [coarse, fine] with fine refining coarse compatibly. Serialized in
// the boxed form "37|1||256|4": single bars separate fine blocks, double bars
// the coarse ones.
class PartitionInterval {
 public:
  PartitionInterval(OrderedPartition coarse, OrderedPartition fine);
  static PartitionInterval parse(const std::string& text, int n = 0);

  const OrderedPartition& coarse() const { return coarse_; }
  const OrderedPartition& fine() const { return fine_; }

  PartitionInterval compose(const PartitionInterval& other) const;

  std::string to_string() const;
  auto operator<=>(const PartitionInterval&) const = default;

 private:
  OrderedPartition coarse_, fine_;
};

PartitionInterval braid_interval_compose(const PartitionInterval& a,
                                         const PartitionInterval& b);

// Face semigroup of the complexified braid arrangement in interval form:
// all intervals [coarse, fine] of ordered partitions under the interval
// composition, labeled by the boxed serialization. n <= 5.
LrbSemigroup braid_interval_semigroup(int n);

// Its support structure: pairs of set partitions "(alpha;beta)" (beta the
// image of the fine part), ordered by coarsening in both slots with
// (whole;whole) at the bottom. Checked against the quotient.
SupportStructure braid_interval_support(const LrbSemigroup& s);

}  // namespace lrb
