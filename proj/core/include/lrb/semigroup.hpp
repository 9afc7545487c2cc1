#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lrb/poset.hpp"

namespace lrb {

struct LrbVerifyReport {
  bool has_identity = false;
  bool idempotent = false;
  bool left_regular = false;  // xyx == xy
  bool associative = false;
  // First failing witnesses, as element labels.
  std::optional<std::string> idempotent_witness;
  std::optional<std::array<std::string, 2>> left_regular_witness;
  std::optional<std::array<std::string, 3>> associative_witness;
  bool ok() const { return has_identity && idempotent && left_regular && associative; }
  std::string summary() const;
};

struct SupportStructure {
  FiniteLattice lattice;
  std::vector<int> supp;  // semigroup index -> lattice index
};

// Finite semigroup with identity over labeled elements. Composition is kept
// as a rule and materialized into a full table at or below kTableLimit
// elements; exhaustive axiom checks and walks use the table.
class LrbSemigroup {
 public:
  static constexpr int kTableLimit = 4096;

  LrbSemigroup(std::vector<std::string> labels, int identity,
               std::function<int(int, int)> rule);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  int index_of(const std::string& label) const;
  bool contains(const std::string& label) const;
  int identity() const { return identity_; }

  int compose(int a, int b) const;
  std::string compose_labels(const std::string& a, const std::string& b) const;

  // Exhaustive verification of the axioms (identity, idempotence, xyx = xy,
  // associativity). Quadratic/cubic in the element count; desk scale only.
  LrbVerifyReport verify() const;

  // The partial order x <= y iff x*y == y. Throws StructureError when the
  // relation is not antisymmetric (the semigroup was not an LRB).
  FinitePoset intrinsic_order() const;

  // Elements c with c*x == c for all x; equivalently the maximal elements of
  // the intrinsic order, and the fiber of the top support class.
  std::vector<int> maximal_elements() const;

  // Support quotient: x ~ y iff x*y == x and y*x == y, ordered by
  // [x] <= [y] iff y*x == y. Verifies the quotient is a lattice and that
  // supp(xy) = supp(x) v supp(y) holds for every pair.
  SupportStructure build_support() const;

  // Builds the quotient and checks it agrees with a claimed support
  // structure (same fibers, isomorphic lattices via the supp-commuting map);
  // returns the claimed structure so callers keep their own labels.
  SupportStructure build_support_checked(const FiniteLattice& claimed,
                                         const std::vector<int>& claimed_supp) const;

  // Subsemigroup {y : y >= x} with identity x.
  LrbSemigroup up_set(int x) const;

  // Fiber {y : supp(y) <= X}.
  LrbSemigroup fiber(const SupportStructure& support, int lattice_element) const;

  // Formal complexification: pairs [x,y], x <= y, with
  // [x,y]*[z,w] = [xz, xzyw]. Labels are "x||y".
  LrbSemigroup complexified() const;

 private:
  std::vector<std::string> labels_;
  int identity_;
  std::function<int(int, int)> rule_;
  std::vector<int32_t> table_;
  std::vector<std::pair<std::string, int>> index_;
};

}  // namespace lrb
