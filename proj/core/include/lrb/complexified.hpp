#pragma once

#include <string>
#include <vector>

#include "lrb/arrangement.hpp"
#include "lrb/poset.hpp"
#include "lrb/semigroup.hpp"
#include "lrb/sign_vector.hpp"

namespace lrb {

// A real arrangement read over the complex numbers. Everything is derived
// from intervals [Y,X] of real faces (Y below X); the map to complex position
// vectors is X o iY, entrywise i/j where Y is nonzero.
class ComplexifiedArrangement {
 public:
  explicit ComplexifiedArrangement(RealArrangement base);

  const RealArrangement& base() const { return base_; }

  struct Face {
    int lo, hi;  // indices into base().faces(), faces()[lo] <= faces()[hi]
  };
  // All intervals of the real face poset, sorted by the complex label.
  const std::vector<Face>& faces() const;
  ComplexSignVector complex_vector(const Face& f) const;

  // Poset of complex position vectors under the letter order.
  const FinitePoset& face_poset() const;
  // Semigroup under the larger-letter-wins composition; labels are the
  // "0+-ij" strings.
  LrbSemigroup face_semigroup() const;

  // Intervals of the real intersection lattice, ordered componentwise
  // (geometric orientation: the pair of ambient flats is the bottom).
  const IntervalLattice& augmented_lattice() const;

  // Support structure of the face semigroup: the augmented lattice upside
  // down, with the pair (span X; span Y) as the value on [Y,X]. Checked
  // against the quotient construction.
  SupportStructure face_support() const;

  struct Count {
    long long max_cells;
    long long mobius_sum;
    bool equal() const { return max_cells == mobius_sum; }
  };
  // Maximal faces (all-imaginary vectors) against the unsigned Moebius sum
  // over the augmented lattice.
  Count max_cell_count() const;

  // Cells of the complement complex: faces with no zero entry.
  long long complement_cell_count() const;
  // The complement cells with the opposite of the induced order.
  FinitePoset c_cells() const;

  // betti[i] = sum of |mu(bottom, x)| over flats of rank i.
  std::vector<long long> betti_numbers() const;

 private:
  RealArrangement base_;
  mutable std::vector<Face> faces_;
  mutable bool poset_built_ = false;
  mutable FinitePoset poset_;
  mutable bool aug_built_ = false;
  mutable IntervalLattice aug_;
  void ensure_faces() const;
};

}  // namespace lrb
