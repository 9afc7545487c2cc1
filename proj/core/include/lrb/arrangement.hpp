#pragma once

#include <string>
#include <vector>

#include "lrb/linalg.hpp"
#include "lrb/poset.hpp"
#include "lrb/semigroup.hpp"
#include "lrb/sign_vector.hpp"

namespace lrb {

// Central arrangement of hyperplanes ker(l_1), ..., ker(l_t) in Q^d, given by
// rational linear forms. Zero forms and parallel (proportional) pairs are
// rejected. Face enumeration is exact: flats come from rational rank
// computations and chambers of each restriction from Fourier-Motzkin
// feasibility of strict systems.
class RealArrangement {
 public:
  static constexpr int kMaxForms = 12;

  RealArrangement(int dimension, std::vector<std::vector<Rational>> forms);
  static RealArrangement braid(int n);
  static RealArrangement from_json_text(const std::string& text);
  static RealArrangement from_json_file(const std::string& path);

  int dimension() const { return dim_; }
  int form_count() const { return static_cast<int>(forms_.size()); }
  const std::vector<std::vector<Rational>>& forms() const { return forms_; }
  // Rank of the form matrix; essential iff rank == dimension.
  int rank() const { return rank_; }
  bool essential() const { return rank_ == dim_; }

  SignVector sign_of_point(const std::vector<Rational>& x) const;

  // All realizable sign vectors, sorted by (rank, label). Capacity error when
  // t exceeds kMaxForms.
  const std::vector<SignVector>& faces() const;
  const FinitePoset& face_poset() const;
  LrbSemigroup face_semigroup() const;

  // Intersection lattice with atoms the hyperplanes (flats as hyperplane
  // sets, ordered by inclusion of those sets; the ambient space is the
  // bottom). Labels are "{i,...}" with 1-based indices.
  const FiniteLattice& intersection_lattice() const;

  // Flat of a face: the intersection-lattice element whose hyperplane set is
  // the zero set of the face. Throws DomainError when x is not a face.
  int span_flat(const SignVector& x) const;
  std::string span_label(const SignVector& x) const;

  // Support structure of the face semigroup: the intersection lattice upside
  // down (bottom = ambient flat of the identity face), with span as the map.
  // Checked against the quotient construction.
  SupportStructure face_support() const;

  struct Count {
    long long regions;
    long long mobius_sum;
    bool equal() const { return regions == mobius_sum; }
  };
  // Chamber count against the unsigned Moebius sum over the intersection
  // lattice (from the ambient-space bottom).
  Count zaslavsky_count() const;

 private:
  int dim_;
  std::vector<std::vector<Rational>> forms_;
  int rank_;
  mutable std::vector<SignVector> faces_;
  mutable std::vector<std::vector<int>> flats_;  // sorted hyperplane index sets
  mutable bool lattice_built_ = false;
  mutable FiniteLattice lattice_;
  mutable bool poset_built_ = false;
  mutable FinitePoset poset_;
  void ensure_faces() const;
  void ensure_lattice() const;
};

// Feasibility of a homogeneous strict system {row . y > 0 for every row},
// decided exactly by Fourier-Motzkin elimination.
bool strictly_feasible(std::vector<std::vector<Rational>> rows);

// Faces of the n-permutohedron boundary that survive the all-blocks-smaller-
// than-k filter, counted by dimension. An ordered partition with block sizes
// b_1..b_e is a face of dimension sum(b_i - 1).
struct KEqualReport {
  int n = 0, k = 0;
  std::vector<long long> faces_by_dim;  // index = dimension
  long long total = 0;
  long long euler = 0;  // alternating sum
  std::string to_text() const;
};
KEqualReport kequal_subcomplex(int n, int k);

}  // namespace lrb
