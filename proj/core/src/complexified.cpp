#include "lrb/complexified.hpp"

#include <algorithm>
#include <map>

#include "lrb/errors.hpp"

namespace lrb {

ComplexifiedArrangement::ComplexifiedArrangement(RealArrangement base)
    : base_(std::move(base)) {}

void ComplexifiedArrangement::ensure_faces() const {
  if (!faces_.empty()) return;
  const auto& fs = base_.faces();
  int n = static_cast<int>(fs.size());
  for (int lo = 0; lo < n; ++lo)
    for (int hi = 0; hi < n; ++hi)
      if (fs[lo].leq(fs[hi])) faces_.push_back({lo, hi});
  std::sort(faces_.begin(), faces_.end(), [&](const Face& a, const Face& b) {
    auto va = complex_vector(a);
    auto vb = complex_vector(b);
    return std::make_tuple(va.level_sum(), va.to_string()) <
           std::make_tuple(vb.level_sum(), vb.to_string());
  });
}

const std::vector<ComplexifiedArrangement::Face>& ComplexifiedArrangement::faces() const {
  ensure_faces();
  return faces_;
}

ComplexSignVector ComplexifiedArrangement::complex_vector(const Face& f) const {
  const auto& fs = base_.faces();
  return ComplexSignVector::from_real_pair(fs[f.hi], fs[f.lo]);
}

const FinitePoset& ComplexifiedArrangement::face_poset() const {
  if (!poset_built_) {
    ensure_faces();
    std::vector<ComplexSignVector> vs;
    std::vector<std::string> labels;
    for (const auto& f : faces_) {
      vs.push_back(complex_vector(f));
      labels.push_back(vs.back().to_string());
    }
    poset_ = FinitePoset::from_predicate(labels,
                                         [vs](int a, int b) { return vs[a].leq(vs[b]); });
    poset_built_ = true;
  }
  return poset_;
}

LrbSemigroup ComplexifiedArrangement::face_semigroup() const {
  ensure_faces();
  std::vector<ComplexSignVector> vs;
  std::vector<std::string> labels;
  std::map<std::string, int> id;
  for (const auto& f : faces_) {
    vs.push_back(complex_vector(f));
    labels.push_back(vs.back().to_string());
    id[labels.back()] = static_cast<int>(labels.size()) - 1;
  }
  int identity = id.at(ComplexSignVector(std::vector<CSign>(base_.form_count(), CSign::Zero))
                           .to_string());
  return LrbSemigroup(std::move(labels), identity, [vs, id](int a, int b) {
    auto it = id.find(vs[a].compose(vs[b]).to_string());
    if (it == id.end())
      throw StructureError("complex faces are not closed under composition");
    return it->second;
  });
}

const IntervalLattice& ComplexifiedArrangement::augmented_lattice() const {
  if (!aug_built_) {
    aug_ = IntervalLattice::build(base_.intersection_lattice());
    aug_built_ = true;
  }
  return aug_;
}

SupportStructure ComplexifiedArrangement::face_support() const {
  ensure_faces();
  const auto& aug = augmented_lattice();
  FiniteLattice claimed = aug.opposite_lattice();
  const auto& fs = base_.faces();
  LrbSemigroup s = face_semigroup();
  std::vector<int> supp(faces_.size());
  for (size_t i = 0; i < faces_.size(); ++i) {
    // Semigroup elements are sorted the same way as faces().
    int lo_flat = base_.span_flat(fs[faces_[i].hi]);
    int hi_flat = base_.span_flat(fs[faces_[i].lo]);
    supp[i] = claimed.index_of(
        IntervalLattice::interval_label(base_.intersection_lattice(), lo_flat, hi_flat));
  }
  return s.build_support_checked(claimed, supp);
}

ComplexifiedArrangement::Count ComplexifiedArrangement::max_cell_count() const {
  ensure_faces();
  long long max_cells = 0;
  for (const auto& f : faces_)
    if (complex_vector(f).is_imaginary()) ++max_cells;
  const auto& aug = augmented_lattice();
  long long sum = 0;
  for (int x = 0; x < aug.size(); ++x) sum += std::llabs(aug.mobius(aug.bottom(), x));
  return {max_cells, sum};
}

long long ComplexifiedArrangement::complement_cell_count() const {
  ensure_faces();
  long long count = 0;
  for (const auto& f : faces_)
    if (!complex_vector(f).has_zero()) ++count;
  return count;
}

FinitePoset ComplexifiedArrangement::c_cells() const {
  ensure_faces();
  std::vector<ComplexSignVector> vs;
  std::vector<std::string> labels;
  for (const auto& f : faces_) {
    auto v = complex_vector(f);
    if (v.has_zero()) continue;
    vs.push_back(v);
    labels.push_back(vs.back().to_string());
  }
  return FinitePoset::from_predicate(labels,
                                     [vs](int a, int b) { return vs[b].leq(vs[a]); });
}

std::vector<long long> ComplexifiedArrangement::betti_numbers() const {
  const auto& l = base_.intersection_lattice();
  std::vector<long long> betti(l.length() + 1, 0);
  for (int x = 0; x < l.size(); ++x)
    betti[l.rank(x)] += std::llabs(l.mobius(l.bottom(), x));
  return betti;
}

}  // namespace lrb
