#include "lrb/semigroup.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "lrb/errors.hpp"

namespace lrb {

std::string LrbVerifyReport::summary() const {
  std::ostringstream out;
  out << "identity: " << (has_identity ? "pass" : "FAIL") << "\n";
  out << "idempotent: " << (idempotent ? "pass" : "FAIL");
  if (idempotent_witness) out << " at " << *idempotent_witness;
  out << "\n";
  out << "left-regular: " << (left_regular ? "pass" : "FAIL");
  if (left_regular_witness)
    out << " at (" << (*left_regular_witness)[0] << ", " << (*left_regular_witness)[1] << ")";
  out << "\n";
  out << "associative: " << (associative ? "pass" : "FAIL");
  if (associative_witness)
    out << " at (" << (*associative_witness)[0] << ", " << (*associative_witness)[1] << ", "
        << (*associative_witness)[2] << ")";
  out << "\n";
  return out.str();
}

LrbSemigroup::LrbSemigroup(std::vector<std::string> labels, int identity,
                           std::function<int(int, int)> rule)
    : labels_(std::move(labels)), identity_(identity), rule_(std::move(rule)) {
  int n = size();
  if (identity_ < 0 || identity_ >= n) throw DomainError("identity index out of range");
  index_.reserve(n);
  for (int i = 0; i < n; ++i) index_.emplace_back(labels_[i], i);
  std::sort(index_.begin(), index_.end());
  for (size_t i = 1; i < index_.size(); ++i)
    if (index_[i].first == index_[i - 1].first)
      throw StructureError("duplicate element label: " + index_[i].first);
  if (n <= kTableLimit) {
    table_.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int c = rule_(a, b);
        if (c < 0 || c >= n) throw StructureError("composition left the element set");
        table_[static_cast<size_t>(a) * n + b] = c;
      }
  }
}

int LrbSemigroup::index_of(const std::string& label) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), std::make_pair(label, -1));
  if (it == index_.end() || it->first != label) throw DomainError("unknown element: " + label);
  return it->second;
}

bool LrbSemigroup::contains(const std::string& label) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), std::make_pair(label, -1));
  return it != index_.end() && it->first == label;
}

int LrbSemigroup::compose(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<size_t>(a) * size() + b];
  return rule_(a, b);
}

std::string LrbSemigroup::compose_labels(const std::string& a, const std::string& b) const {
  return labels_[compose(index_of(a), index_of(b))];
}

LrbVerifyReport LrbSemigroup::verify() const {
  LrbVerifyReport rep;
  int n = size();
  rep.has_identity = true;
  for (int x = 0; x < n && rep.has_identity; ++x)
    if (compose(identity_, x) != x || compose(x, identity_) != x) rep.has_identity = false;
  rep.idempotent = true;
  for (int x = 0; x < n; ++x)
    if (compose(x, x) != x) {
      rep.idempotent = false;
      rep.idempotent_witness = labels_[x];
      break;
    }
  rep.left_regular = true;
  for (int x = 0; x < n && rep.left_regular; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = compose(x, y);
      if (compose(xy, x) != xy) {
        rep.left_regular = false;
        rep.left_regular_witness = {labels_[x], labels_[y]};
        break;
      }
    }
  rep.associative = true;
  for (int x = 0; x < n && rep.associative; ++x)
    for (int y = 0; y < n && rep.associative; ++y) {
      int xy = compose(x, y);
      for (int z = 0; z < n; ++z) {
        if (compose(xy, z) != compose(x, compose(y, z))) {
          rep.associative = false;
          rep.associative_witness = {labels_[x], labels_[y], labels_[z]};
          break;
        }
      }
    }
  return rep;
}

FinitePoset LrbSemigroup::intrinsic_order() const {
  int n = size();
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (compose(x, y) == y) pairs.emplace_back(x, y);
  // Antisymmetry failure inside the poset constructor means the composition
  // was not an LRB; translate the error.
  try {
    return FinitePoset(labels_, pairs, false);
  } catch (const StructureError& e) {
    throw StructureError(std::string("intrinsic order is not a partial order: ") + e.what());
  }
}

std::vector<int> LrbSemigroup::maximal_elements() const {
  int n = size();
  std::vector<int> out;
  for (int c = 0; c < n; ++c) {
    bool max = true;
    for (int x = 0; x < n && max; ++x)
      if (compose(c, x) != c) max = false;
    if (max) out.push_back(c);
  }
  return out;
}

SupportStructure LrbSemigroup::build_support() const {
  int n = size();
  std::vector<int> cls(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    for (int c = 0; c < static_cast<int>(reps.size()); ++c) {
      int r = reps[c];
      if (compose(x, r) == x && compose(r, x) == r) {
        cls[x] = c;
        break;
      }
    }
    if (cls[x] < 0) {
      cls[x] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
  }
  int m = static_cast<int>(reps.size());
  std::vector<std::string> labels(m);
  for (int c = 0; c < m; ++c) labels[c] = "[" + labels_[reps[c]] + "]";
  FinitePoset p = FinitePoset::from_predicate(labels, [&](int a, int b) {
    return compose(reps[b], reps[a]) == reps[b];
  });
  FiniteLattice lattice = FiniteLattice::from_poset(p);
  // supp(xy) = supp(x) v supp(y), and supp(x) <= supp(y) iff yx = y.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (cls[compose(x, y)] != lattice.join(cls[x], cls[y]))
        throw StructureError("support join law fails at " + labels_[x] + ", " + labels_[y]);
      bool leq = lattice.leq(cls[x], cls[y]);
      if (leq != (compose(y, x) == y))
        throw StructureError("support order law fails at " + labels_[x] + ", " + labels_[y]);
    }
  return {std::move(lattice), std::move(cls)};
}

SupportStructure LrbSemigroup::build_support_checked(
    const FiniteLattice& claimed, const std::vector<int>& claimed_supp) const {
  if (static_cast<int>(claimed_supp.size()) != size())
    throw DomainError("claimed support map size mismatch");
  SupportStructure built = build_support();
  if (claimed.size() != built.lattice.size())
    throw StructureError("claimed support lattice has wrong size");
  // The isomorphism is forced by commutation with the support maps.
  std::vector<int> image(built.lattice.size(), -1);
  for (int x = 0; x < size(); ++x) {
    int from = built.supp[x];
    int to = claimed_supp[x];
    if (image[from] == -1)
      image[from] = to;
    else if (image[from] != to)
      throw StructureError("claimed support map does not factor through the quotient");
  }
  std::vector<bool> hit(claimed.size(), false);
  for (int v : image) {
    if (v < 0) throw StructureError("claimed support map misses a quotient class");
    if (hit[v]) throw StructureError("claimed support map merges quotient classes");
    hit[v] = true;
  }
  for (int a = 0; a < built.lattice.size(); ++a)
    for (int b = 0; b < built.lattice.size(); ++b)
      if (built.lattice.leq(a, b) != claimed.leq(image[a], image[b]))
        throw StructureError("claimed support lattice is not isomorphic to the quotient");
  return {claimed, claimed_supp};
}

LrbSemigroup LrbSemigroup::up_set(int x) const {
  int n = size();
  std::vector<int> members;
  for (int y = 0; y < n; ++y)
    if (compose(x, y) == y) members.push_back(y);
  std::vector<int> back(n, -1);
  std::vector<std::string> labels;
  for (size_t i = 0; i < members.size(); ++i) {
    back[members[i]] = static_cast<int>(i);
    labels.push_back(labels_[members[i]]);
  }
  auto self = *this;
  return LrbSemigroup(std::move(labels), back[x], [self, members, back](int a, int b) {
    return back[self.compose(members[a], members[b])];
  });
}

LrbSemigroup LrbSemigroup::fiber(const SupportStructure& support, int lattice_element) const {
  int n = size();
  std::vector<int> members;
  for (int y = 0; y < n; ++y)
    if (support.lattice.leq(support.supp[y], lattice_element)) members.push_back(y);
  std::vector<int> back(n, -1);
  std::vector<std::string> labels;
  for (size_t i = 0; i < members.size(); ++i) {
    back[members[i]] = static_cast<int>(i);
    labels.push_back(labels_[members[i]]);
  }
  if (back[identity_] < 0) throw StructureError("fiber lost the identity");
  auto self = *this;
  return LrbSemigroup(std::move(labels), back[identity_], [self, members, back](int a, int b) {
    int c = back[self.compose(members[a], members[b])];
    if (c < 0) throw StructureError("fiber is not closed under composition");
    return c;
  });
}

LrbSemigroup LrbSemigroup::complexified() const {
  int n = size();
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> id;
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (compose(x, y) == y) {
        id[{x, y}] = static_cast<int>(pairs.size());
        pairs.emplace_back(x, y);
        labels.push_back(labels_[x] + "||" + labels_[y]);
      }
  auto self = *this;
  int e = id.at({identity_, identity_});
  return LrbSemigroup(std::move(labels), e,
                      [self, pairs, id](int a, int b) {
                        auto [x, y] = pairs[a];
                        auto [z, w] = pairs[b];
                        int xz = self.compose(x, z);
                        int xzyw = self.compose(self.compose(xz, y), w);
                        return id.at({xz, xzyw});
                      });
}

}  // namespace lrb
