#include "lrb/arrangement.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lrb/errors.hpp"

namespace lrb {

namespace {

std::string flat_label(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

}  // namespace

RealArrangement::RealArrangement(int dimension, std::vector<std::vector<Rational>> forms)
    : dim_(dimension), forms_(std::move(forms)) {
  if (dim_ <= 0) throw StructureError("dimension must be positive");
  for (const auto& f : forms_) {
    if (static_cast<int>(f.size()) != dim_) throw StructureError("form length mismatch");
    if (std::all_of(f.begin(), f.end(), [](const Rational& x) { return x == 0; }))
      throw StructureError("zero form");
  }
  for (size_t a = 0; a < forms_.size(); ++a)
    for (size_t b = a + 1; b < forms_.size(); ++b) {
      Matrix two{forms_[a], forms_[b]};
      if (matrix_rank(two) < 2)
        throw StructureError("parallel forms " + std::to_string(a + 1) + " and " +
                             std::to_string(b + 1));
    }
  rank_ = forms_.empty() ? 0 : matrix_rank(forms_);
}

RealArrangement RealArrangement::braid(int n) {
  if (n < 2) throw CapacityError("braid arrangement needs n >= 2");
  std::vector<std::vector<Rational>> forms;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<Rational> f(n, 0);
      f[i] = 1;
      f[j] = -1;
      forms.push_back(std::move(f));
    }
  return RealArrangement(n, std::move(forms));
}

RealArrangement RealArrangement::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad arrangement JSON: ") + e.what());
  }
  if (!j.contains("dimension") || !j.contains("forms"))
    throw ParseError("arrangement JSON needs \"dimension\" and \"forms\"");
  int d = j["dimension"].get<int>();
  std::vector<std::vector<Rational>> forms;
  for (const auto& row : j["forms"]) {
    std::vector<Rational> f;
    for (const auto& x : row) f.push_back(parse_rational(x.get<std::string>()));
    forms.push_back(std::move(f));
  }
  return RealArrangement(d, std::move(forms));
}

RealArrangement RealArrangement::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

SignVector RealArrangement::sign_of_point(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != dim_) throw DomainError("point dimension mismatch");
  std::vector<Sign> e;
  e.reserve(forms_.size());
  for (const auto& f : forms_) {
    Rational v = 0;
    for (int i = 0; i < dim_; ++i) v += f[i] * x[i];
    e.push_back(v == 0 ? Sign::Zero : (v > 0 ? Sign::Plus : Sign::Minus));
  }
  return SignVector(std::move(e));
}

bool strictly_feasible(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return true;
  size_t vars = rows[0].size();
  auto normalize = [](std::vector<Rational>& r) {
    // Scale by a positive rational so entries are coprime integers.
    BigInt num_gcd = 0, den_lcm = 1;
    for (auto& x : r) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    }
    if (num_gcd == 0) return;
    Rational scale = Rational(den_lcm) / Rational(num_gcd);
    for (auto& x : r) x *= scale;
  };
  for (size_t v = 0; v < vars; ++v) {
    // Drop identically-zero rows: they read 0 > 0.
    for (const auto& r : rows)
      if (std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; }))
        return false;
    std::vector<std::vector<Rational>> pos, neg, zero;
    for (auto& r : rows) {
      if (r[v] > 0)
        pos.push_back(std::move(r));
      else if (r[v] < 0)
        neg.push_back(std::move(r));
      else
        zero.push_back(std::move(r));
    }
    std::set<std::vector<Rational>> next(zero.begin(), zero.end());
    for (const auto& p : pos)
      for (const auto& n : neg) {
        std::vector<Rational> r(vars, 0);
        // p[v] > 0, n[v] < 0: eliminate v with positive multipliers.
        for (size_t i = 0; i < vars; ++i) r[i] = p[i] * (-n[v]) + n[i] * p[v];
        normalize(r);
        next.insert(std::move(r));
      }
    rows.assign(next.begin(), next.end());
    if (rows.empty()) return true;
  }
  for (const auto& r : rows)
    if (std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; }))
      return false;
  return true;
}

void RealArrangement::ensure_faces() const {
  if (!faces_.empty() || forms_.empty()) {
    if (faces_.empty() && forms_.empty()) faces_.push_back(SignVector::zero(0));
    return;
  }
  int t = form_count();
  if (t > kMaxForms) throw CapacityError("too many hyperplanes for face enumeration");

  // Flats, by closure BFS: closure(S) = {j : rank(S) == rank(S + j)}.
  auto closure = [&](const std::vector<int>& s) {
    Matrix m;
    for (int i : s) m.push_back(forms_[i]);
    int r = m.empty() ? 0 : matrix_rank(m);
    std::vector<int> out;
    for (int j = 0; j < t; ++j) {
      Matrix mj = m;
      mj.push_back(forms_[j]);
      if (matrix_rank(mj) == r) out.push_back(j);
    }
    return out;
  };
  std::set<std::vector<int>> flats;
  std::vector<std::vector<int>> queue{closure({})};
  flats.insert(queue[0]);
  while (!queue.empty()) {
    auto s = queue.back();
    queue.pop_back();
    for (int j = 0; j < t; ++j) {
      if (std::binary_search(s.begin(), s.end(), j)) continue;
      auto ext = s;
      ext.push_back(j);
      std::sort(ext.begin(), ext.end());
      auto c = closure(ext);
      if (flats.insert(c).second) queue.push_back(c);
    }
  }
  flats_.assign(flats.begin(), flats.end());

  // Faces per flat: chambers of the forms restricted to the flat's subspace.
  for (const auto& s : flats_) {
    Matrix m;
    for (int i : s) m.push_back(forms_[i]);
    std::vector<std::vector<Rational>> basis;
    if (m.empty()) {
      basis = nullspace(Matrix{std::vector<Rational>(dim_, 0)});
    } else {
      basis = nullspace(m);
    }
    size_t k = basis.size();
    std::vector<int> rest;
    for (int j = 0; j < t; ++j)
      if (!std::binary_search(s.begin(), s.end(), j)) rest.push_back(j);
    // Restricted forms g_j, nonzero because the flat is closed.
    std::vector<std::vector<Rational>> g(rest.size(), std::vector<Rational>(k, 0));
    for (size_t a = 0; a < rest.size(); ++a)
      for (size_t b = 0; b < k; ++b)
        for (int i = 0; i < dim_; ++i) g[a][b] += forms_[rest[a]][i] * basis[b][i];

    std::vector<Sign> assignment(rest.size(), Sign::Zero);
    std::vector<std::vector<Rational>> constraints;
    std::function<void(size_t)> recurse = [&](size_t idx) {
      if (!strictly_feasible(constraints)) return;
      if (idx == rest.size()) {
        std::vector<Sign> entries(t, Sign::Zero);
        for (size_t a = 0; a < rest.size(); ++a) entries[rest[a]] = assignment[a];
        faces_.push_back(SignVector(std::move(entries)));
        return;
      }
      for (Sign sgn : {Sign::Plus, Sign::Minus}) {
        std::vector<Rational> row = g[idx];
        if (sgn == Sign::Minus)
          for (auto& x : row) x = -x;
        constraints.push_back(std::move(row));
        assignment[idx] = sgn;
        recurse(idx + 1);
        constraints.pop_back();
      }
    };
    recurse(0);
  }
  std::sort(faces_.begin(), faces_.end(), [](const SignVector& a, const SignVector& b) {
    auto ra = a.to_string();
    auto rb = b.to_string();
    int za = static_cast<int>(std::count(ra.begin(), ra.end(), '0'));
    int zb = static_cast<int>(std::count(rb.begin(), rb.end(), '0'));
    return std::tie(zb, ra) < std::tie(za, rb);  // fewer zeros later
  });
}

const std::vector<SignVector>& RealArrangement::faces() const {
  ensure_faces();
  return faces_;
}

const FinitePoset& RealArrangement::face_poset() const {
  if (!poset_built_) {
    const auto& fs = faces();
    std::vector<std::string> labels;
    labels.reserve(fs.size());
    for (const auto& f : fs) labels.push_back(f.to_string());
    poset_ = FinitePoset::from_predicate(
        labels, [&](int a, int b) { return fs[a].leq(fs[b]); });
    poset_built_ = true;
  }
  return poset_;
}

LrbSemigroup RealArrangement::face_semigroup() const {
  const auto& fs = faces();
  std::map<SignVector, int> id;
  for (size_t i = 0; i < fs.size(); ++i) id[fs[i]] = static_cast<int>(i);
  std::vector<std::string> labels;
  for (const auto& f : fs) labels.push_back(f.to_string());
  int identity = id.at(SignVector::zero(form_count()));
  auto faces_copy = fs;
  return LrbSemigroup(std::move(labels), identity, [faces_copy, id](int a, int b) {
    auto it = id.find(faces_copy[a].compose(faces_copy[b]));
    if (it == id.end()) throw StructureError("faces are not closed under composition");
    return it->second;
  });
}

void RealArrangement::ensure_lattice() const {
  if (lattice_built_) return;
  ensure_faces();
  std::vector<std::string> labels;
  labels.reserve(flats_.size());
  for (const auto& s : flats_) labels.push_back(flat_label(s));
  auto flats = flats_;
  FinitePoset p = FinitePoset::from_predicate(labels, [&flats](int a, int b) {
    return std::includes(flats[b].begin(), flats[b].end(), flats[a].begin(), flats[a].end());
  });
  lattice_ = FiniteLattice::from_poset(p);
  lattice_built_ = true;
}

const FiniteLattice& RealArrangement::intersection_lattice() const {
  ensure_lattice();
  return lattice_;
}

int RealArrangement::span_flat(const SignVector& x) const {
  ensure_lattice();
  if (x.size() != form_count()) throw DomainError("sign vector length mismatch");
  std::vector<int> zeros;
  for (int i = 0; i < x.size(); ++i)
    if (x[i] == Sign::Zero) zeros.push_back(i);
  if (std::find(faces_.begin(), faces_.end(), x) == faces_.end())
    throw DomainError("not a face: " + x.to_string());
  return lattice_.index_of(flat_label(zeros));
}

std::string RealArrangement::span_label(const SignVector& x) const {
  return lattice_.label(span_flat(x));
}

SupportStructure RealArrangement::face_support() const {
  LrbSemigroup s = face_semigroup();
  FiniteLattice claimed = intersection_lattice().opposite_lattice();
  std::vector<int> supp(faces_.size());
  for (size_t i = 0; i < faces_.size(); ++i)
    supp[i] = claimed.index_of(lattice_.label(span_flat(faces_[i])));
  return s.build_support_checked(claimed, supp);
}

RealArrangement::Count RealArrangement::zaslavsky_count() const {
  ensure_lattice();
  long long regions = 0;
  for (const auto& f : faces())
    if (f.is_full()) ++regions;
  long long sum = 0;
  for (int x = 0; x < lattice_.size(); ++x)
    sum += std::llabs(lattice_.mobius(lattice_.bottom(), x));
  return {regions, sum};
}

std::string KEqualReport::to_text() const {
  std::ostringstream out;
  for (size_t d = 0; d < faces_by_dim.size(); ++d)
    out << "dim " << d << ": " << faces_by_dim[d] << "\n";
  out << "total " << total << "\n";
  out << "euler " << euler << "\n";
  return out.str();
}

KEqualReport kequal_subcomplex(int n, int k) {
  if (k < 2 || n < k || n > 8) throw CapacityError("kequal needs 2 <= k <= n <= 8");
  KEqualReport rep;
  rep.n = n;
  rep.k = k;
  rep.faces_by_dim.assign(std::max(1, n - 1), 0);
  // Ordered set partitions with at least two blocks are the proper faces of
  // the permutohedron; keep those with every block smaller than k.
  std::function<void(uint32_t, int, int)> recurse = [&](uint32_t remaining, int blocks,
                                                        int dim) {
    if (remaining == 0) {
      if (blocks >= 2) {
        rep.faces_by_dim[dim] += 1;
        rep.total += 1;
        rep.euler += (dim % 2 == 0) ? 1 : -1;
      }
      return;
    }
    // Next block: any nonempty subset of the remaining elements with fewer
    // than k members.
    uint32_t sub = remaining;
    while (sub > 0) {
      int size = __builtin_popcount(sub);
      if (size < k) recurse(remaining & ~sub, blocks + 1, dim + size - 1);
      sub = (sub - 1) & remaining;
    }
  };
  recurse((1u << n) - 1, 0, 0);
  return rep;
}

}  // namespace lrb
