#include "lrb/poset.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <sstream>

#include "lrb/errors.hpp"

namespace lrb {

namespace {
constexpr long long kUnset = LLONG_MIN;
}

FinitePoset::FinitePoset(std::vector<std::string> labels,
                         const std::vector<std::pair<int, int>>& leq_pairs,
                         bool transitively_close) {
  n_ = static_cast<int>(labels.size());
  words_ = static_cast<size_t>((n_ + 63) / 64);
  labels_ = std::move(labels);
  rel_.assign(static_cast<size_t>(n_) * words_, 0);
  for (auto [a, b] : leq_pairs) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_) throw DomainError("leq pair out of range");
    set_bit(a, b);
  }
  finish_construction(transitively_close);
}

FinitePoset FinitePoset::from_predicate(std::vector<std::string> labels,
                                        const std::function<bool(int, int)>& leq) {
  FinitePoset p;
  p.n_ = static_cast<int>(labels.size());
  p.words_ = static_cast<size_t>((p.n_ + 63) / 64);
  p.labels_ = std::move(labels);
  p.rel_.assign(static_cast<size_t>(p.n_) * p.words_, 0);
  for (int i = 0; i < p.n_; ++i)
    for (int j = 0; j < p.n_; ++j)
      if (i == j || leq(i, j)) p.set_bit(i, j);
  p.finish_construction(false);
  return p;
}

FinitePoset FinitePoset::chain(int k) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) {
    labels.push_back(std::to_string(i));
    for (int j = i; j < k; ++j) pairs.emplace_back(i, j);
  }
  return FinitePoset(std::move(labels), pairs, false);
}

FinitePoset FinitePoset::antichain(int k) {
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  return FinitePoset(std::move(labels), {}, false);
}

void FinitePoset::finish_construction(bool transitively_close) {
  for (int i = 0; i < n_; ++i) set_bit(i, i);
  if (transitively_close) {
    // Warshall over bit rows.
    for (int k = 0; k < n_; ++k)
      for (int i = 0; i < n_; ++i)
        if (bit(i, k)) {
          uint64_t* ri = &rel_[static_cast<size_t>(i) * words_];
          const uint64_t* rk = &rel_[static_cast<size_t>(k) * words_];
          for (size_t w = 0; w < words_; ++w) ri[w] |= rk[w];
        }
  } else {
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k)
        if (i != k && bit(i, k)) {
          const uint64_t* ri = &rel_[static_cast<size_t>(i) * words_];
          const uint64_t* rk = &rel_[static_cast<size_t>(k) * words_];
          for (size_t w = 0; w < words_; ++w)
            if (rk[w] & ~ri[w]) throw StructureError("relation is not transitive");
        }
  }
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (bit(i, j) && bit(j, i))
        throw StructureError("relation is not antisymmetric: " + labels_[i] + " ~ " + labels_[j]);
  index_.reserve(n_);
  for (int i = 0; i < n_; ++i) index_.emplace_back(labels_[i], i);
  std::sort(index_.begin(), index_.end());
  for (size_t i = 1; i < index_.size(); ++i)
    if (index_[i].first == index_[i - 1].first)
      throw StructureError("duplicate label: " + index_[i].first);
}

int FinitePoset::index_of(const std::string& label) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), std::make_pair(label, -1));
  if (it == index_.end() || it->first != label) throw DomainError("unknown label: " + label);
  return it->second;
}

bool FinitePoset::contains(const std::string& label) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), std::make_pair(label, -1));
  return it != index_.end() && it->first == label;
}

bool FinitePoset::covers(int i, int j) const {
  if (!less(i, j)) return false;
  for (int k = 0; k < n_; ++k)
    if (k != i && k != j && bit(i, k) && bit(k, j)) return false;
  return true;
}

std::vector<int> FinitePoset::up_set(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (bit(i, j)) out.push_back(j);
  return out;
}

std::vector<int> FinitePoset::down_set(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (bit(j, i)) out.push_back(j);
  return out;
}

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    bool min = true;
    for (int j = 0; j < n_ && min; ++j)
      if (less(j, i)) min = false;
    if (min) out.push_back(i);
  }
  return out;
}

std::vector<int> FinitePoset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    bool max = true;
    for (int j = 0; j < n_ && max; ++j)
      if (less(i, j)) max = false;
    if (max) out.push_back(i);
  }
  return out;
}

std::optional<int> FinitePoset::unique_minimum() const {
  auto mins = minimal_elements();
  if (mins.size() == 1) return mins[0];
  return std::nullopt;
}

std::optional<int> FinitePoset::unique_maximum() const {
  auto maxs = maximal_elements();
  if (maxs.size() == 1) return maxs[0];
  return std::nullopt;
}

FinitePoset FinitePoset::with_ranks(std::vector<int> ranks) const {
  if (static_cast<int>(ranks.size()) != n_) throw DomainError("rank vector size mismatch");
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (less(i, j) && ranks[i] >= ranks[j])
        throw StructureError("rank map is not order-preserving");
      if (covers(i, j) && ranks[j] != ranks[i] + 1)
        throw StructureError("rank map does not step by one along covers");
    }
  FinitePoset p = *this;
  p.ranks_ = std::move(ranks);
  p.explicit_ranks_ = true;
  p.mobius_memo_.clear();
  return p;
}

void FinitePoset::compute_ranks() const {
  if (!ranks_.empty()) return;
  ranks_.assign(n_, 0);
  // Longest chain from a minimal element; process in topological order by
  // repeated relaxation over the dominance counts.
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return down_set(a).size() < down_set(b).size(); });
  for (int v : order)
    for (int u = 0; u < n_; ++u)
      if (less(u, v)) ranks_[v] = std::max(ranks_[v], ranks_[u] + 1);
}

int FinitePoset::rank(int i) const {
  compute_ranks();
  return ranks_[i];
}

int FinitePoset::length() const {
  compute_ranks();
  int r = 0;
  for (int i = 0; i < n_; ++i) r = std::max(r, ranks_[i]);
  return r;
}

bool FinitePoset::ranked() const {
  compute_ranks();
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (covers(i, j) && ranks_[j] != ranks_[i] + 1) return false;
  return true;
}

long long FinitePoset::mobius(int x, int y) const {
  if (!leq(x, y)) throw DomainError("mobius: " + labels_[x] + " is not below " + labels_[y]);
  if (mobius_memo_.empty()) mobius_memo_.assign(static_cast<size_t>(n_) * n_, kUnset);
  long long& slot = mobius_memo_[static_cast<size_t>(x) * n_ + y];
  if (slot != kUnset) return slot;
  long long value;
  if (x == y) {
    value = 1;
  } else {
    long long sum = 0;
    for (int z = 0; z < n_; ++z)
      if (bit(x, z) && bit(z, y) && z != y) sum += mobius(x, z);
    value = -sum;
  }
  slot = value;
  return value;
}

FinitePoset FinitePoset::opposite() const {
  FinitePoset p;
  p.n_ = n_;
  p.words_ = words_;
  p.labels_ = labels_;
  p.rel_.assign(rel_.size(), 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (bit(i, j)) p.set_bit(j, i);
  p.finish_construction(false);
  return p;
}

FinitePoset FinitePoset::with_bounds(const std::string& bottom_label,
                                     const std::string& top_label) const {
  bool need_bottom = !unique_minimum().has_value() || n_ == 0;
  bool need_top = !unique_maximum().has_value() || n_ == 0;
  if (!need_bottom && !need_top) return *this;
  std::vector<std::string> labels = labels_;
  int bot = -1, top = -1;
  if (need_bottom) {
    bot = static_cast<int>(labels.size());
    labels.push_back(bottom_label);
  }
  if (need_top) {
    top = static_cast<int>(labels.size());
    labels.push_back(top_label);
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (bit(i, j)) pairs.emplace_back(i, j);
  int m = static_cast<int>(labels.size());
  for (int i = 0; i < m; ++i) {
    if (bot >= 0) pairs.emplace_back(bot, i);
    if (top >= 0) pairs.emplace_back(i, top);
  }
  return FinitePoset(std::move(labels), pairs, true);
}

FinitePoset FinitePoset::with_new_bounds(const std::string& bottom_label,
                                         const std::string& top_label) const {
  std::vector<std::string> labels = labels_;
  int bot = static_cast<int>(labels.size());
  labels.push_back(bottom_label);
  int top = bot + 1;
  labels.push_back(top_label);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (bit(i, j)) pairs.emplace_back(i, j);
  for (int i = 0; i <= top; ++i) {
    pairs.emplace_back(bot, i);
    pairs.emplace_back(i, top);
  }
  return FinitePoset(std::move(labels), pairs, true);
}

FinitePoset FinitePoset::induced(const std::vector<int>& subset) const {
  std::vector<std::string> labels;
  labels.reserve(subset.size());
  for (int i : subset) labels.push_back(labels_[i]);
  FinitePoset p;
  p.n_ = static_cast<int>(subset.size());
  p.words_ = static_cast<size_t>((p.n_ + 63) / 64);
  p.labels_ = std::move(labels);
  p.rel_.assign(static_cast<size_t>(p.n_) * p.words_, 0);
  for (int a = 0; a < p.n_; ++a)
    for (int b = 0; b < p.n_; ++b)
      if (bit(subset[a], subset[b])) p.set_bit(a, b);
  p.finish_construction(false);
  return p;
}

long long mobius_number(const FinitePoset& p) {
  // Alternating chain counts: -1 + #chains(1) - #chains(2) + ...
  int n = p.size();
  // ways[i][j]: chains of j+1 elements ending at i. Kept as totals per size.
  std::vector<std::vector<long long>> ending(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return p.rank(a) < p.rank(b); });
  long long result = -1;
  int sign = 1;  // sign for chains of 1 element
  for (int v : order) {
    std::vector<long long> w{1};
    for (int u : order) {
      if (u == v) break;
      if (p.less(u, v)) {
        if (w.size() < ending[u].size() + 1) w.resize(ending[u].size() + 1, 0);
        for (size_t j = 0; j < ending[u].size(); ++j) w[j + 1] += ending[u][j];
      }
    }
    ending[v] = std::move(w);
  }
  std::vector<long long> totals;
  for (int v = 0; v < n; ++v) {
    if (totals.size() < ending[v].size()) totals.resize(ending[v].size(), 0);
    for (size_t j = 0; j < ending[v].size(); ++j) totals[j] += ending[v][j];
  }
  for (size_t j = 0; j < totals.size(); ++j) {
    result += sign * totals[j];
    sign = -sign;
  }
  return result;
}

bool check_eulerian_with_bounds(const FinitePoset& p) {
  FinitePoset q = p.with_bounds();
  if (!q.ranked()) throw DomainError("poset is not ranked");
  int n = q.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (q.leq(i, j)) {
        long long expect = ((q.rank(j) - q.rank(i)) % 2 == 0) ? 1 : -1;
        if (q.mobius(i, j) != expect) return false;
      }
  return true;
}

namespace {

std::vector<uint64_t> iso_signatures(const FinitePoset& p) {
  int n = p.size();
  std::vector<uint64_t> sig(n);
  for (int i = 0; i < n; ++i) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(static_cast<uint64_t>(p.rank(i)));
    mix(p.down_set(i).size());
    mix(p.up_set(i).size());
    sig[i] = h;
  }
  for (int round = 0; round < 3; ++round) {
    std::vector<uint64_t> next(n);
    for (int i = 0; i < n; ++i) {
      std::vector<uint64_t> up, down;
      for (int j = 0; j < n; ++j) {
        if (p.less(i, j)) up.push_back(sig[j]);
        if (p.less(j, i)) down.push_back(sig[j]);
      }
      std::sort(up.begin(), up.end());
      std::sort(down.begin(), down.end());
      uint64_t h = sig[i];
      auto mix = [&h](uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
      };
      mix(0x9e3779b97f4a7c15ull);
      for (uint64_t v : up) mix(v);
      mix(0xc2b2ae3d27d4eb4full);
      for (uint64_t v : down) mix(v);
      next[i] = h;
    }
    sig = std::move(next);
  }
  return sig;
}

bool iso_backtrack(const FinitePoset& p, const FinitePoset& q,
                   const std::vector<std::vector<int>>& candidates,
                   const std::vector<int>& order, size_t depth,
                   std::vector<int>& image, std::vector<bool>& used) {
  if (depth == order.size()) return true;
  int v = order[depth];
  for (int w : candidates[v]) {
    if (used[w]) continue;
    bool ok = true;
    for (size_t d = 0; d < depth && ok; ++d) {
      int u = order[d];
      if (p.leq(u, v) != q.leq(image[u], w)) ok = false;
      if (p.leq(v, u) != q.leq(w, image[u])) ok = false;
    }
    if (!ok) continue;
    image[v] = w;
    used[w] = true;
    if (iso_backtrack(p, q, candidates, order, depth + 1, image, used)) return true;
    used[w] = false;
    image[v] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() != q.size()) return std::nullopt;
  int n = p.size();
  auto sp = iso_signatures(p);
  auto sq = iso_signatures(q);
  {
    auto a = sp;
    auto b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<std::vector<int>> candidates(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sp[i] == sq[j]) candidates[i].push_back(j);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return candidates[a].size() < candidates[b].size();
  });
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  if (iso_backtrack(p, q, candidates, order, 0, image, used)) return image;
  return std::nullopt;
}

FiniteLattice FiniteLattice::from_poset(const FinitePoset& p) {
  FiniteLattice l;
  static_cast<FinitePoset&>(l) = p;
  int n = p.size();
  if (n == 0) throw StructureError("empty poset is not a lattice");
  l.join_.assign(static_cast<size_t>(n) * n, -1);
  l.meet_.assign(static_cast<size_t>(n) * n, -1);
  auto bound = [&](int i, int j, bool upper) -> int {
    // Least upper / greatest lower bound, -1 if none.
    int best = -1;
    for (int z = 0; z < n; ++z) {
      bool is_bound = upper ? (p.leq(i, z) && p.leq(j, z)) : (p.leq(z, i) && p.leq(z, j));
      if (!is_bound) continue;
      if (best == -1)
        best = z;
      else if (upper ? p.leq(z, best) : p.leq(best, z))
        best = z;
    }
    if (best == -1) return -1;
    // Verify extremality against every bound.
    for (int z = 0; z < n; ++z) {
      bool is_bound = upper ? (p.leq(i, z) && p.leq(j, z)) : (p.leq(z, i) && p.leq(z, j));
      if (is_bound && !(upper ? p.leq(best, z) : p.leq(z, best))) return -1;
    }
    return best;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int up = bound(i, j, true);
      int lo = bound(i, j, false);
      if (up < 0)
        throw StructureError("no join for " + p.label(i) + ", " + p.label(j));
      if (lo < 0)
        throw StructureError("no meet for " + p.label(i) + ", " + p.label(j));
      l.join_[static_cast<size_t>(i) * n + j] = l.join_[static_cast<size_t>(j) * n + i] = up;
      l.meet_[static_cast<size_t>(i) * n + j] = l.meet_[static_cast<size_t>(j) * n + i] = lo;
    }
  auto mn = p.unique_minimum();
  auto mx = p.unique_maximum();
  if (!mn || !mx) throw StructureError("lattice needs unique bottom and top");
  l.bottom_ = *mn;
  l.top_ = *mx;
  return l;
}

FiniteLattice FiniteLattice::opposite_lattice() const {
  return from_poset(opposite());
}

std::string IntervalLattice::interval_label(const FiniteLattice& base, int lo, int hi) {
  return "(" + base.label(lo) + ";" + base.label(hi) + ")";
}

IntervalLattice IntervalLattice::build(const FiniteLattice& base) {
  int n = base.size();
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (base.leq(x, y)) {
        pairs.emplace_back(x, y);
        labels.push_back(interval_label(base, x, y));
      }
  FinitePoset p = FinitePoset::from_predicate(labels, [&](int a, int b) {
    return base.leq(pairs[a].first, pairs[b].first) &&
           base.leq(pairs[a].second, pairs[b].second);
  });
  IntervalLattice il;
  static_cast<FiniteLattice&>(il) = FiniteLattice::from_poset(p);
  il.base_ = base;
  il.pairs_ = pairs;
  // Joins and meets must be componentwise in the base lattice.
  int m = static_cast<int>(pairs.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      auto [ax, ay] = pairs[a];
      auto [bx, by] = pairs[b];
      auto jv = il.interval(il.join(a, b));
      auto mv = il.interval(il.meet(a, b));
      if (jv != std::make_pair(base.join(ax, bx), base.join(ay, by)) ||
          mv != std::make_pair(base.meet(ax, bx), base.meet(ay, by)))
        throw StructureError("interval lattice operations are not componentwise");
    }
  return il;
}

int IntervalLattice::index_of_interval(int lo, int hi) const {
  return index_of(interval_label(base_, lo, hi));
}

long long mobius_interval_product(const FiniteLattice& base,
                                  std::pair<int, int> a, std::pair<int, int> b) {
  auto [x, y] = a;
  auto [x2, y2] = b;
  if (!base.leq(x, y) || !base.leq(x2, y2)) throw DomainError("arguments are not intervals");
  if (!(base.leq(x, x2) && base.leq(y, y2)))
    throw DomainError("intervals are not comparable in Int(L)");
  if (!base.leq(x2, y)) return 0;
  return base.mobius(x, x2) * base.mobius(y, y2);
}

bool check_semimodular(const FiniteLattice& l) {
  int n = l.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int m = l.meet(x, y);
      if (l.covers(m, x) && !l.covers(y, l.join(x, y))) return false;
    }
  return true;
}

bool GenZaslavskyReport::all_ok() const {
  for (bool c : conditions)
    if (!c) return false;
  return identity_ok;
}

std::string GenZaslavskyReport::summary() const {
  std::ostringstream out;
  for (int i = 0; i < 6; ++i) {
    out << "condition " << (i + 1) << ": " << (conditions[i] ? "pass" : "FAIL");
    if (!detail[i].empty()) out << " (" << detail[i] << ")";
    out << "\n";
  }
  out << "identity: " << max_count << (identity_ok ? " = " : " != ") << mobius_sum << "\n";
  return out.str();
}

GenZaslavskyReport generalized_zaslavsky_check(const FinitePoset& p,
                                               const FinitePoset& q,
                                               const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != p.size()) throw DomainError("map must be total on P");
  GenZaslavskyReport rep;

  bool p_ranked = p.ranked();
  bool q_ranked = q.ranked();
  rep.conditions[0] = p_ranked && q_ranked && p.length() == q.length();
  if (!rep.conditions[0])
    rep.detail[0] = "lengths " + std::to_string(p.length()) + " vs " + std::to_string(q.length());

  auto qmax = q.unique_maximum();
  rep.conditions[1] = qmax.has_value();

  {
    FinitePoset ph = p.with_new_bounds();
    bool ok = ph.ranked();
    if (ok) {
      for (int i = 0; i < ph.size() && ok; ++i)
        for (int j = 0; j < ph.size() && ok; ++j)
          if (ph.leq(i, j)) {
            long long expect = ((ph.rank(j) - ph.rank(i)) % 2 == 0) ? 1 : -1;
            if (ph.mobius(i, j) != expect) ok = false;
          }
    }
    rep.conditions[2] = ok;
  }

  {
    bool order_ok = true, rank_ok = true;
    for (int i = 0; i < p.size(); ++i) {
      if (p_ranked && q_ranked && q.rank(f[i]) != p.rank(i)) rank_ok = false;
      for (int j = 0; j < p.size(); ++j)
        if (p.leq(i, j) && !q.leq(f[i], f[j])) order_ok = false;
    }
    std::vector<bool> hit(q.size(), false);
    for (int i = 0; i < p.size(); ++i) hit[f[i]] = true;
    bool surj = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    rep.conditions[3] = order_ok && rank_ok && surj;
    if (!rep.conditions[3])
      rep.detail[3] = std::string(order_ok ? "" : "not order-preserving; ") +
                      (rank_ok ? "" : "not rank-preserving; ") + (surj ? "" : "not surjective");
  }

  {
    bool ok = true;
    for (int x = 0; x < q.size() && ok; ++x) {
      std::vector<int> fiber;
      for (int i = 0; i < p.size(); ++i)
        if (q.leq(f[i], x)) fiber.push_back(i);
      long long mu = mobius_number(p.induced(fiber));
      long long expect = (q.rank(x) % 2 == 0) ? 1 : -1;
      if (mu != expect) {
        ok = false;
        rep.detail[4] = "at " + q.label(x) + ": " + std::to_string(mu);
      }
    }
    rep.conditions[4] = ok;
  }

  if (qmax) {
    bool ok = true;
    int r = q.length();
    for (int x = 0; x < q.size(); ++x) {
      long long mu = q.mobius(x, *qmax);
      long long signed_value = ((r - q.rank(x)) % 2 == 0) ? mu : -mu;
      if (signed_value < 0) {
        ok = false;
        rep.detail[5] = "at " + q.label(x);
      }
    }
    rep.conditions[5] = ok;
  }

  rep.max_count = static_cast<long long>(p.maximal_elements().size());
  if (qmax) {
    // Sum over Q with one extra bottom adjoined.
    std::vector<std::string> labels = q.labels();
    labels.push_back("^adjoined");
    int bot = q.size();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < q.size(); ++i) {
      for (int j = 0; j < q.size(); ++j)
        if (q.leq(i, j)) pairs.emplace_back(i, j);
      pairs.emplace_back(bot, i);
    }
    pairs.emplace_back(bot, bot);
    FinitePoset qb(std::move(labels), pairs, true);
    int top = qb.index_of(q.label(*qmax));
    long long sum = 0;
    for (int x = 0; x < qb.size(); ++x)
      if (qb.leq(x, top)) sum += std::abs(qb.mobius(x, top));
    rep.mobius_sum = sum;
    rep.identity_ok = (rep.max_count == rep.mobius_sum);
  }
  return rep;
}

}  // namespace lrb
