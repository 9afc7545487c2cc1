#include "lrb/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "lrb/errors.hpp"

namespace lrb {

namespace {

void validate_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<bool> seen(n + 1, false);
  int count = 0;
  for (const auto& b : blocks) {
    if (b.empty()) throw StructureError("empty block");
    for (int x : b) {
      if (x < 1 || x > n) throw StructureError("element out of range: " + std::to_string(x));
      if (seen[x]) throw StructureError("repeated element: " + std::to_string(x));
      seen[x] = true;
      ++count;
    }
  }
  if (count != n) throw StructureError("blocks do not cover the ground set");
}

std::string blocks_to_string(int n, const std::vector<std::vector<int>>& blocks,
                             const char* sep) {
  bool compact = n <= 9;
  std::string out;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += sep;
    for (size_t j = 0; j < blocks[i].size(); ++j) {
      if (j && !compact) out += ",";
      out += std::to_string(blocks[i][j]);
    }
  }
  return out;
}

std::vector<std::vector<int>> parse_blocks(const std::string& text, const std::string& sep) {
  std::vector<std::vector<int>> blocks;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t next = text.find(sep, pos);
    std::string part = text.substr(pos, next == std::string::npos ? next : next - pos);
    if (part.empty()) throw ParseError("empty block in: " + text);
    std::vector<int> block;
    if (part.find(',') != std::string::npos) {
      std::stringstream ss(part);
      std::string item;
      while (std::getline(ss, item, ','))
        block.push_back(std::stoi(item));
    } else {
      for (char c : part) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw ParseError(std::string("bad partition character: ") + c);
        block.push_back(c - '0');
      }
    }
    blocks.push_back(std::move(block));
    if (next == std::string::npos) break;
    pos = next + sep.size();
  }
  return blocks;
}

int infer_ground(const std::vector<std::vector<int>>& blocks) {
  int n = 0;
  for (const auto& b : blocks)
    for (int x : b) n = std::max(n, x);
  return n;
}

}  // namespace

OrderedPartition::OrderedPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  for (auto& b : blocks_) std::sort(b.begin(), b.end());
  validate_blocks(n_, blocks_);
}

OrderedPartition OrderedPartition::whole(int n) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  return OrderedPartition(n, {all});
}

OrderedPartition OrderedPartition::parse(const std::string& text, int n) {
  auto blocks = parse_blocks(text, "|");
  if (n == 0) n = infer_ground(blocks);
  return OrderedPartition(n, std::move(blocks));
}

OrderedPartition OrderedPartition::compose(const OrderedPartition& other) const {
  if (n_ != other.n_) throw DomainError("ground set mismatch");
  std::vector<std::vector<int>> out;
  for (const auto& x : blocks_)
    for (const auto& y : other.blocks_) {
      std::vector<int> cap;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(cap));
      if (!cap.empty()) out.push_back(std::move(cap));
    }
  return OrderedPartition(n_, std::move(out));
}

bool OrderedPartition::refined_by(const OrderedPartition& other) const {
  return compose(other) == other;
}

std::string OrderedPartition::to_string() const {
  return blocks_to_string(n_, blocks_, "|");
}

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  for (auto& b : blocks_) std::sort(b.begin(), b.end());
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  validate_blocks(n_, blocks_);
}

SetPartition SetPartition::of(const OrderedPartition& p) {
  return SetPartition(p.ground_size(), p.blocks());
}

SetPartition SetPartition::singletons(int n) {
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({i});
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::whole(int n) {
  return of(OrderedPartition::whole(n));
}

SetPartition SetPartition::parse(const std::string& text, int n) {
  auto blocks = parse_blocks(text, "|");
  if (n == 0) n = infer_ground(blocks);
  return SetPartition(n, std::move(blocks));
}

bool SetPartition::refines(const SetPartition& other) const {
  if (n_ != other.n_) throw DomainError("ground set mismatch");
  for (const auto& b : blocks_) {
    int target = other.block_of(b.front());
    for (int x : b)
      if (other.block_of(x) != target) return false;
  }
  return true;
}

int SetPartition::block_of(int element) const {
  for (size_t i = 0; i < blocks_.size(); ++i)
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), element))
      return static_cast<int>(i);
  throw DomainError("element not in partition: " + std::to_string(element));
}

std::string SetPartition::to_string() const {
  return blocks_to_string(n_, blocks_, "|");
}

std::vector<OrderedPartition> all_ordered_partitions(int n) {
  if (n < 1 || n > 7) throw CapacityError("ordered partition enumeration needs 1 <= n <= 7");
  std::vector<OrderedPartition> out;
  std::vector<std::vector<int>> blocks;
  std::function<void(uint32_t)> recurse = [&](uint32_t remaining) {
    if (remaining == 0) {
      out.emplace_back(n, blocks);
      return;
    }
    uint32_t sub = remaining;
    while (sub > 0) {
      std::vector<int> block;
      for (int i = 0; i < n; ++i)
        if (sub & (1u << i)) block.push_back(i + 1);
      blocks.push_back(std::move(block));
      recurse(remaining & ~sub);
      blocks.pop_back();
      sub = (sub - 1) & remaining;
    }
  };
  recurse((1u << n) - 1);
  std::sort(out.begin(), out.end(), [](const OrderedPartition& a, const OrderedPartition& b) {
    return std::make_pair(a.block_count(), a.to_string()) <
           std::make_pair(b.block_count(), b.to_string());
  });
  return out;
}

std::vector<SetPartition> all_set_partitions(int n) {
  if (n < 1 || n > 10) throw CapacityError("set partition enumeration needs 1 <= n <= 10");
  std::vector<SetPartition> out;
  // Restricted growth strings.
  std::vector<int> assign(n, 0);
  std::function<void(int, int)> recurse = [&](int i, int max_used) {
    if (i == n) {
      std::vector<std::vector<int>> blocks(max_used);
      for (int j = 0; j < n; ++j) blocks[assign[j]].push_back(j + 1);
      out.emplace_back(n, std::move(blocks));
      return;
    }
    for (int c = 0; c <= max_used; ++c) {
      assign[i] = c;
      recurse(i + 1, std::max(max_used, c + 1));
    }
  };
  recurse(0, 0);
  std::sort(out.begin(), out.end(), [](const SetPartition& a, const SetPartition& b) {
    return std::make_pair(a.block_count(), a.to_string()) <
           std::make_pair(b.block_count(), b.to_string());
  });
  return out;
}

FiniteLattice partition_lattice(int n) {
  auto parts = all_set_partitions(n);
  std::vector<std::string> labels;
  for (const auto& p : parts) labels.push_back(p.to_string());
  FinitePoset poset = FinitePoset::from_predicate(
      labels, [&](int a, int b) { return parts[a].refines(parts[b]); });
  return FiniteLattice::from_poset(poset);
}

LrbSemigroup braid_face_semigroup(int n) {
  auto parts = all_ordered_partitions(n);
  std::map<OrderedPartition, int> id;
  std::vector<std::string> labels;
  for (size_t i = 0; i < parts.size(); ++i) {
    id[parts[i]] = static_cast<int>(i);
    labels.push_back(parts[i].to_string());
  }
  int identity = id.at(OrderedPartition::whole(n));
  return LrbSemigroup(std::move(labels), identity, [parts, id](int a, int b) {
    return id.at(parts[a].compose(parts[b]));
  });
}

SupportStructure braid_face_support(const LrbSemigroup& s) {
  int n = OrderedPartition::parse(s.label(0)).ground_size();
  FiniteLattice claimed = partition_lattice(n).opposite_lattice();
  std::vector<int> supp(s.size());
  for (int i = 0; i < s.size(); ++i)
    supp[i] = claimed.index_of(SetPartition::of(OrderedPartition::parse(s.label(i), n)).to_string());
  return s.build_support_checked(claimed, supp);
}

PartitionInterval::PartitionInterval(OrderedPartition coarse, OrderedPartition fine)
    : coarse_(std::move(coarse)), fine_(std::move(fine)) {
  if (!coarse_.refined_by(fine_))
    throw StructureError("interval: " + fine_.to_string() + " does not refine " +
                         coarse_.to_string() + " compatibly");
}

PartitionInterval PartitionInterval::parse(const std::string& text, int n) {
  // Boxes separated by "||", fine blocks by "|".
  std::vector<std::string> boxes;
  size_t pos = 0;
  while (true) {
    size_t next = text.find("||", pos);
    boxes.push_back(text.substr(pos, next == std::string::npos ? next : next - pos));
    if (next == std::string::npos) break;
    pos = next + 2;
  }
  std::vector<std::vector<int>> coarse_blocks, fine_blocks;
  for (const auto& box : boxes) {
    auto blocks = parse_blocks(box, "|");
    std::vector<int> merged;
    for (auto& b : blocks) {
      merged.insert(merged.end(), b.begin(), b.end());
      fine_blocks.push_back(std::move(b));
    }
    coarse_blocks.push_back(std::move(merged));
  }
  if (n == 0) n = infer_ground(coarse_blocks);
  return PartitionInterval(OrderedPartition(n, std::move(coarse_blocks)),
                           OrderedPartition(n, std::move(fine_blocks)));
}

PartitionInterval PartitionInterval::compose(const PartitionInterval& other) const {
  // [Y,X] o [R,S] = [Y o R, Y o R o X o S].
  OrderedPartition yr = coarse_.compose(other.coarse_);
  OrderedPartition fine = yr.compose(fine_).compose(other.fine_);
  return PartitionInterval(std::move(yr), std::move(fine));
}

std::string PartitionInterval::to_string() const {
  int n = coarse_.ground_size();
  bool compact = n <= 9;
  std::string out;
  size_t fi = 0;
  for (size_t ci = 0; ci < coarse_.blocks().size(); ++ci) {
    if (ci) out += "||";
    size_t covered = 0;
    bool first = true;
    while (covered < coarse_.blocks()[ci].size()) {
      const auto& fb = fine_.blocks()[fi++];
      if (!first) out += "|";
      for (size_t j = 0; j < fb.size(); ++j) {
        if (j && !compact) out += ",";
        out += std::to_string(fb[j]);
      }
      covered += fb.size();
      first = false;
    }
  }
  return out;
}

PartitionInterval braid_interval_compose(const PartitionInterval& a,
                                         const PartitionInterval& b) {
  return a.compose(b);
}

LrbSemigroup braid_interval_semigroup(int n) {
  if (n > 5) throw CapacityError("interval semigroup enumeration needs n <= 5");
  auto parts = all_ordered_partitions(n);
  std::vector<PartitionInterval> intervals;
  for (const auto& coarse : parts)
    for (const auto& fine : parts)
      if (coarse.refined_by(fine)) intervals.emplace_back(coarse, fine);
  std::sort(intervals.begin(), intervals.end(),
            [](const PartitionInterval& a, const PartitionInterval& b) {
              auto key = [](const PartitionInterval& x) {
                return std::make_tuple(x.coarse().block_count() + x.fine().block_count(),
                                       x.to_string());
              };
              return key(a) < key(b);
            });
  std::map<PartitionInterval, int> id;
  std::vector<std::string> labels;
  for (size_t i = 0; i < intervals.size(); ++i) {
    id[intervals[i]] = static_cast<int>(i);
    labels.push_back(intervals[i].to_string());
  }
  int identity = id.at(PartitionInterval(OrderedPartition::whole(n), OrderedPartition::whole(n)));
  return LrbSemigroup(std::move(labels), identity, [intervals, id](int a, int b) {
    return id.at(intervals[a].compose(intervals[b]));
  });
}

SupportStructure braid_interval_support(const LrbSemigroup& s) {
  PartitionInterval first = PartitionInterval::parse(s.label(0));
  int n = first.coarse().ground_size();
  auto parts = all_set_partitions(n);
  std::vector<std::pair<SetPartition, SetPartition>> pairs;
  std::vector<std::string> labels;
  for (const auto& alpha : parts)
    for (const auto& beta : parts)
      if (beta.refines(alpha)) {
        pairs.emplace_back(alpha, beta);
        labels.push_back("(" + alpha.to_string() + ";" + beta.to_string() + ")");
      }
  auto claimed_poset = FinitePoset::from_predicate(labels, [&pairs](int a, int b) {
    // Coarser pairs sit below: (a1;b1) <= (a2;b2) iff a2 refines a1, b2 refines b1.
    return pairs[b].first.refines(pairs[a].first) && pairs[b].second.refines(pairs[a].second);
  });
  FiniteLattice claimed = FiniteLattice::from_poset(claimed_poset);
  std::vector<int> supp(s.size());
  for (int i = 0; i < s.size(); ++i) {
    PartitionInterval iv = PartitionInterval::parse(s.label(i), n);
    supp[i] = claimed.index_of("(" + SetPartition::of(iv.coarse()).to_string() + ";" +
                               SetPartition::of(iv.fine()).to_string() + ")");
  }
  return s.build_support_checked(claimed, supp);
}

}  // namespace lrb
