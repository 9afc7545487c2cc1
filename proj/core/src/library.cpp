#include "lrb/library.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lrb/errors.hpp"

namespace lrb {

LibraryState::LibraryState(SetPartition classes, std::vector<std::vector<int>> shelves)
    : classes_(std::move(classes)), shelves_(std::move(shelves)) {
  if (static_cast<int>(shelves_.size()) != classes_.block_count())
    throw StructureError("shelf count must equal class count");
  std::vector<bool> class_used(classes_.block_count(), false);
  for (const auto& shelf : shelves_) {
    if (shelf.empty()) throw StructureError("empty shelf");
    int cls = classes_.block_of(shelf.front());
    for (int b : shelf)
      if (classes_.block_of(b) != cls) throw StructureError("shelf mixes classes");
    std::vector<int> sorted = shelf;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != classes_.blocks()[cls]) throw StructureError("shelf misses books of its class");
    if (class_used[cls]) throw StructureError("class appears on two shelves");
    class_used[cls] = true;
  }
}

LibraryState LibraryState::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad library state JSON: ") + e.what());
  }
  if (!j.contains("classes") || !j.contains("shelves"))
    throw ParseError("library state JSON needs \"classes\" and \"shelves\"");
  std::vector<std::vector<int>> classes = j["classes"].get<std::vector<std::vector<int>>>();
  std::vector<std::vector<int>> shelves = j["shelves"].get<std::vector<std::vector<int>>>();
  int n = 0;
  for (const auto& c : classes)
    for (int x : c) n = std::max(n, x);
  return LibraryState(SetPartition(n, std::move(classes)), std::move(shelves));
}

LibraryState LibraryState::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

OrderedPartition LibraryState::shelf_partition() const {
  std::vector<std::vector<int>> blocks;
  for (const auto& shelf : shelves_) blocks.push_back(shelf);
  return OrderedPartition(book_count(), std::move(blocks));
}

OrderedPartition LibraryState::reading_order() const {
  std::vector<std::vector<int>> blocks;
  for (const auto& shelf : shelves_)
    for (int b : shelf) blocks.push_back({b});
  return OrderedPartition(book_count(), std::move(blocks));
}

LibraryState LibraryState::from_interval(const SetPartition& classes,
                                         const PartitionInterval& iv) {
  if (!iv.fine().is_permutation())
    throw DomainError("state interval must refine down to a permutation");
  std::vector<std::vector<int>> shelves;
  size_t fi = 0;
  for (const auto& block : iv.coarse().blocks()) {
    std::vector<int> shelf;
    while (shelf.size() < block.size()) shelf.push_back(iv.fine().blocks()[fi++].front());
    shelves.push_back(std::move(shelf));
  }
  return LibraryState(classes, std::move(shelves));
}

std::string LibraryState::to_json() const {
  nlohmann::json j;
  j["classes"] = classes_.blocks();
  j["shelves"] = shelves_;
  return j.dump();
}

std::string LibraryState::render() const {
  std::ostringstream out;
  for (const auto& shelf : shelves_) {
    for (size_t i = 0; i < shelf.size(); ++i) {
      if (i) out << " ";
      out << shelf[i];
    }
    out << "\n";
  }
  return out.str();
}

LrbSemigroup library_fiber(const SetPartition& classes) {
  int n = classes.ground_size();
  if (n > 7) throw CapacityError("library fiber enumeration needs n <= 7");
  auto parts = all_ordered_partitions(n);
  std::vector<PartitionInterval> members;
  for (const auto& q : parts) {
    // The classification must refine the coarse part.
    if (!classes.refines(SetPartition::of(q))) continue;
    for (const auto& t : parts)
      if (q.refined_by(t)) members.emplace_back(q, t);
  }
  std::sort(members.begin(), members.end(),
            [](const PartitionInterval& a, const PartitionInterval& b) {
              auto key = [](const PartitionInterval& x) {
                return std::make_tuple(x.coarse().block_count() + x.fine().block_count(),
                                       x.to_string());
              };
              return key(a) < key(b);
            });
  std::map<PartitionInterval, int> id;
  std::vector<std::string> labels;
  for (size_t i = 0; i < members.size(); ++i) {
    id[members[i]] = static_cast<int>(i);
    labels.push_back(members[i].to_string());
  }
  int identity =
      id.at(PartitionInterval(OrderedPartition::whole(n), OrderedPartition::whole(n)));
  return LrbSemigroup(std::move(labels), identity, [members, id](int a, int b) {
    auto it = id.find(members[a].compose(members[b]));
    if (it == id.end()) throw StructureError("library fiber is not closed");
    return it->second;
  });
}

SupportStructure library_fiber_support(const SetPartition& classes, const LrbSemigroup& fiber) {
  int n = classes.ground_size();
  auto parts = all_set_partitions(n);
  std::vector<std::pair<SetPartition, SetPartition>> pairs;
  std::vector<std::string> labels;
  for (const auto& alpha : parts) {
    if (!classes.refines(alpha)) continue;
    for (const auto& beta : parts)
      if (beta.refines(alpha)) {
        pairs.emplace_back(alpha, beta);
        labels.push_back("(" + alpha.to_string() + ";" + beta.to_string() + ")");
      }
  }
  auto poset = FinitePoset::from_predicate(labels, [&pairs](int a, int b) {
    return pairs[b].first.refines(pairs[a].first) && pairs[b].second.refines(pairs[a].second);
  });
  FiniteLattice claimed = FiniteLattice::from_poset(poset);
  std::vector<int> supp(fiber.size());
  for (int i = 0; i < fiber.size(); ++i) {
    PartitionInterval iv = PartitionInterval::parse(fiber.label(i), n);
    supp[i] = claimed.index_of("(" + SetPartition::of(iv.coarse()).to_string() + ";" +
                               SetPartition::of(iv.fine()).to_string() + ")");
  }
  return fiber.build_support_checked(claimed, supp);
}

LibraryState apply_interval(const LibraryState& state, const OrderedPartition& q,
                            const OrderedPartition& t) {
  const SetPartition& classes = state.classes();
  if (!classes.refines(SetPartition::of(q)))
    throw DomainError("interval does not respect the classification");
  if (!q.refined_by(t)) throw DomainError("malformed interval: fine part must refine coarse");
  OrderedPartition p = state.shelf_partition();
  OrderedPartition s = state.reading_order();
  OrderedPartition qp = q.compose(p);
  OrderedPartition books = qp.compose(t).compose(s);
  return LibraryState::from_interval(classes, PartitionInterval(std::move(qp), std::move(books)));
}

PartitionInterval borrow_interval(const SetPartition& classes, const std::set<int>& borrowed) {
  int n = classes.ground_size();
  std::set<int> touched;  // K_E: every book of every class that meets E
  for (int b : borrowed) {
    if (b < 1 || b > n) throw DomainError("book out of range: " + std::to_string(b));
    for (int x : classes.blocks()[classes.block_of(b)]) touched.insert(x);
  }
  auto push_nonempty = [](std::vector<std::vector<int>>& blocks, std::vector<int> block) {
    if (!block.empty()) blocks.push_back(std::move(block));
  };
  std::vector<int> inside(touched.begin(), touched.end());
  std::vector<int> outside;
  for (int x = 1; x <= n; ++x)
    if (!touched.count(x)) outside.push_back(x);
  if (borrowed.empty())
    return PartitionInterval(OrderedPartition::whole(n), OrderedPartition::whole(n));
  std::vector<std::vector<int>> q_blocks;
  push_nonempty(q_blocks, inside);
  push_nonempty(q_blocks, outside);
  std::vector<int> front(borrowed.begin(), borrowed.end());
  std::vector<int> middle;
  for (int x : inside)
    if (!borrowed.count(x)) middle.push_back(x);
  std::vector<std::vector<int>> t_blocks;
  push_nonempty(t_blocks, front);
  push_nonempty(t_blocks, middle);
  push_nonempty(t_blocks, outside);
  return PartitionInterval(OrderedPartition(n, std::move(q_blocks)),
                           OrderedPartition(n, std::move(t_blocks)));
}

LibraryState apply_borrow(const LibraryState& state, const std::set<int>& borrowed) {
  PartitionInterval iv = borrow_interval(state.classes(), borrowed);
  return apply_interval(state, iv.coarse(), iv.fine());
}

std::string subset_label(const std::set<int>& subset) {
  std::string out;
  for (int x : subset) {
    if (!out.empty()) out += ",";
    out += std::to_string(x);
  }
  return out.empty() ? "{}" : out;
}

std::set<int> parse_subset(const std::string& text) {
  std::set<int> out;
  if (text.empty() || text == "{}") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ParseError("bad subset: " + text);
    out.insert(std::stoi(item));
  }
  return out;
}

namespace {

void check_weights(const std::map<std::string, Rational>& w) {
  Rational total = 0;
  for (const auto& [label, value] : w) {
    if (value < 0) throw DomainError("negative weight on " + label);
    total += value;
  }
  if (total > 1) throw DomainError("weights sum beyond 1");
}

}  // namespace

std::map<std::string, Rational> tsetlin_distribution(
    int n, const std::map<int, Rational>& book_weights) {
  std::map<std::set<int>, Rational> subsets;
  for (const auto& [book, value] : book_weights) subsets[{book}] = value;
  return subset_distribution(n, subsets);
}

std::map<std::string, Rational> subset_distribution(
    int n, const std::map<std::set<int>, Rational>& subset_weights) {
  std::map<std::string, Rational> out;
  for (const auto& [subset, value] : subset_weights) {
    std::vector<int> inside(subset.begin(), subset.end());
    std::vector<int> outside;
    for (int x = 1; x <= n; ++x)
      if (!subset.count(x)) outside.push_back(x);
    std::vector<std::vector<int>> blocks;
    if (!inside.empty()) blocks.push_back(inside);
    if (!outside.empty()) blocks.push_back(outside);
    OrderedPartition p(n, std::move(blocks));
    out[p.to_string()] += value;
  }
  check_weights(out);
  return out;
}

std::map<std::string, Rational> library_subset_distribution(
    const SetPartition& classes, const std::map<std::set<int>, Rational>& subset_weights) {
  std::map<std::string, Rational> out;
  for (const auto& [subset, value] : subset_weights)
    out[borrow_interval(classes, subset).to_string()] += value;
  check_weights(out);
  return out;
}

bool library_subset_contributes(const SetPartition& classes, const std::set<int>& subset,
                                const SetPartition& alpha, const SetPartition& beta) {
  int n = classes.ground_size();
  // E must be a union of beta blocks.
  for (int x = 1; x <= n; ++x)
    if (subset.count(x))
      for (int y : beta.blocks()[beta.block_of(x)])
        if (!subset.count(y)) return false;
  // The touched classes must form a union of alpha blocks.
  std::set<int> touched;
  for (int b : subset)
    for (int x : classes.blocks()[classes.block_of(b)]) touched.insert(x);
  for (int x : touched)
    for (int y : alpha.blocks()[alpha.block_of(x)])
      if (!touched.count(y)) return false;
  return true;
}

std::vector<LibraryEigenRow> library_spectrum_labels(const SetPartition& classes) {
  int n = classes.ground_size();
  auto parts = all_set_partitions(n);
  auto factorial = [](int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  std::vector<LibraryEigenRow> rows;
  for (const auto& alpha : parts) {
    if (!classes.refines(alpha)) continue;
    for (const auto& beta : parts) {
      if (!beta.refines(classes)) continue;
      long long mult = 1;
      for (const auto& block : beta.blocks()) mult *= factorial(static_cast<int>(block.size()) - 1);
      // Block sizes of alpha counted in whole classes.
      for (const auto& block : alpha.blocks()) {
        std::set<int> class_ids;
        for (int x : block) class_ids.insert(classes.block_of(x));
        mult *= factorial(static_cast<int>(class_ids.size()) - 1);
      }
      rows.push_back({alpha, beta, mult});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const LibraryEigenRow& a, const LibraryEigenRow& b) {
    return std::make_tuple(a.alpha.to_string(), a.beta.to_string()) <
           std::make_tuple(b.alpha.to_string(), b.beta.to_string());
  });
  return rows;
}

}  // namespace lrb
