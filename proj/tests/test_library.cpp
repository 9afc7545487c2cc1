#include <doctest.h>

#include <algorithm>

#include "lrb/errors.hpp"
#include "lrb/library.hpp"
#include "test_util.hpp"

using namespace lrb;

namespace {

// The running 14-book example: algebra, combinatorics, geometry, topology.
SetPartition four_classes() {
  return SetPartition(14, {{1, 4, 5, 7}, {2, 8, 11, 12, 14}, {6, 13}, {3, 9, 10}});
}

LibraryState start_state() {
  return LibraryState(four_classes(),
                      {{11, 14, 2, 12, 8}, {6, 13}, {4, 7, 5, 1}, {10, 9, 3}});
}

// Direct simulation of the prose rule, independent of the interval algebra:
// shelves holding borrowed books rise to the top in induced order, then each
// shelf puts its borrowed books first in induced order.
LibraryState borrow_by_prose(const LibraryState& state, const std::set<int>& borrowed) {
  std::vector<std::vector<int>> touched, untouched;
  for (const auto& shelf : state.shelves()) {
    bool hit = std::any_of(shelf.begin(), shelf.end(),
                           [&](int b) { return borrowed.count(b) > 0; });
    (hit ? touched : untouched).push_back(shelf);
  }
  std::vector<std::vector<int>> shelves;
  for (auto group : {touched, untouched})
    for (auto& shelf : group) {
      std::vector<int> front, back;
      for (int b : shelf) (borrowed.count(b) ? front : back).push_back(b);
      front.insert(front.end(), back.begin(), back.end());
      shelves.push_back(std::move(front));
    }
  return LibraryState(state.classes(), std::move(shelves));
}

}  // namespace

TEST_CASE("state validation") {
  CHECK_THROWS_AS(LibraryState(SetPartition::parse("12|3"), {{1, 2, 3}}), StructureError);
  CHECK_THROWS_AS(LibraryState(SetPartition::parse("12|3"), {{1, 3}, {2}}), StructureError);
  LibraryState ok(SetPartition::parse("12|3"), {{2, 1}, {3}});
  CHECK(ok.shelf_partition().to_string() == "12|3");
  CHECK(ok.reading_order().to_string() == "2|1|3");
}

TEST_CASE("the worked fourteen-book step by a general interval") {
  LibraryState state = start_state();
  OrderedPartition q(14, {{1, 4, 5, 7}, {2, 3, 8, 9, 10, 11, 12, 14}, {6, 13}});
  OrderedPartition t(14, {{4, 5}, {1, 7}, {8, 9, 12}, {14}, {2, 3, 10, 11}, {6, 13}});
  LibraryState next = apply_interval(state, q, t);
  CHECK(next.shelves() == std::vector<std::vector<int>>{
                              {4, 5, 7, 1}, {12, 8, 14, 11, 2}, {9, 10, 3}, {6, 13}});
  CHECK(next.render() == "4 5 7 1\n12 8 14 11 2\n9 10 3\n6 13\n");
  // A second application of an idempotent fixes the result.
  CHECK(apply_interval(next, q, t) == apply_interval(next, q, t));
}

TEST_CASE("the worked fourteen-book step by a borrowed subset") {
  LibraryState state = start_state();
  LibraryState next = apply_borrow(state, {1, 2, 3, 4});
  CHECK(next.shelves() == std::vector<std::vector<int>>{
                              {2, 11, 14, 12, 8}, {4, 1, 7, 5}, {3, 10, 9}, {6, 13}});
  CHECK(apply_borrow(state, {}) == state);
  std::set<int> everything;
  for (int b = 1; b <= 14; ++b) everything.insert(b);
  CHECK(apply_borrow(state, everything) == state);
}

TEST_CASE("borrowing agrees with the prose rule on random states") {
  test::Rng rng(911);
  SetPartition classes(7, {{1, 2}, {3, 4, 5}, {6}, {7}});
  LibraryState state(classes, {{1, 2}, {3, 4, 5}, {6}, {7}});
  for (int step = 0; step < 200; ++step) {
    std::set<int> borrowed;
    for (int b = 1; b <= 7; ++b)
      if (rng.below(2)) borrowed.insert(b);
    LibraryState by_interval = apply_borrow(state, borrowed);
    CHECK(by_interval == borrow_by_prose(state, borrowed));
    state = by_interval;
  }
}

TEST_CASE("fiber semigroup of a two-class library") {
  SetPartition classes = SetPartition::parse("12|3");
  LrbSemigroup fiber = library_fiber(classes);
  // Coarse parts coarsen the classification: <123>, <12|3>, <3|12>; their
  // refinement counts are 13, 3 and 3.
  CHECK(fiber.size() == 19);
  CHECK(fiber.verify().ok());
  auto maxima = fiber.maximal_elements();
  CHECK(maxima.size() == 4);
  std::vector<std::string> states;
  for (int m : maxima) states.push_back(fiber.label(m));
  std::sort(states.begin(), states.end());
  CHECK(states == std::vector<std::string>{"1|2||3", "2|1||3", "3||1|2", "3||2|1"});

  SupportStructure sup = library_fiber_support(classes, fiber);
  CHECK(sup.lattice.size() == 7);

  // One shelf only: the coarse part is forced and the walk reduces to the
  // one-shelf case on permutations.
  LrbSemigroup one_shelf = library_fiber(SetPartition::whole(3));
  CHECK(one_shelf.size() == 13);
  CHECK(one_shelf.maximal_elements().size() == 6);
  // All singleton classes: the fine part is forced, states are shelf orders.
  LrbSemigroup singles = library_fiber(SetPartition::singletons(3));
  CHECK(singles.maximal_elements().size() == 6);
}

TEST_CASE("state counts are shelf orders times in-class orders") {
  auto factorial = [](int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  for (const char* spec : {"12|3", "123|4", "12|34"}) {
    SetPartition classes = SetPartition::parse(spec);
    long long expected = factorial(classes.block_count());
    for (const auto& block : classes.blocks()) expected *= factorial(static_cast<int>(block.size()));
    CHECK(static_cast<long long>(library_fiber(classes).maximal_elements().size()) == expected);
  }
}

TEST_CASE("driving distributions") {
  auto tsetlin = tsetlin_distribution(3, {{1, Rational(1, 2)}, {2, Rational(1, 3)}, {3, Rational(1, 6)}});
  CHECK(tsetlin.size() == 3);
  CHECK(tsetlin.at("1|23") == Rational(1, 2));
  CHECK(tsetlin.at("2|13") == Rational(1, 3));
  CHECK(tsetlin.at("3|12") == Rational(1, 6));

  auto subsets = subset_distribution(4, {{{1, 3}, Rational(1)}});
  CHECK(subsets.at("13|24") == 1);
  CHECK_THROWS_AS(subset_distribution(3, {{{1}, Rational(-1)}}), DomainError);
  CHECK_THROWS_AS(subset_distribution(3, {{{1}, Rational(2)}}), DomainError);

  // All mass on singletons is the move-to-front distribution.
  auto singles = subset_distribution(3, {{{1}, Rational(1, 2)}, {{2}, Rational(1, 2)}});
  CHECK(singles == tsetlin_distribution(3, {{1, Rational(1, 2)}, {2, Rational(1, 2)}}));

  auto on_fiber = library_subset_distribution(SetPartition::parse("12|3"),
                                              {{{3}, Rational(1, 4)}, {{1}, Rational(1, 4)}});
  CHECK(on_fiber.at("3||12") == Rational(1, 4));
  CHECK(on_fiber.at("1|2||3") == Rational(1, 4));
}

TEST_CASE("move-to-front steps through the braid semigroup") {
  LrbSemigroup s = braid_face_semigroup(3);
  CHECK(s.compose_labels("3|12", "2|1|3") == "3|2|1");
  // A subset step on one shelf: remove {1,3} from (4,3,2,1), replace in front.
  LrbSemigroup s4 = braid_face_semigroup(4);
  CHECK(s4.compose_labels("13|24", "4|3|2|1") == "3|1|4|2");
}

TEST_CASE("spectrum labels for the two-class library") {
  SetPartition classes = SetPartition::parse("12|3");
  auto rows = library_spectrum_labels(classes);
  CHECK(rows.size() == 4);
  for (const auto& row : rows) CHECK(row.multiplicity == 1);

  // Contribution table for the six proper subsets.
  SetPartition whole = SetPartition::whole(3);
  SetPartition fine = SetPartition::singletons(3);
  auto contributes = [&](std::set<int> e, const SetPartition& a, const SetPartition& b) {
    return library_subset_contributes(classes, e, a, b);
  };
  CHECK(contributes({3}, classes, classes));
  CHECK(contributes({3}, classes, fine));
  CHECK_FALSE(contributes({3}, whole, fine));
  CHECK(contributes({1, 3}, whole, fine));
  CHECK(contributes({1, 2}, classes, classes));
  CHECK_FALSE(contributes({1}, classes, classes));
  CHECK(contributes({1}, classes, fine));
}

TEST_CASE("factorial multiplicities count classes, not books") {
  auto rows = library_spectrum_labels(SetPartition::parse("123|4"));
  long long total = 0;
  for (const auto& row : rows) total += row.multiplicity;
  // 2 shelf orders x 3! x 1! placements.
  CHECK(total == 12);
  for (const auto& row : rows)
    if (row.beta.to_string() == "123|4")
      CHECK(row.multiplicity == 2);  // (3-1)! x (1-1)! inside, classes coarse
}

TEST_CASE("json round trip") {
  LibraryState state = start_state();
  CHECK(LibraryState::from_json_text(state.to_json()) == state);
}
