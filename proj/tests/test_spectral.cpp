#include <doctest.h>

#include "lrb/errors.hpp"
#include "lrb/library.hpp"
#include "lrb/linalg.hpp"
#include "lrb/partition.hpp"
#include "lrb/spectral.hpp"
#include "test_util.hpp"

using namespace lrb;

namespace {

WeightDistribution from_pairs(std::vector<std::pair<std::string, Rational>> pairs) {
  std::map<std::string, Rational> w(pairs.begin(), pairs.end());
  return WeightDistribution(std::move(w));
}

}  // namespace

TEST_CASE("charpoly: exact coefficients on a fixed matrix") {
  // [[0,1],[ -2, 3]] has characteristic polynomial x^2 - 3x + 2.
  Matrix m{{Rational(0), Rational(1)}, {Rational(-2), Rational(3)}};
  Poly p = charpoly(m);
  CHECK(p == Poly{Rational(2), Rational(-3), Rational(1)});
  // Rational entries: [[1/2, 1/3], [1/4, 1/5]].
  Matrix q{{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 5)}};
  Poly pq = charpoly(q);
  CHECK(pq == Poly{Rational(1, 10) - Rational(1, 12), Rational(-7, 10), Rational(1)});
}

TEST_CASE("charpoly agrees with the root expansion on diagonal matrices") {
  test::Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 1 + rng.below(5);
    Matrix m(n, std::vector<Rational>(n, 0));
    std::map<Rational, long long> mult;
    for (int i = 0; i < n; ++i) {
      Rational v(rng.below(4), 1 + rng.below(3));
      v.canonicalize();
      m[i][i] = v;
      mult[v] += 1;
    }
    std::vector<std::pair<Rational, long long>> roots(mult.begin(), mult.end());
    CHECK(poly_equal(charpoly(m), poly_from_roots(roots)));
  }
}

TEST_CASE("nullspace") {
  Matrix m{{Rational(1), Rational(1), Rational(0)}, {Rational(0), Rational(0), Rational(1)}};
  auto basis = nullspace(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] + basis[0][1] == 0);
  CHECK(basis[0][2] == 0);
}

TEST_CASE("transition matrix of the two-book move-to-front walk") {
  LrbSemigroup s = braid_face_semigroup(2);
  Rational w1(1, 2), w2(1, 3);
  auto tm = transition_matrix(s, from_pairs({{"1|2", w1}, {"2|1", w2}}));
  Rational rest = 1 - w1 - w2;
  REQUIRE(tm.states == std::vector<std::string>{"1|2", "2|1"});
  CHECK(tm.rows[0][0] == w1 + rest);
  CHECK(tm.rows[0][1] == w2);
  CHECK(tm.rows[1][0] == w1);
  CHECK(tm.rows[1][1] == w2 + rest);
}

TEST_CASE("identity-only distribution walks nowhere") {
  LrbSemigroup s = braid_face_semigroup(3);
  auto tm = transition_matrix(s, from_pairs({{"123", Rational(1)}}));
  CHECK(tm.rows == identity_matrix(6));
  SupportStructure sup = braid_face_support(s);
  auto report = brown_spectrum(s, sup, from_pairs({{"123", Rational(1)}}));
  auto check = charpoly_check(tm, report);
  CHECK(check.ok);  // (x-1)^6
  auto stat = stationary_distribution(tm, s, from_pairs({{"123", Rational(1)}}));
  CHECK_FALSE(stat.generation_holds);
  CHECK(stat.nullspace_dimension == 6);
  CHECK_FALSE(stat.distribution.has_value());
}

TEST_CASE("two-book spectrum") {
  LrbSemigroup s = braid_face_semigroup(2);
  SupportStructure sup = braid_face_support(s);
  auto w = from_pairs({{"1|2", Rational(1, 2)}, {"2|1", Rational(1, 2)}});
  auto report = brown_spectrum(s, sup, w);
  REQUIRE(report.rows.size() == 2);
  CHECK(report.rows[0].eigenvalue == 0);
  CHECK(report.rows[0].multiplicity == 1);
  CHECK(report.rows[1].eigenvalue == 1);
  CHECK(report.rows[1].multiplicity == 1);
  auto tm = transition_matrix(s, w);
  CHECK(charpoly_check(tm, report).ok);
  CHECK(power_trace_check(tm, report).ok);
  CHECK(diagonalizability_check(tm, report).ok);
}

TEST_CASE("eigenvalues are monotone along the support lattice") {
  LrbSemigroup s = braid_face_semigroup(3);
  SupportStructure sup = braid_face_support(s);
  test::Rng rng(5150);
  std::vector<std::string> carriers{"1|23", "2|13", "3|12", "12|3", "1|2|3"};
  auto weights = test::random_unit_weights(rng, carriers);
  auto report = brown_spectrum(s, sup, from_pairs(weights));
  const auto& l = sup.lattice;
  for (const auto& a : report.rows)
    for (const auto& b : report.rows) {
      int ia = l.index_of(a.lattice_label), ib = l.index_of(b.lattice_label);
      if (l.leq(ia, ib)) CHECK(a.eigenvalue <= b.eigenvalue);
    }
  CHECK(report.multiplicity_total() == 6);
}

TEST_CASE("move-to-front spectrum for three books, random weights") {
  LrbSemigroup s = braid_face_semigroup(3);
  SupportStructure sup = braid_face_support(s);
  test::Rng rng(31337);
  for (int trial = 0; trial < 3; ++trial) {
    auto weights = test::random_unit_weights(rng, {"1|23", "2|13", "3|12"});
    auto w = from_pairs(weights);
    auto report = brown_spectrum(s, sup, w);
    auto tm = transition_matrix(s, w);
    CHECK(charpoly_check(tm, report).ok);
    CHECK(diagonalizability_check(tm, report).ok);
    auto stat = stationary_distribution(tm, s, w);
    CHECK(stat.nullspace_dimension == 1);
    REQUIRE(stat.distribution.has_value());
    // pi P = pi, checked exactly.
    const auto& pi = *stat.distribution;
    for (size_t j = 0; j < pi.size(); ++j) {
      Rational acc = 0;
      for (size_t i = 0; i < pi.size(); ++i) acc += pi[i] * tm.rows[i][j];
      CHECK(acc == pi[j]);
    }
  }
}

TEST_CASE("stationary distribution of the two-book walk") {
  LrbSemigroup s = braid_face_semigroup(2);
  Rational w1(2, 5), w2(3, 5);
  auto w = from_pairs({{"1|2", w1}, {"2|1", w2}});
  auto stat = stationary_distribution(transition_matrix(s, w), s, w);
  REQUIRE(stat.distribution.has_value());
  CHECK((*stat.distribution)[0] == w1);
  CHECK((*stat.distribution)[1] == w2);
}

TEST_CASE("spectrum report serialization is stable") {
  LrbSemigroup s = braid_face_semigroup(2);
  SupportStructure sup = braid_face_support(s);
  auto w = from_pairs({{"1|2", Rational(1, 2)}, {"2|1", Rational(1, 4)}});
  auto report = brown_spectrum(s, sup, w);
  CHECK(report.to_tsv() ==
        "lattice\tsymbolic\tvalue\tmultiplicity\n"
        "12\trest\t1/4\t1\n"
        "1|2\trest+w[1|2]+w[2|1]\t1\t1\n");
}

TEST_CASE("simulation basics") {
  LrbSemigroup s = braid_face_semigroup(2);
  auto w = from_pairs({{"1|2", Rational(1, 2)}, {"2|1", Rational(1, 2)}});
  auto tm = transition_matrix(s, w);
  auto zero = simulate(tm, "1|2", 0, 42);
  CHECK(zero.final_state == "1|2");
  CHECK(zero.visits[0] == 1);
  CHECK(zero.visits[1] == 0);

  auto id = transition_matrix(s, from_pairs({{"12", Rational(1)}}));
  auto stay = simulate(id, "2|1", 1000, 42);
  CHECK(stay.final_state == "2|1");
  CHECK(stay.visits[1] == 1001);

  CHECK_THROWS_AS(simulate(tm, "nope", 1, 1), DomainError);
  // Determinism.
  auto a = simulate(tm, "1|2", 500, 7);
  auto b = simulate(tm, "1|2", 500, 7);
  CHECK(a.visits == b.visits);
  CHECK(a.final_state == b.final_state);
}

TEST_CASE("move-to-front empirical frequencies approach the fixed point") {
  LrbSemigroup s = braid_face_semigroup(3);
  auto w = from_pairs({{"1|23", Rational(1, 2)}, {"2|13", Rational(1, 3)},
                       {"3|12", Rational(1, 6)}});
  auto tm = transition_matrix(s, w);
  auto stat = stationary_distribution(tm, s, w);
  REQUIRE(stat.distribution.has_value());
  auto sim = simulate(tm, "1|2|3", 100000, 20240811);
  Rational tv = total_variation(sim.visits, *stat.distribution);
  CHECK(tv <= Rational(1, 50));
}

TEST_CASE("arrangement walk multiplicities are unsigned moebius values") {
  // Real case: every multiplicity equals |mu(X, top)| in the support lattice.
  LrbSemigroup s = braid_face_semigroup(3);
  SupportStructure sup = braid_face_support(s);
  test::Rng rng(2718);
  auto w = from_pairs(test::random_unit_weights(rng, s.labels()));
  auto report = brown_spectrum(s, sup, w);
  for (const auto& row : report.rows) {
    int x = sup.lattice.index_of(row.lattice_label);
    CHECK(row.multiplicity == std::abs(sup.lattice.mobius(x, sup.lattice.top())));
  }
}

TEST_CASE("complex walk multiplicities vanish exactly where the moebius value does") {
  LrbSemigroup s = braid_interval_semigroup(3);
  SupportStructure sup = braid_interval_support(s);
  test::Rng rng(2719);
  auto w = from_pairs(test::random_unit_weights(rng, s.labels()));
  auto report = brown_spectrum(s, sup, w);
  int zero_rows = 0;
  for (const auto& row : report.rows) {
    int x = sup.lattice.index_of(row.lattice_label);
    long long mu = sup.lattice.mobius(x, sup.lattice.top());
    CHECK(row.multiplicity == std::abs(mu));
    if (mu == 0) {
      CHECK(row.multiplicity == 0);
      ++zero_rows;
    }
  }
  CHECK(zero_rows > 0);  // the augmented lattice is only semimodular
  CHECK(report.multiplicity_total() == 6);
  // The excluded rows do not enter the annihilator.
  auto tm = transition_matrix(s, w);
  CHECK(diagonalizability_check(tm, report).ok);
}

TEST_CASE("weight validation") {
  CHECK_THROWS_AS(from_pairs({{"1|2", Rational(-1, 2)}}), DomainError);
  CHECK_THROWS_AS(from_pairs({{"1|2", Rational(2)}}), DomainError);
  LrbSemigroup s = braid_face_semigroup(2);
  CHECK_THROWS_AS(transition_matrix(s, from_pairs({{"bogus", Rational(1)}})), DomainError);
}
