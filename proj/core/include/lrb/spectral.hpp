#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrb/linalg.hpp"
#include "lrb/rational.hpp"
#include "lrb/semigroup.hpp"

namespace lrb {

// Nonnegative weights on semigroup elements with total at most one; the
// deficit is implicitly carried by the identity (which fixes every state).
class WeightDistribution {
 public:
  WeightDistribution() = default;
  explicit WeightDistribution(std::map<std::string, Rational> weights);
  static WeightDistribution from_json_text(const std::string& text);
  static WeightDistribution from_json_file(const std::string& path);

  const std::map<std::string, Rational>& weights() const { return weights_; }
  Rational total() const;
  Rational deficit() const { return 1 - total(); }
  Rational of(const std::string& label) const;

 private:
  std::map<std::string, Rational> weights_;
};

struct TransitionMatrix {
  std::vector<std::string> states;  // sorted labels of max elements
  Matrix rows;                      // rows[c][d] = P(c -> d), each row sums to 1
  int index_of(const std::string& state) const;
};

// P(c,d) = sum of weights of x with x*c = d, plus the deficit on the
// diagonal. Throws DomainError for weights on unknown elements.
TransitionMatrix transition_matrix(const LrbSemigroup& s, const WeightDistribution& w);

struct SpectrumRow {
  std::string lattice_label;
  Rational eigenvalue;
  std::vector<std::string> contributors;  // weight-bearing elements below
  long long multiplicity;
  int lattice_rank;
};

struct SpectrumReport {
  std::vector<SpectrumRow> rows;  // sorted by (lattice rank, label)
  long long state_count = 0;
  bool deficit_present = false;
  long long multiplicity_total() const;
  std::string to_tsv() const;
  std::string to_json() const;
};

// Predicted spectrum: for each support-lattice element X the eigenvalue
// eps_X = sum of weights below X (deficit included) with multiplicity
// m_X = sum over Y >= X of mu(X,Y) |max(up-set at Y)|. The inversion
// c_X = sum of m_Y over Y >= X is verified during construction.
SpectrumReport brown_spectrum(const LrbSemigroup& s, const SupportStructure& support,
                              const WeightDistribution& w);

struct CheckResult {
  bool ok = false;
  std::string detail;
};

// Exact characteristic polynomial of P against prod (x - eps)^mult. Above
// kCharpolyLimit states the equivalent full-degree power-trace comparison is
// used instead (Newton's identities make the two tests identical).
CheckResult charpoly_check(const TransitionMatrix& p, const SpectrumReport& r);
// The large-instance path: trace(P^k) == sum m eps^k for k = 1..n, plus the
// degree count.
CheckResult power_trace_check(const TransitionMatrix& p, const SpectrumReport& r);
inline constexpr int kCharpolyLimit = 30;

// prod over distinct predicted eigenvalues of positive multiplicity of
// (P - eps I) must vanish; a squarefree annihilator means diagonalizable.
CheckResult diagonalizability_check(const TransitionMatrix& p, const SpectrumReport& r);

struct StationaryResult {
  bool generation_holds = false;  // positive-weight elements generate the semigroup
  int nullspace_dimension = 0;    // of P^T - I
  std::optional<std::vector<Rational>> distribution;  // set when dimension == 1
};
StationaryResult stationary_distribution(const TransitionMatrix& p, const LrbSemigroup& s,
                                         const WeightDistribution& w);

struct SimulationResult {
  std::string final_state;
  std::vector<long long> visits;  // per state, after burn-in, counts steps+1 positions
  long long steps = 0;
  uint64_t seed = 0;
};

// Deterministic walk: xorshift64* stream; each row's probabilities are turned
// into cumulative 64-bit thresholds (exact integer scaling of p = num/den by
// 2^64), so a draw picks a column with error below 2^-64 and no floating
// point is involved.
SimulationResult simulate(const TransitionMatrix& p, const std::string& start, long long steps,
                          uint64_t seed, long long burn_in = 0);

// Exact total-variation distance between empirical counts and a target
// distribution.
Rational total_variation(const std::vector<long long>& visits,
                         const std::vector<Rational>& target);

}  // namespace lrb
