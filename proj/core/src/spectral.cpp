#include "lrb/spectral.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lrb/errors.hpp"

namespace lrb {

WeightDistribution::WeightDistribution(std::map<std::string, Rational> weights)
    : weights_(std::move(weights)) {
  Rational sum = 0;
  for (const auto& [label, value] : weights_) {
    if (value < 0) throw DomainError("negative weight on " + label);
    sum += value;
  }
  if (sum > 1) throw DomainError("weights sum beyond 1");
}

WeightDistribution WeightDistribution::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad weights JSON: ") + e.what());
  }
  if (!j.contains("weights")) throw ParseError("weights JSON needs \"weights\"");
  std::map<std::string, Rational> w;
  for (auto it = j["weights"].begin(); it != j["weights"].end(); ++it)
    w[it.key()] = parse_rational(it.value().get<std::string>());
  return WeightDistribution(std::move(w));
}

WeightDistribution WeightDistribution::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

Rational WeightDistribution::total() const {
  Rational sum = 0;
  for (const auto& [label, value] : weights_) sum += value;
  return sum;
}

Rational WeightDistribution::of(const std::string& label) const {
  auto it = weights_.find(label);
  return it == weights_.end() ? Rational(0) : it->second;
}

int TransitionMatrix::index_of(const std::string& state) const {
  auto it = std::find(states.begin(), states.end(), state);
  if (it == states.end()) throw DomainError("unknown state: " + state);
  return static_cast<int>(it - states.begin());
}

TransitionMatrix transition_matrix(const LrbSemigroup& s, const WeightDistribution& w) {
  std::vector<int> maxima = s.maximal_elements();
  std::vector<std::string> states;
  for (int m : maxima) states.push_back(s.label(m));
  std::vector<size_t> order(states.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return states[a] < states[b]; });
  std::vector<int> sorted_maxima;
  std::vector<std::string> sorted_states;
  for (size_t i : order) {
    sorted_maxima.push_back(maxima[i]);
    sorted_states.push_back(states[i]);
  }
  std::vector<int> state_of(s.size(), -1);
  for (size_t i = 0; i < sorted_maxima.size(); ++i) state_of[sorted_maxima[i]] = static_cast<int>(i);

  int n = static_cast<int>(sorted_states.size());
  Matrix rows(n, std::vector<Rational>(n, 0));
  for (const auto& [label, value] : w.weights()) {
    int x = s.index_of(label);
    for (int c = 0; c < n; ++c) {
      int d = state_of[s.compose(x, sorted_maxima[c])];
      if (d < 0) throw StructureError("walk left the maximal ideal");
      rows[c][d] += value;
    }
  }
  Rational deficit = w.deficit();
  for (int c = 0; c < n; ++c) rows[c][c] += deficit;
  return {std::move(sorted_states), std::move(rows)};
}

long long SpectrumReport::multiplicity_total() const {
  long long sum = 0;
  for (const auto& row : rows) sum += row.multiplicity;
  return sum;
}

std::string SpectrumReport::to_tsv() const {
  std::ostringstream out;
  out << "lattice\tsymbolic\tvalue\tmultiplicity\n";
  for (const auto& row : rows) {
    out << row.lattice_label << "\t";
    if (row.contributors.empty() && !deficit_present)
      out << "0";
    else {
      bool first = true;
      if (deficit_present) {
        out << "rest";
        first = false;
      }
      for (const auto& c : row.contributors) {
        if (!first) out << "+";
        out << "w[" << c << "]";
        first = false;
      }
      if (first) out << "0";
    }
    out << "\t" << to_string(row.eigenvalue) << "\t" << row.multiplicity << "\n";
  }
  return out.str();
}

std::string SpectrumReport::to_json() const {
  nlohmann::json j;
  j["states"] = state_count;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r;
    r["lattice"] = row.lattice_label;
    r["value"] = to_string(row.eigenvalue);
    r["multiplicity"] = row.multiplicity;
    r["symbolic"] = row.contributors;
    j["rows"].push_back(std::move(r));
  }
  return j.dump(2);
}

SpectrumReport brown_spectrum(const LrbSemigroup& s, const SupportStructure& support,
                              const WeightDistribution& w) {
  const FiniteLattice& lattice = support.lattice;
  int m = lattice.size();
  // c_Y = |max(up-set at y)| for any y in the fiber of Y; computed for the
  // first representative and checked against every other one.
  std::vector<long long> chamber_count(m, -1);
  std::vector<int> maximal(s.size(), 0);
  std::vector<int> maxima = s.maximal_elements();
  for (int c : maxima) maximal[c] = 1;
  for (int y = 0; y < s.size(); ++y) {
    long long count = 0;
    for (int c : maxima)
      if (s.compose(y, c) == c) ++count;  // c >= y
    int cls = support.supp[y];
    if (chamber_count[cls] == -1)
      chamber_count[cls] = count;
    else if (chamber_count[cls] != count)
      throw StructureError("chamber count differs across a support fiber at " +
                           lattice.label(cls));
  }
  for (int x = 0; x < m; ++x)
    if (chamber_count[x] < 0) throw StructureError("support map is not surjective");

  SpectrumReport report;
  report.state_count = static_cast<long long>(maxima.size());
  Rational deficit = w.deficit();
  report.deficit_present = deficit > 0;
  for (int x = 0; x < m; ++x) {
    SpectrumRow row;
    row.lattice_label = lattice.label(x);
    row.lattice_rank = lattice.rank(x);
    row.eigenvalue = deficit;
    for (const auto& [label, value] : w.weights()) {
      int y = s.index_of(label);
      if (lattice.leq(support.supp[y], x)) {
        row.eigenvalue += value;
        if (value > 0) row.contributors.push_back(label);
      }
    }
    std::sort(row.contributors.begin(), row.contributors.end());
    long long mult = 0;
    for (int y = 0; y < m; ++y)
      if (lattice.leq(x, y)) mult += lattice.mobius(x, y) * chamber_count[y];
    row.multiplicity = mult;
    report.rows.push_back(std::move(row));
  }
  // Moebius inversion back: c_X = sum of m_Y over Y >= X.
  for (int x = 0; x < m; ++x) {
    long long sum = 0;
    for (int y = 0; y < m; ++y)
      if (lattice.leq(x, y)) sum += report.rows[y].multiplicity;
    if (sum != chamber_count[x])
      throw StructureError("multiplicity inversion fails at " + lattice.label(x));
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const SpectrumRow& a, const SpectrumRow& b) {
    return std::make_tuple(a.lattice_rank, a.lattice_label) <
           std::make_tuple(b.lattice_rank, b.lattice_label);
  });
  return report;
}

CheckResult charpoly_check(const TransitionMatrix& p, const SpectrumReport& r) {
  int n = static_cast<int>(p.states.size());
  if (r.multiplicity_total() != n)
    return {false, "multiplicities sum to " + std::to_string(r.multiplicity_total()) +
                       ", expected " + std::to_string(n)};
  if (n > kCharpolyLimit) return power_trace_check(p, r);
  Poly actual = charpoly(p.rows);
  std::vector<std::pair<Rational, long long>> roots;
  for (const auto& row : r.rows)
    if (row.multiplicity > 0) roots.emplace_back(row.eigenvalue, row.multiplicity);
  Poly expected = poly_from_roots(roots);
  if (!poly_equal(actual, expected))
    return {false, "charpoly " + poly_to_string(actual) + " != " + poly_to_string(expected)};
  return {true, "charpoly matches, degree " + std::to_string(n)};
}

CheckResult power_trace_check(const TransitionMatrix& p, const SpectrumReport& r) {
  int n = static_cast<int>(p.states.size());
  if (r.multiplicity_total() != n)
    return {false, "multiplicities sum to " + std::to_string(r.multiplicity_total()) +
                       ", expected " + std::to_string(n)};
  // Full-degree power traces; with the leading coefficient fixed this pins
  // the same polynomial by Newton's identities.
  Matrix power = p.rows;
  for (int k = 1; k <= n; ++k) {
    Rational trace = 0;
    for (int i = 0; i < n; ++i) trace += power[i][i];
    Rational expected = 0;
    for (const auto& row : r.rows) {
      if (row.multiplicity == 0) continue;
      Rational term = 1;
      for (int e = 0; e < k; ++e) term *= row.eigenvalue;
      expected += Rational(static_cast<long>(row.multiplicity)) * term;
    }
    if (trace != expected)
      return {false, "trace of P^" + std::to_string(k) + " mismatch: " + to_string(trace) +
                         " != " + to_string(expected)};
    if (k < n) power = mat_mul(power, p.rows);
  }
  return {true, "power traces match through degree " + std::to_string(n)};
}

CheckResult diagonalizability_check(const TransitionMatrix& p, const SpectrumReport& r) {
  std::set<Rational> distinct;
  for (const auto& row : r.rows)
    if (row.multiplicity > 0) distinct.insert(row.eigenvalue);
  int n = static_cast<int>(p.states.size());
  Matrix prod = identity_matrix(n);
  for (const Rational& eps : distinct) {
    Matrix factor = p.rows;
    for (int i = 0; i < n; ++i) factor[i][i] -= eps;
    prod = mat_mul(prod, factor);
  }
  if (!mat_is_zero(prod)) return {false, "annihilating product of the distinct eigenvalues is nonzero"};
  return {true, "squarefree annihilator of degree " + std::to_string(distinct.size())};
}

StationaryResult stationary_distribution(const TransitionMatrix& p, const LrbSemigroup& s,
                                         const WeightDistribution& w) {
  StationaryResult result;
  // Generation check: closure of the weight-bearing elements (the identity
  // carries any deficit).
  std::set<int> generated;
  std::vector<int> frontier;
  auto add = [&](int x) {
    if (generated.insert(x).second) frontier.push_back(x);
  };
  if (w.deficit() > 0) add(s.identity());
  for (const auto& [label, value] : w.weights())
    if (value > 0) add(s.index_of(label));
  add(s.identity());
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    std::vector<int> snapshot(generated.begin(), generated.end());
    for (int y : snapshot) {
      add(s.compose(x, y));
      add(s.compose(y, x));
    }
  }
  result.generation_holds = static_cast<int>(generated.size()) == s.size();

  int n = static_cast<int>(p.states.size());
  // Left fixed vectors: rows of the nullspace of P^T - I.
  Matrix m(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = p.rows[j][i] - (i == j ? Rational(1) : Rational(0));
  auto basis = nullspace(std::move(m));
  result.nullspace_dimension = static_cast<int>(basis.size());
  if (basis.size() == 1) {
    Rational sum = 0;
    for (const auto& x : basis[0]) sum += x;
    if (sum == 0) throw StructureError("fixed vector has zero mass");
    std::vector<Rational> pi = basis[0];
    for (auto& x : pi) x /= sum;
    result.distribution = std::move(pi);
  }
  return result;
}

namespace {

uint64_t xorshift_star(uint64_t& state) {
  state ^= state >> 12;
  state ^= state << 25;
  state ^= state >> 27;
  return state * 0x2545F4914F6CDD1Dull;
}

}  // namespace

SimulationResult simulate(const TransitionMatrix& p, const std::string& start, long long steps,
                          uint64_t seed, long long burn_in) {
  if (steps < 0 || burn_in < 0 || burn_in > steps) throw DomainError("bad step counts");
  int n = static_cast<int>(p.states.size());
  int current = p.index_of(start);
  // Cumulative thresholds scaled to 2^64 per row, computed exactly once.
  std::vector<std::vector<uint64_t>> thresholds(n, std::vector<uint64_t>(n, 0));
  BigInt two64 = BigInt(1) << 64;
  for (int c = 0; c < n; ++c) {
    Rational cum = 0;
    for (int d = 0; d < n; ++d) {
      cum += p.rows[c][d];
      BigInt scaled = (cum.get_num() * two64) / cum.get_den();
      if (scaled >= two64 || d == n - 1) scaled = two64 - 1;  // close the row exactly
      thresholds[c][d] = static_cast<uint64_t>(mpz_get_ui(scaled.get_mpz_t()));
    }
  }
  SimulationResult result;
  result.steps = steps;
  result.seed = seed;
  result.visits.assign(n, 0);
  uint64_t state = seed ? seed : 0x9E3779B97F4A7C15ull;
  if (burn_in == 0) result.visits[current] += 1;
  for (long long step = 1; step <= steps; ++step) {
    uint64_t draw = xorshift_star(state);
    const auto& row = thresholds[current];
    int next = static_cast<int>(std::lower_bound(row.begin(), row.end(), draw) - row.begin());
    if (next >= n) next = n - 1;
    current = next;
    if (step >= burn_in) result.visits[current] += 1;
  }
  result.final_state = p.states[current];
  return result;
}

Rational total_variation(const std::vector<long long>& visits,
                         const std::vector<Rational>& target) {
  if (visits.size() != target.size()) throw DomainError("distribution size mismatch");
  long long total = 0;
  for (long long v : visits) total += v;
  if (total == 0) throw DomainError("empty sample");
  Rational tv = 0;
  for (size_t i = 0; i < visits.size(); ++i) {
    Rational diff = Rational(static_cast<long>(visits[i])) / Rational(static_cast<long>(total)) - target[i];
    if (diff < 0) diff = -diff;
    tv += diff;
  }
  return tv / 2;
}

}  // namespace lrb
