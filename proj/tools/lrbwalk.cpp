// Command-line front end: face listings, spectra with exact cross-checks,
// counting identities, and deterministic walk simulation.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "lrb/arrangement.hpp"
#include "lrb/complexified.hpp"
#include "lrb/errors.hpp"
#include "lrb/greedoid.hpp"
#include "lrb/library.hpp"
#include "lrb/partition.hpp"
#include "lrb/poset.hpp"
#include "lrb/semigroup.hpp"
#include "lrb/spectral.hpp"

using namespace lrb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitCheck = 4;

struct SystemOptions {
  int braid = 0;
  int complexified_braid = 0;
  std::vector<int> kequal;
  std::string library;
  std::string arrangement_file;
  std::string greedoid_file;
  std::string digraph_file;

  void attach(CLI::App* cmd, bool allow_kequal) {
    cmd->add_option("--braid", braid, "builtin: braid arrangement on n letters");
    cmd->add_option("--complexified-braid", complexified_braid,
                    "builtin: complexified braid on n letters");
    if (allow_kequal)
      cmd->add_option("--kequal", kequal, "builtin: permutohedron subcomplex, takes n k")
          ->expected(2);
    cmd->add_option("--library", library, "builtin: library classes, e.g. 12|3");
    cmd->add_option("--arrangement", arrangement_file, "arrangement JSON file");
    cmd->add_option("--greedoid", greedoid_file, "basic-word language file");
    cmd->add_option("--digraph", digraph_file, "rooted digraph JSON file");
  }
};

struct FaceRow {
  std::string label;
  int rank;
  std::string supp;
};

// A loaded system: enough structure for listings, spectra and walks.
struct System {
  enum class Kind { Braid, IntervalBraid, Library, Arrangement, Greedoid } kind;
  int n = 0;
  std::optional<SetPartition> classes;
  std::optional<RealArrangement> arrangement;
  std::optional<GreedoidLanguage> language;
  std::optional<LrbSemigroup> semigroup;

  const LrbSemigroup& sg() const { return *semigroup; }

  SupportStructure support() const {
    switch (kind) {
      case Kind::Braid: return braid_face_support(sg());
      case Kind::IntervalBraid: return braid_interval_support(sg());
      case Kind::Library: return library_fiber_support(*classes, sg());
      case Kind::Arrangement: return arrangement->face_support();
      case Kind::Greedoid: return language->lrb_support(sg());
    }
    throw StructureError("unreachable");
  }

  std::vector<FaceRow> face_rows() const {
    std::vector<FaceRow> rows;
    switch (kind) {
      case Kind::Braid:
        for (const auto& p : all_ordered_partitions(n))
          rows.push_back({p.to_string(), p.block_count() - 1, SetPartition::of(p).to_string()});
        break;
      case Kind::IntervalBraid:
      case Kind::Library:
        for (const auto& label : sg().labels()) {
          PartitionInterval iv = PartitionInterval::parse(label, n);
          rows.push_back({label,
                          iv.coarse().block_count() + iv.fine().block_count() - 2,
                          "(" + SetPartition::of(iv.coarse()).to_string() + ";" +
                              SetPartition::of(iv.fine()).to_string() + ")"});
        }
        break;
      case Kind::Arrangement: {
        const FinitePoset& fp = arrangement->face_poset();
        for (int i = 0; i < fp.size(); ++i)
          rows.push_back({fp.label(i), fp.rank(i),
                          arrangement->span_label(SignVector::parse(fp.label(i)))});
        break;
      }
      case Kind::Greedoid: {
        FinitePoset flats = language->flats_poset();
        auto flat_of = language->flat_of_words();
        const auto& words = language->words();
        for (size_t i = 0; i < words.size(); ++i)
          rows.push_back({words[i].empty() ? GreedoidLanguage::empty_label() : words[i],
                          static_cast<int>(words[i].size()), flats.label(flat_of[i])});
        break;
      }
    }
    std::sort(rows.begin(), rows.end(), [](const FaceRow& a, const FaceRow& b) {
      return std::make_pair(a.rank, a.label) < std::make_pair(b.rank, b.label);
    });
    return rows;
  }
};

System load_system(const SystemOptions& opt) {
  System sys;
  int chosen = (opt.braid > 0) + (opt.complexified_braid > 0) + !opt.library.empty() +
               !opt.arrangement_file.empty() + !opt.greedoid_file.empty() +
               !opt.digraph_file.empty();
  if (chosen != 1) throw ParseError("choose exactly one system");
  if (opt.braid > 0) {
    sys.kind = System::Kind::Braid;
    sys.n = opt.braid;
    sys.semigroup = braid_face_semigroup(opt.braid);
  } else if (opt.complexified_braid > 0) {
    sys.kind = System::Kind::IntervalBraid;
    sys.n = opt.complexified_braid;
    sys.semigroup = braid_interval_semigroup(opt.complexified_braid);
  } else if (!opt.library.empty()) {
    sys.kind = System::Kind::Library;
    sys.classes = SetPartition::parse(opt.library);
    sys.n = sys.classes->ground_size();
    sys.semigroup = library_fiber(*sys.classes);
  } else if (!opt.arrangement_file.empty()) {
    sys.kind = System::Kind::Arrangement;
    sys.arrangement = RealArrangement::from_json_file(opt.arrangement_file);
    sys.semigroup = sys.arrangement->face_semigroup();
  } else {
    sys.kind = System::Kind::Greedoid;
    if (!opt.greedoid_file.empty())
      sys.language = GreedoidLanguage::from_file(opt.greedoid_file);
    else
      sys.language = branching_greedoid(RootedDigraph::from_json_file(opt.digraph_file));
    sys.semigroup = sys.language->lrb();
  }
  return sys;
}

std::map<std::set<int>, Rational> load_subset_weights(const std::string& path) {
  WeightDistribution raw = WeightDistribution::from_json_file(path);
  std::map<std::set<int>, Rational> out;
  for (const auto& [key, value] : raw.weights()) out[parse_subset(key)] = value;
  return out;
}

WeightDistribution load_distribution(const System& sys, const std::string& weights_file,
                                     const std::string& subset_file,
                                     const std::string& book_file) {
  int given = !weights_file.empty() + !subset_file.empty() + !book_file.empty();
  if (given != 1) throw ParseError("choose exactly one weights source");
  if (!weights_file.empty()) {
    WeightDistribution w = WeightDistribution::from_json_file(weights_file);
    for (const auto& [label, value] : w.weights())
      if (!sys.sg().contains(label)) throw ParseError("weight on unknown element: " + label);
    return w;
  }
  if (!book_file.empty()) {
    if (sys.kind != System::Kind::Braid)
      throw ParseError("--book-weights applies to --braid systems");
    WeightDistribution raw = WeightDistribution::from_json_file(book_file);
    std::map<int, Rational> books;
    for (const auto& [key, value] : raw.weights()) books[std::stoi(key)] = value;
    return WeightDistribution(tsetlin_distribution(sys.n, books));
  }
  auto subsets = load_subset_weights(subset_file);
  if (sys.kind == System::Kind::Braid)
    return WeightDistribution(subset_distribution(sys.n, subsets));
  if (sys.kind == System::Kind::Library)
    return WeightDistribution(library_subset_distribution(*sys.classes, subsets));
  throw ParseError("--subset-weights applies to --braid and --library systems");
}

int cmd_faces(const SystemOptions& opt, bool json) {
  System sys = load_system(opt);
  auto rows = sys.face_rows();
  if (json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows)
      j.push_back({{"label", r.label}, {"rank", r.rank}, {"supp", r.supp}});
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : rows)
      std::cout << r.label << "\trank=" << r.rank << "\tsupp=" << r.supp << "\n";
  }
  return kExitOk;
}

int cmd_spectrum(const SystemOptions& opt, const std::string& weights_file,
                 const std::string& subset_file, const std::string& book_file,
                 const std::vector<std::string>& checks, bool json) {
  System sys = load_system(opt);
  WeightDistribution w = load_distribution(sys, weights_file, subset_file, book_file);
  SupportStructure sup = sys.support();
  SpectrumReport report = brown_spectrum(sys.sg(), sup, w);
  if (json)
    std::cout << report.to_json() << "\n";
  else
    std::cout << report.to_tsv();
  bool want_charpoly = false, want_diag = false;
  for (const auto& c : checks) {
    if (c == "charpoly")
      want_charpoly = true;
    else if (c == "diag")
      want_diag = true;
    else if (c == "all")
      want_charpoly = want_diag = true;
    else
      throw ParseError("unknown check: " + c);
  }
  if (want_charpoly || want_diag) {
    TransitionMatrix tm = transition_matrix(sys.sg(), w);
    if (want_charpoly) {
      CheckResult r = charpoly_check(tm, report);
      std::cout << "charpoly: " << (r.ok ? "OK" : "MISMATCH") << " (" << r.detail << ")\n";
      if (!r.ok) return kExitCheck;
    }
    if (want_diag) {
      CheckResult r = diagonalizability_check(tm, report);
      std::cout << "diagonalizable: " << (r.ok ? "OK" : "MISMATCH") << " (" << r.detail
                << ")\n";
      if (!r.ok) return kExitCheck;
    }
  }
  return kExitOk;
}

int cmd_counts(const SystemOptions& opt, bool zaslavsky, bool max_cells, bool betti,
               bool json) {
  if (!opt.kequal.empty()) {
    KEqualReport rep = kequal_subcomplex(opt.kequal[0], opt.kequal[1]);
    if (json) {
      nlohmann::json j;
      j["n"] = rep.n;
      j["k"] = rep.k;
      j["faces_by_dim"] = rep.faces_by_dim;
      j["total"] = rep.total;
      j["euler"] = rep.euler;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << rep.to_text();
    }
    return kExitOk;
  }
  if (zaslavsky + max_cells + betti != 1)
    throw ParseError("choose one of --zaslavsky, --max-cells, --betti (or --kequal n k)");
  nlohmann::json j;
  bool ok = true;
  std::string text;
  if (zaslavsky) {
    if (opt.braid <= 0 && opt.arrangement_file.empty())
      throw ParseError("--zaslavsky needs --braid or --arrangement");
    RealArrangement a = opt.braid > 0 ? RealArrangement::braid(opt.braid)
                                      : RealArrangement::from_json_file(opt.arrangement_file);
    auto z = a.zaslavsky_count();
    ok = z.equal();
    text = "regions " + std::to_string(z.regions) + (ok ? " = " : " != ") + "mobius " +
           std::to_string(z.mobius_sum) + "\n";
    j = {{"regions", z.regions}, {"mobius", z.mobius_sum}, {"equal", ok}};
  } else {
    if (opt.complexified_braid <= 0 && opt.arrangement_file.empty())
      throw ParseError("--max-cells and --betti need --complexified-braid or --arrangement");
    RealArrangement base = opt.complexified_braid > 0
                               ? RealArrangement::braid(opt.complexified_braid)
                               : RealArrangement::from_json_file(opt.arrangement_file);
    ComplexifiedArrangement c(std::move(base));
    if (betti) {
      auto b = c.betti_numbers();
      text = "betti";
      for (long long v : b) text += " " + std::to_string(v);
      text += "\n";
      j = {{"betti", b}};
    } else {
      auto count = c.max_cell_count();
      ok = count.equal();
      text = "max-cells " + std::to_string(count.max_cells) + (ok ? " = " : " != ") +
             "mobius " + std::to_string(count.mobius_sum) + "\n" + "complement-cells " +
             std::to_string(c.complement_cell_count()) + "\n";
      j = {{"max_cells", count.max_cells},
           {"mobius", count.mobius_sum},
           {"equal", ok},
           {"complement_cells", c.complement_cell_count()}};
    }
  }
  std::cout << (json ? j.dump(2) + "\n" : text);
  return ok ? kExitOk : kExitCheck;
}

int cmd_simulate(const SystemOptions& opt, const std::string& weights_file,
                 const std::string& subset_file, const std::string& book_file,
                 std::string start, long long steps, uint64_t seed, long long burn_in,
                 const std::string& state_file, const std::string& apply_subset, bool json) {
  if (!apply_subset.empty()) {
    // One borrow step on a stored library state; the classification comes
    // from the state file, so no semigroup is needed.
    if (state_file.empty()) throw ParseError("--apply-subset needs --state");
    LibraryState state = LibraryState::from_json_file(state_file);
    LibraryState next = apply_borrow(state, parse_subset(apply_subset));
    if (json)
      std::cout << next.to_json() << "\n";
    else
      std::cout << next.render();
    return kExitOk;
  }
  System sys = load_system(opt);
  WeightDistribution w = load_distribution(sys, weights_file, subset_file, book_file);
  TransitionMatrix tm = transition_matrix(sys.sg(), w);
  if (start.empty()) start = tm.states.front();
  SimulationResult sim = simulate(tm, start, steps, seed, burn_in);
  StationaryResult stat = stationary_distribution(tm, sys.sg(), w);
  nlohmann::json out;
  out["final"] = sim.final_state;
  out["steps"] = sim.steps;
  out["seed"] = sim.seed;
  std::string text = "final " + sim.final_state + "\n";
  text += "empirical:\n";
  nlohmann::json empirical = nlohmann::json::object();
  for (size_t i = 0; i < tm.states.size(); ++i) {
    text += tm.states[i] + "\t" + std::to_string(sim.visits[i]) + "\n";
    empirical[tm.states[i]] = sim.visits[i];
  }
  out["empirical"] = empirical;
  out["generation"] = stat.generation_holds;
  if (stat.distribution) {
    text += "stationary:\n";
    nlohmann::json pi = nlohmann::json::object();
    for (size_t i = 0; i < tm.states.size(); ++i) {
      text += tm.states[i] + "\t" + to_string((*stat.distribution)[i]) + "\n";
      pi[tm.states[i]] = to_string((*stat.distribution)[i]);
    }
    Rational tv = total_variation(sim.visits, *stat.distribution);
    text += "tv " + to_string(tv) + "\n";
    out["stationary"] = pi;
    out["tv"] = to_string(tv);
  } else {
    text += "stationary: not unique (fixed space dimension " +
            std::to_string(stat.nullspace_dimension) + ")\n";
    out["stationary_dimension"] = stat.nullspace_dimension;
  }
  std::cout << (json ? out.dump(2) + "\n" : text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact walks on left-regular bands"};
  app.require_subcommand(1);

  SystemOptions faces_opt, spectrum_opt, counts_opt, simulate_opt;
  bool faces_json = false, spectrum_json = false, counts_json = false, simulate_json = false;
  std::string weights_file, subset_file, book_file;
  std::vector<std::string> checks;
  bool zaslavsky = false, max_cells = false, betti = false;
  std::string start, state_file, apply_subset;
  long long steps = 0, burn_in = 0;
  uint64_t seed = 1;

  auto* faces = app.add_subcommand("faces", "list elements with rank and support");
  faces_opt.attach(faces, false);
  faces->add_flag("--json", faces_json, "machine-readable output");

  auto* spectrum = app.add_subcommand("spectrum", "predicted eigenvalues and checks");
  spectrum_opt.attach(spectrum, false);
  spectrum->add_option("--weights", weights_file, "weights JSON keyed by element label");
  spectrum->add_option("--subset-weights", subset_file, "weights JSON keyed by book subsets");
  spectrum->add_option("--book-weights", book_file, "weights JSON keyed by single books");
  spectrum->add_option("--check", checks, "charpoly, diag, or all")->allow_extra_args(false);
  spectrum->add_flag("--json", spectrum_json, "machine-readable output");

  auto* counts = app.add_subcommand("counts", "counting identities");
  counts_opt.attach(counts, true);
  counts->add_flag("--zaslavsky", zaslavsky, "regions against the moebius sum");
  counts->add_flag("--max-cells", max_cells, "maximal cells against the moebius sum");
  counts->add_flag("--betti", betti, "betti numbers of the complement");
  counts->add_flag("--json", counts_json, "machine-readable output");

  auto* sim = app.add_subcommand("simulate", "deterministic walk simulation");
  simulate_opt.attach(sim, false);
  sim->add_option("--weights", weights_file, "weights JSON keyed by element label");
  sim->add_option("--subset-weights", subset_file, "weights JSON keyed by book subsets");
  sim->add_option("--book-weights", book_file, "weights JSON keyed by single books");
  sim->add_option("--start", start, "start state label");
  sim->add_option("--steps", steps, "number of steps");
  sim->add_option("--seed", seed, "generator seed");
  sim->add_option("--burn-in", burn_in, "steps ignored by the empirical counts");
  sim->add_option("--state", state_file, "library state JSON (with --apply-subset)");
  sim->add_option("--apply-subset", apply_subset, "apply one borrow step and print the state");
  sim->add_flag("--json", simulate_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitParse;
  }

  try {
    if (faces->parsed()) return cmd_faces(faces_opt, faces_json);
    if (spectrum->parsed())
      return cmd_spectrum(spectrum_opt, weights_file, subset_file, book_file, checks,
                          spectrum_json);
    if (counts->parsed())
      return cmd_counts(counts_opt, zaslavsky, max_cells, betti, counts_json);
    if (sim->parsed())
      return cmd_simulate(simulate_opt, weights_file, subset_file, book_file, start, steps,
                          seed, burn_in, state_file, apply_subset, simulate_json);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const StructureError& e) {
    std::cerr << "structure error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
