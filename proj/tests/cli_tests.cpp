// Golden tests for the command-line tool: byte-stable output and exit codes.
// argv[1] = path to the binary, argv[2] = data directory.

#include <array>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int failures = 0;

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run(const std::string& command) {
  std::string full = command + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) {
    std::cerr << "cannot spawn: " << command << "\n";
    exit(1);
  }
  std::string out;
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

void expect_output(const std::string& name, const RunResult& r, const std::string& want,
                   int want_code = 0) {
  if (r.exit_code != want_code) {
    ++failures;
    std::cout << "FAIL " << name << ": exit " << r.exit_code << ", want " << want_code << "\n";
    return;
  }
  if (r.output != want) {
    ++failures;
    std::cout << "FAIL " << name << ": output mismatch\n--- got ---\n"
              << r.output << "--- want ---\n"
              << want;
    return;
  }
  std::cout << "ok " << name << "\n";
}

void expect_code(const std::string& name, const RunResult& r, int want_code) {
  if (r.exit_code != want_code) {
    ++failures;
    std::cout << "FAIL " << name << ": exit " << r.exit_code << ", want " << want_code << "\n";
    return;
  }
  std::cout << "ok " << name << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: cli_tests <lrbwalk> <datadir>\n";
    return 1;
  }
  std::string bin = argv[1];
  std::string data = argv[2];

  // Listings.
  {
    auto r = run(bin + " faces --braid 3");
    std::string expected =
        "123\trank=0\tsupp=123\n"
        "12|3\trank=1\tsupp=12|3\n"
        "13|2\trank=1\tsupp=13|2\n"
        "1|23\trank=1\tsupp=1|23\n"
        "23|1\trank=1\tsupp=1|23\n"
        "2|13\trank=1\tsupp=13|2\n"
        "3|12\trank=1\tsupp=12|3\n"
        "1|2|3\trank=2\tsupp=1|2|3\n"
        "1|3|2\trank=2\tsupp=1|2|3\n"
        "2|1|3\trank=2\tsupp=1|2|3\n"
        "2|3|1\trank=2\tsupp=1|2|3\n"
        "3|1|2\trank=2\tsupp=1|2|3\n"
        "3|2|1\trank=2\tsupp=1|2|3\n";
    expect_output("faces braid 3", r, expected);
    auto again = run(bin + " faces --braid 3");
    expect_output("faces braid 3 repeats byte-identically", again, expected);
  }
  {
    auto r = run(bin + " faces --arrangement " + data + "/one_line.json");
    expect_output("faces one line", r,
                  "0\trank=0\tsupp={1}\n"
                  "+\trank=1\tsupp={}\n"
                  "-\trank=1\tsupp={}\n");
  }
  {
    auto r = run(bin + " faces --digraph " + data + "/branching.json");
    std::stringstream lines(r.output);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) ++count;
    if (r.exit_code != 0 || count != 17) {
      ++failures;
      std::cout << "FAIL faces branching: " << count << " lines, exit " << r.exit_code << "\n";
    } else {
      std::cout << "ok faces branching\n";
    }
  }

  {
    auto r = run(bin + " faces --greedoid " + data + "/u23.txt");
    std::stringstream lines(r.output);
    std::string line;
    int count = 0;
    bool has_empty = false;
    while (std::getline(lines, line)) {
      if (line.rfind("-\trank=0", 0) == 0) has_empty = true;
      ++count;
    }
    if (r.exit_code != 0 || count != 10 || !has_empty) {
      ++failures;
      std::cout << "FAIL faces greedoid file: " << count << " lines, exit " << r.exit_code
                << "\n";
    } else {
      std::cout << "ok faces greedoid file\n";
    }
  }

  // Counting identities.
  expect_output("counts zaslavsky braid 3", run(bin + " counts --braid 3 --zaslavsky"),
                "regions 6 = mobius 6\n");
  expect_output("counts max-cells complexified braid 3",
                run(bin + " counts --complexified-braid 3 --max-cells"),
                "max-cells 6 = mobius 6\ncomplement-cells 24\n");
  expect_output("counts kequal 3 2", run(bin + " counts --kequal 3 2"),
                "dim 0: 6\ndim 1: 0\ntotal 6\neuler 6\n");
  expect_output("counts kequal 3 3", run(bin + " counts --kequal 3 3"),
                "dim 0: 6\ndim 1: 6\ntotal 12\neuler 0\n");
  expect_output("counts betti one line",
                run(bin + " counts --arrangement " + data + "/one_line.json --betti"),
                "betti 1 1\n");
  expect_output("counts betti three lines",
                run(bin + " counts --arrangement " + data + "/three_lines.json --betti"),
                "betti 1 3 2\n");

  // Spectrum with both oracles.
  {
    auto r = run(bin + " spectrum --braid 3 --book-weights " + data +
                 "/books3.json --check all");
    expect_output("spectrum move-to-front 3", r,
                  "lattice\tsymbolic\tvalue\tmultiplicity\n"
                  "123\t0\t0\t2\n"
                  "12|3\tw[3|12]\t1/6\t1\n"
                  "13|2\tw[2|13]\t1/3\t1\n"
                  "1|23\tw[1|23]\t1/2\t1\n"
                  "1|2|3\tw[1|23]+w[2|13]+w[3|12]\t1\t1\n"
                  "charpoly: OK (charpoly matches, degree 6)\n"
                  "diagonalizable: OK (squarefree annihilator of degree 5)\n");
  }
  {
    auto r = run(bin + " spectrum --library '12|3' --subset-weights " + data +
                 "/subsets_12_3.json --check all");
    if (r.exit_code != 0) {
      ++failures;
      std::cout << "FAIL spectrum library: exit " << r.exit_code << "\n" << r.output;
    } else {
      std::cout << "ok spectrum library\n";
    }
  }

  // Simulation.
  expect_output("simulate two books, zero steps",
                run(bin + " simulate --braid 2 --book-weights " + data +
                    "/books2.json --steps 0 --start 2\\|1"),
                "final 2|1\n"
                "empirical:\n"
                "1|2\t0\n"
                "2|1\t1\n"
                "stationary:\n"
                "1|2\t1/2\n"
                "2|1\t1/2\n"
                "tv 1/2\n");
  expect_output("simulate borrow step",
                run(bin + " simulate --state " + data +
                    "/library_state.json --apply-subset 1,2,3,4"),
                "2 11 14 12 8\n4 1 7 5\n3 10 9\n6 13\n");

  // Exit codes.
  expect_code("capacity: braid too large", run(bin + " faces --braid 9"), 3);
  expect_code("capacity: kequal too large", run(bin + " counts --kequal 9 2"), 3);
  expect_code("parse: bad weights JSON",
              run(bin + " spectrum --braid 3 --weights " + data + "/bad.json"), 2);
  expect_code("parse: missing file",
              run(bin + " counts --arrangement " + data + "/nonexistent.json --zaslavsky"), 2);
  expect_code("parse: no system", run(bin + " faces"), 2);

  if (failures) {
    std::cout << failures << " CLI test(s) failed\n";
    return 1;
  }
  std::cout << "all CLI tests passed\n";
  return 0;
}
