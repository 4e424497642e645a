// End-to-end tests of the pte binary: golden stdout plus exit codes.  The
// harness passes the binary's location in PTE_BIN.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

const char* binary() {
  const char* bin = std::getenv("PTE_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "PTE_BIN must point at the pte binary");
  return bin;
}

// Run `pte <args>` with optional stdin text; capture stdout (stderr is only
// captured when the args say `2>&1`).
RunResult run(const std::string& args, const std::string& input = "") {
  std::string command = std::string(binary()) + " " + args;
  if (!input.empty()) {
    static int counter = 0;
    std::string path = "cli_input_" + std::to_string(++counter) + ".txt";
    std::ofstream(path) << input;
    command += " < " + path;
  }
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.out.append(buffer, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("verify reports per-exponent status and exits by outcome") {
  auto r = run("verify --cap 6", "1 5 6 | 2 3 7 @ 2\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "r=1 equal\nr=2 equal\nr=3 differs\nr=4 differs\nr=5 differs\n"
        "r=6 differs\nmax_degree=2\nverified=yes\n");

  r = run("verify --cap 6 --json", "1 5 6 | 2 3 7 @ 2\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"verified\":true") != std::string::npos);
  CHECK(r.out.find("\"max_degree\":2") != std::string::npos);

  r = run("verify", "1 2 | 1 3 @ 1\n");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("verified=no") != std::string::npos);
}

TEST_CASE("verify reads --in files and JSON input") {
  std::ofstream("cli_verify_in.txt") << "1 5 6 | 2 3 7 @ 2\n";
  auto r = run("verify --in cli_verify_in.txt");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("max_degree=2") != std::string::npos);

  r = run("verify",
          R"({"left": ["1", "5", "6"], "right": ["2", "3", "7"], "degree": 2})");
  CHECK(r.exit_code == 0);
}

TEST_CASE("reduce canonicalises in both formats") {
  auto r = run("reduce", "285 -110 200 -305 -70 | 95 80 -210 310 -275 @ 4\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "-62 -19 -16 42 55 | -57 -40 14 22 61 @ 4\n");

  r = run("reduce --json", "1 5 6 | 2 3 7 @ 2\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"degree\":2,\"left\":[\"-3\",\"1\",\"2\"],"
        "\"right\":[\"-2\",\"-1\",\"3\"]}\n");

  r = run("reduce 2>&1", "5 5 | 5 5 @ 1\n");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("DegenerateSolution") != std::string::npos);
}

TEST_CASE("classify names the symmetry class") {
  auto r = run("classify", "1 5 6 | 2 3 7 @ 2\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "SymmetricOdd\n");
  r = run("classify --json", "-8 3 5 | -7 0 7 @ 2\n");
  CHECK(r.out == "{\"symmetry\":\"Nonsymmetric\"}\n");
}

TEST_CASE("shift raises the degree") {
  auto r = run("shift --h 0", "1 5 6 | 2 3 7 @ 2\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "| @ 3\n");

  r = run("shift --h 5 --h -4", "1 5 6 | 2 3 7 @ 2\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "-2 -1 5 6 7 12 | -3 2 3 4 10 11 @ 4\n");
}

TEST_CASE("family generates and prove certifies") {
  auto r = run("family Deg7 --params n=2");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "-315 1055 -625 -1460 315 -1055 625 1460 | "
        "-180 -1015 725 1465 180 1015 -725 -1465 @ 7\n");

  r = run("family Deg4A --params m1=1,m2=1");
  CHECK(r.out == "285 -110 200 -305 -70 | 95 80 -210 310 -275 @ 4\n");

  r = run("family Deg7 --params m=2 2>&1");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("no parameter") != std::string::npos);

  r = run("family Deg9 --params n=2 2>&1");
  CHECK(r.exit_code == 2);

  for (const char* invocation :
       {"Deg4SixTerm --params m1=1,m2=1,p=1,q=2", "Deg4A --params m1=2,m2=1",
        "Deg4B --params f=2,g=1,u=2,v=-1", "Deg5Sym1 --params n1=3,p=1,q=2",
        "Deg5Sym2 --params m=1,t=3", "Deg5Nonsym --params f=2,g=-1",
        "Deg6 --params n1=3,n2=1", "Deg7 --params n=2",
        "EqProdDeg4 --params f=2,g=1,d=1", "EqProdDeg5 --params m=-1"}) {
    CHECK(run(std::string("family ") + invocation).exit_code == 0);
  }

  r = run("prove Deg7");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "Deg7: power sums agree identically for r = 1..7\n");
  r = run("prove EqProdDeg5");
  CHECK(r.out ==
        "EqProdDeg5: power sums agree identically for r = 1..5\n"
        "EqProdDeg5: side products agree identically\n");
}

TEST_CASE("elliptic pipeline subcommand") {
  auto r = run("ec --multiple 2 --deg5");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1025 -477 -1979 -1025 477 1979 | "
                 "1965 1121 277 -1965 -1121 -277 @ 5\n");

  r = run("ec --multiple 2 --deg7");
  CHECK(r.out == "-1576 -1099 -818 -303 303 818 1099 1576 | "
                 "-1569 -1154 -677 -448 448 677 1154 1569 @ 7\n");

  r = run("ec --multiple 1 --deg5 2>&1");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("Degenerate") != std::string::npos);
}

TEST_CASE("fermat ascent subcommand") {
  auto r = run("fermat --coeffs 765,0,-8226,0,19125 --start 1 --steps 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "-35/19 tangent\n-1257659347/688138637 tangent\n");

  r = run("fermat --coeffs 1,0,2,0,1 --start 0");
  CHECK(r.out == "1 globally-square\n");

  r = run("fermat --coeffs 1,0,0,0,1 --start 0 2>&1");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("AscentStuck") != std::string::npos);

  r = run("fermat --coeffs 1,0,0,0,2 --start 0 2>&1");
  CHECK(r.exit_code == 2);
}

TEST_CASE("search streams one JSON object per solution") {
  auto r = run("search --k 2 --s 3 --bound 8");
  CHECK(r.exit_code == 0);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 12);
  CHECK(rows.front() ==
        "{\"degree\":2,\"left\":[\"-8\",\"1\",\"7\"],"
        "\"right\":[\"-7\",\"-1\",\"8\"]}");
  CHECK(rows.back() ==
        "{\"degree\":2,\"left\":[\"-2\",\"1\",\"1\"],"
        "\"right\":[\"-1\",\"-1\",\"2\"]}");

  r = run("search --k 2 --s 3 --bound 8 --jobs 4");
  CHECK(lines(r.out).size() == 12);

  r = run("search --k 2 --s 3 --bound 5000 2>&1");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("safety cap") != std::string::npos);
}

TEST_CASE("usage problems exit with 2 and help with 0") {
  auto r = run("nope 2>&1");
  CHECK(r.exit_code == 2);

  r = run("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verify") != std::string::npos);

  r = run("reduce 2>&1", "bogus\n");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("ParseError") != std::string::npos);
}
