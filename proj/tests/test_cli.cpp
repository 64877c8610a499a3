#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "subprocess.hpp"

using geodesy::test::RunResult;
using geodesy::test::run_command;

namespace {

std::string bin() { return std::string(GEODESY_CLI_PATH); }

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

const std::string z3_text =
    "gens: a\n"
    "rels: aaa\n"
    "rules: aA -> ; Aa -> ; aa -> A ; AA -> a\n";

}  // namespace

TEST_CASE("length answers on stdout with exit 0") {
  RunResult r = run_command(bin() + " length --model abelian:2 --radius 6 abAB");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0\n");
  CHECK(r.err.empty());

  r = run_command(bin() + " length --model abelian:2 aab");
  CHECK(r.out == "3\n");
}

TEST_CASE("bounded prints yes or no") {
  CHECK(run_command(bin() + " bounded --model abelian:2 abAB 0").out == "yes\n");
  CHECK(run_command(bin() + " bounded --model abelian:2 aab 2").out == "no\n");
  RunResult r = run_command(bin() + " bounded --model abelian:2 a -- -1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "no\n");
}

TEST_CASE("geodesic prints the representative, epsilon when empty") {
  CHECK(run_command(bin() + " geodesic --model abelian:2 abAB").out == "\xce\xb5\n");
  CHECK(run_command(bin() + " geodesic --model free:2 abB").out == "a\n");
  CHECK(run_command(bin() + " geodesic --model abelian:2 abA").out == "b\n");
}

TEST_CASE("delta via bfs and via dfa") {
  CHECK(run_command(bin() + " delta --model abelian:2 a a").out == "1\n");
  CHECK(run_command(bin() + " delta --model abelian:2 a A").out == "-1\n");
  CHECK(run_command(bin() + " delta --via dfa --model abelian:2 a a").out == "1\n");
  CHECK(run_command(bin() + " delta --via dfa --model abelian:2 a A").out == "-1\n");
  CHECK(run_command(bin() + " delta --via dfa --model free:2 ab B").out == "-1\n");
}

TEST_CASE("delta on a rewrite model can be zero") {
  auto path = write_temp("cli_z3.grp", z3_text);
  RunResult r = run_command(bin() + " delta --model rewrite:" + path.string() +
                            " --radius 3 a a");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0\n");
}

TEST_CASE("radius exceeded exits 2") {
  RunResult r = run_command(bin() + " length --model abelian:2 --radius 1 aab");
  CHECK(r.exit_code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("radius") != std::string::npos);
}

TEST_CASE("ball capacity exceeded exits 2") {
  RunResult r = run_command(bin() + " length --model free:2 --radius 4 --ball-capacity 5 a");
  CHECK(r.exit_code == 2);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_command(bin()).exit_code == 1);                       // no subcommand
  CHECK(run_command(bin() + " frobnicate").exit_code == 1);       // unknown subcommand
  CHECK(run_command(bin() + " length --no-such-flag a").exit_code == 1);
  CHECK(run_command(bin() + " length --model abelian:2 --radius -1 a").exit_code == 1);
  CHECK(run_command(bin() + " delta --via dfa --model bs:2 a a").exit_code == 1);
  CHECK(run_command(bin() + " delta --via tea --model free:2 a a").exit_code == 1);
  CHECK(run_command(bin() + " length --model nosuch:2 a").exit_code == 1);
  CHECK(run_command(bin() + " growth --model free:2").exit_code == 1);  // missing max-len
}

TEST_CASE("unknown letters and non-geodesic delta input exit 1") {
  CHECK(run_command(bin() + " length --model abelian:2 abc").exit_code == 1);
  RunResult r = run_command(bin() + " delta --model abelian:2 aA a");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("geodesic") != std::string::npos);
}

TEST_CASE("growth prints a table and writes csv") {
  auto csv = std::filesystem::temp_directory_path() / "cli_growth.csv";
  RunResult r = run_command(bin() + " growth --model abelian:2 --max-len 2 --csv " +
                            csv.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "length geodesics sphere ball\n"
        "0 1 1 1\n"
        "1 4 4 5\n"
        "2 12 8 13\n");
  CHECK(geodesy::test::slurp(csv) ==
        "length,geodesics,sphere,ball\n0,1,1,1\n1,4,4,5\n2,12,8,13\n");
  std::filesystem::remove(csv);

  RunResult dfa = run_command(bin() + " growth --model abelian:2 --via dfa --max-len 2");
  CHECK(dfa.out == r.out);
}

TEST_CASE("growth via dfa needs an acceptor-backed model") {
  RunResult r = run_command(bin() + " growth --model bs:2 --via dfa --max-len 2");
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("dfa") != std::string::npos);
}

TEST_CASE("validate reports zero mismatches for matching acceptors") {
  RunResult r = run_command(bin() + " validate --dfa abelian:2 --radius 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("mismatches: 0") != std::string::npos);
}

TEST_CASE("validate exports the transition table") {
  auto path = std::filesystem::temp_directory_path() / "cli_dfa.txt";
  RunResult r = run_command(bin() + " validate --dfa free:1 --radius 3 --export " +
                            path.string());
  CHECK(r.exit_code == 0);
  std::string table = geodesy::test::slurp(path);
  CHECK(table.substr(0, 12) == "# states: 4 ");
  CHECK(table.find("0* 1 2") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("reduce-check passes on healthy models and is byte-deterministic") {
  std::string cmd = bin() + " reduce-check --model abelian:2 --radius 6 --max-len 4";
  RunResult a = run_command(cmd);
  RunResult b = run_command(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("RESULT: PASS") != std::string::npos);
  CHECK(a.out == b.out);
}

TEST_CASE("reduce-check detects a presentation that lies about parity") {
  // All declared relators are even, but the rules identify a^3 with the
  // identity, so some delta is 0: an inconsistency between the declared
  // presentation and the oracle built from it.
  auto path = write_temp("cli_lying.grp",
                         "gens: a\n"
                         "rels: aaaaaa\n"
                         "rules: aA -> ; Aa -> ; aa -> A ; AA -> a\n");
  RunResult r = run_command(bin() + " reduce-check --model rewrite:" + path.string() +
                            " --radius 4 --max-len 2");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("RESULT: FAIL") != std::string::npos);
}

TEST_CASE("geodesic-from-delta subcommand") {
  auto path = write_temp("cli_gfd_z3.grp", z3_text);
  RunResult r = run_command(bin() + " geodesic-from-delta --presentation " + path.string() +
                            " --word aa");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "A\n");

  RunResult starved = run_command(bin() + " geodesic-from-delta --presentation " +
                                  path.string() + " --word aa --step-budget 1");
  CHECK(starved.exit_code == 2);
  CHECK(starved.err.find("budget") != std::string::npos);

  RunResult norules = run_command(
      bin() + " geodesic-from-delta --presentation " +
      write_temp("cli_gfd_bad.grp", "gens: a\nrels: aaa\n").string() + " --word aa");
  CHECK(norules.exit_code == 1);
}

TEST_CASE("word batches come from --word-file") {
  auto path = write_temp("cli_words.txt", "abAB\naab\nba\n");
  RunResult r = run_command(bin() + " length --model abelian:2 --word-file " + path.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0\n3\n2\n");
  // positional word and batch file are mutually exclusive
  CHECK(run_command(bin() + " length --model abelian:2 --word-file " + path.string() +
                    " ab").exit_code == 1);
}
