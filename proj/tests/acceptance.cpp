// Acceptance suite: the release gate for the whole toolkit.  Each check
// prints one [PASS]/[FAIL] line; the process exits 0 only if every check
// passes.  Time limits are part of the checks.

#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "geodesy/automata.hpp"
#include "geodesy/ball.hpp"
#include "geodesy/crosscheck.hpp"
#include "geodesy/errors.hpp"
#include "geodesy/growth.hpp"
#include "geodesy/models.hpp"
#include "geodesy/reductions.hpp"
#include "subprocess.hpp"
#include "testutil.hpp"

using namespace geodesy;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
};

int failures = 0;

void report(const std::string& name, const Outcome& o, double seconds, double limit) {
  bool pass = o.pass && seconds <= limit;
  if (!pass) ++failures;
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail.str();
  std::cout << " (" << seconds << "s of " << limit << "s allowed)\n";
}

template <typename F>
void run_check(const std::string& name, double limit_seconds, F&& body) {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " exception: " << e.what();
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(name, o, seconds, limit_seconds);
}

struct NamedModel {
  std::string name;
  std::shared_ptr<const GroupModel> model;
};

std::vector<NamedModel> acceptance_models() {
  return {{"abelian:2", free_abelian_model(2)},
          {"free:2", free_group_model(2)},
          {"z3", test::z3_model()},
          {"bs:2", bs_model(2)}};
}

std::vector<CrossCheckReport> cross_reports;

void check_oracle_equivalence(Outcome& o) {
  CrossCheckConfig cfg;
  cfg.radius = 8;
  cfg.max_len = 5;
  cfg.samples = 1000;
  cfg.sample_min_len = 6;
  cfg.sample_max_len = 7;
  std::uint64_t cases = 0, mismatches = 0;
  for (const auto& [name, model] : acceptance_models()) {
    auto report = run_cross_checks(model, name, cfg);
    for (const auto& row : report.rows) {
      if (row.name.find("parity") != std::string::npos) continue;
      cases += row.cases;
      mismatches += row.mismatches;
    }
    cross_reports.push_back(std::move(report));
  }
  if (mismatches != 0) o.pass = false;
  o.detail << "4 models, exhaustive len<=5 plus 1000 sampled len 6..7, " << cases
           << " reduction answers, " << mismatches << " mismatches";
}

void check_call_budgets(Outcome& o) {
  std::uint64_t violations = 0, budgeted = 0;
  for (const auto& report : cross_reports) {
    for (const auto& row : report.rows) {
      violations += row.budget_violations;
      if (row.name == "length_from_bounded" || row.name == "geodesic_from_length" ||
          row.name == "delta_from_bounded") {
        budgeted += row.cases;
      }
    }
  }
  if (cross_reports.empty() || violations != 0) o.pass = false;
  o.detail << budgeted << " budgeted reduction runs, " << violations << " over budget";
}

void check_dfa_delta(Outcome& o) {
  std::uint64_t pairs = 0, disagreements = 0;
  struct Case {
    Dfa dfa;
    Ball ball;
  };
  Case cases[] = {{abelian_geodesic_dfa(2), Ball(free_abelian_model(2), 6)},
                  {free_geodesic_dfa(2), Ball(free_group_model(2), 6)}};
  for (const auto& [dfa, ball] : cases) {
    WordEnumerator words(ball.alphabet(), 5);
    while (auto u = words.next()) {
      if (!ball.is_geodesic(*u)) continue;
      for (Letter x : ball.alphabet()) {
        ++pairs;
        if (delta_from_dfa(dfa, *u, x) != (ball.delta(*u, x) == Delta::Up)) ++disagreements;
      }
    }
  }
  std::uint64_t lang_mismatches = 0, lang_words = 0;
  for (std::size_t k = 1; k <= 3; ++k) {
    Ball fb(free_group_model(k), 5);
    auto fr = validate_dfa_against_ball(free_geodesic_dfa(k), fb, 5);
    Ball ab(free_abelian_model(k), 5);
    auto abr = validate_dfa_against_ball(abelian_geodesic_dfa(k), ab, 5);
    lang_mismatches += fr.mismatches.size() + abr.mismatches.size();
    lang_words += fr.words_checked + abr.words_checked;
  }
  if (disagreements != 0 || lang_mismatches != 0) o.pass = false;
  o.detail << pairs << " (geodesic, letter) pairs with " << disagreements
           << " disagreements; acceptor-vs-ball on " << lang_words << " words with "
           << lang_mismatches << " mismatches";
}

void check_conjugate_search(Outcome& o) {
  EnumeratorConfig cfg;
  cfg.max_factors = 2;
  cfg.max_conjugator_length = 2;
  cfg.max_products = 100'000;
  std::uint64_t words = 0, wrong = 0, exhausted = 0;
  std::vector<NamedModel> models = {{"abelian:2", free_abelian_model(2)},
                                    {"z3", test::z3_model()}};
  for (const auto& [name, model] : models) {
    Ball ball(model, 6);
    GrowsOracle grows = [&ball](const Word& u, Letter x) {
      return ball.delta(u, x) == Delta::Up;
    };
    WordEnumerator all(ball.alphabet(), 4);
    while (auto w = all.next()) {
      ++words;
      try {
        Word g = geodesic_from_delta(grows, model->presentation(), *w, cfg);
        if (static_cast<long>(g.size()) != ball.length(*w) || !equal(*model, g, *w)) ++wrong;
      } catch (const BudgetExhaustedError&) {
        ++exhausted;
      }
    }
  }
  if (wrong != 0 || exhausted != 0) o.pass = false;
  o.detail << words << " words of length <= 4 over the plane and Z/3, " << wrong
           << " wrong geodesics, " << exhausted << " budget exhaustions";
}

void check_parity(Outcome& o) {
  std::uint64_t pairs = 0, zeros = 0;
  bool found = false;
  for (const auto& report : cross_reports) {
    if (report.model_name != "abelian:2" && report.model_name != "free:2") continue;
    const auto& row = report.row("parity: delta never 0");
    pairs += row.cases;
    zeros += row.mismatches;
    found = true;
  }
  if (!found || pairs == 0 || zeros != 0) o.pass = false;
  o.detail << pairs << " (geodesic, letter) pairs over all-even models, " << zeros
           << " zero deltas";
}

void check_growth(Outcome& o) {
  // independent derivation for the plane: enumerate, filter, dedup
  Ball z2(free_abelian_model(2), 4);
  std::map<unsigned, std::uint64_t> brute_words;
  std::map<unsigned, std::set<ElementKey>> brute_keys;
  WordEnumerator words(z2.alphabet(), 3);
  while (auto w = words.next()) {
    if (!z2.is_geodesic(*w)) continue;
    ++brute_words[w->size()];
    brute_keys[w->size()].insert(z2.model().eval(*w));
  }
  GrowsOracle z2_grows = [&z2](const Word& u, Letter x) {
    return z2.delta(u, x) == Delta::Up;
  };
  GrowthTable z2_table = growth_series(z2.model(), z2_grows, 3);
  const std::vector<std::uint64_t> expect_geo{1, 4, 12, 28};
  const std::vector<std::uint64_t> expect_sph{1, 4, 8, 12};
  for (unsigned d = 0; d <= 3; ++d) {
    if (z2_table.rows[d].geodesics != expect_geo[d] ||
        z2_table.rows[d].sphere != expect_sph[d] ||
        z2_table.rows[d].geodesics != brute_words[d] ||
        z2_table.rows[d].sphere != brute_keys[d].size()) {
      o.pass = false;
    }
  }

  Ball f2(free_group_model(2), 6);
  GrowsOracle f2_grows = [&f2](const Word& u, Letter x) {
    return f2.delta(u, x) == Delta::Up;
  };
  GrowthTable f2_table = growth_series(f2.model(), f2_grows, 5);
  std::uint64_t closed_form = 4;
  for (unsigned d = 1; d <= 5; ++d) {
    if (f2_table.rows[d].geodesics != closed_form || f2_table.rows[d].sphere != closed_form) {
      o.pass = false;
    }
    closed_form *= 3;
  }

  Dfa ab_dfa = abelian_geodesic_dfa(2);
  GrowsOracle ab_via_dfa = [&ab_dfa](const Word& u, Letter x) {
    return delta_from_dfa(ab_dfa, u, x);
  };
  Dfa fr_dfa = free_geodesic_dfa(2);
  GrowsOracle fr_via_dfa = [&fr_dfa](const Word& u, Letter x) {
    return delta_from_dfa(fr_dfa, u, x);
  };
  bool tables_equal =
      growth_csv(z2_table) == growth_csv(growth_series(z2.model(), ab_via_dfa, 3)) &&
      growth_csv(f2_table) == growth_csv(growth_series(f2.model(), fr_via_dfa, 5));
  if (!tables_equal) o.pass = false;
  o.detail << "plane table (1,4,12,28)/(1,4,8,12) matches brute force, free table matches "
              "4*3^(d-1), bfs and dfa tables "
           << (tables_equal ? "byte-identical" : "DIFFER");
}

void check_determinism(Outcome& o) {
  std::string cmd = std::string(GEODESY_CLI_PATH) +
                    " reduce-check --model abelian:2 --radius 6 --max-len 4";
  auto a = test::run_command(cmd);
  auto b = test::run_command(cmd);
  if (a.exit_code != 0 || b.exit_code != 0 || a.out != b.out || a.out.empty()) {
    o.pass = false;
  }
  o.detail << "two reduce-check runs: exits " << a.exit_code << "/" << b.exit_code
           << ", outputs " << (a.out == b.out ? "byte-identical" : "DIFFER");
}

}  // namespace

int main() {
  run_check("oracle-equivalence", 60.0, check_oracle_equivalence);
  run_check("call-count-budgets", 60.0, check_call_budgets);
  run_check("dfa-delta-agreement", 30.0, check_dfa_delta);
  run_check("conjugate-search-geodesics", 120.0, check_conjugate_search);
  run_check("parity-invariant", 60.0, check_parity);
  run_check("growth-numbers", 10.0, check_growth);
  run_check("determinism", 60.0, check_determinism);
  if (failures == 0) {
    std::cout << "all acceptance checks passed\n";
    return 0;
  }
  std::cout << failures << " acceptance check(s) failed\n";
  return 1;
}
