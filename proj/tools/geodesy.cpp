// geodesy: geodesic queries in finitely generated groups from the command
// line.  Subcommands answer length / bounded / geodesic / delta questions
// against an exact Cayley-ball oracle or a geodesic-language acceptor,
// compute growth tables, and cross-validate the oracle reductions.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "geodesy/automata.hpp"
#include "geodesy/ball.hpp"
#include "geodesy/crosscheck.hpp"
#include "geodesy/errors.hpp"
#include "geodesy/growth.hpp"
#include "geodesy/models.hpp"
#include "geodesy/reductions.hpp"

namespace {

using namespace geodesy;

struct Options {
  std::string model = "free:2";
  std::string dfa;  // validate only
  unsigned radius = 8;
  std::size_t ball_capacity = Ball::kDefaultCapacity;
  std::string via = "bfs";
  std::string word;
  std::string letter;
  std::string word_file;
  long bound = 0;
  unsigned max_len = 5;
  bool max_len_given = false;
  std::string csv_path;
  std::string export_path;
  std::size_t word_budget = 10'000'000;
  std::size_t samples = 0;
  unsigned sample_min_len = 6;
  unsigned sample_max_len = 7;
  std::uint64_t seed = 0x67656f6479ULL;
  std::string presentation_file;
  EnumeratorConfig enumerator;
};

std::string display(const Word& w, const Presentation& p) {
  std::string s = format_word(w, p);
  return s.empty() ? "\xce\xb5" : s;  // ε
}

Letter parse_letter(const std::string& text, const Presentation& p) {
  Word w = parse_word(text, p);
  if (w.size() != 1) throw InputError("expected a single letter, got \"" + text + "\"");
  return w.letters[0];
}

std::vector<std::string> word_batch(const Options& opt) {
  if (opt.word_file.empty()) return {opt.word};
  std::ifstream in(opt.word_file);
  if (!in) throw InputError("cannot open word file: " + opt.word_file);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

// "free:k" or "abelian:k"; everything else has no exact geodesic acceptor.
Dfa dfa_from_selector(const std::string& selector) {
  auto colon = selector.find(':');
  std::string kind = selector.substr(0, colon == std::string::npos ? selector.size() : colon);
  if (kind != "free" && kind != "abelian") {
    throw InputError("no geodesic acceptor for model \"" + selector +
                     "\"; --via dfa needs free:k or abelian:k");
  }
  auto model = model_from_selector(selector);  // validates k
  std::size_t k = model->presentation().rank();
  return kind == "free" ? free_geodesic_dfa(k) : abelian_geodesic_dfa(k);
}

int cmd_length(const Options& opt) {
  auto model = model_from_selector(opt.model);
  Ball ball(model, opt.radius, opt.ball_capacity);
  for (const std::string& text : word_batch(opt)) {
    std::cout << ball.length(parse_word(text, model->presentation())) << '\n';
  }
  return 0;
}

int cmd_bounded(const Options& opt) {
  auto model = model_from_selector(opt.model);
  Ball ball(model, opt.radius, opt.ball_capacity);
  for (const std::string& text : word_batch(opt)) {
    bool yes = ball.bounded(parse_word(text, model->presentation()), opt.bound);
    std::cout << (yes ? "yes" : "no") << '\n';
  }
  return 0;
}

int cmd_geodesic(const Options& opt) {
  auto model = model_from_selector(opt.model);
  Ball ball(model, opt.radius, opt.ball_capacity);
  for (const std::string& text : word_batch(opt)) {
    Word g = ball.geodesic(parse_word(text, model->presentation()));
    std::cout << display(g, model->presentation()) << '\n';
  }
  return 0;
}

int cmd_delta(const Options& opt) {
  auto model = model_from_selector(opt.model);
  const Presentation& p = model->presentation();
  Word u = parse_word(opt.word, p);
  Letter x = parse_letter(opt.letter, p);
  if (opt.via == "dfa") {
    Dfa d = dfa_from_selector(opt.model);
    // exact acceptor + even relators: the answer is never 0
    std::cout << (delta_from_dfa(d, u, x) ? 1 : -1) << '\n';
    return 0;
  }
  Ball ball(model, opt.radius, opt.ball_capacity);
  std::cout << to_int(ball.delta(u, x)) << '\n';
  return 0;
}

int cmd_growth(const Options& opt) {
  auto model = model_from_selector(opt.model);
  const unsigned n = opt.max_len;
  GrowthTable table;
  if (opt.via == "dfa") {
    Dfa d = dfa_from_selector(opt.model);
    GrowsOracle grows = [&d](const Word& u, Letter x) { return delta_from_dfa(d, u, x); };
    table = growth_series(*model, grows, n, opt.word_budget);
  } else {
    unsigned radius = opt.radius < n ? n : opt.radius;
    Ball ball(model, radius, opt.ball_capacity);
    GrowsOracle grows = [&ball](const Word& u, Letter x) {
      return ball.delta(u, x) == Delta::Up;
    };
    table = growth_series(*model, grows, n, opt.word_budget);
  }
  std::cout << "length geodesics sphere ball\n";
  for (const GrowthRow& r : table.rows) {
    std::cout << r.length << ' ' << r.geodesics << ' ' << r.sphere << ' ' << r.ball << '\n';
  }
  if (!opt.csv_path.empty()) {
    std::ofstream out(opt.csv_path);
    if (!out) throw InputError("cannot write csv file: " + opt.csv_path);
    out << growth_csv(table);
  }
  return 0;
}

int cmd_validate(const Options& opt) {
  Dfa d = dfa_from_selector(opt.dfa);
  auto model = model_from_selector(opt.dfa);
  Ball ball(model, opt.radius, opt.ball_capacity);
  unsigned max_len = opt.max_len_given ? opt.max_len : opt.radius;
  if (max_len > opt.radius) {
    throw InputError("--max-len must not exceed --radius");
  }
  auto report = validate_dfa_against_ball(d, ball, max_len);
  std::cout << "checked " << report.words_checked << " words of length <= " << max_len
            << '\n';
  std::cout << "mismatches: " << report.mismatches.size() << '\n';
  for (const auto& m : report.mismatches) {
    std::cout << display(m.word, model->presentation()) << " dfa="
              << (m.dfa_accepts ? "accept" : "reject") << " ball="
              << (m.ball_geodesic ? "geodesic" : "non-geodesic") << '\n';
  }
  if (!opt.export_path.empty()) {
    std::ofstream out(opt.export_path);
    if (!out) throw InputError("cannot write dfa export: " + opt.export_path);
    out << d.transition_table();
  }
  return 0;
}

int cmd_reduce_check(const Options& opt) {
  CrossCheckConfig cfg;
  cfg.radius = opt.radius;
  cfg.max_len = opt.max_len;
  cfg.samples = opt.samples;
  cfg.sample_min_len = opt.sample_min_len;
  cfg.sample_max_len = opt.sample_max_len;
  cfg.seed = opt.seed;
  cfg.ball_capacity = opt.ball_capacity;
  auto report = run_cross_checks(model_from_selector(opt.model), opt.model, cfg);
  std::cout << format_report(report);
  if (!report.ok()) {
    std::cerr << "error: reduction answers disagree with the exact oracle\n";
    return 3;
  }
  return 0;
}

int cmd_geodesic_from_delta(const Options& opt) {
  Presentation p = load_presentation_file(opt.presentation_file);
  if (p.rules.empty()) {
    throw InputError("presentation file \"" + opt.presentation_file +
                     "\" has no rules:; the grows oracle needs a word-problem model");
  }
  auto model = rewriting_model(p, true);
  Ball ball(model, opt.radius, opt.ball_capacity);
  GrowsOracle grows = [&ball](const Word& u, Letter x) {
    return ball.delta(u, x) == Delta::Up;
  };
  Word w = parse_word(opt.word, model->presentation());
  Word g = geodesic_from_delta(grows, model->presentation(), w, opt.enumerator);
  std::cout << display(g, model->presentation()) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geodesic queries in finitely generated groups"};
  app.require_subcommand(1);
  Options opt;

  auto add_model = [&](CLI::App* cmd) {
    cmd->add_option("--model", opt.model,
                    "model selector: free:k, abelian:k, bs:n, rewrite:FILE (loading a "
                    "rewrite file asserts its rules are confluent)");
  };
  auto add_ball = [&](CLI::App* cmd) {
    cmd->add_option("--radius", opt.radius, "Cayley ball radius (default 8)");
    cmd->add_option("--ball-capacity", opt.ball_capacity, "ball element budget");
  };
  auto add_word_file = [&](CLI::App* cmd, CLI::Option* positional) {
    auto* f = cmd->add_option("--word-file", opt.word_file,
                              "newline-separated batch of words instead of the positional");
    positional->excludes(f);
    f->excludes(positional);
  };

  auto* length = app.add_subcommand("length", "geodesic length of a word");
  add_model(length);
  add_ball(length);
  auto* length_word = length->add_option("word", opt.word, "input word");
  add_word_file(length, length_word);

  auto* bounded = app.add_subcommand("bounded", "is the geodesic length <= k");
  add_model(bounded);
  add_ball(bounded);
  auto* bounded_word = bounded->add_option("word", opt.word, "input word");
  bounded->add_option("k", opt.bound, "length bound (may be negative)")->required();
  add_word_file(bounded, bounded_word);

  auto* geodesic = app.add_subcommand("geodesic", "a geodesic representative of a word");
  add_model(geodesic);
  add_ball(geodesic);
  auto* geodesic_word = geodesic->add_option("word", opt.word, "input word");
  add_word_file(geodesic, geodesic_word);

  auto* delta = app.add_subcommand("delta", "l(ux) - l(u) for geodesic u and letter x");
  add_model(delta);
  add_ball(delta);
  delta->add_option("--via", opt.via, "oracle backend: bfs or dfa")
      ->check(CLI::IsMember({"bfs", "dfa"}));
  delta->add_option("word", opt.word, "geodesic word u")->required();
  delta->add_option("letter", opt.letter, "letter x")->required();

  auto* growth = app.add_subcommand("growth", "geodesic and spherical growth table");
  add_model(growth);
  add_ball(growth);
  growth->add_option("--via", opt.via, "oracle backend: bfs or dfa")
      ->check(CLI::IsMember({"bfs", "dfa"}));
  growth->add_option("--max-len", opt.max_len, "table length")->required();
  growth->add_option("--csv", opt.csv_path, "also write the table as csv");
  growth->add_option("--word-budget", opt.word_budget, "layer word budget");

  auto* validate = app.add_subcommand("validate", "compare an acceptor with ground truth");
  validate->add_option("--dfa", opt.dfa, "acceptor selector: free:k or abelian:k")
      ->required();
  validate->add_option("--radius", opt.radius, "ball radius (default 8)");
  validate->add_option("--ball-capacity", opt.ball_capacity, "ball element budget");
  validate->add_option("--max-len", opt.max_len, "check words up to this length")
      ->each([&](const std::string&) { opt.max_len_given = true; });
  validate->add_option("--export", opt.export_path, "write the transition table here");

  auto* reduce = app.add_subcommand(
      "reduce-check", "replay every reduction against the exact oracle");
  add_model(reduce);
  reduce->add_option("--radius", opt.radius, "ball radius (default 8)");
  reduce->add_option("--ball-capacity", opt.ball_capacity, "ball element budget");
  reduce->add_option("--max-len", opt.max_len, "exhaustive word length (default 5)");
  reduce->add_option("--samples", opt.samples, "extra random words (default 0)");
  reduce->add_option("--sample-min-len", opt.sample_min_len, "sample length lower bound");
  reduce->add_option("--sample-max-len", opt.sample_max_len, "sample length upper bound");
  reduce->add_option("--seed", opt.seed, "sampling seed");

  auto* gfd = app.add_subcommand("geodesic-from-delta",
                                 "find a geodesic with only the grows oracle");
  gfd->add_option("--presentation", opt.presentation_file,
                  "presentation file with rules: (word-problem model) and rels: "
                  "(conjugate enumeration)")
      ->required();
  gfd->add_option("--word", opt.word, "input word")->required();
  gfd->add_option("--radius", opt.radius, "ball radius for the grows oracle");
  gfd->add_option("--ball-capacity", opt.ball_capacity, "ball element budget");
  gfd->add_option("--max-factors", opt.enumerator.max_factors, "conjugate factors (K)");
  gfd->add_option("--max-conj", opt.enumerator.max_conjugator_length,
                  "conjugator length (L)");
  gfd->add_option("--max-products", opt.enumerator.max_products, "product stream cap");
  gfd->add_option("--step-budget", opt.enumerator.step_budget, "total step budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(length)) return cmd_length(opt);
    if (app.got_subcommand(bounded)) return cmd_bounded(opt);
    if (app.got_subcommand(geodesic)) return cmd_geodesic(opt);
    if (app.got_subcommand(delta)) return cmd_delta(opt);
    if (app.got_subcommand(growth)) return cmd_growth(opt);
    if (app.got_subcommand(validate)) return cmd_validate(opt);
    if (app.got_subcommand(reduce)) return cmd_reduce_check(opt);
    if (app.got_subcommand(gfd)) return cmd_geodesic_from_delta(opt);
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const OracleInconsistencyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
