#include "geodesy/crosscheck.hpp"

#include <iomanip>
#include <random>
#include <sstream>

#include "geodesy/errors.hpp"
#include "geodesy/reductions.hpp"

namespace geodesy {

bool CrossCheckReport::ok() const {
  for (const CheckRow& r : rows) {
    if (!r.ok()) return false;
  }
  return true;
}

const CheckRow& CrossCheckReport::row(const std::string& name) const {
  for (const CheckRow& r : rows) {
    if (r.name == name) return r;
  }
  throw InputError("no cross-check row named \"" + name + "\"");
}

CrossCheckReport run_cross_checks(std::shared_ptr<const GroupModel> model,
                                  const std::string& model_name,
                                  const CrossCheckConfig& cfg) {
  const unsigned longest = std::max(cfg.max_len, cfg.samples > 0 ? cfg.sample_max_len : 0u);
  if (cfg.radius <= longest) {
    std::ostringstream os;
    os << "radius " << cfg.radius << " must exceed the longest checked word (" << longest
       << ") so delta queries stay inside the ball";
    throw InputError(os.str());
  }
  if (cfg.samples > 0 && cfg.sample_min_len > cfg.sample_max_len) {
    throw InputError("sample length range is empty");
  }

  CrossCheckReport report;
  report.model_name = model_name;
  report.config = cfg;

  Ball ball(model, cfg.radius, cfg.ball_capacity);
  report.ball_elements = ball.size();
  const OracleSuite oracle = ball_oracles(ball);
  const auto& alphabet = ball.alphabet();
  const auto k = static_cast<std::uint64_t>(alphabet.size());

  CheckRow length_row{"length_from_bounded", 0, 0, 0, "<= n calls"};
  CheckRow geodesic_row{"geodesic_from_length", 0, 0, 0, "<= 1 + k*m calls"};
  CheckRow bounded_row{"bounded_from_length", 0, 0, 0, "1 call"};
  CheckRow len_geo_row{"length_from_geodesic", 0, 0, 0, "1 call"};
  CheckRow delta_row{"delta_from_bounded", 0, 0, 0, "<= 2 calls"};
  CheckRow chain_row{"bounded->length->geodesic", 0, 0, 0, "composed"};
  const bool all_even =
      relator_parity(model->presentation()) == ParityClass::AllRelatorsEven;
  CheckRow parity_row{"parity: delta never 0", 0, 0, 0,
                      all_even ? "all relators even" : "skipped: odd relator present"};

  auto check_word = [&](const Word& w) {
    ++report.words_checked;
    const long true_len = ball.length(w);

    {
      auto r = length_from_bounded(oracle.bounded, w);
      ++length_row.cases;
      if (r.answer != true_len) ++length_row.mismatches;
      if (r.stats.bounded_calls > w.size()) ++length_row.budget_violations;
    }
    {
      auto r = geodesic_from_length(oracle.length, w, alphabet);
      ++geodesic_row.cases;
      if (static_cast<long>(r.answer.size()) != true_len || !equal(*model, r.answer, w)) {
        ++geodesic_row.mismatches;
      }
      if (r.stats.length_calls > 1 + k * static_cast<std::uint64_t>(true_len)) {
        ++geodesic_row.budget_violations;
      }
    }
    for (long bound = -1; bound <= static_cast<long>(cfg.max_len) + 1; ++bound) {
      ++bounded_row.cases;
      if (bounded_from_length(oracle.length, w, bound) != ball.bounded(w, bound)) {
        ++bounded_row.mismatches;
      }
    }
    {
      ++len_geo_row.cases;
      if (length_from_geodesic(oracle.geodesic, w) != true_len) ++len_geo_row.mismatches;
    }
    {
      LengthOracle composed_length = [&](const Word& v) {
        return length_from_bounded(oracle.bounded, v).answer;
      };
      auto r = geodesic_from_length(composed_length, w, alphabet);
      ++chain_row.cases;
      if (static_cast<long>(r.answer.size()) != true_len || !equal(*model, r.answer, w)) {
        ++chain_row.mismatches;
      }
    }
    if (true_len == static_cast<long>(w.size())) {
      ++report.geodesics_seen;
      for (Letter x : alphabet) {
        Delta truth = ball.delta(w, x);
        auto r = delta_from_bounded(oracle.bounded, w, x);
        ++delta_row.cases;
        if (r.answer != truth) ++delta_row.mismatches;
        if (r.stats.bounded_calls > 2) ++delta_row.budget_violations;
        if (all_even) {
          ++parity_row.cases;
          if (truth == Delta::Flat) ++parity_row.mismatches;
        }
      }
    }
  };

  WordEnumerator words(alphabet, cfg.max_len);
  while (auto w = words.next()) check_word(*w);

  if (cfg.samples > 0) {
    std::mt19937_64 rng(cfg.seed);
    const std::size_t span = cfg.sample_max_len - cfg.sample_min_len + 1;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      Word w;
      std::size_t len = cfg.sample_min_len + rng() % span;
      for (std::size_t j = 0; j < len; ++j) w.push_back(alphabet[rng() % alphabet.size()]);
      check_word(w);
    }
  }

  report.rows = {length_row,  geodesic_row, bounded_row, len_geo_row,
                 delta_row,   chain_row,    parity_row};
  return report;
}

std::string format_report(const CrossCheckReport& report) {
  std::ostringstream os;
  const CrossCheckConfig& cfg = report.config;
  os << "model: " << report.model_name << "  radius: " << cfg.radius
     << "  ball elements: " << report.ball_elements << '\n';
  os << "exhaustive: all " << report.words_checked - cfg.samples
     << " words of length <= " << cfg.max_len;
  if (cfg.samples > 0) {
    os << "  sampled: " << cfg.samples << " words of length " << cfg.sample_min_len << ".."
       << cfg.sample_max_len << " (seed " << cfg.seed << ")";
  }
  os << '\n';
  os << "geodesics seen: " << report.geodesics_seen << '\n';
  os << std::left << std::setw(28) << "check" << std::right << std::setw(10) << "cases"
     << std::setw(12) << "mismatches" << std::setw(12) << "over-budget"
     << "  note" << '\n';
  for (const CheckRow& r : report.rows) {
    os << std::left << std::setw(28) << r.name << std::right << std::setw(10) << r.cases
       << std::setw(12) << r.mismatches << std::setw(12) << r.budget_violations << "  "
       << r.note << '\n';
  }
  os << "RESULT: " << (report.ok() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace geodesy
