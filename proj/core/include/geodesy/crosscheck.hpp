// Cross-validation matrix: every reduction is replayed against the exact
// ball oracle over an exhaustive batch of short words plus an optional
// deterministic random sample, with call budgets asserted on every query.
// Both the reduce-check CLI subcommand and the acceptance suite run this.

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "geodesy/ball.hpp"
#include "geodesy/models.hpp"

namespace geodesy {

struct CrossCheckConfig {
  unsigned radius = 8;
  unsigned max_len = 5;        // exhaustive over all words up to this length
  std::size_t samples = 0;     // additional random words
  unsigned sample_min_len = 6;
  unsigned sample_max_len = 7;
  std::uint64_t seed = 0x67656f6479ULL;
  std::size_t ball_capacity = Ball::kDefaultCapacity;
};

struct CheckRow {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t budget_violations = 0;
  std::string note;  // e.g. call budget, or why a row was skipped

  bool ok() const { return mismatches == 0 && budget_violations == 0; }
};

struct CrossCheckReport {
  std::string model_name;
  CrossCheckConfig config;
  std::size_t ball_elements = 0;
  std::uint64_t words_checked = 0;
  std::uint64_t geodesics_seen = 0;
  std::vector<CheckRow> rows;

  bool ok() const;
  const CheckRow& row(const std::string& name) const;
};

// Requires radius > max(max_len, sample_max_len) so that delta queries on
// the longest geodesics stay inside the ball.
CrossCheckReport run_cross_checks(std::shared_ptr<const GroupModel> model,
                                  const std::string& model_name,
                                  const CrossCheckConfig& cfg);

// Fixed-width text table; byte-identical for identical inputs.
std::string format_report(const CrossCheckReport& report);

}  // namespace geodesy
