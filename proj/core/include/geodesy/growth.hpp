// Exact geodesic and spherical growth: extend each geodesic of length d by
// every letter the grows query approves, so layer d+1 holds exactly the
// geodesic words of length d+1; distinct element keys per layer count the
// sphere.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "geodesy/models.hpp"
#include "geodesy/oracles.hpp"

namespace geodesy {

struct GrowthRow {
  unsigned length = 0;
  std::uint64_t geodesics = 0;  // geodesic words of this length
  std::uint64_t sphere = 0;     // distinct elements at this distance
  std::uint64_t ball = 0;       // cumulative element count
};

struct GrowthTable {
  std::vector<GrowthRow> rows;
};

// grows must answer the extension query for g.  Layer words are kept in
// memory; a layer larger than word_budget raises CapacityExceededError.
GrowthTable growth_series(const GroupModel& g, const GrowsOracle& grows, unsigned max_len,
                          std::size_t word_budget = 10'000'000);

// header "length,geodesics,sphere,ball", one row per length.
std::string growth_csv(const GrowthTable& t);

}  // namespace geodesy
