#include "geodesy/growth.hpp"

#include <sstream>
#include <unordered_set>

#include "geodesy/errors.hpp"

namespace geodesy {

GrowthTable growth_series(const GroupModel& g, const GrowsOracle& grows, unsigned max_len,
                          std::size_t word_budget) {
  const auto alphabet = inverse_closed_alphabet(g.presentation());
  GrowthTable t;
  t.rows.push_back(GrowthRow{0, 1, 1, 1});

  std::vector<Word> layer{Word{}};
  std::uint64_t ball = 1;
  for (unsigned d = 1; d <= max_len; ++d) {
    std::vector<Word> next;
    for (const Word& u : layer) {
      for (Letter x : alphabet) {
        if (!grows(u, x)) continue;
        next.push_back(u + x);
        if (next.size() > word_budget) {
          std::ostringstream os;
          os << "growth layer " << d << " exceeds the word budget " << word_budget;
          throw CapacityExceededError(os.str());
        }
      }
    }
    std::unordered_set<ElementKey> keys;
    keys.reserve(next.size());
    for (const Word& w : next) keys.insert(g.eval(w));
    ball += keys.size();
    t.rows.push_back(GrowthRow{d, next.size(), keys.size(), ball});
    layer = std::move(next);
  }
  return t;
}

std::string growth_csv(const GrowthTable& t) {
  std::ostringstream os;
  os << "length,geodesics,sphere,ball\n";
  for (const GrowthRow& r : t.rows) {
    os << r.length << ',' << r.geodesics << ',' << r.sphere << ',' << r.ball << '\n';
  }
  return os.str();
}

}  // namespace geodesy
