// Constructive reductions between the geodesic queries: each builds one
// query out of another, with exact call accounting.
//
//   bounded  -> length    (at most n queries for a word of length n)
//   length   -> geodesic  (at most 1 + k*m queries, k letters, m = l(u))
//   length   -> bounded   (one query)
//   geodesic -> length    (one query)
//   bounded  -> delta     (at most two queries)
//   grows    -> geodesic  (semi-decision driven by a relator-conjugate
//                          product search; total via explicit budgets)

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "geodesy/oracles.hpp"
#include "geodesy/presentation.hpp"
#include "geodesy/word.hpp"

namespace geodesy {

template <typename T>
struct ReductionOutcome {
  T answer{};
  CallStats stats;
};

// Limits for the conjugate-product search.
struct EnumeratorConfig {
  std::size_t max_factors = 2;            // products of at most this many conjugates
  std::size_t max_conjugator_length = 2;  // conjugating words up to this length
  std::size_t max_products = 100'000;     // stream truncation
  std::size_t step_budget = 1'000'000;    // oracle + enumerator steps overall
};

// Asks bounded(u, n-1); a No answer certifies u geodesic.  Otherwise walks
// the bound down until the first No at bound k and returns k+1 (all Yes
// down to bound 0 means the identity).  At most |u| queries.
ReductionOutcome<long> length_from_bounded(const BoundedOracle& bounded, const Word& u);

// Asks length(u) = m, then greedily extends u by letters that step the
// length down to 0; the inverse of the appended letters is a geodesic for
// u.  Letters are tried in `alphabet` order.  At most 1 + |alphabet| * m
// queries.  Throws NoDescentLetterError if no letter descends (impossible
// for a consistent length oracle).
ReductionOutcome<Word> geodesic_from_length(const LengthOracle& length, const Word& u,
                                            const std::vector<Letter>& alphabet);

// length(u) <= k, one query.
bool bounded_from_length(const LengthOracle& length, const Word& u, long k);

// |geodesic(u)|, one query.
long length_from_geodesic(const GeodesicOracle& geodesic, const Word& u);

// Asks bounded(ux, |u|-1), then bounded(ux, |u|) if needed.  `u` must be
// geodesic; this is a caller contract and is not checked here (checking
// would itself cost a query).
ReductionOutcome<Delta> delta_from_bounded(const BoundedOracle& bounded, const Word& u,
                                           Letter x);

// Deterministic stream of freely reduced products c_1 ... c_j, j <=
// max_factors, where each factor is w r^{+-1} w^{-1} for a relator r of p
// and |w| <= max_conjugator_length.  Ordered by factor count, then
// lexicographically by the tuple of factor choices; a factor choice is
// ordered by conjugator (shortlex), then relator index, then sign (+, -).
// Duplicates are not removed.  Empty stream when p has no relators.
class ConjugateProductStream {
 public:
  ConjugateProductStream(const Presentation& p, const EnumeratorConfig& cfg);

  // nullopt once exhausted or truncated at max_products.
  std::optional<Word> next();

 private:
  std::vector<Word> singles_;
  std::size_t max_factors_;
  std::size_t max_products_;
  std::size_t produced_ = 0;
  std::vector<std::size_t> odometer_;  // indices into singles_, current tuple
  bool started_ = false;
};

// Finds a geodesic representative of w given only the grows query, by
// induction on prefixes: an extension that grows is geodesic; otherwise
// scan products of relator conjugates, multiplied onto the extension from
// either side, until one freely reduces to length <= the prefix
// geodesic's, shortening or recursing as the length dictates.  p must
// present the group the oracle answers for and must carry at least the
// relators needed to witness the shortenings, or the search exhausts its
// budget (BudgetExhaustedError, carrying the failing prefix position).
Word geodesic_from_delta(const GrowsOracle& grows, const Presentation& p, const Word& w,
                         const EnumeratorConfig& cfg);

}  // namespace geodesy
