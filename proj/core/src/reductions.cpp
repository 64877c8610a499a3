#include "geodesy/reductions.hpp"

#include <sstream>

#include "geodesy/errors.hpp"

namespace geodesy {

ReductionOutcome<long> length_from_bounded(const BoundedOracle& bounded, const Word& u) {
  ReductionOutcome<long> out;
  const long n = static_cast<long>(u.size());
  if (n == 0) return out;  // the empty word is geodesic of length 0, no queries
  auto ask = [&](long k) {
    ++out.stats.bounded_calls;
    out.stats.note_word(u.size());
    return bounded(u, k);
  };
  if (!ask(n - 1)) {
    out.answer = n;  // u itself is geodesic
    return out;
  }
  for (long i = 2; i <= n; ++i) {
    if (!ask(n - i)) {
      out.answer = n - i + 1;
      return out;
    }
  }
  out.answer = 0;
  return out;
}

ReductionOutcome<Word> geodesic_from_length(const LengthOracle& length, const Word& u,
                                            const std::vector<Letter>& alphabet) {
  ReductionOutcome<Word> out;
  auto ask = [&](const Word& w) {
    ++out.stats.length_calls;
    out.stats.note_word(w.size());
    return length(w);
  };
  const long n = static_cast<long>(u.size());
  const long m = ask(u);
  if (m == n) {
    out.answer = u;
    return out;
  }
  Word extended = u;  // u x_1 ... x_i, driven to the identity
  Word suffix;
  for (long i = 1; i <= m; ++i) {
    bool found = false;
    for (Letter x : alphabet) {
      if (ask(extended + x) == m - i) {
        extended.push_back(x);
        suffix.push_back(x);
        found = true;
        break;
      }
    }
    if (!found) {
      std::ostringstream os;
      os << "no letter takes the length from " << (m - i + 1) << " to " << (m - i)
         << "; the length oracle is inconsistent";
      throw NoDescentLetterError(os.str());
    }
  }
  out.answer = invert_word(suffix);
  return out;
}

bool bounded_from_length(const LengthOracle& length, const Word& u, long k) {
  return length(u) <= k;
}

long length_from_geodesic(const GeodesicOracle& geodesic, const Word& u) {
  return static_cast<long>(geodesic(u).size());
}

ReductionOutcome<Delta> delta_from_bounded(const BoundedOracle& bounded, const Word& u,
                                           Letter x) {
  ReductionOutcome<Delta> out;
  const Word ux = u + x;
  auto ask = [&](long k) {
    ++out.stats.bounded_calls;
    out.stats.note_word(ux.size());
    return bounded(ux, k);
  };
  const long lu = static_cast<long>(u.size());
  if (ask(lu - 1)) {
    out.answer = Delta::Down;
  } else if (ask(lu)) {
    out.answer = Delta::Flat;
  } else {
    out.answer = Delta::Up;
  }
  return out;
}

ConjugateProductStream::ConjugateProductStream(const Presentation& p,
                                               const EnumeratorConfig& cfg)
    : max_factors_(cfg.max_factors), max_products_(cfg.max_products) {
  WordEnumerator conjugators(inverse_closed_alphabet(p), cfg.max_conjugator_length);
  while (auto w = conjugators.next()) {
    const Word inv = invert_word(*w);
    for (const Word& r : p.relators) {
      singles_.push_back(free_reduce(*w + r + inv));
      singles_.push_back(free_reduce(*w + invert_word(r) + inv));
    }
  }
}

std::optional<Word> ConjugateProductStream::next() {
  if (singles_.empty() || produced_ >= max_products_) return std::nullopt;
  if (!started_) {
    started_ = true;
    odometer_.assign(1, 0);
    if (max_factors_ == 0) return std::nullopt;
  } else {
    // Advance the rightmost digit; on overflow grow the factor count.
    std::size_t i = odometer_.size();
    while (i > 0 && odometer_[i - 1] + 1 == singles_.size()) {
      odometer_[i - 1] = 0;
      --i;
    }
    if (i > 0) {
      ++odometer_[i - 1];
    } else {
      if (odometer_.size() == max_factors_) return std::nullopt;
      odometer_.assign(odometer_.size() + 1, 0);
    }
  }
  Word product;
  for (std::size_t idx : odometer_) product = product + singles_[idx];
  ++produced_;
  return free_reduce(product);
}

namespace {

void spend(std::size_t& steps, const EnumeratorConfig& cfg, std::size_t position) {
  if (++steps > cfg.step_budget) {
    std::ostringstream os;
    os << "step budget " << cfg.step_budget << " exhausted at prefix position " << position;
    throw BudgetExhaustedError(os.str(), position);
  }
}

Word geodesic_from_delta_rec(const GrowsOracle& grows, const Presentation& p, const Word& w,
                             const EnumeratorConfig& cfg, std::size_t& steps) {
  Word v;  // geodesic representative of the processed prefix
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    const Letter x = w.letters[pos];
    spend(steps, cfg, pos);
    if (grows(v, x)) {
      v.push_back(x);
      continue;
    }
    // l(vx) <= |v|: some product of relator conjugates carries vx to a word
    // of length <= |v|.  Each product is tried on both sides of vx: the two
    // factorizations 1 = z(vx)^-1 and 1 = (vx)^-1 z need different products,
    // and one side often stays out of a small conjugator budget.
    const Word vx = v + x;
    ConjugateProductStream stream(p, cfg);
    std::optional<Word> z;
    while (auto product = stream.next()) {
      spend(steps, cfg, pos);
      Word candidate = free_reduce(*product + vx);
      if (candidate.size() <= v.size()) {
        z = std::move(candidate);
        break;
      }
      candidate = free_reduce(vx + *product);
      if (candidate.size() <= v.size()) {
        z = std::move(candidate);
        break;
      }
    }
    if (!z) {
      std::ostringstream os;
      os << "conjugate-product search exhausted at prefix position " << pos << " (searched "
         << cfg.max_products << " products, factors <= " << cfg.max_factors
         << ", conjugators <= " << cfg.max_conjugator_length << ")";
      throw BudgetExhaustedError(os.str(), pos);
    }
    if (z->size() + 1 == v.size()) {
      // l(vx) >= |v|-1, so a representative of that length is geodesic.
      v = std::move(*z);
    } else if (z->size() == v.size()) {
      // Same length as v: shorter than the prefix processed so far, recurse.
      v = geodesic_from_delta_rec(grows, p, *z, cfg, steps);
    } else {
      std::ostringstream os;
      os << "found a representative shorter than l(prefix)-1 at position " << pos
         << "; the grows oracle or the presentation is inconsistent";
      throw OracleInconsistencyError(os.str());
    }
  }
  return v;
}

}  // namespace

Word geodesic_from_delta(const GrowsOracle& grows, const Presentation& p, const Word& w,
                         const EnumeratorConfig& cfg) {
  std::size_t steps = 0;
  return geodesic_from_delta_rec(grows, p, w, cfg, steps);
}

}  // namespace geodesy
