// The five geodesic query interfaces and their call accounting.
//
//   delta    : geodesic u, letter x  -> l(ux) - l(u) in {-1, 0, +1}
//   grows    : geodesic u, letter x  -> l(ux) > l(u) ?
//   geodesic : word w                -> a geodesic representative of w
//   length   : word w                -> l(w)
//   bounded  : word w, integer k     -> l(w) <= k ?
//
// Consistency ties them together: bounded(w,k) == (length(w) <= k),
// |geodesic(w)| == length(w), grows(u,x) == (delta(u,x) == +1).

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "geodesy/word.hpp"

namespace geodesy {

enum class Delta : int { Down = -1, Flat = 0, Up = +1 };

inline int to_int(Delta d) { return static_cast<int>(d); }

// Per-query invocation counters plus a gauge for the longest word handed to
// any oracle.  Counters are exact in single-threaded runs; an instance is
// owned by one reduction invocation and is not thread-safe.
struct CallStats {
  std::uint64_t delta_calls = 0;
  std::uint64_t grows_calls = 0;
  std::uint64_t geodesic_calls = 0;
  std::uint64_t length_calls = 0;
  std::uint64_t bounded_calls = 0;
  std::size_t max_word_len = 0;

  void note_word(std::size_t n) { max_word_len = std::max(max_word_len, n); }
};

using DeltaOracle = std::function<Delta(const Word&, Letter)>;
using GrowsOracle = std::function<bool(const Word&, Letter)>;
using GeodesicOracle = std::function<Word(const Word&)>;
using LengthOracle = std::function<long(const Word&)>;
using BoundedOracle = std::function<bool(const Word&, long)>;

struct OracleSuite {
  DeltaOracle delta;
  GrowsOracle grows;
  GeodesicOracle geodesic;
  LengthOracle length;
  BoundedOracle bounded;
};

}  // namespace geodesy
