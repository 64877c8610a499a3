// Exact Cayley ball of a group model, built by breadth-first search from
// the identity.  Layer d holds exactly the elements at geodesic distance d,
// so the ball answers every geodesic query exactly -- the ground truth the
// rest of the library is validated against.

#pragma once

#include <cstddef>
#include <memory>
#include <unordered_map>
#include <vector>

#include "geodesy/models.hpp"
#include "geodesy/oracles.hpp"
#include "geodesy/word.hpp"

namespace geodesy {

class Ball {
 public:
  static constexpr std::size_t kDefaultCapacity = 10'000'000;

  struct Entry {
    unsigned dist = 0;
    ElementKey parent;  // one step closer to the identity; self for the identity
    Letter in;          // letter labelling the edge parent -> this

    bool operator==(const Entry&) const = default;
  };

  // BFS over the inverse-closed alphabet in canonical order (generators,
  // then inverses).  First discovery wins, so parents are deterministic.
  // Throws CapacityExceededError if the ball outgrows `capacity`.
  Ball(std::shared_ptr<const GroupModel> model, unsigned radius,
       std::size_t capacity = kDefaultCapacity);

  const GroupModel& model() const { return *model_; }
  std::shared_ptr<const GroupModel> model_ptr() const { return model_; }
  unsigned radius() const { return radius_; }
  const std::vector<Letter>& alphabet() const { return alphabet_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<std::size_t>& layer_sizes() const { return layer_sizes_; }
  const std::unordered_map<ElementKey, Entry>& entries() const { return entries_; }

  // l(w): geodesic distance of eval(w) from the identity.
  // Throws RadiusExceededError when eval(w) lies outside the ball.
  long length(const Word& w) const;

  // l(w) <= k; negative k is always false (without touching the ball).
  bool bounded(const Word& w, long k) const;

  // A geodesic representative of w, read off the BFS parent chain.
  Word geodesic(const Word& w) const;

  // l(ux) - l(u) for geodesic u.  Verifies that u is geodesic (throws
  // NotGeodesicError otherwise) and that the difference lands in
  // {-1, 0, +1} (anything else means the model's eval is not compatible
  // with a Cayley graph and raises OracleInconsistencyError).
  Delta delta(const Word& u, Letter x) const;

  // l(w) == |w|
  bool is_geodesic(const Word& w) const;

 private:
  const Entry& locate(const Word& w) const;

  std::shared_ptr<const GroupModel> model_;
  unsigned radius_;
  std::vector<Letter> alphabet_;
  std::vector<std::size_t> layer_sizes_;
  std::unordered_map<ElementKey, Entry> entries_;
};

// All five queries answered by one ball.  The suite borrows the ball;
// keep the ball alive while the suite is in use.
OracleSuite ball_oracles(const Ball& b);

}  // namespace geodesy
