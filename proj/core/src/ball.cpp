#include "geodesy/ball.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "geodesy/errors.hpp"

namespace geodesy {

Ball::Ball(std::shared_ptr<const GroupModel> model, unsigned radius, std::size_t capacity)
    : model_(std::move(model)),
      radius_(radius),
      alphabet_(inverse_closed_alphabet(model_->presentation())) {
  ElementKey id = model_->identity_key();
  entries_.emplace(id, Entry{0, id, Letter{}});
  layer_sizes_.assign(1, 1);

  std::deque<std::pair<Word, ElementKey>> frontier;
  frontier.emplace_back(Word{}, id);
  for (unsigned d = 0; d < radius_ && !frontier.empty(); ++d) {
    std::deque<std::pair<Word, ElementKey>> next;
    for (const auto& [word, key] : frontier) {
      for (Letter x : alphabet_) {
        Word extended = word + x;
        ElementKey ek = model_->eval(extended);
        auto [it, inserted] = entries_.emplace(ek, Entry{d + 1, key, x});
        if (!inserted) continue;
        if (entries_.size() > capacity) {
          std::ostringstream os;
          os << "ball capacity " << capacity << " exceeded at radius " << (d + 1);
          throw CapacityExceededError(os.str());
        }
        next.emplace_back(std::move(extended), std::move(ek));
      }
    }
    if (!next.empty()) layer_sizes_.push_back(next.size());
    frontier = std::move(next);
  }
}

const Ball::Entry& Ball::locate(const Word& w) const {
  ElementKey k = model_->eval(w);
  auto it = entries_.find(k);
  if (it == entries_.end()) {
    std::ostringstream os;
    os << "element of a word of length " << w.size() << " lies outside the ball of radius "
       << radius_ << "; enlarge the radius";
    throw RadiusExceededError(os.str());
  }
  return it->second;
}

long Ball::length(const Word& w) const { return static_cast<long>(locate(w).dist); }

bool Ball::bounded(const Word& w, long k) const {
  if (k < 0) return false;
  return length(w) <= k;
}

Word Ball::geodesic(const Word& w) const {
  const Entry* e = &locate(w);
  Word path;  // letters from the element back to the identity
  while (e->dist > 0) {
    path.push_back(e->in);
    e = &entries_.at(e->parent);
  }
  std::reverse(path.letters.begin(), path.letters.end());
  return path;
}

Delta Ball::delta(const Word& u, Letter x) const {
  long lu = length(u);
  if (lu != static_cast<long>(u.size())) {
    throw NotGeodesicError("delta requires a geodesic input word");
  }
  long lux = length(u + x);
  long diff = lux - lu;
  if (diff < -1 || diff > 1) {
    std::ostringstream os;
    os << "appending one letter changed geodesic length by " << diff
       << "; the model's eval is not compatible with a Cayley graph";
    throw OracleInconsistencyError(os.str());
  }
  return static_cast<Delta>(diff);
}

bool Ball::is_geodesic(const Word& w) const {
  return length(w) == static_cast<long>(w.size());
}

OracleSuite ball_oracles(const Ball& b) {
  OracleSuite s;
  s.delta = [&b](const Word& u, Letter x) { return b.delta(u, x); };
  s.grows = [&b](const Word& u, Letter x) { return b.delta(u, x) == Delta::Up; };
  s.geodesic = [&b](const Word& w) { return b.geodesic(w); };
  s.length = [&b](const Word& w) { return b.length(w); };
  s.bounded = [&b](const Word& w, long k) { return b.bounded(w, k); };
  return s;
}

}  // namespace geodesy
