// Pluggable word-problem solvers.  A GroupModel evaluates words to opaque
// canonical keys; two words represent the same group element exactly when
// their keys are equal (for rewriting models, conditional on the asserted
// confluence of the rule system).

#pragma once

#include <functional>
#include <memory>
#include <string>

#include "geodesy/presentation.hpp"
#include "geodesy/word.hpp"

namespace geodesy {

// Opaque serialized canonical form of a group element.  Only comparable
// within a single model.
struct ElementKey {
  std::string bytes;
  bool operator==(const ElementKey&) const = default;
  bool operator<(const ElementKey& o) const { return bytes < o.bytes; }
};

class GroupModel {
 public:
  virtual ~GroupModel() = default;
  virtual const Presentation& presentation() const = 0;
  virtual ElementKey eval(const Word& w) const = 0;
  virtual ElementKey identity_key() const = 0;
};

// Free group of rank k; keys are freely reduced words.
std::shared_ptr<const GroupModel> free_group_model(std::size_t k);

// Z^k with standard generators; keys are exponent-sum vectors.  The
// presentation carries all commutator relators [a_i, a_j], i < j.
std::shared_ptr<const GroupModel> free_abelian_model(std::size_t k);

// The solvable Baumslag-Solitar group <a,t | t a t^-1 = a^n>, |n| >= 1.
// Elements are pairs (m / n^d, e) in Z[1/n] x Z with arbitrary-precision m.
std::shared_ptr<const GroupModel> bs_model(long long n);

// Word problem via the presentation's strictly length-reducing rules.
// Requires an explicit confluence assertion from the caller; construction
// checks that every relator evaluates to the identity and smoke-tests
// relator insertion at random positions.
std::shared_ptr<const GroupModel> rewriting_model(Presentation p, bool assume_confluent);

// eval(u) == eval(v)
bool equal(const GroupModel& g, const Word& u, const Word& v);

// CLI model selector: "free:k", "abelian:k", "bs:n" or
// "rewrite:<presentation file>" (the file must carry rules; loading it this
// way is the confluence assertion).
std::shared_ptr<const GroupModel> model_from_selector(const std::string& selector);

}  // namespace geodesy

template <>
struct std::hash<geodesy::ElementKey> {
  std::size_t operator()(const geodesy::ElementKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes);
  }
};
