// Deterministic finite automata over the signed letter alphabet, geodesic
// language acceptors for free and free abelian groups, and the linear-time
// answer to the grows query they provide: when the acceptor recognizes
// exactly the geodesics, ux is accepted iff l(ux) > l(u).

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geodesy/ball.hpp"
#include "geodesy/word.hpp"

namespace geodesy {

class Dfa {
 public:
  using State = std::uint32_t;

  // States start out with no transitions; set_transition must make the
  // table total before the automaton is run (checked lazily).
  Dfa(std::vector<Letter> alphabet, State num_states, State start);

  void set_transition(State from, Letter x, State to);
  void set_accepting(State s, bool accepting = true);
  void set_dead_state(State s);

  std::size_t num_states() const { return accepting_.size(); }
  State start() const { return start_; }
  const std::vector<Letter>& alphabet() const { return alphabet_; }
  std::optional<State> dead_state() const { return dead_; }
  bool accepting(State s) const { return accepting_[s]; }

  State step(State s, Letter x) const;
  bool run(const Word& w) const;

  struct Trace {
    State state;
    bool accepted;
    std::size_t steps;  // transition lookups, always |w|
  };
  Trace run_traced(const Word& w) const;

  // One line per state: id (with '*' when accepting), then the successor
  // per alphabet letter.  Letters are named a..z / A..Z by index.
  std::string transition_table() const;

 private:
  std::size_t letter_index(Letter x) const;

  std::vector<Letter> alphabet_;
  std::vector<std::size_t> code_to_index_;
  std::vector<State> transitions_;
  std::vector<bool> accepting_;
  State start_;
  std::optional<State> dead_;
};

// Accepts exactly the freely reduced words: the geodesics of the free
// group of rank k.  2k + 2 states: start, one per last letter, dead.
Dfa free_geodesic_dfa(std::size_t k);

// Accepts exactly the words where no generator occurs with both signs: the
// geodesics of Z^k with standard generators.  3^k + 1 states tracking the
// sign seen per coordinate.
Dfa abelian_geodesic_dfa(std::size_t k);

// The grows query via an exact geodesic acceptor: u must be accepted
// (throws NotGeodesicError otherwise), and the answer is whether ux is.
// Costs |u| transitions plus one.
bool delta_from_dfa(const Dfa& d, const Word& u, Letter x);

// Exhaustive desk-scale comparison of the acceptor against ground truth:
// every word of length <= max_len is run through both.  Mismatches are
// data, not errors.
struct DfaValidationReport {
  struct Mismatch {
    Word word;
    bool dfa_accepts;
    bool ball_geodesic;
  };
  std::size_t words_checked = 0;
  std::vector<Mismatch> mismatches;
};

DfaValidationReport validate_dfa_against_ball(const Dfa& d, const Ball& b,
                                              std::size_t max_len);

}  // namespace geodesy
