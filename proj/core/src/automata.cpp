#include "geodesy/automata.hpp"

#include <sstream>

#include "geodesy/errors.hpp"

namespace geodesy {

namespace {
constexpr Dfa::State kUnset = static_cast<Dfa::State>(-1);
}

Dfa::Dfa(std::vector<Letter> alphabet, State num_states, State start)
    : alphabet_(std::move(alphabet)),
      transitions_(static_cast<std::size_t>(num_states) * alphabet_.size(), kUnset),
      accepting_(num_states, false),
      start_(start) {
  if (start_ >= num_states) throw InputError("dfa start state out of range");
  std::size_t max_code = 0;
  for (Letter x : alphabet_) {
    max_code = std::max<std::size_t>(max_code, 2u * x.gen + (x.sign < 0 ? 1 : 0));
  }
  code_to_index_.assign(max_code + 1, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    Letter x = alphabet_[i];
    code_to_index_[2u * x.gen + (x.sign < 0 ? 1 : 0)] = i;
  }
}

std::size_t Dfa::letter_index(Letter x) const {
  std::size_t code = 2u * x.gen + (x.sign < 0 ? 1 : 0);
  if (code >= code_to_index_.size() || code_to_index_[code] == static_cast<std::size_t>(-1)) {
    throw InputError("letter is not in the dfa alphabet");
  }
  return code_to_index_[code];
}

void Dfa::set_transition(State from, Letter x, State to) {
  transitions_[from * alphabet_.size() + letter_index(x)] = to;
}

void Dfa::set_accepting(State s, bool accepting) { accepting_[s] = accepting; }

void Dfa::set_dead_state(State s) { dead_ = s; }

Dfa::State Dfa::step(State s, Letter x) const {
  State t = transitions_[s * alphabet_.size() + letter_index(x)];
  if (t == kUnset) throw InputError("dfa transition table is not total");
  return t;
}

bool Dfa::run(const Word& w) const { return run_traced(w).accepted; }

Dfa::Trace Dfa::run_traced(const Word& w) const {
  State s = start_;
  std::size_t steps = 0;
  for (Letter x : w) {
    s = step(s, x);
    ++steps;
  }
  return Trace{s, accepting_[s], steps};
}

std::string Dfa::transition_table() const {
  std::ostringstream os;
  os << "# states: " << num_states() << "  start: " << start_ << "  alphabet:";
  for (Letter x : alphabet_) {
    char c = static_cast<char>((x.sign > 0 ? 'a' : 'A') + x.gen);
    os << ' ' << c;
  }
  os << '\n';
  for (std::size_t s = 0; s < num_states(); ++s) {
    os << s;
    if (accepting_[s]) os << '*';
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
      os << ' ' << transitions_[s * alphabet_.size() + i];
    }
    os << '\n';
  }
  return os.str();
}

Dfa free_geodesic_dfa(std::size_t k) {
  if (k == 0) throw InputError("free_geodesic_dfa requires k >= 1");
  Presentation p;
  for (std::size_t i = 0; i < k; ++i) p.generators.push_back(static_cast<char>('a' + i));
  auto alphabet = inverse_closed_alphabet(p);
  // 0 = start, 1 + i = "last letter was alphabet[i]", 2k + 1 = dead.
  const Dfa::State dead = static_cast<Dfa::State>(2 * k + 1);
  Dfa d(alphabet, dead + 1, 0);
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    d.set_transition(0, alphabet[i], static_cast<Dfa::State>(1 + i));
  }
  for (std::size_t last = 0; last < alphabet.size(); ++last) {
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      bool cancels = is_inverse_pair(alphabet[last], alphabet[i]);
      d.set_transition(static_cast<Dfa::State>(1 + last), alphabet[i],
                       cancels ? dead : static_cast<Dfa::State>(1 + i));
    }
  }
  for (Letter x : alphabet) d.set_transition(dead, x, dead);
  for (Dfa::State s = 0; s < dead; ++s) d.set_accepting(s);
  d.set_dead_state(dead);
  return d;
}

Dfa abelian_geodesic_dfa(std::size_t k) {
  if (k == 0) throw InputError("abelian_geodesic_dfa requires k >= 1");
  Presentation p;
  for (std::size_t i = 0; i < k; ++i) p.generators.push_back(static_cast<char>('a' + i));
  auto alphabet = inverse_closed_alphabet(p);

  // States 0 .. 3^k - 1 encode one base-3 digit per generator: 0 = no sign
  // seen yet, 1 = positive, 2 = negative.  3^k is the dead state.
  std::size_t pow3 = 1;
  for (std::size_t i = 0; i < k; ++i) pow3 *= 3;
  const Dfa::State dead = static_cast<Dfa::State>(pow3);
  Dfa d(alphabet, dead + 1, 0);

  std::vector<std::size_t> place(k, 1);
  for (std::size_t i = 1; i < k; ++i) place[i] = place[i - 1] * 3;

  for (std::size_t s = 0; s < pow3; ++s) {
    for (Letter x : alphabet) {
      std::size_t digit = (s / place[x.gen]) % 3;
      std::size_t want = x.sign > 0 ? 1 : 2;
      Dfa::State t;
      if (digit == 0) {
        t = static_cast<Dfa::State>(s + want * place[x.gen]);
      } else if (digit == want) {
        t = static_cast<Dfa::State>(s);
      } else {
        t = dead;
      }
      d.set_transition(static_cast<Dfa::State>(s), x, t);
    }
    d.set_accepting(static_cast<Dfa::State>(s));
  }
  for (Letter x : alphabet) d.set_transition(dead, x, dead);
  d.set_dead_state(dead);
  return d;
}

bool delta_from_dfa(const Dfa& d, const Word& u, Letter x) {
  Dfa::Trace t = d.run_traced(u);
  if (!t.accepted) {
    throw NotGeodesicError("delta_from_dfa requires a word the acceptor recognizes");
  }
  return d.accepting(d.step(t.state, x));
}

DfaValidationReport validate_dfa_against_ball(const Dfa& d, const Ball& b,
                                              std::size_t max_len) {
  if (d.alphabet() != b.alphabet()) {
    throw InputError("dfa and ball alphabets differ");
  }
  DfaValidationReport report;
  WordEnumerator words(b.alphabet(), max_len);
  while (auto w = words.next()) {
    bool dfa_accepts = d.run(*w);
    bool ball_geodesic = b.is_geodesic(*w);
    ++report.words_checked;
    if (dfa_accepts != ball_geodesic) {
      report.mismatches.push_back({*w, dfa_accepts, ball_geodesic});
    }
  }
  return report;
}

}  // namespace geodesy
