// Letters and words over a signed generator alphabet, free reduction,
// inversion, and exhaustive word enumeration.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace geodesy {

// One signed generator letter.  `gen` indexes the generator list of the
// presentation the word lives over; `sign` is +1 for the generator itself
// and -1 for its inverse.
struct Letter {
  std::uint16_t gen = 0;
  std::int8_t sign = +1;

  Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
  bool operator==(const Letter&) const = default;
};

inline bool is_inverse_pair(Letter a, Letter b) {
  return a.gen == b.gen && a.sign == -b.sign;
}

// A finite sequence of letters.  The empty word is the identity.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  void push_back(Letter x) { letters.push_back(x); }

  auto begin() const { return letters.begin(); }
  auto end() const { return letters.end(); }

  bool operator==(const Word&) const = default;
};

inline Word operator+(const Word& u, const Word& v) {
  Word w = u;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

inline Word operator+(const Word& u, Letter x) {
  Word w = u;
  w.push_back(x);
  return w;
}

// The unique freely reduced word obtained by deleting adjacent
// letter/inverse pairs.  Single left-to-right stack pass.
Word free_reduce(const Word& w);

// Letters reversed with each sign flipped; the formal inverse.
Word invert_word(const Word& w);

// Yields every word over `alphabet` of length <= max_len, ordered by length
// and then lexicographically by alphabet position.  Deterministic.
class WordEnumerator {
 public:
  WordEnumerator(std::vector<Letter> alphabet, std::size_t max_len);

  // nullopt once the enumeration is exhausted.
  std::optional<Word> next();

 private:
  std::vector<Letter> alphabet_;
  std::size_t max_len_;
  std::vector<std::size_t> digits_;  // indices into alphabet_
  bool emitted_empty_ = false;
  bool done_ = false;
};

}  // namespace geodesy
