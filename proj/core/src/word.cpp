#include "geodesy/word.hpp"

#include "geodesy/errors.hpp"

namespace geodesy {

Word free_reduce(const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && is_inverse_pair(out.letters.back(), x)) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(x);
    }
  }
  return out;
}

Word invert_word(const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(it->inverse());
  }
  return out;
}

WordEnumerator::WordEnumerator(std::vector<Letter> alphabet, std::size_t max_len)
    : alphabet_(std::move(alphabet)), max_len_(max_len) {
  if (alphabet_.empty() && max_len_ > 0) {
    // Only the empty word exists over an empty alphabet.
    max_len_ = 0;
  }
}

std::optional<Word> WordEnumerator::next() {
  if (done_) return std::nullopt;
  if (!emitted_empty_) {
    emitted_empty_ = true;
    if (max_len_ == 0) done_ = true;
    return Word{};
  }
  // Advance the current length-|digits_| odometer; carry grows the length.
  std::size_t i = digits_.size();
  while (i > 0 && digits_[i - 1] + 1 == alphabet_.size()) {
    digits_[i - 1] = 0;
    --i;
  }
  if (i > 0) {
    ++digits_[i - 1];
  } else {
    if (digits_.size() == max_len_) {
      done_ = true;
      return std::nullopt;
    }
    digits_.assign(digits_.size() + 1, 0);
  }
  Word w;
  w.letters.reserve(digits_.size());
  for (std::size_t d : digits_) w.push_back(alphabet_[d]);
  return w;
}

}  // namespace geodesy
