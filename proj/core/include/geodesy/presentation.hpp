// Group presentations: a finite generating set, relator words, and optional
// strictly length-reducing rewrite rules.  Also the text syntax for words
// (lowercase generator, matching uppercase inverse) and the presentation
// file format.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "geodesy/word.hpp"

namespace geodesy {

struct RewriteRule {
  Word lhs;
  Word rhs;  // may be empty; |rhs| < |lhs| always
};

struct Presentation {
  std::vector<char> generators;  // distinct single lowercase characters
  std::vector<Word> relators;
  std::vector<RewriteRule> rules;

  std::size_t rank() const { return generators.size(); }
};

// The letters a, b, ..., A, B, ...: generators in presentation order
// followed by their inverses in the same order.
std::vector<Letter> inverse_closed_alphabet(const Presentation& p);

// Text -> word.  Lowercase characters name generators, the corresponding
// uppercase characters their inverses; "" is the empty word.
// Throws UnknownLetterError for any other character.
Word parse_word(std::string_view text, const Presentation& p);

// Word -> text.  Inverse of parse_word; the empty word formats as "".
std::string format_word(const Word& w, const Presentation& p);

enum class ParityClass { AllRelatorsEven, SomeRelatorOdd };

// AllRelatorsEven iff every relator has even length (vacuously when there
// are none).  Downstream checks use this to assert that appending a letter
// never leaves geodesic length unchanged.
ParityClass relator_parity(const Presentation& p);

// Applies leftmost rule matches (first rule in declaration order wins at
// equal position) until no rule matches.  Terminates because every rule is
// strictly length-reducing.  Does not freely reduce.
Word rewrite_to_normal_form(const Presentation& p, Word w);

// Throws RuleError unless every rule is strictly length-reducing and
// references only listed generators.
void validate_rules(const Presentation& p);

// Checks all structural invariants: distinct single lowercase generator
// names, relator letters in range, and validate_rules.
void validate_presentation(const Presentation& p);

// Presentation file format: UTF-8 text, one directive per line, '#' starts
// a comment.
//
//   gens: a b
//   rels: abAB
//   rules: aa -> A ; aA -> ; Aa ->
//
// An empty right-hand side denotes the empty word.  `rels:` and `rules:`
// lines may repeat; `gens:` must occur exactly once.
Presentation load_presentation(std::istream& in);
Presentation load_presentation_file(const std::string& path);

}  // namespace geodesy
