#include "geodesy/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>

#include "geodesy/errors.hpp"

namespace geodesy {

namespace {

bool is_generator_char(char c) { return c >= 'a' && c <= 'z'; }
bool is_inverse_char(char c) { return c >= 'A' && c <= 'Z'; }

std::size_t generator_index(const Presentation& p, char name) {
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (p.generators[i] == name) return i;
  }
  throw UnknownLetterError(name);
}

}  // namespace

std::vector<Letter> inverse_closed_alphabet(const Presentation& p) {
  std::vector<Letter> a;
  a.reserve(2 * p.rank());
  for (std::size_t i = 0; i < p.rank(); ++i) {
    a.push_back(Letter{static_cast<std::uint16_t>(i), +1});
  }
  for (std::size_t i = 0; i < p.rank(); ++i) {
    a.push_back(Letter{static_cast<std::uint16_t>(i), -1});
  }
  return a;
}

Word parse_word(std::string_view text, const Presentation& p) {
  Word w;
  w.letters.reserve(text.size());
  for (char c : text) {
    if (is_generator_char(c)) {
      w.push_back(Letter{static_cast<std::uint16_t>(generator_index(p, c)), +1});
    } else if (is_inverse_char(c)) {
      char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      std::size_t idx;
      try {
        idx = generator_index(p, lower);
      } catch (const UnknownLetterError&) {
        throw UnknownLetterError(c);
      }
      w.push_back(Letter{static_cast<std::uint16_t>(idx), -1});
    } else {
      throw UnknownLetterError(c);
    }
  }
  return w;
}

std::string format_word(const Word& w, const Presentation& p) {
  std::string s;
  s.reserve(w.size());
  for (Letter x : w) {
    if (x.gen >= p.rank()) throw InputError("letter index out of range for presentation");
    char c = p.generators[x.gen];
    if (x.sign < 0) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    s.push_back(c);
  }
  return s;
}

ParityClass relator_parity(const Presentation& p) {
  for (const Word& r : p.relators) {
    if (r.size() % 2 != 0) return ParityClass::SomeRelatorOdd;
  }
  return ParityClass::AllRelatorsEven;
}

Word rewrite_to_normal_form(const Presentation& p, Word w) {
  if (p.rules.empty()) return w;
  std::size_t max_lhs = 0;
  for (const RewriteRule& r : p.rules) max_lhs = std::max(max_lhs, r.lhs.size());

  auto matches_at = [&](const RewriteRule& r, std::size_t pos) {
    if (pos + r.lhs.size() > w.size()) return false;
    for (std::size_t j = 0; j < r.lhs.size(); ++j) {
      if (!(w.letters[pos + j] == r.lhs.letters[j])) return false;
    }
    return true;
  };

  for (std::size_t pos = 0; pos < w.size();) {
    const RewriteRule* hit = nullptr;
    for (const RewriteRule& r : p.rules) {
      if (matches_at(r, pos)) {
        hit = &r;
        break;
      }
    }
    if (hit == nullptr) {
      ++pos;
      continue;
    }
    auto it = w.letters.begin() + static_cast<std::ptrdiff_t>(pos);
    it = w.letters.erase(it, it + static_cast<std::ptrdiff_t>(hit->lhs.size()));
    w.letters.insert(it, hit->rhs.letters.begin(), hit->rhs.letters.end());
    // A new leftmost match can only start where it overlaps the rewritten
    // span; everything further left was already scanned unchanged.
    pos = pos >= max_lhs - 1 ? pos - (max_lhs - 1) : 0;
  }
  return w;
}

void validate_rules(const Presentation& p) {
  auto check_letters = [&](const Word& w, const char* side, std::size_t rule_no) {
    for (Letter x : w) {
      if (x.gen >= p.rank()) {
        std::ostringstream os;
        os << "rule " << rule_no << ": " << side << " references generator index "
           << x.gen << " but the presentation has only " << p.rank();
        throw RuleError(os.str());
      }
    }
  };
  for (std::size_t i = 0; i < p.rules.size(); ++i) {
    const RewriteRule& r = p.rules[i];
    check_letters(r.lhs, "left-hand side", i);
    check_letters(r.rhs, "right-hand side", i);
    if (r.rhs.size() >= r.lhs.size()) {
      std::ostringstream os;
      os << "rule " << i << " is not strictly length-reducing (|lhs|=" << r.lhs.size()
         << ", |rhs|=" << r.rhs.size() << ")";
      throw RuleError(os.str());
    }
  }
}

void validate_presentation(const Presentation& p) {
  for (char c : p.generators) {
    if (!is_generator_char(c)) {
      throw InputError(std::string("generator name '") + c +
                       "' is not a single lowercase letter");
    }
  }
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < p.generators.size(); ++j) {
      if (p.generators[i] == p.generators[j]) {
        throw InputError(std::string("duplicate generator name '") + p.generators[i] + "'");
      }
    }
  }
  for (const Word& r : p.relators) {
    for (Letter x : r) {
      if (x.gen >= p.rank()) throw InputError("relator letter out of range");
    }
  }
  validate_rules(p);
}

namespace {

std::string strip(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Presentation load_presentation(std::istream& in) {
  std::vector<std::string> gens_lines, rels_lines, rules_lines;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::string body = strip(line);
    if (body.empty()) continue;
    auto directive = [&](const char* key) -> std::optional<std::string> {
      std::string_view b(body);
      std::string_view k(key);
      if (b.substr(0, k.size()) == k) return strip(b.substr(k.size()));
      return std::nullopt;
    };
    if (auto rest = directive("gens:")) {
      gens_lines.push_back(*rest);
    } else if (auto rest = directive("rels:")) {
      rels_lines.push_back(*rest);
    } else if (auto rest = directive("rules:")) {
      rules_lines.push_back(*rest);
    } else {
      std::ostringstream os;
      os << "line " << line_no << ": expected gens:, rels: or rules:, got \"" << body << "\"";
      throw InputError(os.str());
    }
  }

  if (gens_lines.empty()) throw InputError("presentation file has no gens: line");
  if (gens_lines.size() > 1) throw InputError("presentation file has more than one gens: line");

  Presentation p;
  for (const std::string& tok : split_ws(gens_lines[0])) {
    if (tok.size() != 1) {
      throw InputError("generator name \"" + tok + "\" is not a single character");
    }
    p.generators.push_back(tok[0]);
  }

  for (const std::string& line_body : rels_lines) {
    for (const std::string& tok : split_ws(line_body)) {
      p.relators.push_back(parse_word(tok, p));
    }
  }

  for (const std::string& line_body : rules_lines) {
    std::string entry;
    std::istringstream is(line_body);
    while (std::getline(is, entry, ';')) {
      std::string body = strip(entry);
      if (body.empty()) continue;
      std::size_t arrow = body.find("->");
      if (arrow == std::string::npos) {
        throw InputError("rule \"" + body + "\" is missing \"->\"");
      }
      std::string lhs = strip(body.substr(0, arrow));
      std::string rhs = strip(body.substr(arrow + 2));
      if (lhs.empty()) throw RuleError("rule with empty left-hand side");
      p.rules.push_back(RewriteRule{parse_word(lhs, p), parse_word(rhs, p)});
    }
  }

  validate_presentation(p);
  return p;
}

Presentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open presentation file: " + path);
  return load_presentation(in);
}

}  // namespace geodesy
