#include "geodesy/models.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <sstream>

#include "geodesy/errors.hpp"

namespace geodesy {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// Keys for word-valued canonical forms: one byte per letter.
ElementKey serialize_word(const Word& w) {
  std::string bytes;
  bytes.reserve(w.size());
  for (Letter x : w) {
    bytes.push_back(static_cast<char>(2 * x.gen + (x.sign < 0 ? 1 : 0)));
  }
  return ElementKey{std::move(bytes)};
}

std::vector<char> default_generator_names(std::size_t k) {
  if (k == 0) throw InputError("a model needs at least one generator");
  if (k > 26) throw InputError("generator names are limited to a..z (rank <= 26)");
  std::vector<char> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(static_cast<char>('a' + i));
  return names;
}

class FreeModel final : public GroupModel {
 public:
  explicit FreeModel(std::size_t k) { p_.generators = default_generator_names(k); }

  const Presentation& presentation() const override { return p_; }
  ElementKey eval(const Word& w) const override { return serialize_word(free_reduce(w)); }
  ElementKey identity_key() const override { return ElementKey{}; }

 private:
  Presentation p_;
};

class AbelianModel final : public GroupModel {
 public:
  explicit AbelianModel(std::size_t k) : k_(k) {
    p_.generators = default_generator_names(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        Word r;
        r.push_back(Letter{static_cast<std::uint16_t>(i), +1});
        r.push_back(Letter{static_cast<std::uint16_t>(j), +1});
        r.push_back(Letter{static_cast<std::uint16_t>(i), -1});
        r.push_back(Letter{static_cast<std::uint16_t>(j), -1});
        p_.relators.push_back(std::move(r));
      }
    }
  }

  const Presentation& presentation() const override { return p_; }

  ElementKey eval(const Word& w) const override {
    std::vector<long long> sums(k_, 0);
    for (Letter x : w) {
      if (x.gen >= k_) throw InputError("letter out of range for abelian model");
      sums[x.gen] += x.sign;
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < k_; ++i) {
      if (i) os << ',';
      os << sums[i];
    }
    return ElementKey{os.str()};
  }

  ElementKey identity_key() const override { return eval(Word{}); }

 private:
  std::size_t k_;
  Presentation p_;
};

// Element of <a,t | t a t^-1 = a^n>: the pair (m / n^d, e) with the
// canonical constraint d == 0 or n does not divide m.  Folding a letter:
//   t^s: e += s
//   a^s: m/n^d += s * n^e, brought to the common denominator n^max(d,-e)
struct BsElement {
  BigInt m = 0;
  long long d = 0;  // denominator exponent, >= 0
  long long e = 0;  // t-exponent
};

class BsModel final : public GroupModel {
 public:
  explicit BsModel(long long n) : n_(n) {
    if (n == 0) throw InputError("bs model requires |n| >= 1");
    p_.generators = {'a', 't'};
    Word r;
    r.push_back(Letter{1, +1});   // t
    r.push_back(Letter{0, +1});   // a
    r.push_back(Letter{1, -1});   // t^-1
    long long count = n < 0 ? -n : n;
    std::int8_t sign = n < 0 ? +1 : -1;
    for (long long i = 0; i < count; ++i) r.push_back(Letter{0, sign});
    p_.relators.push_back(std::move(r));
  }

  const Presentation& presentation() const override { return p_; }

  ElementKey eval(const Word& w) const override {
    BsElement v;
    for (Letter x : w) {
      if (x.gen == 1) {
        v.e += x.sign;
        continue;
      }
      if (x.gen != 0) throw InputError("letter out of range for bs model");
      long long d2 = v.e < 0 ? -v.e : 0;
      long long common = std::max(v.d, d2);
      v.m = v.m * pow_n(common - v.d) + BigInt(x.sign) * pow_n(common + v.e);
      v.d = common;
      canonicalize(v);
    }
    std::ostringstream os;
    os << v.m << '/' << v.d << '/' << v.e;
    return ElementKey{os.str()};
  }

  ElementKey identity_key() const override { return ElementKey{"0/0/0"}; }

 private:
  BigInt pow_n(long long exp) const {
    BigInt r = 1;
    for (long long i = 0; i < exp; ++i) r *= n_;
    return r;
  }

  void canonicalize(BsElement& v) const {
    if (v.m == 0) {
      v.d = 0;
      return;
    }
    while (v.d > 0 && v.m % n_ == 0) {
      v.m /= n_;
      --v.d;
    }
  }

  long long n_;
  Presentation p_;
};

class RewritingModel final : public GroupModel {
 public:
  explicit RewritingModel(Presentation p) : p_(std::move(p)) {}

  const Presentation& presentation() const override { return p_; }

  ElementKey eval(const Word& w) const override {
    return serialize_word(rewrite_to_normal_form(p_, free_reduce(w)));
  }

  ElementKey identity_key() const override { return ElementKey{}; }

 private:
  Presentation p_;
};

// Construction-time smoke test: inserting a relator anywhere must not
// change the key.  Catches blatantly non-confluent rule systems; it cannot
// prove confluence.
void smoke_test_relators(const GroupModel& g) {
  const Presentation& p = g.presentation();
  auto alphabet = inverse_closed_alphabet(p);
  std::mt19937_64 rng(0x67656f6479ULL);
  auto random_word = [&] {
    Word w;
    std::size_t len = rng() % 9;  // 0..8
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back(alphabet[rng() % alphabet.size()]);
    }
    return w;
  };
  for (const Word& r : p.relators) {
    for (int trial = 0; trial < 200; ++trial) {
      Word u = random_word();
      Word v = random_word();
      if (!(g.eval(u + r + v) == g.eval(u + v))) {
        throw RelatorNotTrivialError(
            "relator insertion changed an element key; "
            "the rule system is not confluent for this presentation");
      }
    }
  }
}

}  // namespace

std::shared_ptr<const GroupModel> free_group_model(std::size_t k) {
  return std::make_shared<FreeModel>(k);
}

std::shared_ptr<const GroupModel> free_abelian_model(std::size_t k) {
  return std::make_shared<AbelianModel>(k);
}

std::shared_ptr<const GroupModel> bs_model(long long n) {
  return std::make_shared<BsModel>(n);
}

std::shared_ptr<const GroupModel> rewriting_model(Presentation p, bool assume_confluent) {
  if (!assume_confluent) {
    throw NotConfluentAssertedError(
        "rewriting_model requires an explicit confluence assertion");
  }
  validate_presentation(p);
  auto model = std::make_shared<RewritingModel>(std::move(p));
  for (const Word& r : model->presentation().relators) {
    if (!(model->eval(r) == model->identity_key())) {
      throw RelatorNotTrivialError("relator \"" +
                                   format_word(r, model->presentation()) +
                                   "\" does not rewrite to the empty word");
    }
  }
  smoke_test_relators(*model);
  return model;
}

bool equal(const GroupModel& g, const Word& u, const Word& v) {
  return g.eval(u) == g.eval(v);
}

std::shared_ptr<const GroupModel> model_from_selector(const std::string& selector) {
  auto colon = selector.find(':');
  if (colon == std::string::npos) {
    throw InputError("model selector \"" + selector +
                     "\" must look like free:k, abelian:k, bs:n or rewrite:file");
  }
  std::string kind = selector.substr(0, colon);
  std::string arg = selector.substr(colon + 1);
  auto parse_int = [&](const std::string& s) -> long long {
    try {
      std::size_t used = 0;
      long long v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw InputError("model selector argument \"" + s + "\" is not an integer");
    }
  };
  if (kind == "free" || kind == "abelian") {
    long long k = parse_int(arg);
    if (k < 1) throw InputError("rank must be >= 1 in \"" + selector + "\"");
    return kind == "free" ? free_group_model(static_cast<std::size_t>(k))
                          : free_abelian_model(static_cast<std::size_t>(k));
  }
  if (kind == "bs") {
    long long n = parse_int(arg);
    if (n == 0) throw InputError("bs:n requires |n| >= 1");
    return bs_model(n);
  }
  if (kind == "rewrite") {
    Presentation p = load_presentation_file(arg);
    if (p.rules.empty()) {
      throw InputError("rewrite model file \"" + arg + "\" contains no rules: line");
    }
    // Selecting a rules-bearing file is the user's confluence assertion.
    return rewriting_model(std::move(p), true);
  }
  throw InputError("unknown model kind \"" + kind + "\"");
}

}  // namespace geodesy
