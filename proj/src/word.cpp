#include "gentor/word.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace gentor {

namespace {

// Result size guard for power(): repeating a non-collapsing core this many
// syllables is almost certainly a caller bug.
constexpr std::size_t kMaxPowerSyllables = 10'000'000;

void append_reduced(std::vector<Syllable>& out, const Syllable& s) {
  if (s.exp == 0) return;
  if (!out.empty() && out.back().gen == s.gen) {
    out.back().exp += s.exp;
    if (out.back().exp == 0) out.pop_back();
  } else {
    out.push_back(s);
  }
}

void require_same_alphabet(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet())
    throw std::invalid_argument("word operation across distinct alphabets");
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) {
  auto gens = std::make_shared<std::vector<Generator>>();
  gens->reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty())
      throw std::invalid_argument("generator name must be non-empty");
    if (names[i] == "1")
      throw std::invalid_argument("generator name \"1\" is reserved");
    for (const auto& g : *gens)
      if (g.name == names[i])
        throw std::invalid_argument("duplicate generator name: " + names[i]);
    gens->push_back(Generator{static_cast<int>(i), std::move(names[i])});
  }
  gens_ = std::move(gens);
}

const Generator& Alphabet::generator(int id) const {
  if (id < 0 || id >= size())
    throw std::out_of_range("generator id out of range");
  return (*gens_)[static_cast<std::size_t>(id)];
}

std::optional<int> Alphabet::find(std::string_view name) const {
  for (const auto& g : *gens_)
    if (g.name == name) return g.id;
  return std::nullopt;
}

bool Alphabet::operator==(const Alphabet& other) const {
  return gens_ == other.gens_ || *gens_ == *other.gens_;
}

Word Word::from_syllables(Alphabet alphabet, std::vector<Syllable> sylls) {
  Word w(std::move(alphabet));
  for (const auto& s : sylls) {
    if (s.gen < 0 || s.gen >= w.alphabet_.size())
      throw std::invalid_argument("syllable generator not in alphabet");
    append_reduced(w.sylls_, s);
  }
  return w;
}

Int Word::letter_length() const {
  Int n = 0;
  for (const auto& s : sylls_) n += abs(s.exp);
  return n;
}

bool Word::operator==(const Word& other) const {
  return alphabet_ == other.alphabet_ && sylls_ == other.sylls_;
}

Word concat(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  Word out(u.alphabet());
  std::vector<Syllable> sylls = u.syllables();
  // Reduction can only propagate backwards from the seam, so appending with
  // the merge rule is enough.
  for (const auto& s : v.syllables()) append_reduced(sylls, s);
  return Word::from_syllables(u.alphabet(), std::move(sylls));
}

Word invert(const Word& w) {
  std::vector<Syllable> sylls;
  sylls.reserve(w.syllable_count());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it)
    sylls.push_back(Syllable{it->gen, -it->exp});
  return Word::from_syllables(w.alphabet(), std::move(sylls));
}

Word power(const Word& w, const Int& k) {
  if (k == 0 || w.is_identity()) return Word(w.alphabet());
  if (k < 0) return power(invert(w), -k);
  if (k == 1) return w;
  if (w.syllable_count() == 1) {
    const auto& s = w.syllables().front();
    return Word::from_syllables(w.alphabet(), {Syllable{s.gen, s.exp * k}});
  }

  // Peel the maximal conjugating shell: w = u · core · u^{-1}. A power of a
  // single-syllable core stays three syllables long no matter how big k is.
  std::vector<Syllable> s = w.syllables();
  std::vector<Syllable> shell;
  std::size_t lo = 0, hi = s.size();
  while (hi - lo >= 2) {
    Syllable& f = s[lo];
    Syllable& l = s[hi - 1];
    if (f.gen != l.gen || (f.exp > 0) == (l.exp > 0)) break;
    if (f.exp == -l.exp) {
      shell.push_back(f);
      ++lo;
      --hi;
    } else if (abs(f.exp) < abs(l.exp)) {
      shell.push_back(f);
      l.exp += f.exp;
      ++lo;
    } else {
      shell.push_back(Syllable{f.gen, -l.exp});
      f.exp += l.exp;
      --hi;
    }
  }
  Word core = Word::from_syllables(
      w.alphabet(), std::vector<Syllable>(s.begin() + static_cast<long>(lo),
                                          s.begin() + static_cast<long>(hi)));
  Word u = Word::from_syllables(w.alphabet(), shell);

  Word core_pow(w.alphabet());
  if (core.syllable_count() <= 1) {
    core_pow = power(core, k);
  } else {
    Int est = k * core.letter_length();
    if (est > kMaxPowerSyllables)
      throw std::length_error("power: result would have " + est.str() +
                              " letters");
    // Square-and-multiply over free concatenation.
    Word base = core;
    Int e = k;
    while (e > 0) {
      if ((e & 1) != 0) core_pow = concat(core_pow, base);
      e >>= 1;
      if (e > 0) base = concat(base, base);
    }
  }
  return concat(concat(u, core_pow), invert(u));
}

Word conjugate(const Word& g, const Word& h) {
  return concat(concat(invert(h), g), h);
}

Word commutator(const Word& g, const Word& h) {
  return concat(concat(invert(g), invert(h)), concat(g, h));
}

Word substitute(const Word& w, const GeneratorMap& map) {
  if (w.alphabet() != map.source)
    throw std::invalid_argument("substitute: word not over the source alphabet");
  Word out(map.target);
  for (const auto& s : w.syllables()) {
    auto it = map.images.find(s.gen);
    if (it == map.images.end())
      throw std::invalid_argument("substitute: no image for generator " +
                                  w.alphabet().generator(s.gen).name);
    if (it->second.alphabet() != map.target)
      throw std::invalid_argument("substitute: image not over target alphabet");
    out = concat(out, power(it->second, s.exp));
  }
  return out;
}

Int exponent_sum(const Word& w, int gen) {
  Int sum = 0;
  for (const auto& s : w.syllables())
    if (s.gen == gen) sum += s.exp;
  return sum;
}

std::string to_text(const Word& w) {
  if (w.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) os << ' ';
    first = false;
    os << w.alphabet().generator(s.gen).name;
    if (s.exp != 1) os << '^' << s.exp.str();
  }
  return os.str();
}

namespace {

struct Parser {
  const Alphabet& alphabet;
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() { return text[pos]; }

  // Maximal-munch generator lookup, so "xy" reads as x·y while "x_-1" and
  // "tau" still match whole. Returns -1 with pos untouched when nothing fits.
  int lex_generator() {
    int best = -1;
    std::size_t best_len = 0;
    for (const auto& g : alphabet.generators()) {
      if (g.name.size() > best_len &&
          text.substr(pos, g.name.size()) == g.name) {
        best = g.id;
        best_len = g.name.size();
      }
    }
    if (best >= 0) pos += best_len;
    return best;
  }

  Int lex_exponent() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos - start == 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw std::invalid_argument("word parse: expected exponent at offset " +
                                  std::to_string(start));
    return Int(std::string(text.substr(start, pos - start)));
  }

  Int maybe_caret_exponent() {
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      return lex_exponent();
    }
    return 1;
  }

  Word parse_sequence(char stop) {
    Word w(alphabet);
    while (!at_end() && peek() != stop && peek() != ',') {
      if (peek() == '[') {
        ++pos;
        Word u = parse_sequence(']');
        skip_ws();
        if (at_end() || peek() != ',')
          throw std::invalid_argument("word parse: expected ',' inside [ , ]");
        ++pos;
        Word v = parse_sequence(']');
        skip_ws();
        if (at_end() || peek() != ']')
          throw std::invalid_argument("word parse: unterminated commutator");
        ++pos;
        Word c = commutator(u, v);
        w = concat(w, power(c, maybe_caret_exponent()));
        continue;
      }
      int id = lex_generator();
      if (id < 0) {
        if (peek() == '1') {  // identity token
          ++pos;
          continue;
        }
        throw std::invalid_argument("word parse: unknown generator at \"" +
                                    std::string(text.substr(pos)) + "\"");
      }
      w = concat(w, power(Word::from_syllables(alphabet, {Syllable{id, 1}}),
                          maybe_caret_exponent()));
    }
    return w;
  }
};

}  // namespace

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Parser p{alphabet, text};
  Word w = p.parse_sequence('\0');
  if (!p.at_end())
    throw std::invalid_argument("word parse: trailing characters at offset " +
                                std::to_string(p.pos));
  return w;
}

}  // namespace gentor
