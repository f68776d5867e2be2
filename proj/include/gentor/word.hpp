#ifndef GENTOR_WORD_HPP
#define GENTOR_WORD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gentor {

using Int = boost::multiprecision::cpp_int;

/// A named generator of a free group alphabet.
struct Generator {
  int id;
  std::string name;

  bool operator==(const Generator&) const = default;
};

/// Immutable, shared list of generators. Two alphabets are equal when their
/// generator lists are equal (value equality, not identity).
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  int size() const { return static_cast<int>(gens_->size()); }
  const Generator& generator(int id) const;
  std::optional<int> find(std::string_view name) const;
  const std::vector<Generator>& generators() const { return *gens_; }

  bool operator==(const Alphabet& other) const;
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

 private:
  std::shared_ptr<const std::vector<Generator>> gens_ =
      std::make_shared<std::vector<Generator>>();
};

/// One maximal run of a single generator, exponent never zero.
struct Syllable {
  int gen;
  Int exp;

  bool operator==(const Syllable&) const = default;
};

/// Freely reduced word stored run-length: adjacent syllables always use
/// distinct generators and the empty list is the identity. Values are
/// immutable; copies are cheap enough to pass around freely.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  /// Reduces the given syllables (merging runs, dropping zero exponents).
  static Word from_syllables(Alphabet alphabet, std::vector<Syllable> sylls);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Syllable>& syllables() const { return sylls_; }
  bool is_identity() const { return sylls_.empty(); }
  std::size_t syllable_count() const { return sylls_.size(); }
  /// Total letter count, i.e. sum of |exponent| over syllables.
  Int letter_length() const;

  bool operator==(const Word& other) const;
  bool operator!=(const Word& other) const { return !(*this == other); }

 private:
  Alphabet alphabet_;
  std::vector<Syllable> sylls_;
};

/// Freely reduced product u·v. Throws std::invalid_argument on alphabet
/// mismatch.
Word concat(const Word& u, const Word& v);

/// w^{-1}: reversed syllables with negated exponents.
Word invert(const Word& w);

/// w^k for any integer k, freely reduced. Guarded against materializing
/// astronomically long words (throws std::length_error); conjugated powers
/// like (u g^e u^{-1})^k telescope and stay short for any k.
Word power(const Word& w, const Int& k);

/// h^{-1} g h.
Word conjugate(const Word& g, const Word& h);

/// g^{-1} h^{-1} g h.
Word commutator(const Word& g, const Word& h);

/// A generator-to-word substitution between two alphabets.
struct GeneratorMap {
  Alphabet source;
  Alphabet target;
  std::map<int, Word> images;  // keyed by source generator id
};

/// Homomorphic image of w under the map; every generator occurring in w must
/// have an image (throws std::invalid_argument otherwise).
Word substitute(const Word& w, const GeneratorMap& map);

/// Exponent sum of one generator across the word.
Int exponent_sum(const Word& w, int gen);

/// Text form "x y^-2 x^3"; the identity prints as "1".
std::string to_text(const Word& w);

/// Parses the text form back; also accepts commutator brackets "[u,v]" for
/// convenience on the command line. Round-trips to_text exactly.
Word parse_word(const Alphabet& alphabet, std::string_view text);

}  // namespace gentor

#endif  // GENTOR_WORD_HPP
