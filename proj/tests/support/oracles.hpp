#ifndef GENTOR_TESTS_ORACLES_HPP
#define GENTOR_TESTS_ORACLES_HPP

#include "gentor/permrep.hpp"
#include "gentor/presentations.hpp"
#include "gentor/word.hpp"

#include <random>
#include <vector>

namespace gentor::testing {

/// Letter-by-letter free reduction, independent of the run-length Word
/// implementation. Letters are (generator id, +1/-1).
using Letter = std::pair<int, int>;

std::vector<Letter> to_letters(const Word& w);
std::vector<Letter> naive_reduce(const std::vector<Letter>& letters);

/// True iff the words are freely equal according to the naive reducer.
bool naive_equal(const Word& u, const Word& v);

/// Random reduced word with at most max_syllables syllables, exponents in
/// [-max_exp, max_exp] \ {0}.
Word random_word(const Alphabet& alphabet, std::mt19937_64& rng,
                 int max_syllables = 4, int max_exp = 2);

/// Smith normal form diagonal of an integer matrix (rows = relators,
/// columns = generators); used as the abelianization oracle.
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m);

/// Exponent-sum matrix of a presentation (relators x generators).
std::vector<std::vector<long long>> relator_matrix(const Presentation& pres);

/// Exhaustive model search for small presentations: every assignment of the
/// generators to S_{points} permutations (first generator optionally pinned
/// to the full cycle) satisfying all relators. Degrees beyond 4 points get
/// expensive quickly.
std::vector<PermAssignment> enumerate_models(const Presentation& pres,
                                             int points, int limit,
                                             bool pin_first_to_cycle = false);

}  // namespace gentor::testing

#endif  // GENTOR_TESTS_ORACLES_HPP
