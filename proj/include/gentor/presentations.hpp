#ifndef GENTOR_PRESENTATIONS_HPP
#define GENTOR_PRESENTATIONS_HPP

#include "gentor/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gentor {

/// The (p, q) parameters of a double twist knot; both non-zero.
struct DoubleTwistParams {
  long long p;
  long long q;

  bool operator==(const DoubleTwistParams&) const = default;
};

DoubleTwistParams make_params(long long p, long long q);  // validates

/// Finite presentation plus a label recording which family it came from.
struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;
  std::string label;
  std::optional<DoubleTwistParams> params;
};

/// Presentation family labels used across the artifact.
namespace basis {
inline constexpr const char* kLin = "lin";
inline constexpr const char* kStd = "std";
inline constexpr const char* kTwoGen = "two_gen";
inline constexpr const char* kAbt = "abt";
inline constexpr const char* kComplement = "complement";
inline constexpr const char* kHWindow = "h_window";
}  // namespace basis

/// Shared alphabets of the families ({a,b,t}, {x,y}, {A,B,T}).
Alphabet abt_lower_alphabet();
Alphabet xy_alphabet();
Alphabet abt_upper_alphabet();

/// Knot group of the twist-knot complement on generators {a,b,t}:
/// t a^p t^-1 = b^-1 a^p and t b^-q a^-1 t^-1 = b^-q.
Presentation knot_group_lin(const DoubleTwistParams& params);

/// Fundamental group of the 0-surgered manifold: the two relators above plus
/// the longitude relator [b^q, a^p].
Presentation surgery_group_std(const DoubleTwistParams& params);

/// Two-generator presentation of the knot group: single relator
/// x L^p y L^-p with L = (yx)^q (xy)^-q.
Presentation knot_group_two_gen(const DoubleTwistParams& params);

/// Two-generator presentation of the surgered group: relators
/// x L^p y L^-p and L'^p L^p with L' = (yx)^-q (xy)^q.
Presentation surgery_group_two_gen(const DoubleTwistParams& params);

/// {A,B,T} presentation of the surgered group: T A^q T^-1 = B^-1 A^q,
/// T B^-p A^-1 T^-1 = B^-p, [B^p, A^q] = 1. Structurally surgery_group_std
/// with p and q swapped.
Presentation surgery_group_ABT(const DoubleTwistParams& params);

/// Complement of the capped Seifert surface: <a, b | [b^q, a^p]>.
Presentation complement_group(const DoubleTwistParams& params);

/// Finite window of the shift presentation on {tau, x_-N..x_N}: commutators
/// [x_i, x_j], characteristic relators x_{i+1}^{pq} x_i^{-(2pq+1)} x_{i-1}^{pq},
/// and shifts tau x_i tau^-1 x_{i+1}^-1, all with indices inside the window.
Presentation h_presentation_window(const DoubleTwistParams& params, int window);

/// The subword L = (yx)^q (xy)^-q over {x,y}.
Word loop_word(const DoubleTwistParams& params);
/// The subword L' = (yx)^-q (xy)^q over {x,y}.
Word loop_word_inverse_twist(const DoubleTwistParams& params);

/// Meridian of the knot in the two-generator basis (y^-1).
Word meridian_two_gen();

/// Generator-change substitution between presentation families. Supported
/// pairs: std<->two_gen, std<->abt, lin->two_gen. Throws on anything else.
GeneratorMap generator_change(const std::string& from, const std::string& to,
                              const DoubleTwistParams& params);

/// A candidate element for the non-triviality search.
struct CandidateElement {
  Word word;
  std::string label;
};

/// Candidate labels: "[xy,yx]" (two_gen basis), "[b,t^{-n}bt^n]" (std),
/// "[B,T^{-n}BT^n]" (abt), "a", "b", "[b^{-1},a]" (std). The n argument is
/// only read by the two shifted-commutator labels.
CandidateElement candidate(const std::string& label, long long n,
                           const std::string& basis);

}  // namespace gentor

#endif  // GENTOR_PRESENTATIONS_HPP
