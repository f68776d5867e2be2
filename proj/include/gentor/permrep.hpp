#ifndef GENTOR_PERMREP_HPP
#define GENTOR_PERMREP_HPP

#include "gentor/permutation.hpp"
#include "gentor/presentations.hpp"

#include <map>
#include <optional>
#include <vector>

namespace gentor {

/// Generator images in one symmetric group; all of the same point count.
struct PermAssignment {
  int points;
  std::map<int, Permutation> images;  // keyed by generator id

  const Permutation& image_of(int gen) const;
};

PermAssignment make_assignment(const Alphabet& alphabet,
                               const std::vector<Permutation>& images);

/// Image of the word under the induced homomorphism.
Permutation evaluate(const Word& w, const PermAssignment& assignment);

/// True iff every relator evaluates to the identity.
bool is_homomorphism(const Presentation& pres, const PermAssignment& assignment);

/// A verified non-triviality witness for a two-generator surgery presentation.
struct WitnessRecord {
  DoubleTwistParams params;
  int degree;  // points = degree + 1
  Permutation x_image;
  Permutation y_image;
  std::string candidate_label;
  Permutation candidate_image;
};

/// Relators of surgery_group_two_gen(params) all die and the candidate image
/// is non-trivial.
bool verify_witness(const WitnessRecord& rec);

/// Builds a record and throws std::invalid_argument unless it verifies.
WitnessRecord make_witness_record(const DoubleTwistParams& params, int degree,
                                  Permutation x_image, Permutation y_image,
                                  const CandidateElement& cand);

struct SearchOptions {
  int threads = 1;
  /// Paper constraint: x is sent to the full cycle [1,2,...,n,0]. Switching
  /// this off enumerates x images too (expensive; not part of acceptance).
  bool x_full_cycle = true;
};

/// Depth-first pruned search over y images (x fixed to the full cycle) for a
/// homomorphism of surgery_group_two_gen(params) into S_{degree+1} whose
/// candidate image is non-trivial. Returns the witness whose y image array is
/// lexicographically minimal, independent of the thread count.
std::optional<WitnessRecord> search_witness(const DoubleTwistParams& params,
                                            int degree,
                                            const CandidateElement& cand,
                                            const SearchOptions& options = {});

/// Same contract as search_witness, implemented by enumerating all
/// (degree+1)! candidate y arrays. Degree must be at most 9.
std::optional<WitnessRecord> search_exhaustive_oracle(
    const DoubleTwistParams& params, int degree, const CandidateElement& cand);

/// First witness per degree for degrees 1..max_degree (entries only for
/// degrees where one exists).
std::vector<WitnessRecord> search_range(const DoubleTwistParams& params,
                                        int max_degree,
                                        const CandidateElement& cand,
                                        const SearchOptions& options = {});

}  // namespace gentor

#endif  // GENTOR_PERMREP_HPP
