#ifndef GENTOR_CLASSIFY_HPP
#define GENTOR_CLASSIFY_HPP

#include "gentor/presentations.hpp"

#include <array>
#include <vector>

namespace gentor {

/// Degree-two Alexander polynomial (-pq, 2pq+1, -pq); symmetric and
/// normalized so the coefficients sum to 1.
struct AlexanderPoly {
  std::array<long long, 3> coefficients;

  bool operator==(const AlexanderPoly&) const = default;
};

AlexanderPoly alexander(long long p, long long q);

/// Seifert piece M(k) of the torus decomposition, k non-zero.
struct SeifertPiece {
  long long k;

  bool operator==(const SeifertPiece&) const = default;
};

enum class JsjKind { SeifertNoTori, OneTorus, TwoTori };

/// Parameter-level torus-decomposition descriptor: no tori for (1,-1) and
/// (-1,1); one torus with piece M(pq) when |p| = 1 or |q| = 1 otherwise;
/// two tori with pieces {M(p), M(-q)} (unordered) in the remaining cases.
struct JsjDescriptor {
  JsjKind kind;
  std::vector<SeifertPiece> pieces;  // 0, 1 or 2 entries

  bool operator==(const JsjDescriptor&) const = default;
};

JsjDescriptor jsj(long long p, long long q);

/// M(k1) and M(k2) are homeomorphic iff |k1| = |k2|.
bool m_homeo(long long k1, long long k2);

/// Descriptors agree up to m_homeo on pieces (TwoTori matched as an
/// unordered pair).
bool jsj_equivalent(const JsjDescriptor& d1, const JsjDescriptor& d2);

/// The 0-surgered manifolds are homeomorphic iff (p', q') is one of
/// (p, q), (q, p), (-p, -q), (-q, -p).
bool zero_surgery_homeo(long long p, long long q, long long p2, long long q2);

enum class KnotRelation { Isotopic, Mirror, Neither };

/// Isotopic iff (p',q') is (p,q) or (-q,-p); Mirror iff it is (-p,-q) or
/// (q,p) and not already isotopic; Neither otherwise.
KnotRelation knot_relation(long long p, long long q, long long p2, long long q2);

/// Representative of the 4-element homeomorphism class with p > 0,
/// lexicographically minimal.
DoubleTwistParams canonicalize(long long p, long long q);

/// All unordered pairs of parameter classes with product N that are not
/// 0-surgery homeomorphic (so at least one member carries a generalized
/// torsion element). Entries are canonical representatives, sorted.
std::vector<std::pair<DoubleTwistParams, DoubleTwistParams>> theorem1_pairs(
    long long n);

}  // namespace gentor

#endif  // GENTOR_CLASSIFY_HPP
