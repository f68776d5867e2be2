#ifndef GENTOR_CERTIFICATES_HPP
#define GENTOR_CERTIFICATES_HPP

#include "gentor/presentations.hpp"
#include "gentor/rational.hpp"
#include "gentor/word.hpp"

#include <vector>

namespace gentor {

/// An exact product-of-conjugates identity: target equals the freely reduced
/// product of conjugate(base, conjugator) over the factors, checked at
/// construction.
class ConjugateProduct {
 public:
  struct Factor {
    Word conjugator;
    Word base;
  };

  ConjugateProduct(std::vector<Factor> factors, Word target);

  const std::vector<Factor>& factors() const { return factors_; }
  const Word& target() const { return target_; }
  /// Re-multiplies the factors; always equal to target().
  Word reduced_product() const;

 private:
  std::vector<Factor> factors_;
  Word target_;
};

/// g^n h^n as a product of n conjugates of gh, conjugators g^-(n-1)..g^0.
ConjugateProduct expand_power_product(const Word& g, const Word& h, long long n);

/// [g^n, h^m] as a product of n*m conjugates of [g,h]; the conjugators are
/// g^(j-n) h^i g^n for i = m-1..0, j = n-1..0 (two nested applications of the
/// power-product expansion).
ConjugateProduct expand_commutator_power(const Word& g, const Word& h,
                                         long long n, long long m);

/// {(hg)^-m (gh)^m}^n {(hg)^m (gh)^-m}^n as a product of n*m^2 conjugates of
/// [gh, hg].
ConjugateProduct expand_longitude(const Word& g, const Word& h, long long n,
                                  long long m);

/// Representation matrix of the t-conjugation action for the pq < 0 family
/// (parameters name K_{p,-q} with p, q >= 1):
/// [[1, 1/q], [-1/p, 1 - 1/(pq)]]. Determinant is exactly 1.
Matrix2 monodromy_matrix(long long p, long long q);

/// k-th Chebyshev polynomial of the first kind at r, exact:
/// T_0 = 1, T_1 = r, T_{k+1} = 2 r T_k - T_{k-1}.
Rational chebyshev_eval(long long k, const Rational& r);

struct ChebyshevConstants {
  long long k;  // minimal k with T_k(1 - 1/(2pq)) < 0
  Int n;
  Int m;        // m/n = -2 T_k(1 - 1/(2pq)) in lowest terms
};

/// Finds (k, n, m) with n A^k + m I + n A^-k = 0 for A = monodromy_matrix.
/// Throws std::runtime_error if k exceeds the cap.
ChebyshevConstants find_chebyshev_constants(long long p, long long q,
                                            long long k_cap = 10000);

/// Exact test of n A^k + m I + n A^-k = 0.
bool verify_matrix_identity(const Matrix2& a, long long k, const Int& n,
                            const Int& m);

/// Certificate that the identity lies in the conjugate-product semigroup of a
/// for the surgered group of K_{p,-q}: the word
/// (t^k a^E t^-k)^n a^(E m)(t^-k a^E t^k)^n with E = (pq)^k freely reduces to
/// a relator consequence.
struct TorsionCertificate {
  long long p;
  long long q;  // names K_{p,-q}; both positive
  long long k;
  Int n;
  Int m;
  Word certificate;  // over {a, t}
  bool matrix_identity_verified;
};

TorsionCertificate torsion_certificate(long long p, long long q,
                                       long long k_cap = 10000);

}  // namespace gentor

#endif  // GENTOR_CERTIFICATES_HPP
