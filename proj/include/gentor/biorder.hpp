#ifndef GENTOR_BIORDER_HPP
#define GENTOR_BIORDER_HPP

#include "gentor/presentations.hpp"
#include "gentor/rational.hpp"
#include "gentor/word.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace gentor {

/// Exact element a + b*sqrt(D) of a real quadratic extension. When D is a
/// perfect square the radical folds into the rational part at construction,
/// so equality and sign stay canonical.
class QuadExt {
 public:
  QuadExt(Rational rational_part, Rational radical_coeff, Int discriminant);
  static QuadExt of(Rational r, Int discriminant) {
    return QuadExt(std::move(r), Rational(0), std::move(discriminant));
  }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coeff() const { return b_; }
  const Int& discriminant() const { return d_; }

  /// -1, 0 or +1, decided by exact rational comparisons only.
  int sign() const;
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadExt operator-() const;
  friend QuadExt operator+(const QuadExt& u, const QuadExt& v);
  friend QuadExt operator-(const QuadExt& u, const QuadExt& v);
  friend QuadExt operator*(const QuadExt& u, const QuadExt& v);
  friend QuadExt operator*(const Rational& s, const QuadExt& v);
  friend QuadExt operator/(const QuadExt& u, const QuadExt& v);

  bool operator==(const QuadExt& other) const;
  std::strong_ordering operator<=>(const QuadExt& other) const;

 private:
  Rational a_;
  Rational b_;
  Int d_;
};

std::string to_text(const QuadExt& x);

/// Per-(p,q) context for the semidirect product K: the positive-family matrix
/// [[1, -1/q], [-1/p, 1 + 1/(pq)]] and the discriminant D = 4pq + 1.
struct KContext {
  long long p;
  long long q;
  Matrix2 action;   // determinant exactly 1
  Int discriminant;

  bool operator==(const KContext&) const = default;
};

KContext make_k_context(long long p, long long q);

/// Exact eigendata of the action matrix: eigenvalues
/// ((2pq+1) +- sqrt(4pq+1)) / (2pq) and the paper-normalized eigenvectors
/// with V_+ - V_- = (0,1).
struct Eigenbasis {
  QuadExt lambda_plus;
  QuadExt lambda_minus;
  std::pair<QuadExt, QuadExt> v_plus;
  std::pair<QuadExt, QuadExt> v_minus;
};

Eigenbasis eigenbasis(long long p, long long q);

/// Element of K = R^2 x| Z, carrying both the raw (s, l) coordinates and the
/// (V_+, V_-) coefficients of the vector part (kept consistent by exact
/// change of basis).
class KElement {
 public:
  static KElement identity(const KContext& ctx);
  static KElement from_raw(const KContext& ctx, QuadExt s, QuadExt l, Int level);

  const KContext& context() const { return ctx_; }
  const QuadExt& raw_s() const { return s_; }
  const QuadExt& raw_l() const { return l_; }
  const QuadExt& coeff_plus() const { return cplus_; }
  const QuadExt& coeff_minus() const { return cminus_; }
  const Int& level() const { return level_; }

  bool operator==(const KElement& other) const;

 private:
  KElement(KContext ctx, QuadExt s, QuadExt l, QuadExt cp, QuadExt cm, Int level);

  KContext ctx_;
  QuadExt s_, l_;
  QuadExt cplus_, cminus_;
  Int level_;
};

/// Group product (v1 + A^{n1} v2, n1 + n2); contexts must match.
KElement k_multiply(const KElement& e1, const KElement& e2);

/// Lexicographic comparison on (level, V_+ coefficient, V_- coefficient).
std::strong_ordering k_compare(const KElement& e1, const KElement& e2);

/// Abelianization exponent: t counts 1, a and b count 0.
Int rho(const Word& w);

/// Product of shifted conjugates of b: each entry is one b-run at the given
/// t-depth, plus the leftover t level.
struct XWord {
  std::vector<std::pair<Int, Int>> runs;  // (depth, exponent)
  Int level;
};

/// Rewrites a word over {b, t} into shifted-generator runs; the depth of a
/// b-run is the t-exponent sum of the prefix before it.
XWord to_xword(const Word& w);

/// Vector part of a level-zero XWord: sum of exp * A^depth * (0,1).
/// Throws std::invalid_argument when the level is non-zero.
std::pair<QuadExt, QuadExt> r_map(const KContext& ctx, const XWord& xw);

/// The homomorphism into K: expand a = t^-1 b^q t b^-q, split off the t
/// level, and apply r_map to the kernel part.
KElement phi(const KContext& ctx, const Word& w);

/// k_compare(phi(w), identity).
std::strong_ordering word_sign(const KContext& ctx, const Word& w);

}  // namespace gentor

#endif  // GENTOR_BIORDER_HPP
