#include "gentor/certificates.hpp"

#include <stdexcept>

namespace gentor {

ConjugateProduct::ConjugateProduct(std::vector<Factor> factors, Word target)
    : factors_(std::move(factors)), target_(std::move(target)) {
  if (factors_.empty())
    throw std::invalid_argument("conjugate product needs at least one factor");
  if (reduced_product() != target_)
    throw std::logic_error("conjugate product does not reduce to its target");
}

Word ConjugateProduct::reduced_product() const {
  Word prod(target_.alphabet());
  for (const auto& f : factors_) prod = concat(prod, conjugate(f.base, f.conjugator));
  return prod;
}

ConjugateProduct expand_power_product(const Word& g, const Word& h, long long n) {
  if (n < 1) throw std::invalid_argument("expand_power_product: n must be >= 1");
  Word gh = concat(g, h);
  std::vector<ConjugateProduct::Factor> factors;
  factors.reserve(static_cast<std::size_t>(n));
  for (long long j = n - 1; j >= 0; --j)
    factors.push_back({power(g, -j), gh});
  Word target = concat(power(g, n), power(h, n));
  return ConjugateProduct(std::move(factors), std::move(target));
}

ConjugateProduct expand_commutator_power(const Word& g, const Word& h,
                                         long long n, long long m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("expand_commutator_power: n, m must be >= 1");
  // [g,h] = G H with G = g^-1 and H = h^-1 g h, so [g^n, h] expands through
  // the power-product identity with conjugators g^(n-1)..g^0. Repeating the
  // same step on [g^n, h] = G' H' with G' = g^-n h^-1 g^n and H' = h appends
  // the outer conjugators (g^-n h^i g^n), giving g^(j-n) h^i g^n in total.
  Word base = commutator(g, h);
  Word g_n = power(g, n);
  std::vector<ConjugateProduct::Factor> factors;
  factors.reserve(static_cast<std::size_t>(n * m));
  for (long long i = m - 1; i >= 0; --i) {
    Word outer = concat(power(h, i), g_n);
    for (long long j = n - 1; j >= 0; --j)
      factors.push_back({concat(power(g, j - n), outer), base});
  }
  Word target = commutator(g_n, power(h, m));
  return ConjugateProduct(std::move(factors), std::move(target));
}

ConjugateProduct expand_longitude(const Word& g, const Word& h, long long n,
                                  long long m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("expand_longitude: n, m must be >= 1");
  Word gh = concat(g, h);
  Word hg = concat(h, g);
  Word base = commutator(gh, hg);

  // Inner step: [(hg)^m, (gh)^-m] as conjugates of [hg, (gh)^-1], whose base
  // rewrites as [gh,hg] conjugated by (gh)^-1.
  Word inv_gh = invert(gh);
  Word hg_m = power(hg, m);
  std::vector<Word> inner;
  inner.reserve(static_cast<std::size_t>(m * m));
  for (long long i = m - 1; i >= 0; --i) {
    Word outer = concat(power(inv_gh, i), hg_m);
    for (long long j = m - 1; j >= 0; --j)
      inner.push_back(concat(inv_gh, concat(power(hg, j - m), outer)));
  }

  // Outer step: with u = (hg)^-m (gh)^m and v = (hg)^m (gh)^-m, u v is the
  // inner commutator, so u^n v^n expands with conjugators u^-(n-1)..u^0.
  Word u = concat(power(hg, -m), power(gh, m));
  std::vector<ConjugateProduct::Factor> factors;
  factors.reserve(static_cast<std::size_t>(n) * inner.size());
  for (long long j = n - 1; j >= 0; --j) {
    Word u_j = power(u, -j);
    for (const auto& c : inner) factors.push_back({concat(c, u_j), base});
  }
  Word v = concat(hg_m, power(gh, -m));
  Word target = concat(power(u, n), power(v, n));
  return ConjugateProduct(std::move(factors), std::move(target));
}

Matrix2 monodromy_matrix(long long p, long long q) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("monodromy_matrix: p, q must be >= 1");
  Int pq = Int(p) * q;
  return Matrix2{{Rational(1), Rational(1, q), Rational(-1, p),
                  Rational(1) - Rational(1, pq)}};
}

Rational chebyshev_eval(long long k, const Rational& r) {
  if (k < 0) throw std::invalid_argument("chebyshev_eval: k must be >= 0");
  if (k == 0) return Rational(1);
  Rational prev(1), cur(r);
  for (long long i = 1; i < k; ++i) {
    Rational next = 2 * r * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

ChebyshevConstants find_chebyshev_constants(long long p, long long q,
                                            long long k_cap) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("find_chebyshev_constants: p, q must be >= 1");
  Int pq = Int(p) * q;
  // Re(lambda) = 1 - 1/(2pq) for the eigenvalue of the monodromy matrix on
  // the unit circle; iterate the recurrence until the sign flips.
  Rational re_lambda = Rational(1) - Rational(1, 2 * pq);
  Rational prev(1), cur(re_lambda);
  long long k = 1;
  while (cur >= 0) {
    if (k >= k_cap)
      throw std::runtime_error("find_chebyshev_constants: k cap " +
                               std::to_string(k_cap) + " exceeded");
    Rational next = 2 * re_lambda * cur - prev;
    prev = cur;
    cur = next;
    ++k;
  }
  Rational ratio = -2 * cur;  // m/n in lowest terms, both positive
  return ChebyshevConstants{k, denominator(ratio), numerator(ratio)};
}

bool verify_matrix_identity(const Matrix2& a, long long k, const Int& n,
                            const Int& m) {
  if (a.det() == 0) throw std::domain_error("verify_matrix_identity: singular");
  Matrix2 sum = Rational(n) * mat_power(a, k) + Rational(m) * Matrix2::identity() +
                Rational(n) * mat_power(a, -k);
  return sum == Matrix2::zero();
}

TorsionCertificate torsion_certificate(long long p, long long q,
                                       long long k_cap) {
  ChebyshevConstants c = find_chebyshev_constants(p, q, k_cap);
  Matrix2 a = monodromy_matrix(p, q);
  bool verified = verify_matrix_identity(a, c.k, c.n, c.m);
  if (!verified)
    throw std::logic_error("torsion_certificate: matrix identity failed");

  Alphabet al = Alphabet({"a", "t"});
  Word gen_a = Word::from_syllables(al, {Syllable{*al.find("a"), 1}});
  Word gen_t = Word::from_syllables(al, {Syllable{*al.find("t"), 1}});
  Int big_e = boost::multiprecision::pow(Int(p) * q, static_cast<unsigned>(c.k));
  Word t_k = power(gen_t, c.k);
  Word a_e = power(gen_a, big_e);
  Word left = power(concat(concat(t_k, a_e), invert(t_k)), c.n);
  Word middle = power(gen_a, big_e * c.m);
  Word right = power(concat(concat(invert(t_k), a_e), t_k), c.n);
  Word cert = concat(concat(left, middle), right);
  return TorsionCertificate{p, q, c.k, c.n, c.m, std::move(cert), verified};
}

}  // namespace gentor
