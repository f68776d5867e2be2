#include "gentor/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gentor {

namespace {

void require_nonzero(long long v, const char* what) {
  if (v == 0) throw std::invalid_argument(std::string(what) + " must be non-zero");
}

}  // namespace

AlexanderPoly alexander(long long p, long long q) {
  require_nonzero(p, "p");
  require_nonzero(q, "q");
  long long pq = p * q;
  return AlexanderPoly{{-pq, 2 * pq + 1, -pq}};
}

JsjDescriptor jsj(long long p, long long q) {
  require_nonzero(p, "p");
  require_nonzero(q, "q");
  if ((p == 1 && q == -1) || (p == -1 && q == 1))
    return JsjDescriptor{JsjKind::SeifertNoTori, {}};
  if (std::llabs(p) == 1 || std::llabs(q) == 1)
    return JsjDescriptor{JsjKind::OneTorus, {SeifertPiece{p * q}}};
  return JsjDescriptor{JsjKind::TwoTori, {SeifertPiece{p}, SeifertPiece{-q}}};
}

bool m_homeo(long long k1, long long k2) {
  require_nonzero(k1, "k1");
  require_nonzero(k2, "k2");
  return std::llabs(k1) == std::llabs(k2);
}

bool jsj_equivalent(const JsjDescriptor& d1, const JsjDescriptor& d2) {
  if (d1.kind != d2.kind) return false;
  switch (d1.kind) {
    case JsjKind::SeifertNoTori:
      return true;
    case JsjKind::OneTorus:
      return m_homeo(d1.pieces[0].k, d2.pieces[0].k);
    case JsjKind::TwoTori:
      return (m_homeo(d1.pieces[0].k, d2.pieces[0].k) &&
              m_homeo(d1.pieces[1].k, d2.pieces[1].k)) ||
             (m_homeo(d1.pieces[0].k, d2.pieces[1].k) &&
              m_homeo(d1.pieces[1].k, d2.pieces[0].k));
  }
  return false;
}

bool zero_surgery_homeo(long long p, long long q, long long p2, long long q2) {
  require_nonzero(p, "p");
  require_nonzero(q, "q");
  require_nonzero(p2, "p'");
  require_nonzero(q2, "q'");
  return (p2 == p && q2 == q) || (p2 == q && q2 == p) ||
         (p2 == -p && q2 == -q) || (p2 == -q && q2 == -p);
}

KnotRelation knot_relation(long long p, long long q, long long p2, long long q2) {
  require_nonzero(p, "p");
  require_nonzero(q, "q");
  require_nonzero(p2, "p'");
  require_nonzero(q2, "q'");
  if ((p2 == p && q2 == q) || (p2 == -q && q2 == -p))
    return KnotRelation::Isotopic;
  if ((p2 == -p && q2 == -q) || (p2 == q && q2 == p))
    return KnotRelation::Mirror;
  return KnotRelation::Neither;
}

DoubleTwistParams canonicalize(long long p, long long q) {
  require_nonzero(p, "p");
  require_nonzero(q, "q");
  std::vector<DoubleTwistParams> cls{{p, q}, {q, p}, {-p, -q}, {-q, -p}};
  DoubleTwistParams best{0, 0};
  for (const auto& c : cls) {
    if (c.p <= 0) continue;
    if (best.p == 0 || c.p < best.p || (c.p == best.p && c.q < best.q)) best = c;
  }
  return best;
}

std::vector<std::pair<DoubleTwistParams, DoubleTwistParams>> theorem1_pairs(
    long long n) {
  require_nonzero(n, "N");
  // Canonical classes of factorizations p q = N.
  std::vector<DoubleTwistParams> classes;
  long long an = std::llabs(n);
  for (long long d = 1; d <= an; ++d) {
    if (an % d != 0) continue;
    for (long long p : {d, -d}) {
      long long q = n / p;
      DoubleTwistParams c = canonicalize(p, q);
      if (std::find(classes.begin(), classes.end(), c) == classes.end())
        classes.push_back(c);
    }
  }
  auto less = [](const DoubleTwistParams& a, const DoubleTwistParams& b) {
    return a.p != b.p ? a.p < b.p : a.q < b.q;
  };
  std::sort(classes.begin(), classes.end(), less);

  std::vector<std::pair<DoubleTwistParams, DoubleTwistParams>> pairs;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      pairs.emplace_back(classes[i], classes[j]);
  return pairs;
}

}  // namespace gentor
