#include "gentor/rational.hpp"

#include <stdexcept>

namespace gentor {

std::string to_text(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Matrix2 Matrix2::identity() { return Matrix2{{1, 0, 0, 1}}; }
Matrix2 Matrix2::zero() { return Matrix2{{0, 0, 0, 0}}; }

Rational Matrix2::det() const { return m[0] * m[3] - m[1] * m[2]; }
Rational Matrix2::trace() const { return m[0] + m[3]; }

Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  for (std::size_t i = 0; i < 4; ++i) r.m[i] = a.m[i] + b.m[i];
  return r;
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  return Matrix2{{a.m[0] * b.m[0] + a.m[1] * b.m[2],
                  a.m[0] * b.m[1] + a.m[1] * b.m[3],
                  a.m[2] * b.m[0] + a.m[3] * b.m[2],
                  a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
}

Matrix2 operator*(const Rational& s, const Matrix2& a) {
  Matrix2 r;
  for (std::size_t i = 0; i < 4; ++i) r.m[i] = s * a.m[i];
  return r;
}

Matrix2 mat_inverse(const Matrix2& a) {
  Rational d = a.det();
  if (d == 0) throw std::domain_error("mat_inverse: singular matrix");
  return Matrix2{{a.m[3] / d, -a.m[1] / d, -a.m[2] / d, a.m[0] / d}};
}

Matrix2 mat_power(const Matrix2& a, long long k) {
  Matrix2 base = k < 0 ? mat_inverse(a) : a;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  Matrix2 res = Matrix2::identity();
  while (e > 0) {
    if (e & 1) res = res * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return res;
}

std::array<Rational, 2> mat_apply(const Matrix2& a,
                                  const std::array<Rational, 2>& v) {
  return {a.m[0] * v[0] + a.m[1] * v[1], a.m[2] * v[0] + a.m[3] * v[1]};
}

}  // namespace gentor
