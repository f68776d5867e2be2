#ifndef GENTOR_RATIONAL_HPP
#define GENTOR_RATIONAL_HPP

#include "gentor/word.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <string>

namespace gentor {

/// Exact fraction; always canonical (positive denominator, lowest terms).
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

std::string to_text(const Rational& r);

/// Exact 2x2 rational matrix, row-major.
struct Matrix2 {
  std::array<Rational, 4> m;  // [a00, a01, a10, a11]

  static Matrix2 identity();
  static Matrix2 zero();

  const Rational& at(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }
  Rational& at(int r, int c) { return m[static_cast<std::size_t>(2 * r + c)]; }

  Rational det() const;
  Rational trace() const;

  bool operator==(const Matrix2&) const = default;
};

Matrix2 operator+(const Matrix2& a, const Matrix2& b);
Matrix2 operator*(const Matrix2& a, const Matrix2& b);
Matrix2 operator*(const Rational& s, const Matrix2& a);

/// Exact inverse; throws std::domain_error on a singular matrix.
Matrix2 mat_inverse(const Matrix2& a);

/// a^k for any integer k (negative powers via the exact inverse).
Matrix2 mat_power(const Matrix2& a, long long k);

/// Matrix-vector product.
std::array<Rational, 2> mat_apply(const Matrix2& a, const std::array<Rational, 2>& v);

}  // namespace gentor

#endif  // GENTOR_RATIONAL_HPP
