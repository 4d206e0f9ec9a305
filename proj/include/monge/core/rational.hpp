#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monge {

// Expression templates are disabled so the type composes cleanly with Eigen's
// own expression machinery.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vector = VectorX<Rational>;
using Matrix = MatrixX<Rational>;

/// Points of R^n with exact rational coordinates.
using Point = Vector;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p", "p/q", or a finite decimal such as "-0.25" into lowest terms.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering; integers render without a denominator.
std::string to_string(const Rational& q);

/// Decimal rendering rounded to `digits` significant digits (half away from zero).
std::string to_decimal(const Rational& q, int digits = 12);

inline Rational make_rational(long num, long den = 1) { return Rational(num) / Rational(den); }

inline Vector make_point(std::initializer_list<Rational> coords) {
  Vector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (const auto& c : coords) v(i++) = c;
  return v;
}

Vector parse_point(const std::vector<std::string>& coords);
std::string to_string(const Vector& v);

/// Lexicographic three-way comparison of equal-length vectors.
std::strong_ordering lex_compare(const Vector& a, const Vector& b);

inline bool lex_less(const Vector& a, const Vector& b) { return lex_compare(a, b) < 0; }

struct LexLess {
  bool operator()(const Vector& a, const Vector& b) const { return lex_less(a, b); }
};

inline bool equal(const Vector& a, const Vector& b) {
  return a.size() == b.size() && lex_compare(a, b) == 0;
}

/// Positive multiple of `v` with coprime integer entries. The zero vector is
/// returned unchanged.
Vector primitive(const Vector& v);

Rational factorial(int n);

inline int sgn(const Rational& q) { return q.sign(); }

}  // namespace monge
