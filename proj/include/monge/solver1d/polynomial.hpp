#pragma once

#include "monge/core/rational.hpp"

#include <vector>

namespace monge {

/// Dense polynomial with rational coefficients in ascending degree. The zero
/// polynomial is the empty vector; trailing zeros are never stored.
using Polynomial = std::vector<Rational>;

Polynomial trimmed(Polynomial p);
int degree(const Polynomial& p);  // -1 for the zero polynomial
Rational evaluate(const Polynomial& p, const Rational& x);
Polynomial derivative(const Polynomial& p);
/// Antiderivative vanishing at 0.
Polynomial antiderivative(const Polynomial& p);

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& t, const Polynomial& p);

struct Division {
  Polynomial quotient;
  Polynomial remainder;
};
Division divide(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// Product of the irreducible factors occurring with odd multiplicity, monic.
Polynomial odd_multiplicity_part(const Polynomial& p);

/// Number of distinct real roots in the open interval (a, b) of a square-free p.
int count_roots(const Polynomial& p, const Rational& a, const Rational& b);

/// Exact test of p >= 0 on the closed interval [a, b].
bool nonnegative_on(const Polynomial& p, const Rational& a, const Rational& b);

}  // namespace monge
