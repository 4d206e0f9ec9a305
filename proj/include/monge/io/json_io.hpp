#pragma once

#include "monge/approx/approx.hpp"
#include "monge/ma/measure.hpp"
#include "monge/ma/toric.hpp"
#include "monge/solver1d/solver1d.hpp"
#include "monge/subdivision/complex.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace monge::io {

// Writers use ordered_json so field order is fixed and output is byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const Polytope& p);
Json to_json(const AffineFunctional& a);
Json to_json(const PAConvexFunction& h);
Json to_json(const PolytopalComplex& c);
Json to_json(const AtomicMeasure& mu);
Json to_json(const DegreeReport& r);
Json to_json(const PiecewisePolynomial& p);
Json to_json(const Solution1D& s);
Json to_json(const RegularityReport& r);
Json to_json(const ConvergenceReport& r);

// Readers throw ParseError on malformed input. Rationals may be given as
// "p/q" strings, decimal strings, or JSON integers.
Rational rational_from_json(const Json& j);
Vector vector_from_json(const Json& j);
Polytope polytope_from_json(const Json& j);
PAConvexFunction pa_function_from_json(const Json& j);
PolytopalComplex complex_from_json(const Json& j);
AtomicMeasure measure_from_json(const Json& j);
DegreeReport degree_report_from_json(const Json& j);
PiecewisePolynomial piecewise_polynomial_from_json(const Json& j);

/// Parses text, turning JSON syntax errors into ParseError.
Json parse_json(const std::string& text);

/// Canonical text form: two-space indentation and a trailing newline.
std::string dump(const Json& j);

/// Human-readable form such as "x^2/2 on [0, 1]".
std::string render(const PiecewisePolynomial& p);

}  // namespace monge::io
