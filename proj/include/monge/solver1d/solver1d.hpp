#pragma once

#include "monge/ma/measure.hpp"
#include "monge/solver1d/polynomial.hpp"
#include "monge/subdivision/pa_function.hpp"

#include <climits>
#include <cstdint>
#include <vector>

namespace monge {

/// Piecewise polynomial on [breakpoints.front(), breakpoints.back()]. Piece i
/// lives on [breakpoints[i], breakpoints[i+1]] and is stored in the global
/// variable x, ascending degree. Values at interior breakpoints may disagree;
/// continuity is a property to query, not a requirement.
class PiecewisePolynomial {
 public:
  PiecewisePolynomial() = default;
  /// Throws std::invalid_argument unless breakpoints strictly increase, there are
  /// at least two of them, and there is one piece per interval.
  PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces);

  static PiecewisePolynomial constant(const Rational& a, const Rational& b, const Rational& value);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  const Rational& lower() const { return breakpoints_.front(); }
  const Rational& upper() const { return breakpoints_.back(); }
  int max_degree() const;

  /// Index of the piece used at x: the right-hand piece at interior breakpoints.
  std::size_t piece_at(const Rational& x) const;
  Rational operator()(const Rational& x) const;
  /// k-th derivative from the left (side = -1) or right (side = +1).
  Rational derivative_at(const Rational& x, int k, int side) const;

  PiecewisePolynomial derivative() const;

  friend bool operator==(const PiecewisePolynomial& a, const PiecewisePolynomial& b);

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Polynomial> pieces_;
};

inline constexpr int kSmooth = INT_MAX;

/// Largest k with derivatives of order 0..k continuous at x (kSmooth when the
/// two one-sided polynomials coincide, -1 for a jump in the value). Points
/// that are not interior breakpoints are smooth.
int smoothness_at(const PiecewisePolynomial& p, const Rational& x);

/// p + q with the union of their breakpoints; the intervals must agree.
PiecewisePolynomial operator+(const PiecewisePolynomial& p, const PiecewisePolynomial& q);

struct Anchor {
  Rational point;
  Rational value;
  Rational slope;
};

struct Solution1D {
  PiecewisePolynomial phi;
  std::uint64_t deg_s = 1;
  Anchor anchor;
};

/// Double antiderivative of f / deg_s with phi(anchor) = value and
/// phi'(anchor) = slope. phi is C^1 by construction.
/// Throws std::invalid_argument when deg_s is 0, the anchor lies outside the
/// interval, or f is negative somewhere.
Solution1D solve_1d(const PiecewisePolynomial& f, std::uint64_t deg_s, const Anchor& anchor);

struct BreakpointCheck {
  Rational at;
  int f_order = kSmooth;
  int phi_order = kSmooth;
  /// phi' continuous here.
  bool c1 = true;
  /// phi_order >= f_order + 2.
  bool gains_two = true;
};

struct RegularityReport {
  std::vector<BreakpointCheck> breakpoints;
  /// deg_s * phi'' = f holds coefficient-wise on every interval.
  bool equation_holds = true;
  /// Five-point second differences of phi agree with f / deg_s at the probes.
  std::size_t probes = 0;
  std::size_t exact_probes = 0;   // probes where the stencil is exact (degree <= 5)
  bool finite_differences_agree = true;
  Rational max_probe_deviation;

  bool ok() const;
};

/// Checks the regularity gain, the equation, and a finite-difference probe.
/// Failures are reported, never thrown.
RegularityReport verify_regularity(const Solution1D& sol, const PiecewisePolynomial& f);

/// MA measure of a 1D PA convex function: mass at each interior kink equals the
/// slope jump there. Throws DimensionError unless n = 1.
AtomicMeasure discrete_ma_1d(const PAConvexFunction& phi);

struct MassConsistency {
  Rational step;
  Rational total_mass;     // discrete MA of the step interpolant of phi
  Rational exact_mass;     // phi'(b) - phi'(a), the integral of f / deg_s
  Rational bound;          // step * max |phi''|, bounds |total_mass - exact_mass|
  bool within_bound() const;
};

/// Compares the discrete MA mass of the grid interpolant of phi with the exact
/// integral of f / deg_s.
MassConsistency mass_consistency(const Solution1D& sol, const Rational& step);

}  // namespace monge
