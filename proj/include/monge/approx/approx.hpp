#pragma once

#include "monge/ma/measure.hpp"
#include "monge/subdivision/pa_function.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace monge {

using PointFunction = std::function<Rational(const Point&)>;

/// A caller-supplied convex function on a full-dimensional polytope.
struct ConvexEvaluator {
  PointFunction eval;
  Polytope domain;
};

/// The midpoint spot-check found f((x+y)/2) > (f(x)+f(y))/2.
class ConvexityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lattice points step*Z^n inside the domain together with the domain vertices,
/// sorted lexicographically.
std::vector<Point> grid_samples(const Polytope& domain, const Rational& step);

/// Checks midpoint convexity on up to `pairs` deterministic pairs of samples.
/// Throws ConvexityError with the offending pair.
void check_midpoint_convexity(const ConvexEvaluator& f, const std::vector<Point>& samples, std::size_t pairs = 256);

/// Lower convex hull interpolant of f on grid_samples(domain, step): agrees with
/// f at every sample and is the largest convex PA function below those values.
PAConvexFunction pa_from_grid(const ConvexEvaluator& f, const Rational& step);

struct ErrorEstimate {
  /// max |f - h| over the probe lattice; a lower estimate of the sup norm.
  Rational probe_max;
  /// max over cells of the oscillation bound
  ///   max(max_V h - inf f, max_V f - min_V h),
  /// V the cell vertices and inf f taken over vertices and probes in the cell.
  Rational oscillation_bound;
};

ErrorEstimate uniform_error(const ConvexEvaluator& f, const PAConvexFunction& h, const Rational& probe_step);

struct ConvergenceStep {
  Rational step;
  ErrorEstimate error;
  std::size_t pieces = 0;
  std::vector<Rational> integrals;  // one per test function
};

struct ConvergenceReport {
  std::vector<ConvergenceStep> steps;
  /// differences[k][j] = |integral_j(step k+1) - integral_j(step k)|
  std::vector<std::vector<Rational>> differences;
};

/// For each step (strictly decreasing), builds pa_from_grid, its MA measure, and
/// the integral of every test function against it. The uniform error is probed
/// at half the step.
ConvergenceReport convergence_study(const ConvexEvaluator& f, const std::vector<Rational>& steps,
                                    const std::vector<PointFunction>& tests);

}  // namespace monge
