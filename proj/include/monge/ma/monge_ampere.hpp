#pragma once

#include "monge/ma/measure.hpp"
#include "monge/subdivision/epigraph.hpp"
#include "monge/subdivision/pa_function.hpp"

#include <stdexcept>
#include <vector>

namespace monge {

/// x0 lies on the boundary of the domain, where the gradient image is unbounded.
class BoundaryPointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two independent computations of the same object disagreed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Which complex vertices feed the supporting-hyperplane constraints.
/// kAll uses every vertex of the linearity complex; kStar only the vertices of
/// cells containing x0, which yields the same polytope since h is convex.
enum class VertexScope { kAll, kStar };

/// Gradient image {p : h(x0) + <x - x0, p> <= h(x) for all x in the domain} at
/// an interior point x0.
///
/// Computed twice: by vertex enumeration of the constraints
/// <v - x0, p> <= h(v) - h(x0) over complex vertices v, and as the hull of the
/// slopes of the pieces active at x0. A mismatch throws ConsistencyError.
/// Throws std::domain_error when x0 is outside the domain and
/// BoundaryPointError when it is on the boundary.
Polytope subdifferential(const PAConvexFunction& h, const Point& x0, VertexScope scope = VertexScope::kAll);

/// Same, reusing a lift of h computed by lift_epigraph.
Polytope subdifferential(const PAConvexFunction& h, const EpigraphLift& lift, const Point& x0,
                         VertexScope scope = VertexScope::kAll);

/// Real Monge-Ampere measure of a PA convex function: an atom of mass
/// vol(subdifferential) at each interior vertex of the linearity complex.
AtomicMeasure ma_measure(const PAConvexFunction& h);

/// Mixed Monge-Ampere measure of n functions on a common domain by
/// inclusion-exclusion over the sums of subsets of the arguments.
/// Throws std::invalid_argument on a wrong count or mismatched domains.
AtomicMeasure mixed_ma(const std::vector<PAConvexFunction>& hs);

}  // namespace monge
