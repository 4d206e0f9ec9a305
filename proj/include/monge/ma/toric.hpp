#pragma once

#include "monge/core/polytope.hpp"
#include "monge/subdivision/pa_function.hpp"

#include <cstdint>
#include <vector>

namespace monge {

/// Degree of the toric top intersection attached to an interior vertex u of the
/// linearity complex: deg_s * n! * MA(h)({u}).
struct DegreeReport {
  Point vertex;
  Polytope subdifferential;
  Rational ma_mass;
  Rational toric_degree;
  std::uint64_t deg_s = 1;
  /// Smallest positive integer L making every slope of L*h integral.
  Integer rescale = 1;
  /// deg_s * n! * vol(subdifferential of L*h at u) = L^n * toric_degree; an integer.
  Integer lattice_degree = 0;
  /// subdifferential(h(. + u) - h(u), 0) == subdifferential(h, u) was checked.
  bool translation_verified = false;
};

/// Throws std::invalid_argument when deg_s is 0 or u is not a vertex of the
/// linearity complex, BoundaryPointError when u lies on the domain boundary.
DegreeReport toric_degree(const PAConvexFunction& h, const Point& u, std::uint64_t deg_s);

/// deg_s * n! * mixed_ma(hs)({u}).
Rational mixed_toric_degree(const std::vector<PAConvexFunction>& hs, const Point& u, std::uint64_t deg_s);

}  // namespace monge
