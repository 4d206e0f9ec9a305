#pragma once

#include "monge/subdivision/pa_function.hpp"

#include <vector>

namespace monge {

/// A vertex of the lower boundary of the epigraph of h over its domain.
struct EpigraphVertex {
  Point x;
  Rational value;                        // h(x)
  std::vector<std::size_t> pieces;       // every piece with piece(x) = h(x)
  std::vector<std::size_t> domain_facets;  // domain facets through x
  bool interior() const { return domain_facets.empty(); }
};

/// Vertex and facet structure of the truncated epigraph
///   { (x, t) : x in domain, h(x) <= t <= T },
/// computed by a single dual convex hull in R^{n+1}.
struct EpigraphLift {
  std::vector<EpigraphVertex> vertices;   // sorted by x
  std::vector<bool> full_dimensional;     // per piece: activity region has dimension n
};

EpigraphLift lift_epigraph(const PAConvexFunction& h);

}  // namespace monge
