#pragma once

#include "monge/core/rational.hpp"

#include <cstddef>
#include <vector>

namespace monge {

/// One facet of a full-dimensional hull: <normal, x> <= offset holds for every
/// input point, with equality exactly on the facet. `normal` is a primitive
/// integer vector, so equal hyperplanes have identical representations.
struct HullFacet {
  Vector normal;
  Rational offset;
  std::vector<std::size_t> points;  // sorted input indices lying on the facet
};

struct HullResult {
  std::vector<HullFacet> facets;       // sorted by (normal, offset)
  std::vector<std::size_t> vertices;   // sorted indices of the extreme points
};

/// Exact Quickhull in R^d for d >= 2. The points must affinely span R^d.
///
/// The boundary is grown as a simplicial complex; points that are never strictly
/// beyond a facet are discarded, so a facet's `points` always contains every
/// extreme point on it but may omit non-extreme boundary points.
HullResult quickhull(const std::vector<Vector>& points);

/// Largest affinely independent subset, greedily chosen, as indices.
std::vector<std::size_t> affine_basis(const std::vector<Vector>& points);

}  // namespace monge
