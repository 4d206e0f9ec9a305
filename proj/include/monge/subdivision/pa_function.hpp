#pragma once

#include "monge/core/polytope.hpp"

#include <vector>

namespace monge {

/// x -> <slope, x> + intercept.
struct AffineFunctional {
  Vector slope;
  Rational intercept;

  Rational operator()(const Point& x) const { return slope.dot(x) + intercept; }

  friend bool operator==(const AffineFunctional& a, const AffineFunctional& b) {
    return a.intercept == b.intercept && equal(a.slope, b.slope);
  }
};

/// A convex piecewise affine function max_i piece_i(x) on a full-dimensional
/// domain polytope. Convexity is structural: there is no other way to build one.
class PAConvexFunction {
 public:
  /// Throws std::invalid_argument for an empty piece list or a domain that is not
  /// full-dimensional, DimensionError for mismatched slopes.
  PAConvexFunction(std::vector<AffineFunctional> pieces, Polytope domain);

  Eigen::Index ambient_dim() const { return domain_.ambient_dim(); }
  const std::vector<AffineFunctional>& pieces() const { return pieces_; }
  const Polytope& domain() const { return domain_; }

  Rational operator()(const Point& x) const;

  /// Indices of the pieces attaining the maximum at x.
  std::vector<std::size_t> active_pieces(const Point& x) const;

  /// The affine function itself, on a new domain.
  static PAConvexFunction affine(AffineFunctional a, Polytope domain);

 private:
  std::vector<AffineFunctional> pieces_;
  Polytope domain_;
};

/// Drops every piece whose activity region {x in domain : piece(x) = h(x)} has
/// dimension below n, and duplicate pieces. The function values are unchanged.
PAConvexFunction canonicalize(const PAConvexFunction& h);

/// h1 + h2 built from all sums of pieces, canonicalized. Domains must agree.
PAConvexFunction operator+(const PAConvexFunction& h1, const PAConvexFunction& h2);

/// t * h for rational t > 0.
PAConvexFunction operator*(const Rational& t, const PAConvexFunction& h);

PAConvexFunction operator+(const PAConvexFunction& h, const AffineFunctional& a);

/// x -> h(x + u) - h(u) on the domain translated by -u.
PAConvexFunction recentre(const PAConvexFunction& h, const Point& u);

}  // namespace monge
