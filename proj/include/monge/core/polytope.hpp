#pragma once

#include "monge/core/rational.hpp"

#include <vector>

namespace monge {

/// The closed halfspace <normal, x> <= offset, or the hyperplane
/// <normal, x> = offset when used as an equation.
struct Halfspace {
  Vector normal;
  Rational offset;

  Rational slack(const Point& x) const { return offset - normal.dot(x); }
};

/// A bounded convex polytope in R^n with matching V- and H-representations.
///
/// `facets` are the facets relative to the affine hull; `equations` cut out the
/// affine hull itself and are empty for full-dimensional polytopes. Vertices are
/// kept sorted lexicographically. The empty polytope has no vertices and
/// dimension -1.
class Polytope {
 public:
  Polytope() = default;

  static Polytope empty(Eigen::Index ambient_dim);

  Eigen::Index ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  bool is_empty() const { return vertices_.empty(); }
  bool is_full_dimensional() const { return dim_ == ambient_; }

  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& facets() const { return facets_; }
  const std::vector<Halfspace>& equations() const { return equations_; }

  /// All inequalities of the H-representation, equations expanded into pairs.
  std::vector<Halfspace> inequalities() const;

  friend bool operator==(const Polytope& a, const Polytope& b);

 private:
  friend Polytope convex_hull(std::vector<Point> points);

  Eigen::Index ambient_ = 0;
  int dim_ = -1;
  std::vector<Point> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<Halfspace> equations_;
};

/// Convex hull with irredundant vertices and facets. Lower-dimensional hulls are
/// supported. Throws DimensionError on mixed ambient dimensions or empty input.
Polytope convex_hull(std::vector<Point> points);

/// Polytope cut out by `<a, x> <= b` for each inequality and `<a, x> = b` for
/// each equation. Returns the empty polytope for infeasible systems and throws
/// std::domain_error when the set is unbounded.
Polytope from_halfspaces(Eigen::Index ambient_dim, const std::vector<Halfspace>& inequalities,
                         const std::vector<Halfspace>& equations = {});

/// Vertices of {x : <a, x> <= b} by the double description method; see
/// from_halfspaces for the error contract.
std::vector<Point> enumerate_vertices(Eigen::Index ambient_dim, const std::vector<Halfspace>& inequalities);

/// Exact n-dimensional Lebesgue measure. Zero for lower-dimensional polytopes.
Rational volume(const Polytope& p);

/// n! * volume(p).
Rational normalized_volume(const Polytope& p);

enum class Containment { kClosed, kRelativeInterior };

bool contains(const Polytope& p, const Point& x, Containment mode = Containment::kClosed);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope intersection(const Polytope& p, const Polytope& q);

Polytope translate(const Polytope& p, const Vector& offset);
Polytope scale(const Polytope& p, const Rational& factor);
/// Image under x -> a x + b for square a.
Polytope affine_image(const Polytope& p, const Matrix& a, const Vector& b);

/// Faces one dimension down, each as a polytope.
std::vector<Polytope> facet_polytopes(const Polytope& p);

/// Every nonempty face, including p itself, deduplicated and sorted by
/// (dimension, vertex list).
std::vector<Polytope> all_faces(const Polytope& p);

/// Simplices of the pulling triangulation from `apex` (a vertex of p), with the
/// lexicographically smallest vertex pulled in every lower-dimensional face.
std::vector<std::vector<Point>> triangulate(const Polytope& p, const Point& apex);
std::vector<std::vector<Point>> triangulate(const Polytope& p);

Rational simplex_volume(const std::vector<Point>& simplex);

Point vertex_centroid(const Polytope& p);

/// Axis-aligned box [lo_1, hi_1] x ... x [lo_n, hi_n].
Polytope box(const Vector& lo, const Vector& hi);
Polytope cube(Eigen::Index n, const Rational& lo, const Rational& hi);
Polytope standard_simplex(Eigen::Index n);

}  // namespace monge
