#include "monge/core/polytope.hpp"

#include "monge/core/hull.hpp"
#include "monge/core/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace monge {

namespace {

Vector unit(Eigen::Index n, Eigen::Index i, const Rational& s = Rational(1)) {
  Vector v = Vector::Zero(n);
  v(i) = s;
  return v;
}

}  // namespace

Polytope Polytope::empty(Eigen::Index ambient_dim) {
  Polytope p;
  p.ambient_ = ambient_dim;
  return p;
}

std::vector<Halfspace> Polytope::inequalities() const {
  std::vector<Halfspace> out = facets_;
  for (const auto& e : equations_) {
    out.push_back(e);
    out.push_back({-e.normal, -e.offset});
  }
  return out;
}

bool operator==(const Polytope& a, const Polytope& b) {
  if (a.ambient_ != b.ambient_ || a.vertices_.size() != b.vertices_.size()) return false;
  for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
    if (!equal(a.vertices_[i], b.vertices_[i])) return false;
  }
  return true;
}

Polytope convex_hull(std::vector<Point> points) {
  if (points.empty()) throw DimensionError("convex_hull: empty point list");
  const Eigen::Index n = points.front().size();
  if (n < 1) throw DimensionError("convex_hull: ambient dimension must be positive");
  for (const auto& p : points) {
    if (p.size() != n) throw DimensionError("convex_hull: mixed ambient dimensions");
  }
  std::sort(points.begin(), points.end(), LexLess{});
  points.erase(std::unique(points.begin(), points.end(), [](const Point& a, const Point& b) { return equal(a, b); }),
               points.end());

  Polytope out;
  out.ambient_ = n;
  const auto basis = affine_basis(points);
  const Eigen::Index k = static_cast<Eigen::Index>(basis.size()) - 1;
  out.dim_ = static_cast<int>(k);
  const Point& origin = points[basis[0]];

  // Affine hull equations and a coordinate projection injective on it.
  std::vector<Eigen::Index> coords;
  if (k == 0) {
    for (Eigen::Index i = 0; i < n; ++i) out.equations_.push_back({unit(n, i), origin(i)});
    out.vertices_ = {origin};
    return out;
  }
  {
    Matrix diffs(k, n);
    for (Eigen::Index r = 0; r < k; ++r) diffs.row(r) = (points[basis[static_cast<std::size_t>(r + 1)]] - origin).transpose();
    const auto ech = row_reduce(diffs);
    coords = ech.pivots;
    if (k < n) {
      const Matrix normals = nullspace(diffs);
      for (Eigen::Index c = 0; c < normals.cols(); ++c) {
        Vector a = primitive(Vector(normals.col(c)));
        out.equations_.push_back({a, a.dot(origin)});
      }
    }
  }

  auto lift = [&](const Vector& projected_normal) {
    Vector a = Vector::Zero(n);
    for (std::size_t j = 0; j < coords.size(); ++j) a(coords[j]) = projected_normal(static_cast<Eigen::Index>(j));
    return a;
  };

  if (k == 1) {
    const Eigen::Index c = coords[0];
    std::size_t lo = 0;
    std::size_t hi = 0;
    for (std::size_t i = 1; i < points.size(); ++i) {
      if (points[i](c) < points[lo](c)) lo = i;
      if (points[i](c) > points[hi](c)) hi = i;
    }
    out.vertices_ = {points[lo], points[hi]};
    std::sort(out.vertices_.begin(), out.vertices_.end(), LexLess{});
    out.facets_.push_back({unit(n, c), points[hi](c)});
    out.facets_.push_back({unit(n, c, Rational(-1)), -points[lo](c)});
    return out;
  }

  std::vector<Vector> projected;
  projected.reserve(points.size());
  for (const auto& p : points) {
    Vector y(k);
    for (Eigen::Index j = 0; j < k; ++j) y(j) = p(coords[static_cast<std::size_t>(j)]);
    projected.push_back(std::move(y));
  }
  const HullResult hull = quickhull(projected);
  for (auto idx : hull.vertices) out.vertices_.push_back(points[idx]);
  std::sort(out.vertices_.begin(), out.vertices_.end(), LexLess{});
  for (const auto& f : hull.facets) out.facets_.push_back({lift(f.normal), f.offset});
  return out;
}

Polytope from_halfspaces(Eigen::Index ambient_dim, const std::vector<Halfspace>& inequalities,
                         const std::vector<Halfspace>& equations) {
  std::vector<Halfspace> all = inequalities;
  for (const auto& e : equations) {
    all.push_back(e);
    all.push_back({-e.normal, -e.offset});
  }
  auto verts = enumerate_vertices(ambient_dim, all);
  if (verts.empty()) return Polytope::empty(ambient_dim);
  return convex_hull(std::move(verts));
}

Rational simplex_volume(const std::vector<Point>& simplex) {
  const Eigen::Index n = simplex.front().size();
  if (static_cast<Eigen::Index>(simplex.size()) != n + 1) return Rational(0);
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m.row(i) = (simplex[static_cast<std::size_t>(i + 1)] - simplex[0]).transpose();
  Rational det = determinant(m);
  if (det < 0) det = -det;
  return det / factorial(static_cast<int>(n));
}

std::vector<std::vector<Point>> triangulate(const Polytope& p, const Point& apex) {
  if (p.is_empty()) return {};
  if (p.dim() == 0) return {{p.vertices().front()}};
  std::vector<std::vector<Point>> out;
  for (const auto& face : facet_polytopes(p)) {
    if (contains(face, apex)) continue;
    for (auto& s : triangulate(face)) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<std::vector<Point>> triangulate(const Polytope& p) {
  if (p.is_empty()) return {};
  return triangulate(p, p.vertices().front());
}

Rational volume(const Polytope& p) {
  if (p.is_empty() || !p.is_full_dimensional()) return Rational(0);
  Rational total(0);
  for (const auto& s : triangulate(p)) total += simplex_volume(s);
  return total;
}

Rational normalized_volume(const Polytope& p) {
  return factorial(static_cast<int>(p.ambient_dim())) * volume(p);
}

bool contains(const Polytope& p, const Point& x, Containment mode) {
  if (x.size() != p.ambient_dim()) throw DimensionError("contains: dimension mismatch");
  if (p.is_empty()) return false;
  for (const auto& e : p.equations()) {
    if (e.normal.dot(x) != e.offset) return false;
  }
  for (const auto& f : p.facets()) {
    const Rational s = f.slack(x);
    if (s < 0 || (mode == Containment::kRelativeInterior && s == 0)) return false;
  }
  return true;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw DimensionError("minkowski_sum: dimension mismatch");
  if (p.is_empty() || q.is_empty()) return Polytope::empty(p.ambient_dim());
  std::vector<Point> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(a + b);
  return convex_hull(std::move(sums));
}

Polytope intersection(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw DimensionError("intersection: dimension mismatch");
  if (p.is_empty() || q.is_empty()) return Polytope::empty(p.ambient_dim());
  std::vector<Halfspace> ineq = p.facets();
  ineq.insert(ineq.end(), q.facets().begin(), q.facets().end());
  std::vector<Halfspace> eqs = p.equations();
  eqs.insert(eqs.end(), q.equations().begin(), q.equations().end());
  return from_halfspaces(p.ambient_dim(), ineq, eqs);
}

Polytope translate(const Polytope& p, const Vector& offset) {
  if (p.is_empty()) return p;
  std::vector<Point> v;
  for (const auto& x : p.vertices()) v.push_back(x + offset);
  return convex_hull(std::move(v));
}

Polytope scale(const Polytope& p, const Rational& factor) {
  if (p.is_empty()) return p;
  std::vector<Point> v;
  for (const auto& x : p.vertices()) v.push_back(x * factor);
  return convex_hull(std::move(v));
}

Polytope affine_image(const Polytope& p, const Matrix& a, const Vector& b) {
  if (p.is_empty()) return p;
  std::vector<Point> v;
  for (const auto& x : p.vertices()) v.push_back(a * x + b);
  return convex_hull(std::move(v));
}

std::vector<Polytope> facet_polytopes(const Polytope& p) {
  std::vector<Polytope> out;
  if (p.dim() <= 0) return out;
  for (const auto& f : p.facets()) {
    std::vector<Point> on;
    for (const auto& v : p.vertices())
      if (f.slack(v) == 0) on.push_back(v);
    out.push_back(convex_hull(std::move(on)));
  }
  return out;
}

std::vector<Polytope> all_faces(const Polytope& p) {
  if (p.is_empty()) return {};
  auto key_less = [](const Polytope& a, const Polytope& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    const auto& va = a.vertices();
    const auto& vb = b.vertices();
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end(), LexLess{});
  };
  std::set<Polytope, decltype(key_less)> seen(key_less);
  std::vector<Polytope> frontier{p};
  seen.insert(p);
  while (!frontier.empty()) {
    Polytope f = std::move(frontier.back());
    frontier.pop_back();
    for (auto& g : facet_polytopes(f)) {
      if (seen.insert(g).second) frontier.push_back(std::move(g));
    }
  }
  return {seen.begin(), seen.end()};
}

Point vertex_centroid(const Polytope& p) {
  if (p.is_empty()) throw std::domain_error("vertex_centroid: empty polytope");
  Point c = Point::Zero(p.ambient_dim());
  for (const auto& v : p.vertices()) c += v;
  return c / Rational(static_cast<long>(p.vertices().size()));
}

Polytope box(const Vector& lo, const Vector& hi) {
  if (lo.size() != hi.size()) throw DimensionError("box: dimension mismatch");
  const Eigen::Index n = lo.size();
  std::vector<Point> corners;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    Point c(n);
    for (Eigen::Index i = 0; i < n; ++i) c(i) = (mask >> i) & 1ul ? hi(i) : lo(i);
    corners.push_back(std::move(c));
  }
  return convex_hull(std::move(corners));
}

Polytope cube(Eigen::Index n, const Rational& lo, const Rational& hi) {
  return box(Vector::Constant(n, lo), Vector::Constant(n, hi));
}

Polytope standard_simplex(Eigen::Index n) {
  std::vector<Point> v{Point::Zero(n)};
  for (Eigen::Index i = 0; i < n; ++i) v.push_back(unit(n, i));
  return convex_hull(std::move(v));
}

}  // namespace monge
