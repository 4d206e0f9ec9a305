// Vertex enumeration by the double description method on the homogenized cone
//   { (x, s) : <a, x> - b s <= 0 for each inequality, s >= 0 },
// whose rays with s > 0 are the vertices and rays with s = 0 the recession
// directions.

#include "monge/core/linalg.hpp"
#include "monge/core/polytope.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <stdexcept>

namespace monge {

namespace {

struct Ray {
  Vector dir;
  boost::dynamic_bitset<> tight;
};

}  // namespace

std::vector<Point> enumerate_vertices(Eigen::Index n, const std::vector<Halfspace>& inequalities) {
  const Eigen::Index d = n + 1;
  std::vector<Vector> rows;
  {
    Vector s_row = Vector::Zero(d);
    s_row(n) = Rational(-1);
    rows.push_back(std::move(s_row));
  }
  for (const auto& h : inequalities) {
    if (h.normal.size() != n) throw DimensionError("enumerate_vertices: dimension mismatch");
    Vector r(d);
    r.head(n) = h.normal;
    r(n) = -h.offset;
    rows.push_back(primitive(r));
  }

  // Lineality of the cone lies in {s = 0}; cutting it away keeps the cone
  // pointed and leaves the vertex set unchanged.
  {
    Matrix a(static_cast<Eigen::Index>(rows.size()), d);
    for (std::size_t i = 0; i < rows.size(); ++i) a.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
    const Matrix lineality = nullspace(a);
    for (Eigen::Index c = 0; c < lineality.cols(); ++c) {
      Vector l = primitive(Vector(lineality.col(c)));
      rows.push_back(l);
      rows.push_back(-l);
    }
  }

  const std::size_t m = rows.size();
  Matrix all(static_cast<Eigen::Index>(m), d);
  for (std::size_t i = 0; i < m; ++i) all.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  const auto seed = independent_rows(all);
  if (static_cast<Eigen::Index>(seed.size()) != d) throw std::logic_error("enumerate_vertices: cone not pointed");

  // Seed cone {y : R y <= 0}: ray j is tight on every seed row except j.
  Matrix r(d, d);
  for (Eigen::Index i = 0; i < d; ++i) r.row(i) = all.row(seed[static_cast<std::size_t>(i)]);
  std::vector<Ray> rays;
  for (Eigen::Index j = 0; j < d; ++j) {
    Vector rhs = Vector::Zero(d);
    rhs(j) = Rational(-1);
    auto y = solve(r, rhs);
    if (!y) throw std::logic_error("enumerate_vertices: singular seed");
    Ray ray{primitive(*y), boost::dynamic_bitset<>(m)};
    for (Eigen::Index i = 0; i < d; ++i)
      if (i != j) ray.tight.set(static_cast<std::size_t>(seed[static_cast<std::size_t>(i)]));
    rays.push_back(std::move(ray));
  }

  std::vector<bool> done(m, false);
  for (auto s : seed) done[static_cast<std::size_t>(s)] = true;

  for (std::size_t row = 0; row < m && !rays.empty(); ++row) {
    if (done[row]) continue;
    done[row] = true;
    const Vector& a = rows[row];
    std::vector<Rational> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      value[k] = a.dot(rays[k].dir);
      if (value[k] > 0) pos.push_back(k);
      else if (value[k] < 0) neg.push_back(k);
      else rays[k].tight.set(row);
    }
    if (pos.empty()) continue;

    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k)
      if (value[k] <= 0) next.push_back(rays[k]);

    for (auto p : pos) {
      for (auto q : neg) {
        boost::dynamic_bitset<> common = rays[p].tight & rays[q].tight;
        if (static_cast<Eigen::Index>(common.count()) < d - 2) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == q) continue;
          if (common.is_subset_of(rays[k].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        Vector dir = value[p] * rays[q].dir - value[q] * rays[p].dir;
        common.set(row);
        next.push_back({primitive(dir), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  std::vector<Point> vertices;
  bool recession = false;
  for (const auto& ray : rays) {
    const Rational s = ray.dir(n);
    if (s == 0) {
      recession = true;
      continue;
    }
    vertices.push_back(Vector(ray.dir.head(n)) / s);
  }
  // An empty set has no recession directions to speak of.
  if (recession && !vertices.empty()) throw std::domain_error("enumerate_vertices: constraint set is unbounded");
  std::sort(vertices.begin(), vertices.end(), LexLess{});
  vertices.erase(std::unique(vertices.begin(), vertices.end(), [](const Point& x, const Point& y) { return equal(x, y); }),
                 vertices.end());
  return vertices;
}

}  // namespace monge
