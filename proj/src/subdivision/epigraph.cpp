// The truncated epigraph P = {(x, t) : x in domain, h(x) <= t <= T} is given by
// the inequalities
//   <m_i, x> - t <= -c_i     (one per piece),
//   <a_j, x>     <= b_j      (domain facets),
//          t     <= T        (cap).
// Its vertices are found through the polar of P about an interior point y0:
// each inequality <a, y> <= b becomes the dual point a / (b - <a, y0>), dual
// facets are primal vertices, and the dual points on a dual facet are exactly
// the inequalities tight at that vertex. Inequalities that are facets of P are
// the extreme dual points; for pieces these are the ones whose activity region
// is full-dimensional.

#include "monge/subdivision/epigraph.hpp"

#include "monge/core/hull.hpp"

#include <algorithm>
#include <map>

namespace monge {

namespace {

struct PieceLess {
  bool operator()(const AffineFunctional* a, const AffineFunctional* b) const {
    auto c = lex_compare(a->slope, b->slope);
    if (c != 0) return c < 0;
    return a->intercept < b->intercept;
  }
};

}  // namespace

EpigraphLift lift_epigraph(const PAConvexFunction& h) {
  const Eigen::Index n = h.ambient_dim();
  const auto& pieces = h.pieces();
  const auto& domain = h.domain();

  // Identical pieces share one dual point.
  std::vector<std::size_t> group_of(pieces.size());
  std::vector<std::vector<std::size_t>> groups;
  {
    std::map<const AffineFunctional*, std::size_t, PieceLess> seen;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      auto [it, fresh] = seen.emplace(&pieces[i], groups.size());
      if (fresh) groups.emplace_back();
      group_of[i] = it->second;
      groups[it->second].push_back(i);
    }
  }
  const std::size_t g = groups.size();
  const std::size_t f = domain.facets().size();
  const std::size_t cap_index = g + f;

  const Point centre = vertex_centroid(domain);
  Rational top = h(domain.vertices().front());
  for (const auto& v : domain.vertices()) top = std::max(top, h(v));
  const Rational t0 = top + 1;
  const Rational cap = top + 2;
  Vector y0(n + 1);
  y0.head(n) = centre;
  y0(n) = t0;

  std::vector<Vector> dual;
  dual.reserve(cap_index + 1);
  auto push_dual = [&](Vector a, const Rational& b) {
    const Rational slack = b - a.dot(y0);
    dual.push_back(a / slack);
  };
  for (const auto& members : groups) {
    const auto& p = pieces[members.front()];
    Vector a(n + 1);
    a.head(n) = p.slope;
    a(n) = Rational(-1);
    push_dual(std::move(a), -p.intercept);
  }
  for (const auto& facet : domain.facets()) {
    Vector a = Vector::Zero(n + 1);
    a.head(n) = facet.normal;
    push_dual(std::move(a), facet.offset);
  }
  {
    Vector a = Vector::Zero(n + 1);
    a(n) = Rational(1);
    push_dual(std::move(a), cap);
  }

  const HullResult hull = quickhull(dual);
  std::vector<bool> extreme(dual.size(), false);
  for (auto i : hull.vertices) extreme[i] = true;

  EpigraphLift out;
  for (const auto& facet : hull.facets) {
    if (std::binary_search(facet.points.begin(), facet.points.end(), cap_index)) continue;
    const Vector y = y0 + facet.normal / facet.offset;
    EpigraphVertex v;
    v.x = y.head(n);
    v.value = y(n);
    for (auto idx : facet.points) {
      if (idx < g) {
        v.pieces.insert(v.pieces.end(), groups[idx].begin(), groups[idx].end());
      } else {
        v.domain_facets.push_back(idx - g);
      }
    }
    out.vertices.push_back(std::move(v));
  }

  // Pieces that are not facets of P may be missing from the dual facet lists.
  for (std::size_t k = 0; k < g; ++k) {
    if (extreme[k]) continue;
    const auto& p = pieces[groups[k].front()];
    for (auto& v : out.vertices) {
      if (p(v.x) == v.value) v.pieces.insert(v.pieces.end(), groups[k].begin(), groups[k].end());
    }
  }
  for (auto& v : out.vertices) {
    std::sort(v.pieces.begin(), v.pieces.end());
    v.pieces.erase(std::unique(v.pieces.begin(), v.pieces.end()), v.pieces.end());
  }
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const EpigraphVertex& a, const EpigraphVertex& b) { return lex_less(a.x, b.x); });

  out.full_dimensional.assign(pieces.size(), false);
  for (std::size_t k = 0; k < g; ++k) out.full_dimensional[groups[k].front()] = extreme[k];
  return out;
}

}  // namespace monge
