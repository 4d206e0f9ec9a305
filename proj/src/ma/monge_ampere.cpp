#include "monge/ma/monge_ampere.hpp"

#include "monge/core/parallel.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>

namespace monge {

namespace {

// piece index -> indices of lift vertices where that piece is active
std::vector<std::vector<std::size_t>> vertices_by_piece(const PAConvexFunction& h, const EpigraphLift& lift) {
  std::vector<std::vector<std::size_t>> out(h.pieces().size());
  for (std::size_t k = 0; k < lift.vertices.size(); ++k)
    for (auto p : lift.vertices[k].pieces) out[p].push_back(k);
  return out;
}

void require_interior(const PAConvexFunction& h, const Point& x0) {
  if (x0.size() != h.ambient_dim()) throw DimensionError("subdifferential: dimension mismatch");
  if (!contains(h.domain(), x0)) throw std::domain_error("subdifferential: point " + to_string(x0) + " outside the domain");
  if (!contains(h.domain(), x0, Containment::kRelativeInterior)) {
    throw BoundaryPointError("subdifferential: point " + to_string(x0) + " on the domain boundary");
  }
}

Polytope gradient_image(const PAConvexFunction& h, const EpigraphLift& lift,
                        const std::vector<std::vector<std::size_t>>& by_piece, const Point& x0, const Rational& hx0,
                        const std::vector<std::size_t>& active, VertexScope scope) {
  std::vector<Point> slopes;
  for (auto i : active) slopes.push_back(h.pieces()[i].slope);
  Polytope from_slopes = convex_hull(std::move(slopes));

  std::vector<std::size_t> support;
  if (scope == VertexScope::kAll) {
    support.resize(lift.vertices.size());
    for (std::size_t k = 0; k < support.size(); ++k) support[k] = k;
  } else {
    for (auto i : active) support.insert(support.end(), by_piece[i].begin(), by_piece[i].end());
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
  }
  std::vector<Halfspace> constraints;
  for (auto k : support) {
    const auto& v = lift.vertices[k];
    if (equal(v.x, x0)) continue;
    constraints.push_back({v.x - x0, v.value - hx0});
  }
  Polytope from_vertices;
  try {
    from_vertices = from_halfspaces(h.ambient_dim(), constraints);
  } catch (const std::domain_error&) {
    throw ConsistencyError("subdifferential: supporting constraints unbounded at interior point " + to_string(x0));
  }
  if (!(from_vertices == from_slopes)) {
    throw ConsistencyError("subdifferential: vertex-constraint and active-slope routes disagree at " + to_string(x0));
  }
  return from_slopes;
}

}  // namespace

Polytope subdifferential(const PAConvexFunction& h, const Point& x0, VertexScope scope) {
  require_interior(h, x0);
  return subdifferential(h, lift_epigraph(h), x0, scope);
}

Polytope subdifferential(const PAConvexFunction& h, const EpigraphLift& lift, const Point& x0, VertexScope scope) {
  require_interior(h, x0);
  const auto by_piece = vertices_by_piece(h, lift);
  return gradient_image(h, lift, by_piece, x0, h(x0), h.active_pieces(x0), scope);
}

AtomicMeasure ma_measure(const PAConvexFunction& h) {
  const Eigen::Index n = h.ambient_dim();
  const EpigraphLift lift = lift_epigraph(h);
  const auto by_piece = vertices_by_piece(h, lift);
  std::vector<std::size_t> interior;
  for (std::size_t k = 0; k < lift.vertices.size(); ++k)
    if (lift.vertices[k].interior()) interior.push_back(k);

  std::vector<Atom> atoms(interior.size());
  parallel_for(interior.size(), [&](std::size_t j) {
    const auto& v = lift.vertices[interior[j]];
    const Polytope grad = gradient_image(h, lift, by_piece, v.x, v.value, v.pieces, VertexScope::kStar);
    atoms[j] = {v.x, volume(grad)};
  });
  return AtomicMeasure(n, std::move(atoms));
}

AtomicMeasure mixed_ma(const std::vector<PAConvexFunction>& hs) {
  if (hs.empty()) throw std::invalid_argument("mixed_ma: no functions");
  const Eigen::Index n = hs.front().ambient_dim();
  if (static_cast<Eigen::Index>(hs.size()) != n) {
    throw std::invalid_argument("mixed_ma: expected " + std::to_string(n) + " functions, got " + std::to_string(hs.size()));
  }
  for (const auto& h : hs) {
    if (!(h.domain() == hs.front().domain())) throw std::invalid_argument("mixed_ma: domain mismatch");
  }

  // Repeated arguments share a class; a subset drawing from a single class
  // sums to k * f, whose measure is k^n times that of f.
  std::vector<PAConvexFunction> reduced;
  std::vector<std::size_t> cls;
  for (const auto& h : hs) {
    reduced.push_back(canonicalize(h));
    std::size_t c = 0;
    while (!(reduced[c].pieces() == reduced.back().pieces())) ++c;
    cls.push_back(c);
  }
  std::map<std::size_t, AtomicMeasure> single;

  std::map<Point, Rational, LexLess> signed_mass;
  const unsigned long subsets = 1ul << n;
  for (unsigned long mask = 1; mask < subsets; ++mask) {
    std::map<std::size_t, long> counts;
    int k = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!((mask >> i) & 1ul)) continue;
      ++k;
      ++counts[cls[static_cast<std::size_t>(i)]];
    }
    std::vector<Atom> atoms;
    if (counts.size() == 1) {
      const auto [c, m] = *counts.begin();
      auto it = single.find(c);
      if (it == single.end()) it = single.emplace(c, ma_measure(reduced[c])).first;
      Rational factor(1);
      for (Eigen::Index i = 0; i < n; ++i) factor *= m;
      for (const auto& a : it->second.atoms()) atoms.push_back({a.point, a.mass * factor});
    } else {
      std::optional<PAConvexFunction> sum;
      for (const auto& [c, m] : counts) {
        const PAConvexFunction term = m == 1 ? reduced[c] : Rational(m) * reduced[c];
        sum = sum ? *sum + term : term;
      }
      atoms = ma_measure(*sum).atoms();
    }
    const bool negative = (n - k) % 2 == 1;
    for (const auto& a : atoms) {
      auto& m = signed_mass[a.point];
      m += negative ? Rational(-a.mass) : a.mass;
    }
  }

  const Rational nf = factorial(static_cast<int>(n));
  std::vector<Atom> atoms;
  for (auto& [p, m] : signed_mass) {
    if (m < 0) throw ConsistencyError("mixed_ma: negative mass " + to_string(m) + " at " + to_string(p));
    if (m == 0) continue;
    atoms.push_back({p, m / nf});
  }
  return AtomicMeasure(n, std::move(atoms));
}

}  // namespace monge
