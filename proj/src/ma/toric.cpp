#include "monge/ma/toric.hpp"

#include "monge/ma/monge_ampere.hpp"
#include "monge/subdivision/epigraph.hpp"

#include <stdexcept>

namespace monge {

DegreeReport toric_degree(const PAConvexFunction& h, const Point& u, std::uint64_t deg_s) {
  if (deg_s == 0) throw std::invalid_argument("toric_degree: deg_s must be a positive integer");
  const Eigen::Index n = h.ambient_dim();
  if (u.size() != n) throw DimensionError("toric_degree: dimension mismatch");
  if (!contains(h.domain(), u)) throw std::domain_error("toric_degree: " + to_string(u) + " outside the domain");
  if (!contains(h.domain(), u, Containment::kRelativeInterior)) {
    throw BoundaryPointError("toric_degree: " + to_string(u) + " on the domain boundary");
  }
  const EpigraphLift lift = lift_epigraph(h);
  bool is_vertex = false;
  for (const auto& v : lift.vertices) is_vertex = is_vertex || equal(v.x, u);
  if (!is_vertex) throw std::invalid_argument("toric_degree: " + to_string(u) + " is not a vertex of the linearity complex");

  DegreeReport r;
  r.vertex = u;
  r.deg_s = deg_s;
  r.subdifferential = subdifferential(h, lift, u, VertexScope::kAll);
  r.ma_mass = volume(r.subdifferential);
  const Rational multiplier{Integer(deg_s)};
  r.toric_degree = multiplier * normalized_volume(r.subdifferential);
  if (r.toric_degree != multiplier * factorial(static_cast<int>(n)) * r.ma_mass) {
    throw ConsistencyError("toric_degree: normalized volume does not match n! * MA mass");
  }

  for (const auto& p : h.pieces())
    for (Eigen::Index i = 0; i < n; ++i) r.rescale = boost::multiprecision::lcm(r.rescale, Integer(denominator(p.slope(i))));
  const Rational lattice = multiplier * normalized_volume(scale(r.subdifferential, Rational(r.rescale)));
  if (denominator(lattice) != 1) throw ConsistencyError("toric_degree: lattice degree is not an integer");
  r.lattice_degree = numerator(lattice);
  Rational ln(1);
  for (Eigen::Index i = 0; i < n; ++i) ln *= Rational(r.rescale);
  if (lattice != ln * r.toric_degree) throw ConsistencyError("toric_degree: rescaled degree mismatch");

  const PAConvexFunction centred = recentre(h, u);
  const Polytope at_origin = subdifferential(centred, Point::Zero(n), VertexScope::kAll);
  if (!(at_origin == r.subdifferential)) {
    throw ConsistencyError("toric_degree: gradient image of the recentred function differs at " + to_string(u));
  }
  r.translation_verified = true;
  return r;
}

Rational mixed_toric_degree(const std::vector<PAConvexFunction>& hs, const Point& u, std::uint64_t deg_s) {
  if (deg_s == 0) throw std::invalid_argument("mixed_toric_degree: deg_s must be a positive integer");
  const AtomicMeasure mixed = mixed_ma(hs);
  return Rational(Integer(deg_s)) * factorial(static_cast<int>(u.size())) * mixed.mass_at(u);
}

}  // namespace monge
