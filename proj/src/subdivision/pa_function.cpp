#include "monge/subdivision/pa_function.hpp"

#include "monge/subdivision/epigraph.hpp"

#include <map>
#include <stdexcept>

namespace monge {

PAConvexFunction::PAConvexFunction(std::vector<AffineFunctional> pieces, Polytope domain)
    : pieces_(std::move(pieces)), domain_(std::move(domain)) {
  if (pieces_.empty()) throw std::invalid_argument("PAConvexFunction: empty piece list");
  if (domain_.is_empty() || !domain_.is_full_dimensional()) {
    throw std::invalid_argument("PAConvexFunction: domain must be a full-dimensional polytope");
  }
  for (const auto& p : pieces_) {
    if (p.slope.size() != domain_.ambient_dim()) throw DimensionError("PAConvexFunction: slope dimension mismatch");
  }
}

PAConvexFunction PAConvexFunction::affine(AffineFunctional a, Polytope domain) {
  return PAConvexFunction({std::move(a)}, std::move(domain));
}

Rational PAConvexFunction::operator()(const Point& x) const {
  if (x.size() != ambient_dim()) throw DimensionError("PAConvexFunction: point dimension mismatch");
  Rational best = pieces_.front()(x);
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    Rational v = pieces_[i](x);
    if (v > best) best = std::move(v);
  }
  return best;
}

std::vector<std::size_t> PAConvexFunction::active_pieces(const Point& x) const {
  const Rational value = (*this)(x);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    if (pieces_[i](x) == value) out.push_back(i);
  return out;
}

PAConvexFunction canonicalize(const PAConvexFunction& h) {
  if (h.pieces().size() == 1) return h;
  const EpigraphLift lift = lift_epigraph(h);
  std::vector<AffineFunctional> kept;
  for (std::size_t i = 0; i < h.pieces().size(); ++i)
    if (lift.full_dimensional[i]) kept.push_back(h.pieces()[i]);
  return PAConvexFunction(std::move(kept), h.domain());
}

PAConvexFunction operator+(const PAConvexFunction& h1, const PAConvexFunction& h2) {
  if (!(h1.domain() == h2.domain())) throw std::invalid_argument("sum of PA functions: domain mismatch");
  // Among sums sharing a slope only the largest intercept can be active.
  std::map<Vector, Rational, LexLess> best;
  for (const auto& a : h1.pieces())
    for (const auto& b : h2.pieces()) {
      const Rational c = a.intercept + b.intercept;
      auto [it, inserted] = best.try_emplace(Vector(a.slope + b.slope), c);
      if (!inserted && it->second < c) it->second = c;
    }
  std::vector<AffineFunctional> pieces;
  pieces.reserve(best.size());
  for (auto& [slope, c] : best) pieces.push_back({slope, c});
  return canonicalize(PAConvexFunction(std::move(pieces), h1.domain()));
}

PAConvexFunction operator*(const Rational& t, const PAConvexFunction& h) {
  if (t <= 0) throw std::invalid_argument("scaling a PA convex function requires t > 0");
  std::vector<AffineFunctional> pieces;
  for (const auto& p : h.pieces()) pieces.push_back({p.slope * t, p.intercept * t});
  return PAConvexFunction(std::move(pieces), h.domain());
}

PAConvexFunction operator+(const PAConvexFunction& h, const AffineFunctional& a) {
  if (a.slope.size() != h.ambient_dim()) throw DimensionError("adding affine function: dimension mismatch");
  std::vector<AffineFunctional> pieces;
  for (const auto& p : h.pieces()) pieces.push_back({p.slope + a.slope, p.intercept + a.intercept});
  return PAConvexFunction(std::move(pieces), h.domain());
}

PAConvexFunction recentre(const PAConvexFunction& h, const Point& u) {
  const Rational hu = h(u);
  std::vector<AffineFunctional> pieces;
  for (const auto& p : h.pieces()) pieces.push_back({p.slope, p.slope.dot(u) + p.intercept - hu});
  return PAConvexFunction(std::move(pieces), translate(h.domain(), Vector(-u)));
}

}  // namespace monge
