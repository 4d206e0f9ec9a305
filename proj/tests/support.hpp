#pragma once

#include "monge/core/polytope.hpp"
#include "monge/subdivision/pa_function.hpp"

#include <random>
#include <vector>

namespace monge::testing {

inline Rational q(long num, long den = 1) { return Rational(num) / Rational(den); }

inline Point pt(std::initializer_list<Rational> c) { return make_point(c); }

/// Random rational point with coordinates k/den, |k| <= range.
inline Point random_point(std::mt19937& rng, Eigen::Index n, long range, long den = 1) {
  std::uniform_int_distribution<long> dist(-range, range);
  Point p(n);
  for (Eigen::Index i = 0; i < n; ++i) p(i) = Rational(dist(rng)) / Rational(den);
  return p;
}

inline std::vector<Point> random_points(std::mt19937& rng, std::size_t count, Eigen::Index n, long range,
                                        long den = 1) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_point(rng, n, range, den));
  return out;
}

/// Shoelace area of a convex polygon given by its (unordered) vertex set.
Rational shoelace_area(std::vector<Point> vertices);

inline AffineFunctional aff(std::initializer_list<Rational> slope, const Rational& intercept) {
  return {make_point(slope), intercept};
}

/// max of `pieces` random integral affine functions on [-range, range]^n.
inline PAConvexFunction random_pa(std::mt19937& rng, Eigen::Index n, std::size_t pieces, long slope_range = 3,
                                  long intercept_range = 4, long domain_range = 2) {
  std::uniform_int_distribution<long> s(-slope_range, slope_range);
  std::uniform_int_distribution<long> c(-intercept_range, intercept_range);
  std::vector<AffineFunctional> out;
  for (std::size_t i = 0; i < pieces; ++i) {
    Vector m(n);
    for (Eigen::Index j = 0; j < n; ++j) m(j) = Rational(s(rng));
    out.push_back({m, Rational(c(rng))});
  }
  return PAConvexFunction(std::move(out), cube(n, Rational(-domain_range), Rational(domain_range)));
}

/// Same pieces on a cube large enough that every vertex of the unrestricted
/// complex lies in its interior.
PAConvexFunction with_roomy_domain(const PAConvexFunction& h);

}  // namespace monge::testing
