#include "support.hpp"

#include "monge/subdivision/complex.hpp"

#include <algorithm>

namespace monge::testing {

Rational shoelace_area(std::vector<Point> v) {
  if (v.size() < 3) return Rational(0);
  // Order by angle around the lowest point using exact cross products.
  std::sort(v.begin(), v.end(), LexLess{});
  const Point o = v.front();
  std::sort(v.begin() + 1, v.end(), [&](const Point& a, const Point& b) {
    Rational cross = (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
    return cross > 0;
  });
  Rational twice(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    twice += a(0) * b(1) - a(1) * b(0);
  }
  if (twice < 0) twice = -twice;
  return twice / 2;
}

PAConvexFunction with_roomy_domain(const PAConvexFunction& h) {
  const Eigen::Index n = h.ambient_dim();
  const PAConvexFunction huge(h.pieces(), cube(n, Rational(-100000), Rational(100000)));
  Rational r(1);
  for (const auto& v : interior_vertices(linearity_complex(huge)))
    for (Eigen::Index i = 0; i < n; ++i) r = std::max(r, Rational(abs(v(i)) + 1));
  return PAConvexFunction(h.pieces(), cube(n, -r, r));
}

}  // namespace monge::testing
