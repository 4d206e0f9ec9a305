#include "doctest.h"
#include "support.hpp"

#include "monge/core/hull.hpp"
#include "monge/core/linalg.hpp"
#include "monge/core/polytope.hpp"

using namespace monge;
using monge::testing::pt;
using monge::testing::q;

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("3/6") == q(1, 2));
  CHECK(parse_rational("-4") == q(-4));
  CHECK(parse_rational("-0.25") == q(-1, 4));
  CHECK(parse_rational(" 7 ") == q(7));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK(to_string(q(6, -4)) == "-3/2");
  CHECK(to_string(q(5)) == "5");
  CHECK(to_decimal(q(1, 3)) == "0.333333333333");
  CHECK(to_decimal(q(2, 3)) == "0.666666666667");
  CHECK(to_decimal(q(-5, 2)) == "-2.5");
  CHECK(to_decimal(q(123456789, 1) * 10000) == "1234567890000");
  CHECK(to_decimal(q(1, 1000000)) == "0.000001");
  CHECK(to_decimal(q(0)) == "0");
}

TEST_CASE("exact linear algebra") {
  Matrix m(3, 3);
  m << 2, 1, 0, 1, 3, 1, 0, 1, 4;
  CHECK(determinant(m) == q(18));
  Matrix s(2, 3);
  s << 1, 2, 3, 2, 4, 6;
  CHECK(rank(s) == 1);
  Matrix ns = nullspace(s);
  CHECK(ns.cols() == 2);
  CHECK((s * ns).isZero());
  Vector b(3);
  b << 1, 2, 3;
  auto x = solve(m, b);
  REQUIRE(x);
  CHECK(equal(Vector(m * *x), b));
}

TEST_CASE("convex_hull drops interior and edge points") {
  SUBCASE("square with centre") {
    auto p = convex_hull({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1}), pt({q(1, 2), q(1, 2)})});
    CHECK(p.dim() == 2);
    CHECK(p.vertices().size() == 4);
    CHECK(p.facets().size() == 4);
  }
  SUBCASE("single point") {
    auto p = convex_hull({pt({0, 0})});
    CHECK(p.dim() == 0);
    CHECK(p.vertices().size() == 1);
  }
  SUBCASE("point on an edge") {
    // (1,1) satisfies x + y = 2 and lies between (2,0) and (0,2).
    const Point m = pt({1, 1});
    CHECK(m(0) + m(1) == 2);
    CHECK(m(0) >= 0);
    CHECK(m(0) <= 2);
    auto p = convex_hull({pt({0, 0}), pt({2, 0}), pt({0, 2}), m});
    CHECK(p.vertices().size() == 3);
    for (const auto& v : p.vertices()) CHECK_FALSE(equal(v, m));
  }
  SUBCASE("mixed dimensions rejected") {
    CHECK_THROWS_AS(convex_hull({pt({0, 0}), pt({1, 0, 0})}), DimensionError);
    CHECK_THROWS_AS(convex_hull({}), DimensionError);
  }
  SUBCASE("lower-dimensional hulls") {
    auto seg = convex_hull({pt({0, 0, 0}), pt({1, 1, 1}), pt({2, 2, 2})});
    CHECK(seg.dim() == 1);
    CHECK(seg.vertices().size() == 2);
    CHECK(seg.equations().size() == 2);
    CHECK(contains(seg, pt({q(1, 2), q(1, 2), q(1, 2)}), Containment::kRelativeInterior));
    CHECK_FALSE(contains(seg, pt({q(1, 2), q(1, 2), 0})));

    auto tri = convex_hull({pt({0, 0, 1}), pt({1, 0, 1}), pt({0, 1, 1}), pt({q(1, 4), q(1, 4), 1})});
    CHECK(tri.dim() == 2);
    CHECK(tri.vertices().size() == 3);
    CHECK(tri.facets().size() == 3);
    CHECK(volume(tri) == 0);
  }
}

TEST_CASE("volume and normalized volume") {
  const auto square = cube(2, 0, 1);
  CHECK(volume(square) == 1);
  CHECK(volume(standard_simplex(2)) == q(1, 2));
  // vol(tP) = t^n vol(P): 3^2 * 1
  CHECK(volume(scale(square, 3)) == 9);
  for (Eigen::Index n = 1; n <= 4; ++n) CHECK(normalized_volume(standard_simplex(n)) == 1);
  // n! * d^n / n! with n = 2, d = 3
  CHECK(normalized_volume(scale(standard_simplex(2), 3)) == 9);
  CHECK(normalized_volume(square) == 2);
  CHECK(volume(cube(3, -1, 1)) == 8);
  CHECK(volume(Polytope::empty(2)) == 0);
}

TEST_CASE("contains") {
  const auto square = cube(2, 0, 1);
  CHECK(contains(square, pt({q(1, 2), q(1, 2)})));
  CHECK(contains(square, pt({q(1, 2), q(1, 2)}), Containment::kRelativeInterior));
  CHECK(contains(square, pt({1, q(1, 2)})));
  CHECK_FALSE(contains(square, pt({1, q(1, 2)}), Containment::kRelativeInterior));
  CHECK_FALSE(contains(square, pt({2, 0})));
  CHECK_FALSE(contains(Polytope::empty(2), pt({0, 0})));
  CHECK_THROWS_AS(contains(square, pt({0, 0, 0})), DimensionError);
}

TEST_CASE("minkowski_sum") {
  auto e1 = convex_hull({pt({0, 0}), pt({1, 0})});
  auto e2 = convex_hull({pt({0, 0}), pt({0, 1})});
  CHECK(minkowski_sum(e1, e2) == cube(2, 0, 1));
  const auto square = cube(2, 0, 1);
  auto p = pt({q(1, 3), -2});
  CHECK(minkowski_sum(square, convex_hull({p})) == translate(square, p));
  auto doubled = minkowski_sum(square, square);
  CHECK(doubled == cube(2, 0, 2));
  CHECK(volume(doubled) == 4);
  CHECK_THROWS_AS(minkowski_sum(square, cube(3, 0, 1)), DimensionError);
}

TEST_CASE("halfspace representation round trip") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Eigen::Index n = 2 + trial % 2;
    auto pts = monge::testing::random_points(rng, 4 + static_cast<std::size_t>(trial % 7), n, 5, 1 + trial % 3);
    if (trial % 5 == 0) {
      // Flatten onto a hyperplane to exercise the lower-dimensional path.
      for (auto& p : pts) p(n - 1) = p(0) - 2 * p(1);
    }
    const auto p = convex_hull(pts);
    const auto back = from_halfspaces(n, p.facets(), p.equations());
    CHECK(back == p);
    for (const auto& v : p.vertices()) CHECK(contains(p, v));
    if (p.is_full_dimensional()) {
      CHECK(contains(p, vertex_centroid(p), Containment::kRelativeInterior));
    }
    // every vertex tight on at least dim facets
    for (const auto& v : p.vertices()) {
      int tight = 0;
      for (const auto& f : p.facets()) tight += f.slack(v) == 0;
      CHECK(tight >= p.dim());
    }
  }
}

TEST_CASE("volume invariants") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index n = 2 + trial % 2;
    auto p = convex_hull(monge::testing::random_points(rng, 6 + static_cast<std::size_t>(trial % 5), n, 6, 1 + trial % 2));
    const Rational v = volume(p);
    if (n == 2) CHECK(v == monge::testing::shoelace_area(p.vertices()));

    // Two different pulling triangulations give the same total.
    Rational other(0);
    for (const auto& s : triangulate(p, p.vertices().back())) other += simplex_volume(s);
    CHECK(other == v);

    // Homogeneity.
    const Rational t(2 + trial % 3, 3);
    Rational tn(1);
    for (Eigen::Index i = 0; i < n; ++i) tn *= t;
    CHECK(volume(scale(p, t)) == tn * v);

    // Unimodular shear plus translation preserves volume.
    Matrix a = Matrix::Identity(n, n);
    a(0, n - 1) = Rational(trial % 4 - 2);
    if (n == 3) a(1, 0) = Rational(1);
    CHECK(volume(affine_image(p, a, Vector::Constant(n, Rational(1, 2)))) == v);
  }
}

TEST_CASE("double description handles empty and unbounded systems") {
  std::vector<Halfspace> empty_sys{{pt({1, 0}), 0}, {pt({-1, 0}), -1}};
  CHECK(from_halfspaces(2, empty_sys).is_empty());
  std::vector<Halfspace> open_sys{{pt({1, 0}), 0}, {pt({0, 1}), 0}};
  CHECK_THROWS_AS(from_halfspaces(2, open_sys), std::domain_error);
  std::vector<Halfspace> seg{{pt({1, 0}), 1}, {pt({-1, 0}), 0}};
  auto s = from_halfspaces(2, seg, {{pt({0, 1}), q(1, 2)}});
  CHECK(s.dim() == 1);
  CHECK(s == convex_hull({pt({0, q(1, 2)}), pt({1, q(1, 2)})}));
}

TEST_CASE("faces of a cube") {
  auto faces = all_faces(cube(3, 0, 1));
  std::array<int, 4> count{};
  for (const auto& f : faces) ++count[static_cast<std::size_t>(f.dim())];
  CHECK(count == std::array<int, 4>{8, 12, 6, 1});
}

TEST_CASE("quickhull on a degenerate lattice") {
  // Points of a paraboloid over a grid: every grid square is a coplanar facet.
  std::vector<Vector> pts;
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j) pts.push_back(pt({i, j, i * i + j * j}));
  auto hull = quickhull(pts);
  CHECK(hull.vertices.size() == pts.size());
  int lower = 0;
  for (const auto& f : hull.facets) lower += f.normal(2) < 0;
  CHECK(lower == 36);
}
