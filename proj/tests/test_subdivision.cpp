#include "doctest.h"
#include "support.hpp"

#include "monge/subdivision/complex.hpp"
#include "monge/subdivision/epigraph.hpp"

#include <set>

using namespace monge;
using monge::testing::aff;
using monge::testing::pt;
using monge::testing::q;

namespace {

Polytope interval(const Rational& a, const Rational& b) { return convex_hull({pt({a}), pt({b})}); }

PAConvexFunction tropical_square() {
  return PAConvexFunction({aff({0, 0}, 0), aff({1, 0}, 0), aff({0, 1}, 0), aff({1, 1}, 0)}, cube(2, -1, 1));
}

}  // namespace

TEST_CASE("PA function construction and evaluation") {
  CHECK_THROWS_AS(PAConvexFunction({}, cube(2, 0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(PAConvexFunction({aff({1}, 0)}, convex_hull({pt({0, 0}), pt({1, 1})})), std::invalid_argument);
  CHECK_THROWS_AS(PAConvexFunction({aff({1}, 0)}, cube(2, 0, 1)), DimensionError);
  auto h = tropical_square();
  CHECK(h(pt({q(1, 2), q(-1, 3)})) == q(1, 2));
  CHECK(h.active_pieces(pt({0, 0})) == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("canonicalize") {
  SUBCASE("dominated piece") {
    PAConvexFunction h({aff({1}, 0), aff({1}, -1)}, interval(0, 1));
    auto c = canonicalize(h);
    REQUIRE(c.pieces().size() == 1);
    CHECK(c.pieces()[0] == aff({1}, 0));
  }
  SUBCASE("piece active at a single point") {
    PAConvexFunction h({aff({0}, 0), aff({1}, 0), aff({-1}, 0)}, interval(-1, 1));
    auto c = canonicalize(h);
    REQUIRE(c.pieces().size() == 2);
    CHECK(c.pieces()[0] == aff({1}, 0));
    CHECK(c.pieces()[1] == aff({-1}, 0));
    for (int k = -8; k <= 8; ++k) CHECK(c(pt({q(k, 8)})) == h(pt({q(k, 8)})));
  }
  SUBCASE("single piece and duplicates") {
    PAConvexFunction one({aff({2, 1}, 3)}, cube(2, 0, 1));
    CHECK(canonicalize(one).pieces() == one.pieces());
    PAConvexFunction dup({aff({1}, 0), aff({1}, 0), aff({-1}, 0)}, interval(-1, 1));
    CHECK(canonicalize(dup).pieces().size() == 2);
  }
  SUBCASE("values preserved on random functions") {
    std::mt19937 rng(3);
    for (int t = 0; t < 10; ++t) {
      auto h = monge::testing::random_pa(rng, 2, 7);
      auto c = canonicalize(h);
      CHECK(c.pieces().size() <= h.pieces().size());
      for (int i = -4; i <= 4; ++i)
        for (int j = -4; j <= 4; ++j) CHECK(c(pt({q(i, 2), q(j, 2)})) == h(pt({q(i, 2), q(j, 2)})));
    }
  }
}

TEST_CASE("linearity complex examples") {
  SUBCASE("one breakpoint") {
    PAConvexFunction h({aff({0}, 0), aff({1}, 0)}, interval(-1, 1));
    auto c = linearity_complex(h);
    auto top = c.maximal_cells();
    REQUIRE(top.size() == 2);
    CHECK(top[0] == interval(-1, 0));
    CHECK(top[1] == interval(0, 1));
    CHECK(c.cells().size() == 5);  // 3 points + 2 segments
    CHECK(validate(c).ok());
  }
  SUBCASE("tropical square: four quadrants, checked against sampled activity") {
    auto h = tropical_square();
    auto cells = linearity_cells(h);
    REQUIRE(cells.size() == 4);
    for (const auto& lc : cells) CHECK(volume(lc.cell) == 1);
    // Brute force on the 1/4 grid: a sample lies in the cell of piece i exactly
    // when piece i attains the max there.
    for (int i = -4; i <= 4; ++i) {
      for (int j = -4; j <= 4; ++j) {
        const Point x = pt({q(i, 4), q(j, 4)});
        Rational best = h.pieces()[0](x);
        for (const auto& p : h.pieces()) best = std::max(best, p(x));
        for (const auto& lc : cells) CHECK(contains(lc.cell, x) == (h.pieces()[lc.piece](x) == best));
      }
    }
    CHECK(validate(linearity_complex(h)).ok());
  }
  SUBCASE("affine function") {
    auto dom = convex_hull({pt({0, 0}), pt({3, 0}), pt({0, 2}), pt({1, 2})});
    auto c = linearity_complex(PAConvexFunction({aff({q(1, 2), -3}, 7)}, dom));
    REQUIRE(c.maximal_cells().size() == 1);
    CHECK(c.maximal_cells()[0] == dom);
    CHECK(interior_vertices(c).empty());
  }
}

TEST_CASE("common refinement") {
  const auto square = cube(2, -1, 1);
  auto lc = [&](std::vector<AffineFunctional> pieces) { return linearity_complex(PAConvexFunction(std::move(pieces), square)); };
  auto vertical = lc({aff({0, 0}, 0), aff({1, 0}, 0)});
  auto horizontal = lc({aff({0, 0}, 0), aff({0, 1}, 0)});

  CHECK(common_refinement(vertical, vertical) == vertical);
  auto quads = common_refinement(vertical, horizontal);
  CHECK(quads.maximal_cells().size() == 4);
  CHECK(validate(quads).ok());
  // Cross-check: the complex of max over all sums of pieces.
  CHECK(quads == linearity_complex(PAConvexFunction({aff({0, 0}, 0), aff({1, 0}, 0), aff({0, 1}, 0), aff({1, 1}, 0)}, square)));
  CHECK(common_refinement(horizontal, vertical) == quads);
  CHECK_THROWS_AS(common_refinement(vertical, linearity_complex(PAConvexFunction({aff({0, 0}, 0)}, cube(2, 0, 1)))),
                  std::invalid_argument);
}

TEST_CASE("interior vertices") {
  CHECK(interior_vertices(linearity_complex(tropical_square())).size() == 1);
  CHECK(equal(interior_vertices(linearity_complex(tropical_square()))[0], pt({0, 0})));

  PAConvexFunction h({aff({0, 0}, 0), aff({1, 0}, q(-1, 2)), aff({0, 1}, q(-1, 2)), aff({1, 1}, -1)}, cube(2, 0, 2));
  auto c = linearity_complex(h);
  // Enumerate 0-cells and keep the strictly interior ones by hand.
  std::vector<Point> expected;
  for (const auto& cell : c.cells_of_dim(0)) {
    const Point& v = cell.vertices()[0];
    if (v(0) > 0 && v(0) < 2 && v(1) > 0 && v(1) < 2) expected.push_back(v);
  }
  auto got = interior_vertices(c);
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(equal(got[i], expected[i]));
  CHECK(std::any_of(got.begin(), got.end(), [](const Point& v) { return equal(v, pt({q(1, 2), q(1, 2)})); }));
}

TEST_CASE("complex invariants on random functions") {
  std::mt19937 rng(19);
  for (int t = 0; t < 16; ++t) {
    const Eigen::Index n = 1 + t % 3;
    auto h = canonicalize(monge::testing::random_pa(rng, n, n == 3 ? 5 : 6));
    auto cells = linearity_cells(h);
    auto c = linearity_complex(h);
    CHECK(validate(c).ok());
    // The max agrees with the per-cell affine piece at every vertex of the cell.
    for (const auto& lc : cells)
      for (const auto& v : lc.cell.vertices()) CHECK(h(v) == h.pieces()[lc.piece](v));
    // Adding an affine function leaves the complex unchanged.
    Vector slope(n);
    for (Eigen::Index i = 0; i < n; ++i) slope(i) = Rational(static_cast<long>(i) - 1, 2);
    CHECK(linearity_complex(h + AffineFunctional{slope, q(5, 3)}) == c);
    // Interior vertices come from the lifted epigraph and from the complex alike.
    auto lift = lift_epigraph(h);
    std::vector<Point> from_lift;
    for (const auto& v : lift.vertices)
      if (v.interior()) from_lift.push_back(v.x);
    auto iv = interior_vertices(c);
    REQUIRE(iv.size() == from_lift.size());
    for (std::size_t i = 0; i < iv.size(); ++i) CHECK(equal(iv[i], from_lift[i]));
  }
}

TEST_CASE("common refinement is commutative and associative") {
  std::mt19937 rng(23);
  for (int t = 0; t < 4; ++t) {
    auto a = linearity_complex(canonicalize(monge::testing::random_pa(rng, 2, 3)));
    auto b = linearity_complex(canonicalize(monge::testing::random_pa(rng, 2, 3)));
    auto c = linearity_complex(canonicalize(monge::testing::random_pa(rng, 2, 3)));
    CHECK(common_refinement(a, b) == common_refinement(b, a));
    CHECK(common_refinement(common_refinement(a, b), c) == common_refinement(a, common_refinement(b, c)));
    CHECK(validate(common_refinement(a, b)).ok());
  }
}
