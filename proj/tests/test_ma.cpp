#include "doctest.h"
#include "support.hpp"

#include "monge/ma/monge_ampere.hpp"
#include "monge/ma/toric.hpp"
#include "monge/subdivision/complex.hpp"

#include <algorithm>

using namespace monge;
using namespace monge::testing;

namespace {

PAConvexFunction on_square(std::vector<AffineFunctional> pieces, long r = 1) {
  return PAConvexFunction(std::move(pieces), cube(2, Rational(-r), Rational(r)));
}

PAConvexFunction tropical_square() {
  return on_square({aff({0, 0}, 0), aff({1, 0}, 0), aff({0, 1}, 0), aff({1, 1}, 0)});
}

}  // namespace

TEST_CASE("subdifferential of a 1D kink") {
  const PAConvexFunction h({aff({0}, 0), aff({1}, 0)}, cube(1, Rational(-1), Rational(1)));
  CHECK(subdifferential(h, pt({0})) == convex_hull({pt({0}), pt({1})}));
  CHECK(subdifferential(h, pt({q(1, 2)})) == convex_hull({pt({1})}));
}

TEST_CASE("subdifferential of the tropical square matches a brute-force grid oracle") {
  const auto h = tropical_square();
  const Polytope d = subdifferential(h, pt({0, 0}));
  CHECK(d == cube(2, Rational(0), Rational(1)));

  // membership by the defining inequality, tested on a 1/4 grid of the domain
  std::vector<Point> xs;
  for (int i = -4; i <= 4; ++i)
    for (int j = -4; j <= 4; ++j) xs.push_back(pt({q(i, 4), q(j, 4)}));
  for (int i = -4; i <= 12; ++i) {
    for (int j = -4; j <= 12; ++j) {
      const Point p = pt({q(i, 8), q(j, 8)});
      const bool supporting =
          std::all_of(xs.begin(), xs.end(), [&](const Point& x) { return p.dot(x) <= h(x); });
      CHECK(supporting == contains(d, p));
    }
  }
}

TEST_CASE("subdifferential of an affine function is its slope") {
  const auto h = PAConvexFunction::affine(aff({2, q(-1, 3)}, 5), cube(2, Rational(-1), Rational(1)));
  CHECK(subdifferential(h, pt({q(1, 5), q(-2, 7)})) == convex_hull({pt({2, q(-1, 3)})}));
}

TEST_CASE("subdifferential scope options agree") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    const auto h = random_pa(rng, 2, 5);
    const auto lift = lift_epigraph(h);
    for (const auto& v : lift.vertices) {
      if (!v.interior()) continue;
      CHECK(subdifferential(h, lift, v.x, VertexScope::kAll) == subdifferential(h, lift, v.x, VertexScope::kStar));
    }
  }
}

TEST_CASE("subdifferential rejects points outside or on the boundary") {
  const auto h = tropical_square();
  CHECK_THROWS_AS(subdifferential(h, pt({2, 0})), std::domain_error);
  CHECK_THROWS_AS(subdifferential(h, pt({1, 0})), BoundaryPointError);
  CHECK_THROWS_AS(subdifferential(h, pt({0})), DimensionError);
}

TEST_CASE("ma_measure examples") {
  const auto sq = ma_measure(tropical_square());
  REQUIRE(sq.atoms().size() == 1);
  CHECK(equal(sq.atoms()[0].point, pt({0, 0})));
  CHECK(sq.atoms()[0].mass == 1);

  CHECK(ma_measure(PAConvexFunction::affine(aff({1, 1}, 0), cube(2, Rational(-1), Rational(1)))).empty());

  const PAConvexFunction v({aff({0}, 0), aff({1}, -1), aff({-1}, -1)}, cube(1, Rational(-2), Rational(2)));
  const auto mu = ma_measure(v);
  CHECK(mu == AtomicMeasure(1, {{pt({-1}), 1}, {pt({1}), 1}}));
  CHECK(ma_eval(mu, cube(1, Rational(0), Rational(2))) == 1);
}

TEST_CASE("ma_eval counts atoms in closed polytopes") {
  const AtomicMeasure mu(2, {{pt({0, 0}), 1}});
  CHECK(ma_eval(mu, cube(2, q(-1, 2), q(1, 2))) == 1);
  CHECK(ma_eval(mu, cube(2, Rational(1), Rational(2))) == 0);
  CHECK(ma_eval(mu, cube(2, Rational(0), Rational(1))) == 1);
  CHECK_THROWS_AS(ma_eval(mu, cube(1, Rational(0), Rational(1))), DimensionError);
}

TEST_CASE("AtomicMeasure construction") {
  CHECK_THROWS_AS(AtomicMeasure(1, {{pt({0}), -1}}), std::invalid_argument);
  CHECK_THROWS_AS(AtomicMeasure(1, {{pt({0}), 1}, {pt({0}), 2}}), std::invalid_argument);
  CHECK_THROWS_AS(AtomicMeasure(1, {{pt({0, 0}), 1}}), std::invalid_argument);
  const AtomicMeasure mu(1, {{pt({2}), 1}, {pt({1}), 0}, {pt({-1}), q(1, 3)}});
  CHECK(mu.atoms().size() == 2);
  CHECK(equal(mu.atoms()[0].point, pt({-1})));
  CHECK(mu.total_mass() == q(4, 3));
  CHECK(mu.mass_at(pt({1})) == 0);
}

TEST_CASE("integrate examples") {
  const AtomicMeasure mu(2, {{pt({0, 0}), 1}, {pt({1, 0}), 2}});
  CHECK(integrate(mu, [](const Point&) { return Rational(1); }) == mu.total_mass());
  CHECK(integrate(AtomicMeasure(2, {}), [](const Point&) { return Rational(1); }) == 0);
  CHECK(integrate(mu, [](const Point& p) { return p(0); }) == 2);
}

TEST_CASE("mixed_ma examples") {
  const auto h = tropical_square();
  CHECK(mixed_ma({h, h}) == ma_measure(h));
  // oracle for the diagonal through scaling alone
  const auto twice = ma_measure(Rational(2) * h);
  CHECK(twice.mass_at(pt({0, 0})) == 4 * ma_measure(h).mass_at(pt({0, 0})));

  const auto h1 = on_square({aff({0, 0}, 0), aff({1, 0}, 0)});
  const auto h2 = on_square({aff({0, 0}, 0), aff({0, 1}, 0)});
  CHECK(mixed_ma({h1, h2}) == AtomicMeasure(2, {{pt({0, 0}), q(1, 2)}}));

  const auto a = PAConvexFunction::affine(aff({3, -1}, 2), h.domain());
  CHECK(mixed_ma({h, a}).empty());
  CHECK(mixed_ma({a, h1}).empty());
}

TEST_CASE("mixed_ma argument checks") {
  const auto h = tropical_square();
  CHECK_THROWS_AS(mixed_ma({h}), std::invalid_argument);
  CHECK_THROWS_AS(mixed_ma({}), std::invalid_argument);
  const auto other = on_square({aff({0, 0}, 0), aff({1, 0}, 0)}, 2);
  CHECK_THROWS_AS(mixed_ma({h, other}), std::invalid_argument);
}

TEST_CASE("toric_degree examples") {
  const auto simplex_fn = on_square({aff({0, 0}, 0), aff({1, 0}, 0), aff({0, 1}, 0)});
  const auto r = toric_degree(simplex_fn, pt({0, 0}), 1);
  CHECK(r.subdifferential == standard_simplex(2));
  CHECK(r.ma_mass == q(1, 2));
  CHECK(r.toric_degree == 1);
  CHECK(r.translation_verified);
  CHECK(r.rescale == 1);
  CHECK(r.lattice_degree == 1);

  const auto big = on_square({aff({0, 0}, 0), aff({3, 0}, 0), aff({0, 3}, 0), aff({3, 3}, 0)});
  const auto rb = toric_degree(big, pt({0, 0}), 1);
  CHECK(rb.subdifferential == cube(2, Rational(0), Rational(3)));
  CHECK(rb.toric_degree == 18);
  CHECK(toric_degree(big, pt({0, 0}), 2).toric_degree == 36);
  CHECK(toric_degree(simplex_fn, pt({0, 0}), 2).toric_degree == 2);
}

TEST_CASE("toric_degree with fractional slopes reports the rescale") {
  const auto h = on_square({aff({0, 0}, 0), aff({q(1, 2), 0}, 0), aff({0, q(1, 3)}, 0)});
  const auto r = toric_degree(h, pt({0, 0}), 1);
  CHECK(r.toric_degree == q(1, 6));
  CHECK(r.rescale == 6);
  CHECK(r.lattice_degree == 6);
}

TEST_CASE("toric_degree errors") {
  const auto h = tropical_square();
  CHECK_THROWS_AS(toric_degree(h, pt({0, 0}), 0), std::invalid_argument);
  CHECK_THROWS_AS(toric_degree(h, pt({q(1, 2), 0}), 1), std::invalid_argument);
  CHECK_THROWS_AS(toric_degree(h, pt({1, 0}), 1), BoundaryPointError);
  CHECK_THROWS_AS(toric_degree(h, pt({3, 0}), 1), std::domain_error);
}

TEST_CASE("mixed_toric_degree scales the mixed mass") {
  const auto h1 = on_square({aff({0, 0}, 0), aff({1, 0}, 0)});
  const auto h2 = on_square({aff({0, 0}, 0), aff({0, 1}, 0)});
  CHECK(mixed_toric_degree({h1, h2}, pt({0, 0}), 1) == 1);
  CHECK(mixed_toric_degree({h1, h2}, pt({0, 0}), 3) == 3);
}

TEST_CASE("random functions: homogeneity, affine invariance, support") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const Eigen::Index n = 1 + trial % 3;
    const auto h = random_pa(rng, n, n == 3 ? 4 : 5);
    const auto mu = ma_measure(h);

    const Rational t = q(1 + trial % 4, 2);
    Rational tn(1);
    for (Eigen::Index i = 0; i < n; ++i) tn *= t;
    std::vector<Atom> scaled;
    for (const auto& a : mu.atoms()) scaled.push_back({a.point, tn * a.mass});
    CHECK(ma_measure(t * h) == AtomicMeasure(n, scaled));

    const AffineFunctional a{random_point(rng, n, 5, 3), q(trial, 7)};
    CHECK(ma_measure(h + a) == mu);

    auto verts = interior_vertices(linearity_complex(h));
    for (const auto& atom : mu.atoms()) {
      CHECK(std::any_of(verts.begin(), verts.end(), [&](const Point& v) { return equal(v, atom.point); }));
      CHECK(translate(subdifferential(h, atom.point), a.slope) == subdifferential(h + a, atom.point));
    }
  }
}

TEST_CASE("random functions: translation step and dual-cell tiling") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index n = 2 + trial % 2;
    const auto h = random_pa(rng, n, 5);
    const auto mu = ma_measure(h);
    std::vector<Polytope> cells;
    for (const auto& atom : mu.atoms()) {
      const Polytope d = subdifferential(h, atom.point);
      CHECK(subdifferential(recentre(h, atom.point), Point::Zero(n)) == d);
      CHECK(volume(d) == atom.mass);
      cells.push_back(d);
    }
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t j = i + 1; j < cells.size(); ++j) CHECK(volume(intersection(cells[i], cells[j])) == 0);
  }
}

TEST_CASE("total mass equals the Newton polytope volume on a roomy domain") {
  CHECK(ma_measure(tropical_square()).total_mass() == 1);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index n = 1 + trial % 3;
    const auto h = with_roomy_domain(random_pa(rng, n, 5, 2, 3));
    std::vector<Point> slopes;
    for (const auto& p : h.pieces()) slopes.push_back(p.slope);
    const Polytope newton = convex_hull(slopes);
    const Rational expected = newton.is_full_dimensional() ? volume(newton) : Rational(0);
    CHECK(ma_measure(h).total_mass() == expected);
  }
}

TEST_CASE("mixed diagonal and symmetry on random functions") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index n = 2 + trial % 2;
    const long pieces = n == 2 ? 4 : 3;
    std::vector<PAConvexFunction> hs;
    for (Eigen::Index i = 0; i < n; ++i) hs.push_back(random_pa(rng, n, pieces, 2, 3));
    CHECK(mixed_ma(std::vector<PAConvexFunction>(n, hs[0])) == ma_measure(canonicalize(hs[0])));
    const auto base = mixed_ma(hs);
    auto perm = hs;
    std::reverse(perm.begin(), perm.end());
    CHECK(mixed_ma(perm) == base);
    std::rotate(perm.begin(), perm.begin() + 1, perm.end());
    CHECK(mixed_ma(perm) == base);
  }
}

TEST_CASE("mixed_ma agrees with the Minkowski mixed-volume oracle in the plane") {
  std::mt19937 rng(314);
  for (int trial = 0; trial < 15; ++trial) {
    const auto h1 = random_pa(rng, 2, 4, 2, 3);
    const auto h2 = random_pa(rng, 2, 4, 2, 3);
    const auto mixed = mixed_ma({h1, h2});
    std::vector<Point> candidates = interior_vertices(linearity_complex(h1 + h2));
    for (const auto& u : candidates) {
      const Polytope d1 = subdifferential(h1, u);
      const Polytope d2 = subdifferential(h2, u);
      const Polytope sum = minkowski_sum(d1, d2);
      auto vol = [](const Polytope& p) { return p.is_full_dimensional() ? volume(p) : Rational(0); };
      CHECK(mixed.mass_at(u) == (vol(sum) - vol(d1) - vol(d2)) / 2);
    }
    for (const auto& a : mixed.atoms())
      CHECK(std::any_of(candidates.begin(), candidates.end(), [&](const Point& v) { return equal(v, a.point); }));
  }
}
