#include "doctest.h"
#include "support.hpp"

#include "monge/approx/approx.hpp"
#include "monge/solver1d/solver1d.hpp"

using namespace monge;
using namespace monge::testing;

namespace {

Polynomial poly(std::initializer_list<Rational> c) { return Polynomial(c); }

PiecewisePolynomial unit(Polynomial p) { return PiecewisePolynomial({Rational(0), Rational(1)}, {std::move(p)}); }

PiecewisePolynomial step_density() {
  return PiecewisePolynomial({Rational(0), q(1, 2), Rational(1)}, {poly({0}), poly({1})});
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const Polynomial p = poly({-1, 0, 1});  // x^2 - 1
  CHECK(evaluate(p, Rational(3)) == 8);
  CHECK(derivative(p) == poly({0, 2}));
  CHECK(antiderivative(poly({0, 2})) == poly({0, 0, 1}));
  const auto d = divide(p, poly({-1, 1}));
  CHECK(d.quotient == poly({1, 1}));
  CHECK(d.remainder.empty());
  CHECK(gcd(p, poly({1, 1})) == poly({1, 1}));
  CHECK(degree(Polynomial{}) == -1);
  CHECK(trimmed(poly({1, 0, 0})) == poly({1}));
}

TEST_CASE("odd multiplicity part and root counting") {
  // (x-1)^2 (x+2)^3 x
  const Polynomial p = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1}) * poly({2, 1}) * poly({2, 1}) * poly({0, 1});
  CHECK(odd_multiplicity_part(p) == poly({0, 2, 1}));
  CHECK(count_roots(poly({-1, 0, 1}), Rational(-2), Rational(2)) == 2);
  CHECK(count_roots(poly({-1, 0, 1}), Rational(-1), Rational(1)) == 0);
  CHECK(count_roots(poly({-2, 0, 1}), Rational(0), Rational(2)) == 1);
}

TEST_CASE("exact nonnegativity on intervals") {
  CHECK(nonnegative_on(poly({0, 0, 1}), Rational(-1), Rational(1)));
  CHECK(nonnegative_on(poly({0, 1}), Rational(0), Rational(1)));
  CHECK_FALSE(nonnegative_on(poly({0, 1}), Rational(-1), Rational(1)));
  // (x - 1/2)^2 touches zero inside
  CHECK(nonnegative_on(poly({q(1, 4), -1, 1}), Rational(0), Rational(1)));
  // (x - 1/2)^2 - 1/1000000 dips just below zero
  CHECK_FALSE(nonnegative_on(poly({q(1, 4) - q(1, 1000000), -1, 1}), Rational(0), Rational(1)));
  CHECK(nonnegative_on(poly({q(1, 4) - q(1, 1000000), -1, 1}), Rational(0), q(1, 4)));
  CHECK_FALSE(nonnegative_on(poly({-1}), Rational(0), Rational(1)));
  CHECK(nonnegative_on(Polynomial{}, Rational(0), Rational(1)));
  // (x-1/3)^3 changes sign at a root of odd multiplicity
  const Polynomial cube_root = poly({-q(1, 3), 1}) * poly({-q(1, 3), 1}) * poly({-q(1, 3), 1});
  CHECK_FALSE(nonnegative_on(cube_root, Rational(0), Rational(1)));
  CHECK(nonnegative_on(cube_root, q(1, 3), Rational(1)));
}

TEST_CASE("PiecewisePolynomial construction and evaluation") {
  CHECK_THROWS_AS(PiecewisePolynomial({Rational(0)}, {}), std::invalid_argument);
  CHECK_THROWS_AS(PiecewisePolynomial({Rational(1), Rational(0)}, {poly({1})}), std::invalid_argument);
  CHECK_THROWS_AS(PiecewisePolynomial({Rational(0), Rational(1)}, {}), std::invalid_argument);
  const auto f = step_density();
  CHECK(f(q(1, 4)) == 0);
  CHECK(f(q(1, 2)) == 1);
  CHECK(f.derivative_at(q(1, 2), 0, -1) == 0);
  CHECK(smoothness_at(f, q(1, 2)) == -1);
  CHECK(smoothness_at(f, q(1, 3)) == kSmooth);
  CHECK_THROWS_AS(f(Rational(2)), std::domain_error);
}

TEST_CASE("solve_1d examples") {
  const auto one = solve_1d(unit(poly({1})), 1, {Rational(0), Rational(0), Rational(0)});
  CHECK(one.phi == unit(poly({0, 0, q(1, 2)})));

  const auto cubic = solve_1d(unit(poly({0, 6})), 1, {Rational(0), Rational(0), Rational(0)});
  CHECK(cubic.phi == unit(poly({0, 0, 0, 1})));

  const auto scaled = solve_1d(unit(poly({2})), 2, {Rational(0), Rational(0), Rational(0)});
  CHECK(scaled.phi == unit(poly({0, 0, q(1, 2)})));

  const auto anchored = solve_1d(unit(poly({1})), 1, {q(1, 2), Rational(3), Rational(-1)});
  CHECK(anchored.phi(q(1, 2)) == 3);
  CHECK(anchored.phi.derivative_at(q(1, 2), 1, 1) == -1);
}

TEST_CASE("solve_1d preconditions") {
  CHECK_THROWS_AS(solve_1d(unit(poly({1})), 0, {Rational(0), Rational(0), Rational(0)}), std::invalid_argument);
  CHECK_THROWS_AS(solve_1d(unit(poly({1})), 1, {Rational(2), Rational(0), Rational(0)}), std::invalid_argument);
  CHECK_THROWS_AS(solve_1d(unit(poly({-1, 4})), 1, {Rational(0), Rational(0), Rational(0)}), std::invalid_argument);
  // isolated zero is accepted
  CHECK_NOTHROW(solve_1d(unit(poly({q(1, 4), -1, 1})), 1, {Rational(0), Rational(0), Rational(0)}));
}

TEST_CASE("solutions with different anchors differ by an affine function") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> c(0, 6);
  for (int trial = 0; trial < 20; ++trial) {
    const PiecewisePolynomial f({Rational(-1), q(c(rng) - 3, 4), Rational(1)},
                                {poly({Rational(c(rng)), 0, Rational(c(rng))}), poly({Rational(c(rng) + 1), Rational(c(rng) % 2)})});
    const std::uint64_t deg = 1 + static_cast<std::uint64_t>(trial % 3);
    const auto a = solve_1d(f, deg, {Rational(-1), Rational(0), Rational(0)});
    const auto b = solve_1d(f, deg, {q(c(rng) - 3, 3), q(c(rng), 5), q(c(rng) - 2, 7)});
    REQUIRE(a.phi.breakpoints() == b.phi.breakpoints());
    Polynomial first = b.phi.pieces()[0] - a.phi.pieces()[0];
    CHECK(degree(first) <= 1);
    for (std::size_t i = 1; i < a.phi.pieces().size(); ++i) CHECK(b.phi.pieces()[i] - a.phi.pieces()[i] == first);
    CHECK(verify_regularity(a, f).ok());
    CHECK(verify_regularity(b, f).ok());
  }
}

TEST_CASE("verify_regularity on smooth data") {
  const auto f = unit(poly({1}));
  const auto sol = solve_1d(f, 1, {Rational(0), Rational(0), Rational(0)});
  const auto r = verify_regularity(sol, f);
  CHECK(r.ok());
  CHECK(r.equation_holds);
  CHECK(r.exact_probes == r.probes);
  CHECK(r.max_probe_deviation == 0);
}

TEST_CASE("verify_regularity at a jump of the density") {
  const auto f = step_density();
  const auto sol = solve_1d(f, 1, {Rational(0), Rational(0), Rational(0)});
  const auto r = verify_regularity(sol, f);
  REQUIRE(r.breakpoints.size() == 1);
  CHECK(r.breakpoints[0].at == q(1, 2));
  CHECK(r.breakpoints[0].f_order == -1);
  CHECK(r.breakpoints[0].phi_order == 1);
  CHECK(r.breakpoints[0].c1);
  CHECK(r.ok());
  CHECK(sol.phi.derivative_at(q(1, 2), 2, -1) == 0);
  CHECK(sol.phi.derivative_at(q(1, 2), 2, 1) == 1);
}

TEST_CASE("verify_regularity flags a kink") {
  const auto f = unit(poly({1}));
  auto sol = solve_1d(f, 1, {Rational(0), Rational(0), Rational(0)});
  const PiecewisePolynomial kink({Rational(0), q(1, 2), Rational(1)}, {Polynomial{}, poly({q(-1, 2), 1})});
  sol.phi = sol.phi + kink;
  const auto r = verify_regularity(sol, f);
  REQUIRE(r.breakpoints.size() == 1);
  CHECK_FALSE(r.breakpoints[0].c1);
  CHECK(r.breakpoints[0].phi_order == 0);
  CHECK_FALSE(r.ok());
}

TEST_CASE("verify_regularity notices a wrong equation") {
  const auto sol = solve_1d(unit(poly({1})), 1, {Rational(0), Rational(0), Rational(0)});
  const auto r = verify_regularity(sol, unit(poly({2})));
  CHECK_FALSE(r.equation_holds);
  CHECK_FALSE(r.finite_differences_agree);
  CHECK_FALSE(r.ok());
}

TEST_CASE("discrete_ma_1d examples") {
  const auto d = cube(1, Rational(-1), Rational(1));
  CHECK(discrete_ma_1d(PAConvexFunction({aff({0}, 0), aff({1}, 0)}, d)) == AtomicMeasure(1, {{pt({0}), 1}}));
  CHECK(discrete_ma_1d(PAConvexFunction::affine(aff({2}, 1), d)).empty());
  CHECK_THROWS_AS(discrete_ma_1d(PAConvexFunction({aff({0, 0}, 0)}, cube(2, Rational(0), Rational(1)))), DimensionError);

  const auto sol = solve_1d(unit(poly({1})), 1, {Rational(0), Rational(0), Rational(0)});
  for (long m : {2, 5, 8}) {
    const ConvexEvaluator f{[&](const Point& x) { return sol.phi(x(0)); }, cube(1, Rational(0), Rational(1))};
    const auto mu = discrete_ma_1d(pa_from_grid(f, q(1, m)));
    REQUIRE(mu.atoms().size() == static_cast<std::size_t>(m - 1));
    for (const auto& a : mu.atoms()) CHECK(a.mass == q(1, m));
  }
}

TEST_CASE("discrete mass converges to the integral of the density") {
  const auto f = PiecewisePolynomial({Rational(0), q(1, 3), Rational(1)}, {poly({1, 3}), poly({2, 0, 3})});
  const auto sol = solve_1d(f, 2, {Rational(0), Rational(0), Rational(0)});
  Rational previous(-1);
  for (long m : {4, 8, 16, 32}) {
    const auto c = mass_consistency(sol, q(1, m));
    CHECK(c.within_bound());
    const Rational gap = c.total_mass > c.exact_mass ? Rational(c.total_mass - c.exact_mass) : Rational(c.exact_mass - c.total_mass);
    if (previous >= 0) CHECK(gap <= previous);
    previous = gap;
  }
}
