#include "monge/solver1d/solver1d.hpp"

#include "monge/approx/approx.hpp"
#include "monge/ma/monge_ampere.hpp"

#include <algorithm>
#include <stdexcept>

namespace monge {

namespace {

Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Polynomial nth_derivative(Polynomial p, int k) {
  for (int i = 0; i < k && !p.empty(); ++i) p = derivative(p);
  return p;
}

// Interior breakpoints of both arguments, sorted and distinct.
std::vector<Rational> merged_breakpoints(const PiecewisePolynomial& p, const PiecewisePolynomial& q) {
  std::vector<Rational> out = p.breakpoints();
  out.insert(out.end(), q.breakpoints().begin(), q.breakpoints().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.size() < 2) throw std::invalid_argument("PiecewisePolynomial: need at least two breakpoints");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) {
      throw std::invalid_argument("PiecewisePolynomial: breakpoints must strictly increase");
    }
  }
  if (pieces_.size() + 1 != breakpoints_.size()) {
    throw std::invalid_argument("PiecewisePolynomial: expected " + std::to_string(breakpoints_.size() - 1) +
                                " pieces, got " + std::to_string(pieces_.size()));
  }
  for (auto& p : pieces_) p = trimmed(std::move(p));
}

PiecewisePolynomial PiecewisePolynomial::constant(const Rational& a, const Rational& b, const Rational& value) {
  return PiecewisePolynomial({a, b}, {{value}});
}

int PiecewisePolynomial::max_degree() const {
  int d = -1;
  for (const auto& p : pieces_) d = std::max(d, degree(p));
  return d;
}

std::size_t PiecewisePolynomial::piece_at(const Rational& x) const {
  if (x < lower() || x > upper()) throw std::domain_error("PiecewisePolynomial: " + to_string(x) + " outside the interval");
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin());
  return std::min(i == 0 ? 0 : i - 1, pieces_.size() - 1);
}

Rational PiecewisePolynomial::operator()(const Rational& x) const { return evaluate(pieces_[piece_at(x)], x); }

Rational PiecewisePolynomial::derivative_at(const Rational& x, int k, int side) const {
  std::size_t i = piece_at(x);
  if (side < 0 && i > 0 && x == breakpoints_[i]) --i;
  return evaluate(nth_derivative(pieces_[i], k), x);
}

PiecewisePolynomial PiecewisePolynomial::derivative() const {
  std::vector<Polynomial> d;
  for (const auto& p : pieces_) d.push_back(monge::derivative(p));
  return PiecewisePolynomial(breakpoints_, std::move(d));
}

bool operator==(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
  return a.breakpoints_ == b.breakpoints_ && a.pieces_ == b.pieces_;
}

int smoothness_at(const PiecewisePolynomial& p, const Rational& x) {
  const auto& bp = p.breakpoints();
  auto it = std::find(bp.begin() + 1, bp.end() - 1, x);
  if (it == bp.end() - 1) return kSmooth;
  const std::size_t i = static_cast<std::size_t>(it - bp.begin());
  const Polynomial& left = p.pieces()[i - 1];
  const Polynomial& right = p.pieces()[i];
  if (left == right) return kSmooth;
  Polynomial l = left, r = right;
  for (int k = 0;; ++k) {
    if (evaluate(l, x) != evaluate(r, x)) return k - 1;
    l = derivative(l);
    r = derivative(r);
  }
}

PiecewisePolynomial operator+(const PiecewisePolynomial& p, const PiecewisePolynomial& q) {
  if (p.lower() != q.lower() || p.upper() != q.upper()) throw std::invalid_argument("PiecewisePolynomial: interval mismatch");
  const auto bp = merged_breakpoints(p, q);
  std::vector<Polynomial> pieces;
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    const Rational mid = (bp[i] + bp[i + 1]) / 2;
    pieces.push_back(p.pieces()[p.piece_at(mid)] + q.pieces()[q.piece_at(mid)]);
  }
  return PiecewisePolynomial(bp, std::move(pieces));
}

Solution1D solve_1d(const PiecewisePolynomial& f, std::uint64_t deg_s, const Anchor& anchor) {
  if (deg_s == 0) throw std::invalid_argument("solve_1d: deg_s must be a positive integer");
  if (anchor.point < f.lower() || anchor.point > f.upper()) {
    throw std::invalid_argument("solve_1d: anchor " + to_string(anchor.point) + " outside [" + to_string(f.lower()) +
                                ", " + to_string(f.upper()) + "]");
  }
  const auto& bp = f.breakpoints();
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    if (!nonnegative_on(f.pieces()[i], bp[i], bp[i + 1])) {
      throw std::invalid_argument("solve_1d: f is negative somewhere on [" + to_string(bp[i]) + ", " +
                                  to_string(bp[i + 1]) + "]; no convex solution");
    }
  }

  const Rational inv = Rational(1) / Rational(Integer(deg_s));
  const std::size_t m = f.pieces().size();
  std::vector<Polynomial> second(m);
  for (std::size_t i = 0; i < m; ++i) second[i] = antiderivative(antiderivative(inv * f.pieces()[i]));

  // add c1 * x + c0 so that value and slope at x match the targets
  auto fit = [&](std::size_t i, const Rational& x, const Rational& value, const Rational& slope) {
    const Rational c1 = slope - evaluate(derivative(second[i]), x);
    second[i] = second[i] + Polynomial{Rational(0), c1};
    second[i] = second[i] + Polynomial{value - evaluate(second[i], x)};
  };
  const std::size_t k = f.piece_at(anchor.point);
  fit(k, anchor.point, anchor.value, anchor.slope);
  auto match = [&](std::size_t from, std::size_t to, const Rational& x) {
    fit(to, x, evaluate(second[from], x), evaluate(derivative(second[from]), x));
  };
  for (std::size_t i = k + 1; i < m; ++i) match(i - 1, i, bp[i]);
  for (std::size_t i = k; i-- > 0;) match(i + 1, i, bp[i + 1]);

  return {PiecewisePolynomial(bp, std::move(second)), deg_s, anchor};
}

bool RegularityReport::ok() const {
  if (!equation_holds || !finite_differences_agree) return false;
  return std::all_of(breakpoints.begin(), breakpoints.end(),
                     [](const BreakpointCheck& b) { return b.c1 && b.gains_two; });
}

RegularityReport verify_regularity(const Solution1D& sol, const PiecewisePolynomial& f) {
  RegularityReport r;
  const auto& phi = sol.phi;
  const Rational inv = Rational(1) / Rational(Integer(sol.deg_s));
  if (phi.lower() != f.lower() || phi.upper() != f.upper()) {
    r.equation_holds = false;
    return r;
  }
  const auto bp = merged_breakpoints(phi, f);
  for (std::size_t i = 1; i + 1 < bp.size(); ++i) {
    BreakpointCheck c;
    c.at = bp[i];
    c.f_order = smoothness_at(f, bp[i]);
    c.phi_order = smoothness_at(phi, bp[i]);
    c.c1 = c.phi_order >= 1;
    c.gains_two = c.f_order == kSmooth ? c.phi_order == kSmooth : c.phi_order >= c.f_order + 2;
    r.breakpoints.push_back(c);
  }
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    const Rational mid = (bp[i] + bp[i + 1]) / 2;
    const Polynomial lhs = nth_derivative(phi.pieces()[phi.piece_at(mid)], 2);
    const Polynomial rhs = inv * f.pieces()[f.piece_at(mid)];
    if (lhs != trimmed(rhs)) r.equation_holds = false;

    // five-point stencil kept inside the interval
    const Rational width = bp[i + 1] - bp[i];
    const Rational delta = width / 8;
    for (int j = 1; j <= 3; ++j) {
      const Rational x = bp[i] + width * Rational(j) / Rational(4);
      const Polynomial& p = phi.pieces()[phi.piece_at(mid)];
      const Rational d2 = (-evaluate(p, x + 2 * delta) + 16 * evaluate(p, x + delta) - 30 * evaluate(p, x) +
                           16 * evaluate(p, x - delta) - evaluate(p, x - 2 * delta)) /
                          (12 * delta * delta);
      const Rational deviation = abs_value(d2 - evaluate(rhs, x));
      ++r.probes;
      r.max_probe_deviation = std::max(r.max_probe_deviation, deviation);
      if (degree(p) <= 5) {
        ++r.exact_probes;
        if (deviation != 0) r.finite_differences_agree = false;
      }
    }
  }
  return r;
}

AtomicMeasure discrete_ma_1d(const PAConvexFunction& phi) {
  if (phi.ambient_dim() != 1) throw DimensionError("discrete_ma_1d: expected a function of one variable");
  return ma_measure(phi);
}

bool MassConsistency::within_bound() const { return abs_value(total_mass - exact_mass) <= bound; }

MassConsistency mass_consistency(const Solution1D& sol, const Rational& step) {
  const auto& phi = sol.phi;
  const ConvexEvaluator f{[&](const Point& x) { return phi(x(0)); }, cube(1, phi.lower(), phi.upper())};
  MassConsistency c;
  c.step = step;
  c.total_mass = discrete_ma_1d(pa_from_grid(f, step)).total_mass();
  c.exact_mass = phi.derivative_at(phi.upper(), 1, -1) - phi.derivative_at(phi.lower(), 1, +1);
  const Rational reach = std::max(abs_value(phi.lower()), abs_value(phi.upper()));
  Rational sup(0);
  for (const auto& p : phi.pieces()) {
    Rational s(0), power(1);
    for (const auto& coef : nth_derivative(p, 2)) {
      s += abs_value(coef) * power;
      power *= reach;
    }
    sup = std::max(sup, s);
  }
  c.bound = 2 * step * sup;
  return c;
}

}  // namespace monge
