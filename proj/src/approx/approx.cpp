#include "monge/approx/approx.hpp"

#include "monge/core/hull.hpp"
#include "monge/core/linalg.hpp"
#include "monge/ma/monge_ampere.hpp"
#include "monge/subdivision/epigraph.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace monge {

namespace {

Integer floor_div(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);
  Integer r = n / d;
  if (r * d > n) r -= 1;
  return r;
}

Integer ceil_div(const Rational& q) { return -floor_div(-q); }

Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Finds the pieces whose cell contains a point without scanning every piece:
// cells are bucketed by bounding box on a uniform grid of bins.
class CellLocator {
 public:
  CellLocator(const PAConvexFunction& h, const EpigraphLift& lift) : h_(h), n_(h.ambient_dim()) {
    const auto& pieces = h.pieces();
    lo_.assign(pieces.size(), Point());
    hi_.assign(pieces.size(), Point());
    for (const auto& v : lift.vertices) {
      for (auto i : v.pieces) {
        if (lo_[i].size() == 0) {
          lo_[i] = hi_[i] = v.x;
          continue;
        }
        for (Eigen::Index k = 0; k < n_; ++k) {
          if (v.x(k) < lo_[i](k)) lo_[i](k) = v.x(k);
          if (v.x(k) > hi_[i](k)) hi_[i](k) = v.x(k);
        }
      }
    }
    const auto& dv = h.domain().vertices();
    box_lo_ = box_hi_ = dv.front();
    for (const auto& p : dv)
      for (Eigen::Index k = 0; k < n_; ++k) {
        box_lo_(k) = std::min(box_lo_(k), p(k));
        box_hi_(k) = std::max(box_hi_(k), p(k));
      }
    long per_axis = 1;
    while (std::pow(static_cast<double>(per_axis + 1), static_cast<double>(n_)) <= static_cast<double>(pieces.size()))
      ++per_axis;
    bins_ = per_axis;
    std::size_t total = 1;
    for (Eigen::Index k = 0; k < n_; ++k) total *= static_cast<std::size_t>(bins_);
    buckets_.resize(total);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (lo_[i].size() == 0 || !lift.full_dimensional[i]) continue;
      std::vector<long> a(n_), b(n_);
      for (Eigen::Index k = 0; k < n_; ++k) {
        a[k] = bin(lo_[i](k), k);
        b[k] = bin(hi_[i](k), k);
      }
      std::vector<long> idx = a;
      while (true) {
        buckets_[flat(idx)].push_back(i);
        Eigen::Index k = 0;
        for (; k < n_; ++k) {
          if (++idx[k] <= b[k]) break;
          idx[k] = a[k];
        }
        if (k == n_) break;
      }
    }
  }

  // Pieces whose cells contain x; all of them attain h(x).
  std::vector<std::size_t> cells_at(const Point& x, Rational& value) const {
    std::vector<long> idx(n_);
    for (Eigen::Index k = 0; k < n_; ++k) idx[k] = bin(x(k), k);
    std::vector<std::size_t> best;
    bool first = true;
    for (auto i : buckets_[flat(idx)]) {
      bool inside = true;
      for (Eigen::Index k = 0; k < n_ && inside; ++k) inside = lo_[i](k) <= x(k) && x(k) <= hi_[i](k);
      if (!inside) continue;
      const Rational y = h_.pieces()[i](x);
      if (first || y > value) {
        value = y;
        best.assign(1, i);
        first = false;
      } else if (y == value) {
        best.push_back(i);
      }
    }
    if (first) {
      value = h_(x);
      best = h_.active_pieces(x);
    }
    return best;
  }

 private:
  long bin(const Rational& c, Eigen::Index k) const {
    if (box_hi_(k) == box_lo_(k)) return 0;
    const Rational t = (c - box_lo_(k)) / (box_hi_(k) - box_lo_(k)) * Rational(bins_);
    long b = floor_div(t).convert_to<long>();
    return std::clamp(b, 0L, bins_ - 1);
  }

  std::size_t flat(const std::vector<long>& idx) const {
    std::size_t f = 0;
    for (Eigen::Index k = n_; k-- > 0;) f = f * static_cast<std::size_t>(bins_) + static_cast<std::size_t>(idx[k]);
    return f;
  }

  const PAConvexFunction& h_;
  Eigen::Index n_;
  std::vector<Point> lo_, hi_;
  Point box_lo_, box_hi_;
  long bins_ = 1;
  std::vector<std::vector<std::size_t>> buckets_;
};

}  // namespace

std::vector<Point> grid_samples(const Polytope& domain, const Rational& step) {
  if (step <= 0) throw std::invalid_argument("grid_samples: step must be positive");
  if (domain.is_empty()) throw std::invalid_argument("grid_samples: empty domain");
  const Eigen::Index n = domain.ambient_dim();
  Point lo = domain.vertices().front(), hi = lo;
  for (const auto& v : domain.vertices())
    for (Eigen::Index k = 0; k < n; ++k) {
      lo(k) = std::min(lo(k), v(k));
      hi(k) = std::max(hi(k), v(k));
    }
  std::vector<Integer> a(n), b(n), idx(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    a[k] = ceil_div(lo(k) / step);
    b[k] = floor_div(hi(k) / step);
  }
  std::vector<Point> out = domain.vertices();
  idx = a;
  while (true) {
    Point p(n);
    for (Eigen::Index k = 0; k < n; ++k) p(k) = Rational(idx[k]) * step;
    if (contains(domain, p)) out.push_back(std::move(p));
    Eigen::Index k = 0;
    for (; k < n; ++k) {
      if (++idx[k] <= b[k]) break;
      idx[k] = a[k];
    }
    if (k == n) break;
  }
  std::sort(out.begin(), out.end(), LexLess());
  out.erase(std::unique(out.begin(), out.end(), [](const Point& x, const Point& y) { return equal(x, y); }), out.end());
  return out;
}

void check_midpoint_convexity(const ConvexEvaluator& f, const std::vector<Point>& samples, std::size_t pairs) {
  if (samples.size() < 2) return;
  std::mt19937 rng(0x6d61u);
  std::uniform_int_distribution<std::size_t> pick(0, samples.size() - 1);
  for (std::size_t t = 0; t < pairs; ++t) {
    const Point& x = samples[pick(rng)];
    const Point& y = samples[pick(rng)];
    const Point mid = (x + y) / Rational(2);
    if (f.eval(mid) * 2 > f.eval(x) + f.eval(y)) {
      throw ConvexityError("midpoint convexity fails between " + to_string(x) + " and " + to_string(y));
    }
  }
}

PAConvexFunction pa_from_grid(const ConvexEvaluator& f, const Rational& step) {
  if (!f.domain.is_full_dimensional()) throw std::invalid_argument("pa_from_grid: domain is not full-dimensional");
  const std::vector<Point> samples = grid_samples(f.domain, step);
  check_midpoint_convexity(f, samples);
  const Eigen::Index n = f.domain.ambient_dim();

  std::vector<Vector> lifted;
  lifted.reserve(samples.size());
  for (const auto& s : samples) {
    Vector y(n + 1);
    y.head(n) = s;
    y(n) = f.eval(s);
    lifted.push_back(std::move(y));
  }

  const auto basis = affine_basis(lifted);
  if (static_cast<Eigen::Index>(basis.size()) < n + 2) {
    // every sample lies on one affine graph
    Matrix a(n + 1, n + 1);
    Vector rhs(n + 1);
    for (Eigen::Index r = 0; r <= n; ++r) {
      const Vector& y = lifted[basis[static_cast<std::size_t>(r)]];
      a.row(r).head(n) = y.head(n).transpose();
      a(r, n) = 1;
      rhs(r) = y(n);
    }
    const auto coef = solve(a, rhs);
    if (!coef) throw std::logic_error("pa_from_grid: degenerate sample set");
    return PAConvexFunction({{coef->head(n), (*coef)(n)}}, f.domain);
  }

  const HullResult hull = quickhull(lifted);
  std::vector<AffineFunctional> pieces;
  for (const auto& facet : hull.facets) {
    const Rational c = facet.normal(n);
    if (c >= 0) continue;
    pieces.push_back({Vector(-facet.normal.head(n) / c), facet.offset / c});
  }
  return PAConvexFunction(std::move(pieces), f.domain);
}

ErrorEstimate uniform_error(const ConvexEvaluator& f, const PAConvexFunction& h, const Rational& probe_step) {
  if (!(h.domain() == f.domain)) throw std::invalid_argument("uniform_error: domain mismatch");
  const EpigraphLift lift = lift_epigraph(h);
  const CellLocator locate(h, lift);
  const std::size_t m = h.pieces().size();

  std::vector<Rational> max_h(m), max_f(m), min_h(m), inf_f(m);
  std::vector<bool> seen(m, false);
  auto touch = [&](std::size_t i, const Rational& fv, const Rational& hv, bool vertex) {
    if (!seen[i]) {
      seen[i] = true;
      inf_f[i] = fv;
      max_f[i] = min_h[i] = max_h[i] = hv;
      if (vertex) max_f[i] = fv;
      return;
    }
    inf_f[i] = std::min(inf_f[i], fv);
    if (vertex) {
      max_h[i] = std::max(max_h[i], hv);
      min_h[i] = std::min(min_h[i], hv);
      max_f[i] = std::max(max_f[i], fv);
    }
  };
  for (const auto& v : lift.vertices) {
    const Rational fv = f.eval(v.x);
    for (auto i : v.pieces) touch(i, fv, v.value, true);
  }

  ErrorEstimate e;
  for (const auto& x : grid_samples(f.domain, probe_step)) {
    Rational hv;
    const auto cells = locate.cells_at(x, hv);
    const Rational fv = f.eval(x);
    e.probe_max = std::max(e.probe_max, abs_value(fv - hv));
    for (auto i : cells)
      if (seen[i]) inf_f[i] = std::min(inf_f[i], fv);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!seen[i] || !lift.full_dimensional[i]) continue;
    e.oscillation_bound = std::max({e.oscillation_bound, Rational(max_h[i] - inf_f[i]), Rational(max_f[i] - min_h[i])});
  }
  e.oscillation_bound = std::max(e.oscillation_bound, e.probe_max);
  return e;
}

ConvergenceReport convergence_study(const ConvexEvaluator& f, const std::vector<Rational>& steps,
                                    const std::vector<PointFunction>& tests) {
  for (std::size_t k = 0; k < steps.size(); ++k) {
    if (steps[k] <= 0) throw std::invalid_argument("convergence_study: steps must be positive");
    if (k > 0 && !(steps[k] < steps[k - 1])) throw std::invalid_argument("convergence_study: steps must decrease");
  }
  ConvergenceReport report;
  for (const auto& step : steps) {
    ConvergenceStep s;
    s.step = step;
    const PAConvexFunction h = pa_from_grid(f, step);
    s.pieces = h.pieces().size();
    const AtomicMeasure mu = ma_measure(h);
    for (const auto& t : tests) s.integrals.push_back(integrate(mu, t));
    s.error = uniform_error(f, h, step / 2);
    report.steps.push_back(std::move(s));
  }
  for (std::size_t k = 1; k < report.steps.size(); ++k) {
    std::vector<Rational> d;
    for (std::size_t j = 0; j < tests.size(); ++j)
      d.push_back(abs_value(report.steps[k].integrals[j] - report.steps[k - 1].integrals[j]));
    report.differences.push_back(std::move(d));
  }
  return report;
}

}  // namespace monge
