#include "monge/io/verify.hpp"

#include "monge/approx/approx.hpp"
#include "monge/core/parallel.hpp"
#include "monge/io/files.hpp"
#include "monge/io/json_io.hpp"
#include "monge/ma/monge_ampere.hpp"
#include "monge/ma/toric.hpp"
#include "monge/solver1d/solver1d.hpp"
#include "monge/subdivision/complex.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

namespace monge::io {

namespace {

class Recorder {
 public:
  Recorder(std::string module, std::string subject) : module_(std::move(module)), subject_(std::move(subject)) {}

  void module(std::string m) { module_ = std::move(m); }
  void subject(std::string s) { subject_ = std::move(s); }

  // `body` returns an empty string on success and a witness otherwise.
  void check(const std::string& invariant, const std::function<std::string()>& body) {
    CheckResult r{module_, invariant, subject_, true, ""};
    try {
      r.witness = body();
      r.passed = r.witness.empty() || r.witness.rfind("n/a", 0) == 0;
    } catch (const std::exception& e) {
      r.passed = false;
      r.witness = std::string("exception: ") + e.what();
    }
    out_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string module_, subject_;
  std::vector<CheckResult> out_;
};

Rational power(const Rational& t, Eigen::Index n) {
  Rational r(1);
  for (Eigen::Index i = 0; i < n; ++i) r *= t;
  return r;
}

// max(0, x_k - c) with c the k-th coordinate of the domain centroid.
PAConvexFunction hinge(const Polytope& domain, Eigen::Index k) {
  const Eigen::Index n = domain.ambient_dim();
  const Point c = vertex_centroid(domain);
  Vector e = Vector::Zero(n);
  e(k) = 1;
  return PAConvexFunction({{Vector::Zero(n), Rational(0)}, {e, Rational(-c(k))}}, domain);
}

std::string first_bad_atom(const AtomicMeasure& got, const AtomicMeasure& want) {
  if (got == want) return "";
  return "got " + dump(to_json(got)) + " expected " + dump(to_json(want));
}

// Every vertex of the unrestricted complex lies inside the domain interior.
bool domain_is_roomy(const PAConvexFunction& h) {
  const Eigen::Index n = h.ambient_dim();
  const PAConvexFunction huge(h.pieces(), cube(n, Rational(-1000000), Rational(1000000)));
  for (const auto& v : lift_epigraph(huge).vertices) {
    if (!v.interior()) continue;
    if (!contains(h.domain(), v.x, Containment::kRelativeInterior)) return false;
  }
  return true;
}

void geometry_checks(Recorder& rec, const Polytope& p, const std::string& label) {
  const Eigen::Index n = p.ambient_dim();
  rec.check("h-v round trip (" + label + ")", [&]() -> std::string {
    const Polytope back = from_halfspaces(n, p.facets(), p.equations());
    return back == p ? "" : "vertex sets differ after H->V";
  });
  if (!p.is_full_dimensional()) return;
  rec.check("volume scaling and unimodular invariance (" + label + ")", [&]() -> std::string {
    const Rational v = volume(p);
    const Rational t(3, 2);
    if (volume(scale(p, t)) != power(t, n) * v) return "volume(t P) != t^n volume(P) for t = 3/2";
    Matrix shear = Matrix::Identity(n, n);
    if (n > 1) shear(0, n - 1) = 2;
    if (volume(affine_image(p, shear, Vector::Zero(n))) != v) return "shear changed the volume";
    return "";
  });
  rec.check("triangulation additivity (" + label + ")", [&]() -> std::string {
    Rational total(0);
    for (const auto& s : triangulate(p, p.vertices().back())) total += simplex_volume(s);
    return total == volume(p) ? "" : "fan from the last vertex gives " + to_string(total);
  });
  rec.check("contains vertices and centroid (" + label + ")", [&]() -> std::string {
    for (const auto& v : p.vertices())
      if (!contains(p, v)) return "vertex " + to_string(v) + " not contained";
    if (!contains(p, vertex_centroid(p), Containment::kRelativeInterior)) return "centroid not interior";
    return "";
  });
}

}  // namespace

bool VerifyReport::ok() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

std::string VerifyReport::table() const {
  std::size_t wm = 6, wi = 9, ws = 7;
  for (const auto& c : checks) {
    wm = std::max(wm, c.module.size());
    wi = std::max(wi, c.invariant.size());
    ws = std::max(ws, c.subject.size());
  }
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(wm)) << "module" << "  " << std::setw(static_cast<int>(wi))
      << "invariant" << "  " << std::setw(static_cast<int>(ws)) << "subject" << "  result\n";
  for (const auto& c : checks) {
    out << std::setw(static_cast<int>(wm)) << c.module << "  " << std::setw(static_cast<int>(wi)) << c.invariant << "  "
        << std::setw(static_cast<int>(ws)) << c.subject << "  " << (c.passed ? "PASS" : "FAIL");
    if (!c.witness.empty()) out << "  " << c.witness;
    out << "\n";
  }
  out << checks.size() - failures() << "/" << checks.size() << " checks passed\n";
  return out.str();
}

std::vector<CheckResult> verify_function(const std::string& name, const PAConvexFunction& h) {
  Recorder rec("geom-core", name);
  const Eigen::Index n = h.ambient_dim();
  geometry_checks(rec, h.domain(), "domain");

  rec.module("subdivision");
  const PolytopalComplex complex = linearity_complex(h);
  rec.check("cell values agree with max of pieces", [&]() -> std::string {
    for (const auto& lc : linearity_cells(h))
      for (const auto& v : lc.cell.vertices())
        if (h.pieces()[lc.piece](v) != h(v)) return "piece " + std::to_string(lc.piece) + " at " + to_string(v);
    return "";
  });
  rec.check("maximal cells meet in common faces", [&]() -> std::string {
    const auto report = validate(complex);
    return report.ok() ? "" : report.problems.front();
  });
  const PAConvexFunction g1 = hinge(h.domain(), 0), g2 = hinge(h.domain(), n - 1);
  rec.check("common refinement commutative and associative", [&]() -> std::string {
    const auto a = complex, b = linearity_complex(g1), c = linearity_complex(g2);
    if (!(common_refinement(a, b) == common_refinement(b, a))) return "a*b != b*a";
    if (!(common_refinement(common_refinement(a, b), c) == common_refinement(a, common_refinement(b, c))))
      return "(a*b)*c != a*(b*c)";
    return "";
  });
  AffineFunctional shift{Vector::Zero(n), Rational(5, 3)};
  for (Eigen::Index i = 0; i < n; ++i) shift.slope(i) = Rational(static_cast<long>(i) + 2, 3) * (i % 2 ? -1 : 1);
  rec.check("complex unchanged by adding an affine function", [&]() -> std::string {
    return linearity_complex(h + shift) == complex ? "" : "cell sets differ";
  });

  rec.module("ma-engine");
  const AtomicMeasure mu = ma_measure(h);
  const auto interior = interior_vertices(complex);
  rec.check("support on interior vertices", [&]() -> std::string {
    for (const auto& a : mu.atoms())
      if (std::none_of(interior.begin(), interior.end(), [&](const Point& v) { return equal(v, a.point); }))
        return "atom at " + to_string(a.point) + " is not an interior vertex";
    return "";
  });
  rec.check("homogeneity", [&]() -> std::string {
    const Rational t(5, 2);
    std::vector<Atom> scaled;
    for (const auto& a : mu.atoms()) scaled.push_back({a.point, power(t, n) * a.mass});
    return first_bad_atom(ma_measure(t * h), AtomicMeasure(n, scaled));
  });
  rec.check("affine invariance", [&]() -> std::string {
    if (const auto w = first_bad_atom(ma_measure(h + shift), mu); !w.empty()) return w;
    for (const auto& a : mu.atoms())
      if (!(translate(subdifferential(h, a.point), shift.slope) == subdifferential(h + shift, a.point)))
        return "subdifferential at " + to_string(a.point) + " did not translate";
    return "";
  });
  std::vector<Polytope> cells;
  for (const auto& a : mu.atoms()) cells.push_back(subdifferential(h, a.point));
  rec.check("translation step", [&]() -> std::string {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const Point& u = mu.atoms()[i].point;
      if (!(subdifferential(recentre(h, u), Point::Zero(n)) == cells[i])) return "differs at " + to_string(u);
    }
    return "";
  });
  rec.check("dual cells overlap in measure zero", [&]() -> std::string {
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t j = i + 1; j < cells.size(); ++j)
        if (volume(intersection(cells[i], cells[j])) != 0)
          return "cells at " + to_string(mu.atoms()[i].point) + " and " + to_string(mu.atoms()[j].point);
    return "";
  });
  rec.check("total mass equals Newton polytope volume", [&]() -> std::string {
    if (!domain_is_roomy(h)) return "n/a: some vertex of the unrestricted complex lies outside the domain";
    std::vector<Point> slopes;
    for (const auto& p : h.pieces()) slopes.push_back(p.slope);
    const Rational want = volume(convex_hull(slopes));
    return mu.total_mass() == want ? "" : "total " + to_string(mu.total_mass()) + " vs " + to_string(want);
  });
  rec.check("toric degree equals n! times mass", [&]() -> std::string {
    for (const auto& a : mu.atoms()) {
      const auto r = toric_degree(h, a.point, 1);
      if (r.toric_degree != factorial(static_cast<int>(n)) * a.mass || !r.translation_verified)
        return "at " + to_string(a.point);
      if (toric_degree(h, a.point, 3).toric_degree != 3 * r.toric_degree) return "deg_s not linear at " + to_string(a.point);
    }
    return "";
  });
  rec.check("mixed diagonal", [&]() -> std::string {
    return first_bad_atom(mixed_ma(std::vector<PAConvexFunction>(static_cast<std::size_t>(n), h)), mu);
  });
  rec.check("mixed symmetry", [&]() -> std::string {
    if (n == 1) return "n/a: a single argument";
    std::vector<PAConvexFunction> hs{h};
    for (Eigen::Index k = 1; k < n; ++k) hs.push_back(hinge(h.domain(), k - 1));
    const auto base = mixed_ma(hs);
    std::vector<PAConvexFunction> rev(hs.rbegin(), hs.rend());
    if (const auto w = first_bad_atom(mixed_ma(rev), base); !w.empty()) return "reversed: " + w;
    std::rotate(hs.begin(), hs.begin() + 1, hs.end());
    return first_bad_atom(mixed_ma(hs), base);
  });

  rec.module("cli-io");
  rec.check("json round trip", [&]() -> std::string {
    if (!(pa_function_from_json(parse_json(dump(to_json(h)))).pieces() == h.pieces())) return "function";
    if (!(measure_from_json(parse_json(dump(to_json(mu)))) == mu)) return "measure";
    if (!(complex_from_json(parse_json(dump(to_json(complex)))) == complex)) return "complex";
    for (const auto& a : mu.atoms()) {
      const auto r = toric_degree(h, a.point, 2);
      const auto back = degree_report_from_json(parse_json(dump(to_json(r))));
      if (dump(to_json(back)) != dump(to_json(r))) return "degree report at " + to_string(a.point);
    }
    return "";
  });
  return rec.take();
}

std::vector<CheckResult> verify_builtin() {
  Recorder rec("approx", "half |x|^2 on [-1,1]^2");
  const ConvexEvaluator quad{[](const Point& x) { return Rational(x.squaredNorm() / 2); }, cube(2, Rational(-1), Rational(1))};
  const Polytope box = cube(2, Rational(-1, 2), Rational(1, 2));
  const std::vector<Rational> steps{Rational(1, 2), Rational(1, 4), Rational(1, 8)};
  std::vector<PAConvexFunction> approximants;
  for (const auto& s : steps) approximants.push_back(pa_from_grid(quad, s));

  rec.check("interpolant matches samples", [&]() -> std::string {
    for (std::size_t k = 0; k < steps.size(); ++k)
      for (const auto& x : grid_samples(quad.domain, steps[k]))
        if (approximants[k](x) != quad.eval(x)) return "at " + to_string(x);
    return "";
  });
  rec.check("nested refinement moves towards f", [&]() -> std::string {
    for (const auto& x : grid_samples(quad.domain, Rational(1, 16))) {
      for (std::size_t k = 1; k < steps.size(); ++k)
        if (approximants[k](x) > approximants[k - 1](x) || approximants[k](x) < quad.eval(x)) return "at " + to_string(x);
    }
    return "";
  });
  const PointFunction indicator = [&](const Point& x) { return contains(box, x) ? Rational(1) : Rational(0); };
  const PointFunction weighted = [&](const Point& x) { return contains(box, x) ? Rational(1 + x(0) + x(1) / 2) : Rational(0); };
  const PointFunction product = [](const Point& x) { return Rational((1 + x(0)) * (1 + x(1))); };
  const auto study = convergence_study(quad, steps, {indicator, weighted, product});
  rec.check("test integrals form a Cauchy sequence", [&]() -> std::string {
    for (std::size_t j = 0; j < 3; ++j)
      if (!(study.differences[1][j] < study.differences[0][j])) return "test " + std::to_string(j + 1) + " did not contract";
    return "";
  });
  rec.check("box mass approaches its area", [&]() -> std::string {
    Rational last(-1);
    for (const auto& s : study.steps) {
      const Rational gap = s.integrals[0] > 1 ? Rational(s.integrals[0] - 1) : Rational(1 - s.integrals[0]);
      if (last >= 0 && !(gap < last)) return "gap " + to_string(gap) + " at step " + to_string(s.step);
      last = gap;
    }
    return "";
  });

  rec.module("solver1d");
  rec.subject("densities on [0,1]");
  const PiecewisePolynomial smooth({Rational(0), Rational(1)}, {{Rational(0), Rational(6)}});
  const PiecewisePolynomial jump({Rational(0), Rational(1, 2), Rational(1)}, {{Rational(1)}, {Rational(2), Rational(1)}});
  for (const auto* f : {&smooth, &jump}) {
    const std::string tag = f == &smooth ? " (6x)" : " (jump)";
    rec.check("exact equation and regularity" + tag, [&]() -> std::string {
      const auto sol = solve_1d(*f, 2, {Rational(0), Rational(0), Rational(0)});
      const auto r = verify_regularity(sol, *f);
      return r.ok() ? "" : dump(to_json(r));
    });
    rec.check("anchors differ by an affine function" + tag, [&]() -> std::string {
      const auto a = solve_1d(*f, 1, {Rational(0), Rational(0), Rational(0)});
      const auto b = solve_1d(*f, 1, {Rational(3, 4), Rational(-2), Rational(5, 3)});
      const Polynomial d = b.phi.pieces()[0] - a.phi.pieces()[0];
      if (degree(d) > 1) return "difference has degree " + std::to_string(degree(d));
      for (std::size_t i = 1; i < a.phi.pieces().size(); ++i)
        if (b.phi.pieces()[i] - a.phi.pieces()[i] != d) return "difference changes on piece " + std::to_string(i);
      return "";
    });
    rec.check("discrete mass within its bound" + tag, [&]() -> std::string {
      const auto sol = solve_1d(*f, 1, {Rational(0), Rational(0), Rational(0)});
      for (long m : {4, 16}) {
        const auto c = mass_consistency(sol, Rational(1, m));
        if (!c.within_bound()) return "step 1/" + std::to_string(m) + ": " + to_string(c.total_mass) + " vs " + to_string(c.exact_mass);
      }
      return "";
    });
    rec.check("json round trip" + tag, [&]() -> std::string {
      return piecewise_polynomial_from_json(parse_json(dump(to_json(*f)))) == *f ? "" : "differs";
    });
  }
  return rec.take();
}

VerifyReport verify_corpus(const std::filesystem::path& corpus) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(corpus))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::vector<PAConvexFunction> functions;
  for (const auto& f : files) functions.push_back(pa_function_from_json(parse_json(read_file(f))));

  std::vector<std::vector<CheckResult>> per_file(files.size());
  parallel_for(files.size(), [&](std::size_t i) { per_file[i] = verify_function(files[i].stem().string(), functions[i]); });

  VerifyReport report;
  for (auto& r : per_file) report.checks.insert(report.checks.end(), r.begin(), r.end());
  for (auto& r : verify_builtin()) report.checks.push_back(std::move(r));
  return report;
}

}  // namespace monge::io
