#include "monge/io/json_io.hpp"

#include <sstream>

namespace monge::io {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* key, const char* what) {
  const Json& a = field(j, key, what);
  if (!a.is_array()) throw ParseError(std::string(what) + ": \"" + key + "\" must be an array");
  return a;
}

Json rationals(const std::vector<Rational>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

std::uint64_t positive_integer(const Json& j, const char* what) {
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > 0) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() > 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  throw ParseError(std::string(what) + ": expected a positive integer");
}

Integer integer_from_json(const Json& j, const char* what) {
  const Rational q = rational_from_json(j);
  if (denominator(q) != 1) throw ParseError(std::string(what) + ": expected an integer");
  return numerator(q);
}

std::string monomial(const Rational& c, std::size_t k, bool first) {
  std::string s;
  const Rational mag = c < 0 ? Rational(-c) : c;
  if (first) {
    if (c < 0) s += "-";
  } else {
    s += c < 0 ? " - " : " + ";
  }
  const bool unit = mag == 1 && k > 0;
  if (!unit) s += to_string(mag);
  if (k > 0) {
    if (!unit) s += " ";
    s += "x";
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_string(v(i)));
  return a;
}

Json to_json(const Polytope& p) {
  Json j;
  j["n"] = p.ambient_dim();
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(to_json(v));
  j["vertices"] = std::move(verts);
  Json facets = Json::array();
  for (const auto& f : p.facets()) facets.push_back({{"normal", to_json(f.normal)}, {"offset", to_json(f.offset)}});
  j["facets"] = std::move(facets);
  if (!p.equations().empty()) {
    Json eqs = Json::array();
    for (const auto& e : p.equations()) eqs.push_back({{"normal", to_json(e.normal)}, {"offset", to_json(e.offset)}});
    j["equations"] = std::move(eqs);
  }
  return j;
}

Json to_json(const AffineFunctional& a) { return {{"slope", to_json(a.slope)}, {"intercept", to_json(a.intercept)}}; }

Json to_json(const PAConvexFunction& h) {
  Json pieces = Json::array();
  for (const auto& p : h.pieces()) pieces.push_back(to_json(p));
  return {{"domain", to_json(h.domain())}, {"pieces", std::move(pieces)}};
}

Json to_json(const PolytopalComplex& c) {
  Json cells = Json::array();
  for (const auto& m : c.maximal_cells()) cells.push_back(to_json(m));
  return {{"domain", to_json(c.domain())}, {"maximal_cells", std::move(cells)}};
}

Json to_json(const AtomicMeasure& mu) {
  Json atoms = Json::array();
  for (const auto& a : mu.atoms()) atoms.push_back({{"point", to_json(a.point)}, {"mass", to_json(a.mass)}});
  return {{"n", mu.ambient_dim()}, {"atoms", std::move(atoms)}};
}

Json to_json(const DegreeReport& r) {
  Json j;
  j["vertex"] = to_json(r.vertex);
  j["subdifferential"] = to_json(r.subdifferential);
  j["ma_mass"] = to_json(r.ma_mass);
  j["toric_degree"] = to_json(r.toric_degree);
  j["deg_s"] = r.deg_s;
  j["rescale"] = r.rescale.str();
  j["lattice_degree"] = r.lattice_degree.str();
  j["translation_verified"] = r.translation_verified;
  return j;
}

Json to_json(const PiecewisePolynomial& p) {
  Json pieces = Json::array();
  for (const auto& c : p.pieces()) pieces.push_back(c.empty() ? Json::array({"0"}) : rationals(c));
  return {{"breakpoints", rationals(p.breakpoints())}, {"pieces", std::move(pieces)}};
}

Json to_json(const Solution1D& s) {
  Json j;
  j["deg_s"] = s.deg_s;
  j["anchor"] = {{"point", to_json(s.anchor.point)}, {"value", to_json(s.anchor.value)}, {"slope", to_json(s.anchor.slope)}};
  j["phi"] = to_json(s.phi);
  j["rendering"] = render(s.phi);
  return j;
}

Json to_json(const RegularityReport& r) {
  auto order = [](int k) { return k == kSmooth ? Json("smooth") : Json(k); };
  Json bps = Json::array();
  for (const auto& b : r.breakpoints) {
    bps.push_back({{"at", to_json(b.at)},
                   {"f_order", order(b.f_order)},
                   {"phi_order", order(b.phi_order)},
                   {"c1", b.c1},
                   {"gains_two", b.gains_two}});
  }
  Json j;
  j["ok"] = r.ok();
  j["equation_holds"] = r.equation_holds;
  j["finite_differences_agree"] = r.finite_differences_agree;
  j["probes"] = r.probes;
  j["exact_probes"] = r.exact_probes;
  j["max_probe_deviation"] = to_json(r.max_probe_deviation);
  j["breakpoints"] = std::move(bps);
  return j;
}

Json to_json(const ConvergenceReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"step", to_json(s.step)},
                     {"pieces", s.pieces},
                     {"probe_error", to_json(s.error.probe_max)},
                     {"error_bound", to_json(s.error.oscillation_bound)},
                     {"integrals", rationals(s.integrals)}});
  }
  Json diffs = Json::array();
  for (const auto& d : r.differences) diffs.push_back(rationals(d));
  return {{"steps", std::move(steps)}, {"differences", std::move(diffs)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Rational(Integer(j.get<std::uint64_t>()));
  throw ParseError("expected a rational as a \"p/q\" string or an integer, got " + j.dump());
}

Vector vector_from_json(const Json& j) {
  const auto xs = rationals_from_json(j);
  Vector v(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Eigen::Index>(i)) = xs[i];
  return v;
}

Polytope polytope_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("polytope: expected a JSON object");
  auto halfspaces = [](const Json& a) {
    if (!a.is_array()) throw ParseError("polytope: facets must be an array");
    std::vector<Halfspace> out;
    for (const auto& f : a) out.push_back({vector_from_json(field(f, "normal", "facet")), rational_from_json(field(f, "offset", "facet"))});
    return out;
  };
  const bool has_vertices = j.contains("vertices") && !j.at("vertices").empty();
  if (!has_vertices) {
    if (j.contains("facets")) {
      const auto facets = halfspaces(j.at("facets"));
      const auto eqs = j.contains("equations") ? halfspaces(j.at("equations")) : std::vector<Halfspace>{};
      Eigen::Index n = j.contains("n") ? j.at("n").get<Eigen::Index>() : -1;
      if (n < 0 && !facets.empty()) n = facets.front().normal.size();
      if (n < 0) throw ParseError("polytope: cannot infer the dimension");
      try {
        return from_halfspaces(n, facets, eqs);
      } catch (const std::domain_error& e) {
        throw ParseError(std::string("polytope: ") + e.what());
      }
    }
    if (j.contains("n") && j.at("n").is_number_integer()) return Polytope::empty(j.at("n").get<Eigen::Index>());
    throw ParseError("polytope: needs vertices, facets, or n for the empty polytope");
  }
  std::vector<Point> verts;
  for (const auto& v : array_field(j, "vertices", "polytope")) verts.push_back(vector_from_json(v));
  Polytope p;
  try {
    p = convex_hull(std::move(verts));
  } catch (const DimensionError& e) {
    throw ParseError(std::string("polytope: ") + e.what());
  }
  if (j.contains("n") && j.at("n") != p.ambient_dim()) throw ParseError("polytope: n does not match the vertices");
  if (j.contains("facets")) {
    // facets are derived data; when present they must agree with the vertices
    auto given = halfspaces(j.at("facets"));
    if (given.size() != p.facets().size()) throw ParseError("polytope: facets do not match the vertices");
    for (const auto& f : given) {
      bool found = false;
      for (const auto& g : p.facets()) found = found || (equal(f.normal, g.normal) && f.offset == g.offset);
      if (!found) throw ParseError("polytope: facet " + to_string(f.normal) + " does not match the vertices");
    }
  }
  return p;
}

PAConvexFunction pa_function_from_json(const Json& j) {
  const Polytope domain = polytope_from_json(field(j, "domain", "function"));
  std::vector<AffineFunctional> pieces;
  for (const auto& p : array_field(j, "pieces", "function")) {
    pieces.push_back({vector_from_json(field(p, "slope", "piece")), rational_from_json(field(p, "intercept", "piece"))});
  }
  return PAConvexFunction(std::move(pieces), domain);
}

PolytopalComplex complex_from_json(const Json& j) {
  const Polytope domain = polytope_from_json(field(j, "domain", "complex"));
  std::vector<Polytope> cells;
  for (const auto& c : array_field(j, "maximal_cells", "complex")) cells.push_back(polytope_from_json(c));
  return PolytopalComplex::from_maximal_cells(domain, std::move(cells));
}

AtomicMeasure measure_from_json(const Json& j) {
  const Json& n = field(j, "n", "measure");
  if (!n.is_number_integer() || n.get<long>() < 1) throw ParseError("measure: n must be a positive integer");
  std::vector<Atom> atoms;
  for (const auto& a : array_field(j, "atoms", "measure")) {
    atoms.push_back({vector_from_json(field(a, "point", "atom")), rational_from_json(field(a, "mass", "atom"))});
  }
  return AtomicMeasure(n.get<Eigen::Index>(), std::move(atoms));
}

DegreeReport degree_report_from_json(const Json& j) {
  DegreeReport r;
  r.vertex = vector_from_json(field(j, "vertex", "degree report"));
  r.subdifferential = polytope_from_json(field(j, "subdifferential", "degree report"));
  r.ma_mass = rational_from_json(field(j, "ma_mass", "degree report"));
  r.toric_degree = rational_from_json(field(j, "toric_degree", "degree report"));
  r.deg_s = positive_integer(field(j, "deg_s", "degree report"), "deg_s");
  r.rescale = integer_from_json(field(j, "rescale", "degree report"), "rescale");
  r.lattice_degree = integer_from_json(field(j, "lattice_degree", "degree report"), "lattice_degree");
  const Json& tv = field(j, "translation_verified", "degree report");
  if (!tv.is_boolean()) throw ParseError("degree report: translation_verified must be a boolean");
  r.translation_verified = tv.get<bool>();
  return r;
}

PiecewisePolynomial piecewise_polynomial_from_json(const Json& j) {
  std::vector<Polynomial> pieces;
  for (const auto& p : array_field(j, "pieces", "piecewise polynomial")) pieces.push_back(rationals_from_json(p));
  return PiecewisePolynomial(rationals_from_json(field(j, "breakpoints", "piecewise polynomial")), std::move(pieces));
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string render(const PiecewisePolynomial& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.pieces().size(); ++i) {
    if (i > 0) out << "; ";
    const auto& c = p.pieces()[i];
    bool first = true;
    for (std::size_t k = c.size(); k-- > 0;) {
      if (c[k] == 0) continue;
      out << monomial(c[k], k, first);
      first = false;
    }
    if (first) out << "0";
    out << " on [" << to_string(p.breakpoints()[i]) << ", " << to_string(p.breakpoints()[i + 1]) << "]";
  }
  return out.str();
}

}  // namespace monge::io
