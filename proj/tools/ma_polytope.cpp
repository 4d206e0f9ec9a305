// Command-line front end. Exit codes: 0 success, 2 unparsable input,
// 3 violated precondition, 4 internal consistency failure.

#include "monge/approx/approx.hpp"
#include "monge/io/csv_io.hpp"
#include "monge/io/files.hpp"
#include "monge/io/json_io.hpp"
#include "monge/io/verify.hpp"
#include "monge/ma/monge_ampere.hpp"
#include "monge/ma/toric.hpp"
#include "monge/solver1d/solver1d.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

using namespace monge;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kParse = 2;
constexpr int kPrecondition = 3;
constexpr int kInternal = 4;

struct Options {
  std::string out;
  std::string format = "json";
  std::vector<std::string> inputs;
  std::string at;
  std::uint64_t deg_s = 1;
  std::string step;
  std::string steps;
  std::string probe_step;
  std::string anchor = "0,0,0";
  std::string corpus = MONGE_CORPUS_DIR;
};

std::vector<Rational> rational_list(const std::string& text, const char* what) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      out.push_back(parse_rational(item));
    } catch (const ParseError&) {
      throw ParseError(std::string(what) + ": cannot read \"" + item + "\" as a rational");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Vector point_arg(const std::string& text, const char* what) {
  const auto xs = rational_list(text, what);
  Vector v(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Eigen::Index>(i)) = xs[i];
  return v;
}

Json load(const std::string& path) { return io::parse_json(io::read_file(path)); }

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    io::write_file_atomic(opt.out, text);
  }
}

void require_json(const Options& opt, const char* command) {
  if (opt.format != "json") throw std::invalid_argument(std::string(command) + ": only --format json is available");
}

// Evaluator file: {"kind": "quadratic", "domain": P, "hessian": [[..]], "gradient": [..], "constant": c}
// for 1/2 x^T H x + g.x + c, or {"kind": "pa", "domain": P, "pieces": [...]}.
ConvexEvaluator evaluator_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw ParseError("evaluator: missing string field \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "pa") {
    const PAConvexFunction h = io::pa_function_from_json(j);
    return {[h](const Point& x) { return h(x); }, h.domain()};
  }
  if (kind != "quadratic") throw ParseError("evaluator: unknown kind \"" + kind + "\"");
  if (!j.contains("domain")) throw ParseError("evaluator: missing field \"domain\"");
  const Polytope domain = io::polytope_from_json(j.at("domain"));
  const Eigen::Index n = domain.ambient_dim();
  Matrix hess = Matrix::Zero(n, n);
  if (j.contains("hessian")) {
    const Json& rows = j.at("hessian");
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n) throw ParseError("evaluator: hessian must be n x n");
    for (Eigen::Index r = 0; r < n; ++r) {
      const Vector row = io::vector_from_json(rows.at(static_cast<std::size_t>(r)));
      if (row.size() != n) throw ParseError("evaluator: hessian must be n x n");
      hess.row(r) = row.transpose();
    }
  }
  const Vector grad = j.contains("gradient") ? io::vector_from_json(j.at("gradient")) : Vector(Vector::Zero(n));
  if (grad.size() != n) throw ParseError("evaluator: gradient has the wrong length");
  const Rational c = j.contains("constant") ? io::rational_from_json(j.at("constant")) : Rational(0);
  return {[hess, grad, c](const Point& x) { return Rational(x.dot(hess * x) / 2 + grad.dot(x) + c); }, domain};
}

// Optional "tests": [{"kind": "indicator", "box": P}, {"kind": "affine", "slope": [..],
// "intercept": c, "box": P?}, {"kind": "monomial", "powers": [..]}]. Defaults to
// the indicator of the whole domain.
std::vector<PointFunction> tests_from_json(const Json& j, const Polytope& domain) {
  std::vector<PointFunction> tests;
  if (!j.contains("tests")) {
    tests.push_back([](const Point&) { return Rational(1); });
    return tests;
  }
  for (const Json& t : j.at("tests")) {
    const std::string kind = t.value("kind", "");
    if (kind == "indicator") {
      const Polytope box = io::polytope_from_json(t.at("box"));
      tests.push_back([box](const Point& x) { return contains(box, x) ? Rational(1) : Rational(0); });
    } else if (kind == "affine") {
      const Vector slope = io::vector_from_json(t.at("slope"));
      const Rational b = t.contains("intercept") ? io::rational_from_json(t.at("intercept")) : Rational(0);
      const Polytope box = t.contains("box") ? io::polytope_from_json(t.at("box")) : domain;
      tests.push_back([slope, b, box](const Point& x) { return contains(box, x) ? Rational(slope.dot(x) + b) : Rational(0); });
    } else if (kind == "monomial") {
      const std::vector<int> powers = t.at("powers").get<std::vector<int>>();
      tests.push_back([powers](const Point& x) {
        Rational v(1);
        for (std::size_t i = 0; i < powers.size(); ++i)
          for (int k = 0; k < powers[i]; ++k) v *= x(static_cast<Eigen::Index>(i));
        return v;
      });
    } else {
      throw ParseError("tests: unknown kind \"" + kind + "\"");
    }
  }
  return tests;
}

int run_ma(const Options& opt) {
  const AtomicMeasure mu = ma_measure(io::pa_function_from_json(load(opt.inputs.at(0))));
  emit(opt, opt.format == "csv" ? io::to_csv(mu) : io::dump(io::to_json(mu)));
  return kOk;
}

int run_mixed(const Options& opt) {
  std::vector<PAConvexFunction> hs;
  for (const auto& in : opt.inputs) hs.push_back(io::pa_function_from_json(load(in)));
  const AtomicMeasure mu = mixed_ma(hs);
  emit(opt, opt.format == "csv" ? io::to_csv(mu) : io::dump(io::to_json(mu)));
  return kOk;
}

int run_subdiff(const Options& opt) {
  const PAConvexFunction h = io::pa_function_from_json(load(opt.inputs.at(0)));
  const Polytope d = subdifferential(h, point_arg(opt.at, "--at"));
  emit(opt, opt.format == "csv" ? io::to_csv(d) : io::dump(io::to_json(d)));
  return kOk;
}

int run_degree(const Options& opt) {
  const PAConvexFunction h = io::pa_function_from_json(load(opt.inputs.at(0)));
  const DegreeReport r = toric_degree(h, point_arg(opt.at, "--at"), opt.deg_s);
  emit(opt, opt.format == "csv" ? io::to_csv(r) : io::dump(io::to_json(r)));
  return kOk;
}

int run_approx(const Options& opt) {
  const Json doc = load(opt.inputs.at(0));
  const ConvexEvaluator f = evaluator_from_json(doc);
  if (!opt.step.empty() == !opt.steps.empty()) throw std::invalid_argument("approx: give exactly one of --step or --steps");
  if (!opt.step.empty()) {
    require_json(opt, "approx --step");
    const Rational step = rational_list(opt.step, "--step").at(0);
    const PAConvexFunction h = pa_from_grid(f, step);
    Json out = io::to_json(h);
    if (!opt.probe_step.empty()) {
      const auto e = uniform_error(f, h, rational_list(opt.probe_step, "--probe-step").at(0));
      out["probe_error"] = io::to_json(e.probe_max);
      out["error_bound"] = io::to_json(e.oscillation_bound);
    }
    emit(opt, io::dump(out));
    return kOk;
  }
  const ConvergenceReport r = convergence_study(f, rational_list(opt.steps, "--steps"), tests_from_json(doc, f.domain));
  emit(opt, opt.format == "csv" ? io::to_csv(r) : io::dump(io::to_json(r)));
  return kOk;
}

int run_solve1d(const Options& opt) {
  const PiecewisePolynomial f = io::piecewise_polynomial_from_json(load(opt.inputs.at(0)));
  const auto a = rational_list(opt.anchor, "--anchor");
  if (a.size() != 3) throw ParseError("--anchor: expected point,value,slope");
  const Solution1D sol = solve_1d(f, opt.deg_s, {a[0], a[1], a[2]});
  if (opt.format == "csv") {
    emit(opt, io::to_csv(sol.phi));
    return kOk;
  }
  Json out = io::to_json(sol);
  out["regularity"] = io::to_json(verify_regularity(sol, f));
  emit(opt, io::dump(out));
  return kOk;
}

int run_verify(const Options& opt) {
  require_json(opt, "verify");
  const io::VerifyReport report = io::verify_corpus(opt.corpus);
  emit(opt, report.table());
  return report.ok() ? kOk : kInternal;
}

void check_thread_env() {
  const char* env = std::getenv("MA_POLYTOPE_THREADS");
  if (!env) return;
  const std::string s(env);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("MA_POLYTOPE_THREADS must be a non-negative integer, got \"" + s + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Monge-Ampere measures of piecewise affine convex functions"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--out", opt.out, "Write the result to this file (atomically) instead of stdout");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* ma = app.add_subcommand("ma", "Monge-Ampere measure of a PA convex function");
  ma->add_option("function", opt.inputs, "Function JSON")->required()->expected(1);

  auto* mixed = app.add_subcommand("mixed", "Mixed Monge-Ampere measure of n functions");
  mixed->add_option("functions", opt.inputs, "Function JSON files")->required();

  auto* sub = app.add_subcommand("subdiff", "Gradient image at an interior point");
  sub->add_option("function", opt.inputs, "Function JSON")->required()->expected(1);
  sub->add_option("--at", opt.at, "Point as comma-separated rationals")->required();

  auto* deg = app.add_subcommand("degree", "Toric degree report at an interior vertex");
  deg->add_option("function", opt.inputs, "Function JSON")->required()->expected(1);
  deg->add_option("--at", opt.at, "Vertex as comma-separated rationals")->required();
  deg->add_option("--deg-s", opt.deg_s, "Positive integer multiplier");

  auto* approx = app.add_subcommand("approx", "Grid approximation of a convex function");
  approx->add_option("evaluator", opt.inputs, "Evaluator JSON")->required()->expected(1);
  approx->add_option("--step", opt.step, "Single grid step; prints the approximant");
  approx->add_option("--steps", opt.steps, "Decreasing steps for a convergence study, comma-separated");
  approx->add_option("--probe-step", opt.probe_step, "Probe lattice step for the error estimate (with --step)");

  auto* solve = app.add_subcommand("solve1d", "Solve deg_s * phi'' = f on an interval");
  solve->add_option("density", opt.inputs, "Piecewise polynomial JSON")->required()->expected(1);
  solve->add_option("--deg-s", opt.deg_s, "Positive integer multiplier");
  solve->add_option("--anchor", opt.anchor, "point,value,slope fixing the affine freedom");

  auto* verify = app.add_subcommand("verify", "Run the invariant suite over a corpus directory");
  verify->add_option("corpus", opt.corpus, "Directory of function JSON files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    check_thread_env();
    if (*ma) return run_ma(opt);
    if (*mixed) return run_mixed(opt);
    if (*sub) return run_subdiff(opt);
    if (*deg) return run_degree(opt);
    if (*approx) return run_approx(opt);
    if (*solve) return run_solve1d(opt);
    if (*verify) return run_verify(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::domain_error& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::out_of_range& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
