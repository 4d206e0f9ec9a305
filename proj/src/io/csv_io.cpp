#include "monge/io/csv_io.hpp"

namespace monge::io {

namespace {

std::string quoted(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void rational_columns(std::vector<std::string>& header, const std::string& name) {
  header.push_back(name);
  header.push_back(name + "_decimal");
}

}  // namespace

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_rational(std::vector<std::string>& row, const Rational& q) {
  row.push_back(to_string(q));
  row.push_back(to_decimal(q, 12));
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size()) throw std::logic_error("CsvTable: row width does not match the header");
  rows_.push_back(std::move(row));
}

std::string CsvTable::str() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out += ',';
      out += quoted(fields[i]);
    }
    out += "\r\n";
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return out;
}

std::vector<std::string> coordinate_names(Eigen::Index n) {
  if (n <= 3) {
    static const char* names[] = {"x", "y", "z"};
    return std::vector<std::string>(names, names + n);
  }
  std::vector<std::string> out;
  for (Eigen::Index i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::string to_csv(const AtomicMeasure& mu) {
  auto header = coordinate_names(mu.ambient_dim());
  rational_columns(header, "mass");
  CsvTable t(header);
  for (const auto& a : mu.atoms()) {
    std::vector<std::string> row;
    for (Eigen::Index i = 0; i < a.point.size(); ++i) row.push_back(to_string(a.point(i)));
    CsvTable::add_rational(row, a.mass);
    t.add_row(std::move(row));
  }
  return t.str();
}

std::string to_csv(const DegreeReport& r) {
  auto header = coordinate_names(r.vertex.size());
  rational_columns(header, "ma_mass");
  rational_columns(header, "toric_degree");
  for (const char* h : {"deg_s", "rescale", "lattice_degree", "translation_verified"}) header.push_back(h);
  CsvTable t(header);
  std::vector<std::string> row;
  for (Eigen::Index i = 0; i < r.vertex.size(); ++i) row.push_back(to_string(r.vertex(i)));
  CsvTable::add_rational(row, r.ma_mass);
  CsvTable::add_rational(row, r.toric_degree);
  row.push_back(std::to_string(r.deg_s));
  row.push_back(r.rescale.str());
  row.push_back(r.lattice_degree.str());
  row.push_back(r.translation_verified ? "true" : "false");
  t.add_row(std::move(row));
  return t.str();
}

std::string to_csv(const ConvergenceReport& r) {
  std::vector<std::string> header;
  rational_columns(header, "step");
  rational_columns(header, "error");
  rational_columns(header, "error_bound");
  header.push_back("pieces");
  const std::size_t tests = r.steps.empty() ? 0 : r.steps.front().integrals.size();
  for (std::size_t j = 1; j <= tests; ++j) rational_columns(header, "test" + std::to_string(j));
  CsvTable t(header);
  for (const auto& s : r.steps) {
    std::vector<std::string> row;
    CsvTable::add_rational(row, s.step);
    CsvTable::add_rational(row, s.error.probe_max);
    CsvTable::add_rational(row, s.error.oscillation_bound);
    row.push_back(std::to_string(s.pieces));
    for (const auto& v : s.integrals) CsvTable::add_rational(row, v);
    t.add_row(std::move(row));
  }
  return t.str();
}

std::string to_csv(const Polytope& p) {
  CsvTable t(coordinate_names(p.ambient_dim()));
  for (const auto& v : p.vertices()) {
    std::vector<std::string> row;
    for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(to_string(v(i)));
    t.add_row(std::move(row));
  }
  return t.str();
}

std::string to_csv(const PiecewisePolynomial& p) {
  const int d = std::max(p.max_degree(), 0);
  std::vector<std::string> header{"lower", "upper"};
  for (int k = 0; k <= d; ++k) header.push_back("c" + std::to_string(k));
  CsvTable t(header);
  for (std::size_t i = 0; i < p.pieces().size(); ++i) {
    std::vector<std::string> row{to_string(p.breakpoints()[i]), to_string(p.breakpoints()[i + 1])};
    const auto& c = p.pieces()[i];
    for (int k = 0; k <= d; ++k) row.push_back(static_cast<std::size_t>(k) < c.size() ? to_string(c[k]) : "0");
    t.add_row(std::move(row));
  }
  return t.str();
}

}  // namespace monge::io
