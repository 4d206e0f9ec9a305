#pragma once

#include "monge/approx/approx.hpp"
#include "monge/ma/measure.hpp"
#include "monge/ma/toric.hpp"
#include "monge/solver1d/solver1d.hpp"

#include <string>
#include <vector>

namespace monge::io {

/// RFC 4180 table: CRLF line ends, fields quoted only when they need it.
/// Every rational appears as an exact "p/q" column followed by an advisory
/// `<name>_decimal` column with 12 significant digits.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  /// Appends the two columns of a rational.
  static void add_rational(std::vector<std::string>& row, const Rational& q);
  void add_row(std::vector<std::string> row);
  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Coordinate column names: x, y, z up to three dimensions, x1..xn beyond.
std::vector<std::string> coordinate_names(Eigen::Index n);

std::string to_csv(const AtomicMeasure& mu);
std::string to_csv(const DegreeReport& r);
std::string to_csv(const ConvergenceReport& r);
std::string to_csv(const Polytope& p);
std::string to_csv(const PiecewisePolynomial& p);

}  // namespace monge::io
