#pragma once

#include "monge/core/polytope.hpp"

#include <functional>
#include <vector>

namespace monge {

struct Atom {
  Point point;
  Rational mass;
};

/// A finite sum of Dirac masses with strictly positive rational weights at
/// pairwise distinct points, kept sorted by point.
class AtomicMeasure {
 public:
  explicit AtomicMeasure(Eigen::Index ambient_dim) : n_(ambient_dim) {}

  /// Zero masses are dropped; negative masses, repeated points and dimension
  /// mismatches throw std::invalid_argument.
  AtomicMeasure(Eigen::Index ambient_dim, std::vector<Atom> atoms);

  Eigen::Index ambient_dim() const { return n_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  const Rational& total_mass() const { return total_; }

  /// Mass at exactly this point (0 if there is no atom).
  Rational mass_at(const Point& x) const;

  friend bool operator==(const AtomicMeasure& a, const AtomicMeasure& b);

 private:
  Eigen::Index n_;
  std::vector<Atom> atoms_;
  Rational total_{0};
};

/// Sum of the masses of atoms in E (closed).
Rational ma_eval(const AtomicMeasure& mu, const Polytope& e);

/// sum over atoms of mass * f(point). Exceptions from f propagate.
Rational integrate(const AtomicMeasure& mu, const std::function<Rational(const Point&)>& f);

}  // namespace monge
