#include "monge/ma/measure.hpp"

#include <algorithm>
#include <stdexcept>

namespace monge {

AtomicMeasure::AtomicMeasure(Eigen::Index ambient_dim, std::vector<Atom> atoms) : n_(ambient_dim) {
  for (auto& a : atoms) {
    if (a.point.size() != n_) throw std::invalid_argument("AtomicMeasure: atom dimension mismatch");
    if (a.mass < 0) throw std::invalid_argument("AtomicMeasure: negative mass at " + to_string(a.point));
    if (a.mass == 0) continue;
    atoms_.push_back(std::move(a));
  }
  std::sort(atoms_.begin(), atoms_.end(), [](const Atom& x, const Atom& y) { return lex_less(x.point, y.point); });
  for (std::size_t i = 1; i < atoms_.size(); ++i) {
    if (equal(atoms_[i - 1].point, atoms_[i].point)) {
      throw std::invalid_argument("AtomicMeasure: repeated atom at " + to_string(atoms_[i].point));
    }
  }
  for (const auto& a : atoms_) total_ += a.mass;
}

Rational AtomicMeasure::mass_at(const Point& x) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                             [](const Atom& a, const Point& p) { return lex_less(a.point, p); });
  if (it != atoms_.end() && equal(it->point, x)) return it->mass;
  return Rational(0);
}

bool operator==(const AtomicMeasure& a, const AtomicMeasure& b) {
  if (a.n_ != b.n_ || a.atoms_.size() != b.atoms_.size()) return false;
  for (std::size_t i = 0; i < a.atoms_.size(); ++i) {
    if (!equal(a.atoms_[i].point, b.atoms_[i].point) || a.atoms_[i].mass != b.atoms_[i].mass) return false;
  }
  return true;
}

Rational ma_eval(const AtomicMeasure& mu, const Polytope& e) {
  if (e.ambient_dim() != mu.ambient_dim()) throw DimensionError("ma_eval: dimension mismatch");
  Rational total(0);
  for (const auto& a : mu.atoms())
    if (contains(e, a.point)) total += a.mass;
  return total;
}

Rational integrate(const AtomicMeasure& mu, const std::function<Rational(const Point&)>& f) {
  Rational total(0);
  for (const auto& a : mu.atoms()) total += a.mass * f(a.point);
  return total;
}

}  // namespace monge
