#include "monge/solver1d/polynomial.hpp"

#include <stdexcept>

namespace monge {

Polynomial trimmed(Polynomial p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int degree(const Polynomial& p) { return static_cast<int>(trimmed(p).size()) - 1; }

Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational v(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

Polynomial derivative(const Polynomial& p) {
  Polynomial d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(Rational(static_cast<long>(k)) * p[k]);
  return trimmed(std::move(d));
}

Polynomial antiderivative(const Polynomial& p) {
  Polynomial a{Rational(0)};
  for (std::size_t k = 0; k < p.size(); ++k) a.push_back(p[k] / Rational(static_cast<long>(k + 1)));
  return trimmed(std::move(a));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
  return trimmed(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Rational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trimmed(std::move(r));
}

Polynomial operator*(const Rational& t, const Polynomial& p) {
  Polynomial r = p;
  for (auto& c : r) c *= t;
  return trimmed(std::move(r));
}

Division divide(const Polynomial& a, const Polynomial& b) {
  const Polynomial d = trimmed(b);
  if (d.empty()) throw std::domain_error("polynomial division by zero");
  Polynomial r = trimmed(a);
  Polynomial q;
  while (r.size() >= d.size()) {
    const std::size_t shift = r.size() - d.size();
    const Rational c = r.back() / d.back();
    if (q.size() < shift + 1) q.resize(shift + 1);
    q[shift] = c;
    for (std::size_t k = 0; k < d.size(); ++k) r[k + shift] -= c * d[k];
    r.pop_back();
    r = trimmed(std::move(r));
  }
  return {trimmed(std::move(q)), r};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  a = trimmed(std::move(a));
  b = trimmed(std::move(b));
  while (!b.empty()) {
    Polynomial r = divide(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return (Rational(1) / a.back()) * a;
}

Polynomial odd_multiplicity_part(const Polynomial& p) {
  Polynomial g = gcd(p, derivative(p));
  Polynomial w = divide(p, g.empty() ? Polynomial{Rational(1)} : g).quotient;
  Polynomial odd{Rational(1)};
  // w holds the product of factors with multiplicity >= i
  for (int i = 1; degree(w) > 0; ++i) {
    const Polynomial y = gcd(w, g);
    const Polynomial factor = divide(w, y).quotient;
    if (i % 2 == 1) odd = odd * factor;
    w = y;
    g = divide(g, y).quotient;
  }
  return (Rational(1) / odd.back()) * odd;
}

namespace {

int sign_changes(const std::vector<Polynomial>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    const int s = sgn(evaluate(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_roots(const Polynomial& p, const Rational& a, const Rational& b) {
  Polynomial s = trimmed(p);
  if (s.empty()) throw std::domain_error("count_roots: zero polynomial");
  if (!(a < b)) return 0;
  // strip roots sitting exactly on the endpoints
  for (const Rational& e : {a, b}) {
    if (degree(s) > 0 && evaluate(s, e) == 0) s = divide(s, {Rational(-e), Rational(1)}).quotient;
  }
  std::vector<Polynomial> chain{s, derivative(s)};
  while (!chain.back().empty()) {
    Polynomial r = divide(chain[chain.size() - 2], chain.back()).remainder;
    chain.push_back(Rational(-1) * r);
  }
  chain.pop_back();
  return sign_changes(chain, a) - sign_changes(chain, b);
}

bool nonnegative_on(const Polynomial& p, const Rational& a, const Rational& b) {
  const Polynomial q = trimmed(p);
  if (q.empty()) return true;
  if (degree(q) == 0) return q[0] > 0;
  if (a < b && count_roots(odd_multiplicity_part(q), a, b) > 0) return false;
  // sign is constant off the roots; some sample among deg+1 interior points is not a root
  const long samples = degree(q) + 1;
  for (long k = 1; k <= samples; ++k) {
    const Rational t = a + (b - a) * Rational(k) / Rational(samples + 1);
    const Rational v = evaluate(q, t);
    if (v != 0 || a == b) return v >= 0 && evaluate(q, a) >= 0 && evaluate(q, b) >= 0;
  }
  return false;
}

}  // namespace monge
