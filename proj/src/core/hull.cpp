#include "monge/core/hull.hpp"

#include "monge/core/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace monge {

namespace {

// v scaled by the lcm of its denominators.
std::vector<Integer> integer_row(const Vector& v) {
  Integer l(1);
  for (Eigen::Index i = 0; i < v.size(); ++i) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(v(i)));
  std::vector<Integer> out;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out.push_back(boost::multiprecision::numerator(v(i)) * (l / boost::multiprecision::denominator(v(i))));
  return out;
}

// Fraction-free elimination; every division is exact.
Integer bareiss_determinant(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  if (n == 0) return Integer(1);
  Integer sign(1), prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return Integer(0);
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Incrementally reduced basis of difference vectors, used to test affine
// independence one candidate at a time.
class IncrementalSpan {
 public:
  bool add(Vector v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (v(lead_[k]) != 0) v -= v(lead_[k]) * rows_[k];
    }
    Eigen::Index c = 0;
    while (c < v.size() && v(c) == 0) ++c;
    if (c == v.size()) return false;
    v /= v(c);
    for (auto& r : rows_) {
      if (r(c) != 0) r -= r(c) * v;
    }
    rows_.push_back(std::move(v));
    lead_.push_back(c);
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<Vector> rows_;
  std::vector<Eigen::Index> lead_;
};

struct Simplex {
  std::vector<std::size_t> verts;
  std::vector<std::size_t> nbrs;  // nbrs[i] shares the ridge opposite verts[i]
  Vector normal;
  Rational offset;
  std::vector<std::size_t> outside;
  std::size_t furthest = 0;
  Rational furthest_height;
  bool alive = true;
  std::size_t mark = 0;
};

struct RidgeKey {
  std::vector<std::size_t> verts;
  bool operator==(const RidgeKey&) const = default;
};

struct RidgeHash {
  std::size_t operator()(const RidgeKey& k) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : k.verts) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

class Quickhull {
 public:
  explicit Quickhull(const std::vector<Vector>& pts) : pts_(pts), d_(pts.front().size()) {}

  HullResult run();

 private:
  Rational height(const Simplex& s, std::size_t p) const { return pts_[p].dot(s.normal) - s.offset; }

  void set_plane(Simplex& s) const {
    const Vector& p0 = pts_[s.verts[0]];
    std::vector<std::vector<Integer>> rows;
    for (Eigen::Index i = 1; i < d_; ++i) rows.push_back(integer_row(pts_[s.verts[static_cast<std::size_t>(i)]] - p0));
    // Normal by cofactor expansion along a formal first row.
    Vector normal(d_);
    for (Eigen::Index j = 0; j < d_; ++j) {
      std::vector<std::vector<Integer>> minor;
      for (const auto& r : rows) {
        std::vector<Integer> m;
        for (Eigen::Index k = 0; k < d_; ++k)
          if (k != j) m.push_back(r[static_cast<std::size_t>(k)]);
        minor.push_back(std::move(m));
      }
      const Integer det = bareiss_determinant(std::move(minor));
      normal(j) = Rational(j % 2 == 0 ? det : Integer(-det));
    }
    if (normal.isZero()) throw std::logic_error("quickhull: degenerate facet simplex");
    s.normal = primitive(normal);
    s.offset = s.normal.dot(p0);
    if (s.normal.dot(center_) > s.offset) {
      s.normal = -s.normal;
      s.offset = -s.offset;
    }
  }

  void assign(const std::vector<std::size_t>& candidates, const std::vector<std::size_t>& facets) {
    for (auto p : candidates) {
      for (auto f : facets) {
        Simplex& s = simplices_[f];
        Rational h = height(s, p);
        if (h > 0) {
          if (s.outside.empty() || h > s.furthest_height) {
            s.furthest = p;
            s.furthest_height = h;
          }
          s.outside.push_back(p);
          break;
        }
      }
    }
  }

  const std::vector<Vector>& pts_;
  Eigen::Index d_;
  Vector center_;
  std::vector<Simplex> simplices_;
  std::size_t mark_ = 0;
};

HullResult Quickhull::run() {
  const auto base = affine_basis(pts_);
  if (static_cast<Eigen::Index>(base.size()) != d_ + 1) {
    throw std::invalid_argument("quickhull: points do not span the ambient space");
  }
  center_ = Vector::Zero(d_);
  for (auto i : base) center_ += pts_[i];
  center_ /= Rational(d_ + 1);

  // Initial simplex: facet k omits base[k]; its neighbour across the ridge
  // opposite vertex base[j] is facet j.
  const std::size_t dd = static_cast<std::size_t>(d_);
  for (std::size_t k = 0; k <= dd; ++k) {
    Simplex s;
    for (std::size_t j = 0; j <= dd; ++j) {
      if (j == k) continue;
      s.verts.push_back(base[j]);
      s.nbrs.push_back(j);
    }
    set_plane(s);
    simplices_.push_back(std::move(s));
  }
  {
    std::vector<bool> in_base(pts_.size(), false);
    for (auto i : base) in_base[i] = true;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < pts_.size(); ++i)
      if (!in_base[i]) rest.push_back(i);
    std::vector<std::size_t> all(dd + 1);
    for (std::size_t k = 0; k <= dd; ++k) all[k] = k;
    assign(rest, all);
  }

  std::vector<std::size_t> work;
  for (std::size_t k = 0; k <= dd; ++k) work.push_back(k);

  while (!work.empty()) {
    const std::size_t start = work.back();
    work.pop_back();
    if (!simplices_[start].alive || simplices_[start].outside.empty()) continue;
    const std::size_t apex = simplices_[start].furthest;

    // Visible region by flood fill; horizon ridges recorded as (facet, slot).
    ++mark_;
    std::vector<std::size_t> visible{start};
    simplices_[start].mark = mark_;
    std::vector<std::pair<std::size_t, std::size_t>> horizon;
    std::unordered_map<std::size_t, bool> tested;
    for (std::size_t q = 0; q < visible.size(); ++q) {
      const std::size_t f = visible[q];
      for (std::size_t i = 0; i < dd; ++i) {
        const std::size_t g = simplices_[f].nbrs[i];
        if (simplices_[g].mark == mark_) continue;
        auto it = tested.find(g);
        bool vis;
        if (it == tested.end()) {
          vis = height(simplices_[g], apex) > 0;
          tested.emplace(g, vis);
        } else {
          vis = it->second;
        }
        if (vis) {
          simplices_[g].mark = mark_;
          visible.push_back(g);
        } else {
          horizon.emplace_back(f, i);
        }
      }
    }

    std::vector<std::size_t> created;
    std::unordered_map<RidgeKey, std::pair<std::size_t, std::size_t>, RidgeHash> open;
    for (auto [f, i] : horizon) {
      Simplex s;
      s.verts = simplices_[f].verts;
      s.verts[i] = apex;
      s.nbrs.assign(dd, 0);
      const std::size_t g = simplices_[f].nbrs[i];
      s.nbrs[i] = g;
      set_plane(s);
      const std::size_t id = simplices_.size();
      for (auto& nb : simplices_[g].nbrs) {
        if (nb == f) nb = id;
      }
      for (std::size_t k = 0; k < dd; ++k) {
        if (k == i) continue;
        RidgeKey key;
        for (std::size_t j = 0; j < dd; ++j)
          if (j != k) key.verts.push_back(s.verts[j]);
        std::sort(key.verts.begin(), key.verts.end());
        auto it = open.find(key);
        if (it == open.end()) {
          open.emplace(std::move(key), std::make_pair(id, k));
        } else {
          auto [other, slot] = it->second;
          s.nbrs[k] = other;
          simplices_[other].nbrs[slot] = id;
          open.erase(it);
        }
      }
      simplices_.push_back(std::move(s));
      created.push_back(id);
    }
    if (!open.empty()) throw std::logic_error("quickhull: unmatched horizon ridge");

    std::vector<std::size_t> orphans;
    for (auto f : visible) {
      Simplex& s = simplices_[f];
      s.alive = false;
      for (auto p : s.outside)
        if (p != apex) orphans.push_back(p);
      s.outside.clear();
      s.outside.shrink_to_fit();
    }
    assign(orphans, created);
    for (auto id : created)
      if (!simplices_[id].outside.empty()) work.push_back(id);
  }

  // Merge coplanar simplices into facets.
  struct PlaneLess {
    bool operator()(const std::pair<Vector, Rational>& a, const std::pair<Vector, Rational>& b) const {
      auto c = lex_compare(a.first, b.first);
      if (c != 0) return c < 0;
      return a.second < b.second;
    }
  };
  std::map<std::pair<Vector, Rational>, std::vector<std::size_t>, PlaneLess> planes;
  for (const auto& s : simplices_) {
    if (!s.alive) continue;
    auto& bucket = planes[{s.normal, s.offset}];
    bucket.insert(bucket.end(), s.verts.begin(), s.verts.end());
  }

  HullResult out;
  std::map<std::size_t, std::vector<std::size_t>> facets_of;  // point -> facet ids
  for (auto& [plane, members] : planes) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    HullFacet facet{plane.first, plane.second, members};
    for (auto p : members) facets_of[p].push_back(out.facets.size());
    out.facets.push_back(std::move(facet));
  }
  for (const auto& [p, ids] : facets_of) {
    Matrix normals(static_cast<Eigen::Index>(ids.size()), d_);
    for (std::size_t r = 0; r < ids.size(); ++r) normals.row(static_cast<Eigen::Index>(r)) = out.facets[ids[r]].normal.transpose();
    if (rank(normals) == d_) out.vertices.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> affine_basis(const std::vector<Vector>& points) {
  std::vector<std::size_t> chosen;
  if (points.empty()) return chosen;
  const Eigen::Index d = points.front().size();

  // Try coordinate extremes first so the seed simplex is large.
  std::vector<std::size_t> order;
  std::size_t lo = 0;
  for (std::size_t i = 1; i < points.size(); ++i)
    if (lex_less(points[i], points[lo])) lo = i;
  order.push_back(lo);
  for (Eigen::Index c = 0; c < d; ++c) {
    std::size_t mn = 0;
    std::size_t mx = 0;
    for (std::size_t i = 1; i < points.size(); ++i) {
      if (points[i](c) < points[mn](c)) mn = i;
      if (points[i](c) > points[mx](c)) mx = i;
    }
    order.push_back(mx);
    order.push_back(mn);
  }
  for (std::size_t i = 0; i < points.size(); ++i) order.push_back(i);

  IncrementalSpan span;
  chosen.push_back(lo);
  std::vector<bool> used(points.size(), false);
  used[lo] = true;
  for (auto i : order) {
    if (used[i]) continue;
    if (static_cast<Eigen::Index>(span.size()) == d) break;
    if (span.add(points[i] - points[lo])) {
      chosen.push_back(i);
      used[i] = true;
    }
  }
  return chosen;
}

HullResult quickhull(const std::vector<Vector>& points) {
  if (points.empty()) throw std::invalid_argument("quickhull: no points");
  if (points.front().size() < 2) throw std::invalid_argument("quickhull: dimension must be at least 2");
  return Quickhull(points).run();
}

}  // namespace monge
