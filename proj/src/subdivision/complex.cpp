#include "monge/subdivision/complex.hpp"

#include "monge/subdivision/epigraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace monge {

namespace {

struct CellLess {
  bool operator()(const Polytope& a, const Polytope& b) const {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    const auto& va = a.vertices();
    const auto& vb = b.vertices();
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end(), LexLess{});
  }
};

}  // namespace

PolytopalComplex PolytopalComplex::from_maximal_cells(Polytope domain, std::vector<Polytope> maximal) {
  PolytopalComplex c;
  c.domain_ = std::move(domain);
  std::map<Polytope, std::vector<Polytope>, CellLess> closure;  // cell -> its faces
  std::vector<Polytope> tops;
  for (auto& cell : maximal) {
    if (cell.is_empty()) continue;
    if (closure.count(cell)) continue;
    auto faces = all_faces(cell);
    for (const auto& f : faces) closure.try_emplace(f);
    closure[cell] = std::move(faces);
    tops.push_back(std::move(cell));
  }
  for (auto& [cell, faces] : closure) {
    if (!faces.empty()) continue;
    faces = all_faces(cell);
  }
  std::map<Polytope, std::size_t, CellLess> index;
  for (const auto& [cell, faces] : closure) {
    index.emplace(cell, c.cells_.size());
    c.cells_.push_back(cell);
  }
  c.faces_.resize(c.cells_.size());
  for (const auto& [cell, faces] : closure) {
    auto& out = c.faces_[index.at(cell)];
    for (const auto& f : faces) {
      if (f == cell) continue;
      out.push_back(index.at(f));
    }
    std::sort(out.begin(), out.end());
  }
  for (const auto& t : tops) c.maximal_.push_back(index.at(t));
  std::sort(c.maximal_.begin(), c.maximal_.end());
  c.maximal_.erase(std::unique(c.maximal_.begin(), c.maximal_.end()), c.maximal_.end());
  return c;
}

std::vector<Polytope> PolytopalComplex::maximal_cells() const {
  std::vector<Polytope> out;
  for (auto i : maximal_) out.push_back(cells_[i]);
  return out;
}

std::vector<Polytope> PolytopalComplex::cells_of_dim(int k) const {
  std::vector<Polytope> out;
  for (const auto& cell : cells_)
    if (cell.dim() == k) out.push_back(cell);
  return out;
}

std::optional<std::size_t> PolytopalComplex::find(const Polytope& cell) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), cell, CellLess{});
  if (it == cells_.end() || !(*it == cell)) return std::nullopt;
  return static_cast<std::size_t>(it - cells_.begin());
}

bool operator==(const PolytopalComplex& a, const PolytopalComplex& b) {
  return a.domain_ == b.domain_ && a.cells_ == b.cells_;
}

ComplexReport validate(const PolytopalComplex& c) {
  ComplexReport report;
  const auto& cells = c.cells();
  const auto& domain = c.domain();

  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (const auto& f : all_faces(cells[i])) {
      if (!c.find(f)) report.problems.push_back("face of cell " + std::to_string(i) + " missing from complex");
    }
    for (const auto& v : cells[i].vertices()) {
      if (!contains(domain, v)) report.problems.push_back("cell " + std::to_string(i) + " leaves the domain");
    }
  }

  Rational covered(0);
  const auto& top = c.maximal();
  for (auto i : top) covered += volume(cells[i]);
  if (covered != volume(domain)) {
    report.problems.push_back("maximal cells cover volume " + to_string(covered) + " of " + to_string(volume(domain)));
  }

  for (std::size_t a = 0; a < top.size(); ++a) {
    for (std::size_t b = a + 1; b < top.size(); ++b) {
      const Polytope& pa = cells[top[a]];
      const Polytope& pb = cells[top[b]];
      const Polytope meet = intersection(pa, pb);
      if (meet.is_empty()) continue;
      const auto idx = c.find(meet);
      auto is_face_of = [&](std::size_t cell) {
        if (!idx) return false;
        if (*idx == cell) return true;
        const auto& faces = c.faces_of(cell);
        return std::binary_search(faces.begin(), faces.end(), *idx);
      };
      if (!is_face_of(top[a]) || !is_face_of(top[b])) {
        report.problems.push_back("cells " + std::to_string(top[a]) + " and " + std::to_string(top[b]) +
                                  " do not meet in a common face");
      }
    }
  }
  return report;
}

std::vector<LinearityCell> linearity_cells(const PAConvexFunction& h) {
  const EpigraphLift lift = lift_epigraph(h);
  std::vector<LinearityCell> out;
  for (std::size_t i = 0; i < h.pieces().size(); ++i) {
    if (!lift.full_dimensional[i]) continue;
    std::vector<Point> verts;
    for (const auto& v : lift.vertices) {
      if (std::binary_search(v.pieces.begin(), v.pieces.end(), i)) verts.push_back(v.x);
    }
    out.push_back({convex_hull(std::move(verts)), i});
  }
  std::sort(out.begin(), out.end(), [](const LinearityCell& a, const LinearityCell& b) { return CellLess{}(a.cell, b.cell); });
  return out;
}

PolytopalComplex linearity_complex(const PAConvexFunction& h) {
  std::vector<Polytope> maximal;
  for (auto& lc : linearity_cells(h)) maximal.push_back(std::move(lc.cell));
  return PolytopalComplex::from_maximal_cells(h.domain(), std::move(maximal));
}

PolytopalComplex common_refinement(const PolytopalComplex& a, const PolytopalComplex& b) {
  if (!(a.domain() == b.domain())) throw std::invalid_argument("common_refinement: domain mismatch");
  std::vector<Polytope> maximal;
  for (const auto& pa : a.maximal_cells()) {
    for (const auto& pb : b.maximal_cells()) {
      Polytope meet = intersection(pa, pb);
      if (!meet.is_empty() && meet.is_full_dimensional()) maximal.push_back(std::move(meet));
    }
  }
  return PolytopalComplex::from_maximal_cells(a.domain(), std::move(maximal));
}

std::vector<Point> interior_vertices(const PolytopalComplex& c) {
  std::vector<Point> out;
  for (const auto& cell : c.cells()) {
    if (cell.dim() != 0) continue;
    const Point& v = cell.vertices().front();
    if (contains(c.domain(), v, Containment::kRelativeInterior)) out.push_back(v);
  }
  return out;
}

}  // namespace monge
