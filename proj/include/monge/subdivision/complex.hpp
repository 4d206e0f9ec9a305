#pragma once

#include "monge/core/polytope.hpp"
#include "monge/subdivision/pa_function.hpp"

#include <optional>
#include <string>
#include <vector>

namespace monge {

/// A finite face-closed family of polytopes covering a domain.
///
/// Cells are sorted by (dimension, vertex list); `faces_of(i)` lists the
/// indices of the proper faces of cell i.
class PolytopalComplex {
 public:
  PolytopalComplex() = default;

  /// Closes `maximal` under taking faces. The cells are not validated here; see
  /// validate().
  static PolytopalComplex from_maximal_cells(Polytope domain, std::vector<Polytope> maximal);

  const Polytope& domain() const { return domain_; }
  const std::vector<Polytope>& cells() const { return cells_; }
  const std::vector<std::size_t>& faces_of(std::size_t cell) const { return faces_[cell]; }
  const std::vector<std::size_t>& maximal() const { return maximal_; }

  std::vector<Polytope> maximal_cells() const;
  std::vector<Polytope> cells_of_dim(int k) const;
  std::optional<std::size_t> find(const Polytope& cell) const;

  friend bool operator==(const PolytopalComplex& a, const PolytopalComplex& b);

 private:
  Polytope domain_;
  std::vector<Polytope> cells_;
  std::vector<std::vector<std::size_t>> faces_;
  std::vector<std::size_t> maximal_;
};

struct ComplexReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Checks cover, face closure, and that maximal cells meet in common faces.
/// Pairwise, so quadratic in the number of maximal cells.
ComplexReport validate(const PolytopalComplex& c);

/// Maximal cells of the linearity complex paired with the piece that is affine
/// on each, for a canonical h.
struct LinearityCell {
  Polytope cell;
  std::size_t piece;
};
std::vector<LinearityCell> linearity_cells(const PAConvexFunction& h);

/// Regular subdivision of the domain into the closed activity regions of h.
PolytopalComplex linearity_complex(const PAConvexFunction& h);

/// Maximal cells are the full-dimensional intersections of maximal cells of a
/// and b. Throws std::invalid_argument when the domains differ.
PolytopalComplex common_refinement(const PolytopalComplex& a, const PolytopalComplex& b);

/// 0-cells in the interior of the domain.
std::vector<Point> interior_vertices(const PolytopalComplex& c);

}  // namespace monge
