#pragma once

// Effective resistance on the grid graph by exact linear algebra, independent
// of the reduction pipeline.
//
// Vertex model: the n-grid's vertices are the lattice points (2r+s, s) with
// 0 <= r <= n, 0 <= s <= n-r. Upright triangle <r,d> has corners
//   bottom-left  (n-r+2(d-1), n-r), apex (n-r+2d-1, n-r+1),
//   bottom-right (n-r+2d, n-r)
// and its left, right and base labels sit on the edges bl-apex, apex-br and
// bl-br.

#include <Eigen/Core>

#include <map>
#include <utility>
#include <vector>

#include "trigrid/grid.hpp"
#include "trigrid/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<trigrid::Rational> : GenericNumTraits<trigrid::Rational> {
  using Real = trigrid::Rational;
  using NonInteger = trigrid::Rational;
  using Nested = trigrid::Rational;
  using Literal = trigrid::Rational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace trigrid {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

struct LatticePoint {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct ResistorEdge {
  int u;
  int v;
  Rational resistance;
};

class ResistorGraph {
 public:
  ResistorGraph(std::vector<LatticePoint> vertices, std::vector<ResistorEdge> edges);

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const std::vector<ResistorEdge>& edges() const { return edges_; }
  /// Throws std::out_of_range for a point that is not a vertex.
  int index_of(LatticePoint p) const;
  int degree(int v) const;

 private:
  std::vector<LatticePoint> vertices_;
  std::vector<ResistorEdge> edges_;
  std::map<LatticePoint, int> index_;
};

struct Corners {
  LatticePoint apex;
  LatticePoint bottom_left;
  LatticePoint bottom_right;
};

Corners corner_vertices(int n);

/// The lattice corners (bottom-left, apex, bottom-right) of triangle <r,d>.
std::array<LatticePoint, 3> triangle_corners(int n, int r, int d);

ResistorGraph build_graph(const TriGrid<Rational>& g);

/// Weighted Laplacian (conductances 1/R).
RationalMatrix laplacian(const ResistorGraph& g);

/// Solves A x = b exactly by Gaussian elimination; throws std::runtime_error
/// if A is singular.
RationalVector solve_exact(RationalMatrix a, RationalVector b);

/// Grounds v, solves L phi = e_u and returns phi(u). Throws
/// std::invalid_argument for u == v and std::runtime_error if disconnected.
Rational effective_resistance(const ResistorGraph& g, int u, int v);
Rational effective_resistance(const ResistorGraph& g, LatticePoint u, LatticePoint v);

}  // namespace trigrid
