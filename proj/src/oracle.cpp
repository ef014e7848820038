#include "trigrid/oracle.hpp"

#include <stdexcept>

namespace trigrid {

ResistorGraph::ResistorGraph(std::vector<LatticePoint> vertices, std::vector<ResistorEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (!index_.emplace(vertices_[k], static_cast<int>(k)).second) {
      throw std::invalid_argument("duplicate vertex in resistor graph");
    }
  }
  const int nv = static_cast<int>(vertices_.size());
  for (const auto& e : edges_) {
    if (e.u < 0 || e.u >= nv || e.v < 0 || e.v >= nv || e.u == e.v) {
      throw std::invalid_argument("resistor edge with bad endpoints");
    }
    if (e.resistance.sign() <= 0) throw std::invalid_argument("resistances must be positive");
  }
}

int ResistorGraph::index_of(LatticePoint p) const {
  auto it = index_.find(p);
  if (it == index_.end()) {
    throw std::out_of_range("(" + std::to_string(p.x) + "," + std::to_string(p.y) +
                            ") is not a vertex");
  }
  return it->second;
}

int ResistorGraph::degree(int v) const {
  int deg = 0;
  for (const auto& e : edges_) deg += (e.u == v) + (e.v == v);
  return deg;
}

Corners corner_vertices(int n) {
  if (n < 1) throw std::invalid_argument("corner_vertices: n must be >= 1");
  return {{n, n}, {0, 0}, {2 * n, 0}};
}

std::array<LatticePoint, 3> triangle_corners(int n, int r, int d) {
  int x = n - r + 2 * (d - 1);
  int y = n - r;
  return {LatticePoint{x, y}, LatticePoint{x + 1, y + 1}, LatticePoint{x + 2, y}};
}

ResistorGraph build_graph(const TriGrid<Rational>& g) {
  const int n = g.n();
  std::vector<LatticePoint> vertices;
  for (int r = 0; r <= n; ++r) {
    for (int s = 0; s <= n - r; ++s) vertices.push_back({2 * r + s, s});
  }
  std::map<LatticePoint, int> index;
  for (std::size_t k = 0; k < vertices.size(); ++k) index[vertices[k]] = static_cast<int>(k);

  std::vector<ResistorEdge> edges;
  for (int r = 1; r <= n; ++r) {
    for (int d = 1; d <= r; ++d) {
      auto [bl, apex, br] = triangle_corners(n, r, d);
      const auto& t = g.at(r, d);
      edges.push_back({index.at(bl), index.at(apex), t.left});
      edges.push_back({index.at(apex), index.at(br), t.right});
      edges.push_back({index.at(bl), index.at(br), t.base});
    }
  }
  return ResistorGraph(std::move(vertices), std::move(edges));
}

RationalMatrix laplacian(const ResistorGraph& g) {
  const auto nv = static_cast<Eigen::Index>(g.vertices().size());
  RationalMatrix lap = RationalMatrix::Constant(nv, nv, Rational(0));
  for (const auto& e : g.edges()) {
    Rational conductance = Rational(1) / e.resistance;
    lap(e.u, e.u) += conductance;
    lap(e.v, e.v) += conductance;
    lap(e.u, e.v) -= conductance;
    lap(e.v, e.u) -= conductance;
  }
  return lap;
}

RationalVector solve_exact(RationalMatrix a, RationalVector b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_exact: shape mismatch");
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw std::runtime_error("solve_exact: singular system");
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      std::swap(b(pivot), b(col));
    }
    for (Eigen::Index row = col + 1; row < n; ++row) {
      if (a(row, col).is_zero()) continue;
      Rational factor = a(row, col) / a(col, col);
      for (Eigen::Index k = col; k < n; ++k) a(row, k) -= factor * a(col, k);
      b(row) -= factor * b(col);
    }
  }
  RationalVector x(n);
  for (Eigen::Index row = n - 1; row >= 0; --row) {
    Rational acc = b(row);
    for (Eigen::Index k = row + 1; k < n; ++k) acc -= a(row, k) * x(k);
    x(row) = acc / a(row, row);
  }
  return x;
}

Rational effective_resistance(const ResistorGraph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("effective_resistance: endpoints coincide");
  const auto nv = static_cast<Eigen::Index>(g.vertices().size());
  RationalMatrix lap = laplacian(g);
  // Drop the grounded vertex v.
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < nv; ++k) {
    if (k != v) keep.push_back(k);
  }
  const auto m = static_cast<Eigen::Index>(keep.size());
  RationalMatrix reduced(m, m);
  RationalVector rhs = RationalVector::Constant(m, Rational(0));
  Eigen::Index u_row = -1;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (keep[i] == u) u_row = i;
    for (Eigen::Index j = 0; j < m; ++j) reduced(i, j) = lap(keep[i], keep[j]);
  }
  rhs(u_row) = 1;
  RationalVector phi = solve_exact(std::move(reduced), std::move(rhs));
  return phi(u_row);
}

Rational effective_resistance(const ResistorGraph& g, LatticePoint u, LatticePoint v) {
  return effective_resistance(g, g.index_of(u), g.index_of(v));
}

}  // namespace trigrid
