#include "trigrid/grid.hpp"

namespace trigrid {

TriGrid<Rational> factor_grid(int c) {
  if (c < 1) throw std::invalid_argument("factor_grid: c must be >= 1");
  std::vector<Triangle<Rational>> cells(triangle_count(c));
  Rational column = 1;
  for (int r = 1; r <= c; ++r) {
    if (r > 1) column *= factor_x(c, r);
    Rational left = column;
    for (int d = 1; d <= r; ++d) {
      if (d > 1) left *= factor_y(r, d);
      auto& t = cells[triangle_index(r, d)];
      t.left = left;
      t.right = left * factor_r21(c, r, d);
      t.base = left * factor_r31(c, r, d);
    }
  }
  return TriGrid<Rational>(c, std::move(cells));
}

TriGrid<BigFloat> to_float_grid(const TriGrid<Rational>& g, unsigned precision_bits) {
  std::vector<Triangle<BigFloat>> cells;
  cells.reserve(g.size());
  for (const auto& t : g.cells()) {
    cells.push_back({BigFloat(t.left, precision_bits), BigFloat(t.right, precision_bits),
                     BigFloat(t.base, precision_bits)});
  }
  return TriGrid<BigFloat>(g.n(), std::move(cells));
}

std::vector<EdgePairing> symmetry_pairings(int n, Symmetry kind) {
  std::vector<EdgePairing> out;
  for (int r = 1; r <= n; ++r) {
    for (int d = 1; d <= r; ++d) {
      Coord p{r, d};
      switch (kind) {
        case Symmetry::Vertical: {
          Coord q{r, r + 1 - d};
          out.push_back({p, 1, q, 2});
          out.push_back({p, 3, q, 3});
          break;
        }
        case Symmetry::Rotational: {
          Coord q{n + d - r, n + 1 - r};
          out.push_back({p, 1, q, 2});
          out.push_back({p, 2, q, 3});
          out.push_back({p, 3, q, 1});
          break;
        }
        case Symmetry::Slide: {
          Coord q{n + d - r, d};
          out.push_back({p, 1, q, 1});
          out.push_back({p, 2, q, 3});
          break;
        }
      }
    }
  }
  return out;
}

std::vector<Coord> upper_half_coords(int c) {
  if (c < 1) throw std::invalid_argument("upper_half_coords: c must be >= 1");
  std::vector<Coord> out;
  for (int d = 1; d <= (c + 2) / 3; ++d) {
    for (int r = 2 * d - 1; r <= (c + d) / 2; ++r) out.push_back({r, d});
  }
  return out;
}

std::array<Coord, 3> d_rim_corners(int n, int d) {
  if (d < 1 || 2 * d - 1 > n + 1 - d) {
    throw std::invalid_argument("d_rim_corners: grid of " + std::to_string(n) +
                                " rows has no rim " + std::to_string(d));
  }
  return {Coord{2 * d - 1, d}, Coord{n + 1 - d, d}, Coord{n + 1 - d, n + 2 - 2 * d}};
}

namespace detail {

SymmetryMap slide_map() {
  return {[](int n, Coord p) { return Coord{n + p.d - p.r, p.d}; }, {0, 1, 3, 2}};
}

SymmetryMap vertical_map() {
  return {[](int, Coord p) { return Coord{p.r, p.r + 1 - p.d}; }, {0, 2, 1, 3}};
}

SymmetryMap rotation_map() {
  return {[](int n, Coord p) { return Coord{n + p.d - p.r, n + 1 - p.r}; }, {0, 2, 3, 1}};
}

SymmetryMap rotation_inverse_map() {
  return {[](int n, Coord p) { return Coord{n + 1 - p.d, p.r + 1 - p.d}; }, {0, 3, 1, 2}};
}

}  // namespace detail

}  // namespace trigrid
