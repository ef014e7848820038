#pragma once

// Labeled triangular n-grids.
//
// An n-grid has n rows of upright triangles <r,d>, 1 <= d <= r <= n, row 1 at
// the top and diagonals numbered left to right. Every edge of the grid belongs
// to exactly one upright triangle, so a grid is stored as the (left, right,
// base) labels of its n(n+1)/2 upright triangles; edge index e = 1, 2, 3
// selects left, right, base.

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "trigrid/factors.hpp"
#include "trigrid/scalar.hpp"

namespace trigrid {

struct Coord {
  int r = 1;
  int d = 1;
  friend auto operator<=>(const Coord&, const Coord&) = default;
};

template <class S>
struct Triangle {
  S left;
  S right;
  S base;

  const S& edge(int e) const {
    switch (e) {
      case 1: return left;
      case 2: return right;
      case 3: return base;
    }
    throw std::out_of_range("edge index must be 1, 2 or 3, got " + std::to_string(e));
  }
  S& edge(int e) { return const_cast<S&>(std::as_const(*this).edge(e)); }

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

inline std::size_t triangle_count(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2;
}

/// Row-major position of <r,d>.
inline std::size_t triangle_index(int r, int d) {
  return static_cast<std::size_t>(r) * static_cast<std::size_t>(r - 1) / 2 +
         static_cast<std::size_t>(d - 1);
}

template <class S>
class TriGrid {
 public:
  using Scalar = S;

  /// `cells` are the triangles in row-major order (<1,1>, <2,1>, <2,2>, ...).
  /// Throws std::invalid_argument on a size mismatch or a nonpositive label.
  TriGrid(int n, std::vector<Triangle<S>> cells) : n_(n), cells_(std::move(cells)) {
    if (n < 1) throw std::invalid_argument("grid must have at least one row");
    if (cells_.size() != triangle_count(n)) {
      throw std::invalid_argument("grid with " + std::to_string(n) + " rows needs " +
                                  std::to_string(triangle_count(n)) + " triangles, got " +
                                  std::to_string(cells_.size()));
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      for (int e = 1; e <= 3; ++e) {
        if (!is_positive(cells_[i].edge(e))) {
          throw std::invalid_argument("grid labels must be positive (triangle #" +
                                      std::to_string(i) + ", edge " + std::to_string(e) + ")");
        }
      }
    }
  }

  int n() const { return n_; }
  std::size_t size() const { return cells_.size(); }
  std::span<const Triangle<S>> cells() const { return cells_; }

  bool contains(int r, int d) const { return 1 <= d && d <= r && r <= n_; }

  const Triangle<S>& at(int r, int d) const {
    if (!contains(r, d)) {
      throw std::out_of_range("triangle <" + std::to_string(r) + "," + std::to_string(d) +
                              "> outside a " + std::to_string(n_) + "-grid");
    }
    return cells_[triangle_index(r, d)];
  }
  const Triangle<S>& at(Coord p) const { return at(p.r, p.d); }

  const S& edge(int r, int d, int e) const { return at(r, d).edge(e); }

  /// Copy with one label replaced.
  TriGrid with_edge(int r, int d, int e, S value) const {
    std::vector<Triangle<S>> cells = cells_;
    at(r, d);  // range check
    cells[triangle_index(r, d)].edge(e) = std::move(value);
    return TriGrid(n_, std::move(cells));
  }

  friend bool operator==(const TriGrid&, const TriGrid&) = default;

 private:
  int n_;
  std::vector<Triangle<S>> cells_;
};

template <class S>
const S& get_edge(const TriGrid<S>& g, int r, int d, int e) {
  return g.edge(r, d, e);
}

template <class S>
TriGrid<S> uniform_grid(int n, const S& value) {
  if (n < 1) throw std::invalid_argument("uniform_grid: n must be >= 1");
  return TriGrid<S>(n, std::vector<Triangle<S>>(triangle_count(n), Triangle<S>{value, value, value}));
}

/// The grid satisfying every edge factor with equality and <1,1,1> = 1:
/// left column by x, rows by y, then right/base edges by r21/r31.
TriGrid<Rational> factor_grid(int c);

template <class S>
TriGrid<S> scale_grid(const TriGrid<S>& g, const S& k) {
  if (!is_positive(k)) throw std::invalid_argument("scale_grid: factor must be positive");
  std::vector<Triangle<S>> cells;
  cells.reserve(g.size());
  for (const auto& t : g.cells()) cells.push_back({t.left * k, t.right * k, t.base * k});
  return TriGrid<S>(g.n(), std::move(cells));
}

/// Returns k with g = k*h edgewise (exactly, or within the float tolerance).
template <class S>
std::optional<S> proportionality(const TriGrid<S>& g, const TriGrid<S>& h) {
  if (g.n() != h.n()) {
    throw std::invalid_argument("proportionality: grids have " + std::to_string(g.n()) +
                                " and " + std::to_string(h.n()) + " rows");
  }
  S k = g.edge(1, 1, 1) / h.edge(1, 1, 1);
  auto gc = g.cells();
  auto hc = h.cells();
  for (std::size_t i = 0; i < gc.size(); ++i) {
    for (int e = 1; e <= 3; ++e) {
      if (!ScalarTraits<S>::close(gc[i].edge(e), k * hc[i].edge(e))) return std::nullopt;
    }
  }
  return k;
}

TriGrid<BigFloat> to_float_grid(const TriGrid<Rational>& g, unsigned precision_bits);

// ---------------------------------------------------------------------------
// Symmetry

enum class Symmetry { Vertical, Rotational, Slide };

/// One labelled-edge identity <a,ea> = <b,eb> required by a symmetry.
struct EdgePairing {
  Coord a;
  int ea;
  Coord b;
  int eb;
};

/// Every identity of the given symmetry over 1 <= d <= r <= n:
///   vertical   <r,d,1> = <r,r+1-d,2>,        <r,d,3> = <r,r+1-d,3>
///   rotational <r,d,1> = <n+d-r,n+1-r,2>,    <r,d,2> = <n+d-r,n+1-r,3>,
///              <r,d,3> = <n+d-r,n+1-r,1>
///   slide      <r,d,1> = <n+d-r,d,1>,        <r,d,2> = <n+d-r,d,3>
std::vector<EdgePairing> symmetry_pairings(int n, Symmetry kind);

template <class S>
struct SymmetryReport {
  bool vertical = false;
  bool rotational = false;
  bool slide = false;
  S max_violation;  // largest |a-b|/|b| over all identities

  bool isotropic() const { return vertical && rotational; }
};

template <class S>
SymmetryReport<S> check_symmetry(const TriGrid<S>& g) {
  const S& first = g.edge(1, 1, 1);
  S zero = first - first;
  SymmetryReport<S> report{true, true, true, zero};
  auto run = [&](Symmetry kind, bool& holds) {
    for (const auto& p : symmetry_pairings(g.n(), kind)) {
      const S& a = g.edge(p.a.r, p.a.d, p.ea);
      const S& b = g.edge(p.b.r, p.b.d, p.eb);
      if (!ScalarTraits<S>::close(a, b)) holds = false;
      S violation = abs(a - b) / b;
      if (report.max_violation < violation) report.max_violation = violation;
    }
  };
  run(Symmetry::Vertical, report.vertical);
  run(Symmetry::Rotational, report.rotational);
  run(Symmetry::Slide, report.slide);
  return report;
}

/// Upper half of a c-grid: d = 1..floor((c+2)/3), r = 2d-1..floor((c+d)/2).
std::vector<Coord> upper_half_coords(int c);

/// Corner triangles of the d-th rim: <2d-1,d>, <n+1-d,d>, <n+1-d,n+2-2d>.
std::array<Coord, 3> d_rim_corners(int n, int d);

/// Rebuilds a grid from the labels of its upper half by applying slide, then
/// vertical, then rotational symmetry. The grid is assumed isotropic; throws
/// std::logic_error if some triangle is not reached.
template <class S>
TriGrid<S> reconstruct_from_upper_half(int n, const std::function<Triangle<S>(Coord)>& upper);

// ---------------------------------------------------------------------------

namespace detail {

struct SymmetryMap {
  Coord (*image)(int n, Coord p);
  std::array<int, 4> edge;  // edge[e] of p equals edge `edge[e]` of image(p)
};

SymmetryMap slide_map();
SymmetryMap vertical_map();
SymmetryMap rotation_map();
SymmetryMap rotation_inverse_map();

}  // namespace detail

template <class S>
TriGrid<S> reconstruct_from_upper_half(int n, const std::function<Triangle<S>(Coord)>& upper) {
  std::vector<std::optional<Triangle<S>>> cells(triangle_count(n));
  for (Coord p : upper_half_coords(n)) cells[triangle_index(p.r, p.d)] = upper(p);

  auto apply = [&](const detail::SymmetryMap& m) {
    for (int r = 1; r <= n; ++r) {
      for (int d = 1; d <= r; ++d) {
        const auto& src = cells[triangle_index(r, d)];
        if (!src) continue;
        Coord q = m.image(n, {r, d});
        auto& dst = cells[triangle_index(q.r, q.d)];
        if (dst) continue;
        Triangle<S> t = *src;
        for (int e = 1; e <= 3; ++e) t.edge(m.edge[e]) = src->edge(e);
        dst = std::move(t);
      }
    }
  };
  apply(detail::slide_map());
  apply(detail::vertical_map());
  apply(detail::rotation_map());
  apply(detail::rotation_inverse_map());

  std::vector<Triangle<S>> out;
  out.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cells[i]) {
      throw std::logic_error("upper-half reconstruction left triangle #" + std::to_string(i) +
                             " undetermined");
    }
    out.push_back(std::move(*cells[i]));
  }
  return TriGrid<S>(n, std::move(out));
}

}  // namespace trigrid
