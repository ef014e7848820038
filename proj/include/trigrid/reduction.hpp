#pragma once

// Row reduction of labeled n-grids.
//
// One reduction replaces every upright triangle by its equivalent Y, drops the
// three corner tails, joins pairs of legs meeting at old boundary vertices in
// series and turns the stars at old interior vertices back into triangles.
// The result is an (n-1)-grid whose upright triangle <r,d> is centred on the
// Y of the old triangle <r,d>; corner-to-corner resistance is preserved once
// the discarded tails are added back.

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trigrid/grid.hpp"
#include "trigrid/transforms.hpp"

namespace trigrid {

template <class S>
struct YLayer {
  int n = 0;
  std::vector<YTriple<S>> legs;  // row-major, like TriGrid

  const YTriple<S>& at(int r, int d) const { return legs[triangle_index(r, d)]; }
};

template <class S>
struct TailRecord {
  int source_rows = 0;  // m: the tail was cut while reducing the m-grid
  S top;
  S bottom_left;
  S bottom_right;
};

template <class S>
struct ReductionTrace {
  std::vector<TriGrid<S>> grids;      // T(n), T(n,n-1), ..., T(n,1)
  std::vector<TailRecord<S>> tails;   // m = n, n-1, ..., 1
};

template <class S>
YLayer<S> delta_y_layer(const TriGrid<S>& g) {
  YLayer<S> layer{g.n(), {}};
  layer.legs.reserve(g.size());
  for (const auto& t : g.cells()) layer.legs.push_back(delta_y(t.left, t.right, t.base));
  return layer;
}

template <class S>
TailRecord<S> tails_of(const YLayer<S>& layer) {
  int n = layer.n;
  return {n, layer.at(1, 1).y12, layer.at(n, 1).y8, layer.at(n, n).y4};
}

// Leg accounting hooks for assemble_reduced. Every leg of the layer is
// reported exactly once: as a tail, as half of a series pair, or as one of the
// three legs of a star turned into a triangle.

enum class Clock { C12, C4, C8 };
enum class LegRole { Tail, Series, Wye };

struct NoLegObserver {
  void operator()(Coord, Clock, LegRole) const {}
};

/// Steps D and E. For each new triangle <r,d>, 1 <= d <= r <= n-1:
///   L = y8(r,d) + y12(r+1,d)                    d = 1
///     = Y(y4(r,d-1), y8(r,d), y12(r+1,d))       otherwise
///   R = y4(r,d) + y12(r+1,d+1)                  d = r
///     = Y(y8(r,d+1), y12(r+1,d+1), y4(r,d))     otherwise
///   B = y4(n,d) + y8(n,d+1)                     r = n-1
///     = Y(y12(r+2,d+1), y8(r+1,d+1), y4(r+1,d)) otherwise
/// The three Y-Delta edges around one old interior vertex share a single star
/// and are produced together.
template <class S, class Observer = NoLegObserver>
TriGrid<S> assemble_reduced(const YLayer<S>& layer, Observer&& observe = {}) {
  const int n = layer.n;
  if (n < 2) throw std::invalid_argument("assemble_reduced: a 1-grid has no reduced grid");
  const int m = n - 1;
  std::vector<std::optional<Triangle<S>>> slots(triangle_count(m));
  auto slot = [&](int r, int d) -> Triangle<S>& {
    auto& s = slots[triangle_index(r, d)];
    if (!s) {
      const S& seed = layer.at(1, 1).y12;
      s = Triangle<S>{seed, seed, seed};
    }
    return *s;
  };
  auto y = [&](int r, int d) -> const YTriple<S>& { return layer.at(r, d); };

  observe(Coord{1, 1}, Clock::C12, LegRole::Tail);
  observe(Coord{n, 1}, Clock::C8, LegRole::Tail);
  observe(Coord{n, n}, Clock::C4, LegRole::Tail);

  // Old boundary vertices: two legs in series.
  for (int r = 1; r <= m; ++r) {
    slot(r, 1).left = series(y(r, 1).y8, y(r + 1, 1).y12);
    observe(Coord{r, 1}, Clock::C8, LegRole::Series);
    observe(Coord{r + 1, 1}, Clock::C12, LegRole::Series);

    slot(r, r).right = series(y(r, r).y4, y(r + 1, r + 1).y12);
    observe(Coord{r, r}, Clock::C4, LegRole::Series);
    observe(Coord{r + 1, r + 1}, Clock::C12, LegRole::Series);
  }
  for (int d = 1; d <= m; ++d) {
    slot(m, d).base = series(y(n, d).y4, y(n, d + 1).y8);
    observe(Coord{n, d}, Clock::C4, LegRole::Series);
    observe(Coord{n, d + 1}, Clock::C8, LegRole::Series);
  }

  // Old interior vertex: bottom-right of <r,d-1>, bottom-left of <r,d>, apex
  // of <r+1,d>.
  for (int r = 2; r <= m; ++r) {
    for (int d = 2; d <= r; ++d) {
      const S& a = y(r, d - 1).y4;
      const S& b = y(r, d).y8;
      const S& c = y(r + 1, d).y12;
      slot(r, d).left = wye(a, b, c);
      slot(r, d - 1).right = wye(b, c, a);
      slot(r - 1, d - 1).base = wye(c, b, a);
      observe(Coord{r, d - 1}, Clock::C4, LegRole::Wye);
      observe(Coord{r, d}, Clock::C8, LegRole::Wye);
      observe(Coord{r + 1, d}, Clock::C12, LegRole::Wye);
    }
  }

  std::vector<Triangle<S>> cells;
  cells.reserve(slots.size());
  for (auto& s : slots) cells.push_back(std::move(*s));
  return TriGrid<S>(m, std::move(cells));
}

template <class S>
struct RowReduction {
  std::optional<TriGrid<S>> grid;  // empty when reducing a 1-grid
  TailRecord<S> tail;
};

template <class S>
RowReduction<S> row_reduce(const TriGrid<S>& g) {
  YLayer<S> layer = delta_y_layer(g);
  TailRecord<S> tail = tails_of(layer);
  if (g.n() == 1) return {std::nullopt, std::move(tail)};
  return {assemble_reduced(layer), std::move(tail)};
}

/// Reduces down to the final Y without keeping the grids; `visit` sees each
/// grid T(n,k) (k = n..1) before it is reduced.
template <class S>
std::vector<TailRecord<S>> reduce_streaming(
    TriGrid<S> g, const std::function<void(const TriGrid<S>&)>& visit = {}) {
  std::vector<TailRecord<S>> tails;
  tails.reserve(static_cast<std::size_t>(g.n()));
  for (;;) {
    if (visit) visit(g);
    RowReduction<S> step = row_reduce(g);
    tails.push_back(std::move(step.tail));
    if (!step.grid) break;
    g = std::move(*step.grid);
  }
  return tails;
}

template <class S>
ReductionTrace<S> reduce_fully(const TriGrid<S>& g) {
  ReductionTrace<S> trace;
  trace.tails = reduce_streaming<S>(g, [&](const TriGrid<S>& k) { trace.grids.push_back(k); });
  return trace;
}

/// Applies `steps` row reductions; returns the final grid and the tails cut.
template <class S>
std::pair<TriGrid<S>, std::vector<TailRecord<S>>> reduce_steps(TriGrid<S> g, int steps) {
  if (steps < 0 || steps >= g.n()) {
    throw std::invalid_argument("cannot apply " + std::to_string(steps) +
                                " reductions to a grid of " + std::to_string(g.n()) + " rows");
  }
  std::vector<TailRecord<S>> tails;
  for (int k = 0; k < steps; ++k) {
    RowReduction<S> step = row_reduce(g);
    tails.push_back(std::move(step.tail));
    g = std::move(*step.grid);
  }
  return {std::move(g), std::move(tails)};
}

/// Top tails t(n,i) in trace order i = n..1. The three tails of each step
/// must agree (within the float tolerance); throws std::logic_error if not.
template <class S>
std::vector<S> top_tails(const std::vector<TailRecord<S>>& tails) {
  std::vector<S> out;
  out.reserve(tails.size());
  for (const auto& t : tails) {
    if (!ScalarTraits<S>::close(t.top, t.bottom_left) ||
        !ScalarTraits<S>::close(t.top, t.bottom_right)) {
      throw std::logic_error("tails of the " + std::to_string(t.source_rows) +
                             "-grid differ: " + to_string(t.top) + ", " +
                             to_string(t.bottom_left) + ", " + to_string(t.bottom_right));
    }
    out.push_back(t.top);
  }
  return out;
}

std::vector<Rational> tail_sequence_exact(int n);
std::vector<BigFloat> tail_sequence_float(int n, unsigned precision_bits);

/// Corner-to-corner resistance 2 * sum of top tails. Only valid for isotropic
/// grids; other grids are rejected with std::invalid_argument (use the oracle).
template <class S>
S corner_resistance(const TriGrid<S>& g) {
  if (!check_symmetry(g).isotropic()) {
    throw std::invalid_argument(
        "corner_resistance: grid is not isotropic; use the Laplacian oracle instead");
  }
  std::vector<S> tops = top_tails(reduce_streaming(g));
  S sum = tops.front();
  for (std::size_t i = 1; i < tops.size(); ++i) sum += tops[i];
  return sum + sum;
}

/// Bottom-corner resistance for any grid: sum of bottom-left and bottom-right
/// tails over the whole trace.
template <class S>
S bottom_corner_resistance(const TriGrid<S>& g) {
  auto tails = reduce_streaming(g);
  S sum = tails.front().bottom_left + tails.front().bottom_right;
  for (std::size_t i = 1; i < tails.size(); ++i) sum += tails[i].bottom_left + tails[i].bottom_right;
  return sum;
}

}  // namespace trigrid
