#pragma once

// Edge labels of a reduced factor grid expressed through the Y legs of the
// factor grid, as functions of formal (c, r, d). Labels of the factor grid
// are written relative to one reference label P0 = 1; every quantity here is
// homogeneous of degree one in P0, so ratios do not depend on it.

#include <utility>

#include "trigrid/symbolic/builtins.hpp"

namespace trigrid::sym {

template <class F>
struct PanelEdges {
  F left;
  F right;
  F base;
};

/// Interior triangle <r,d> of the reduced grid (3 <= r <= c-2, 2 <= d <= r-1
/// for actual grids). P0 is the left label of <r,d-1>.
template <class F>
PanelEdges<F> panel_interior(const F& c, const F& r, const F& d) {
  const F one(1);
  // Left labels reached from <r,d-1> along rows (y) and down-left steps (x z).
  F p1 = y(r, d);                                   // <r,d>
  F p2 = p1 * x(c, r + 1) * z(r, d);                // <r+1,d>
  F p3 = p2 * y(r + 1, d + 1);                      // <r+1,d+1>
  F p4 = p2 * z(r + 1, d) * x(c, r + 2) * y(r + 2, d + 1);  // <r+2,d+1>
  F q1 = p1 * y(r, d + 1);                          // <r,d+1>

  F y4_r_dm1 = D(r21(c, r, d - 1), r31(c, r, d - 1), one);
  F y8_r_d = p1 * D(r31(c, r, d), one, r21(c, r, d));
  F y12_r1_d = p2 * D(one, r21(c, r + 1, d), r31(c, r + 1, d));
  F y4_r1_d = p2 * D(r21(c, r + 1, d), r31(c, r + 1, d), one);
  F y8_r1_d1 = p3 * D(r31(c, r + 1, d + 1), one, r21(c, r + 1, d + 1));
  F y12_r2_d1 = p4 * D(one, r21(c, r + 2, d + 1), r31(c, r + 2, d + 1));

  F y8_r_d1 = q1 * D(r31(c, r, d + 1), one, r21(c, r, d + 1));
  F y12_r1_d1 = p3 * D(one, r21(c, r + 1, d + 1), r31(c, r + 1, d + 1));
  F y4_r_d = p1 * D(r21(c, r, d), r31(c, r, d), one);

  return {Y(y4_r_dm1, y8_r_d, y12_r1_d), Y(y8_r_d1, y12_r1_d1, y4_r_d),
          Y(y12_r2_d1, y8_r1_d1, y4_r1_d)};
}

/// Top triangle <1,1> of the reduced grid, with <1,1,1> = 1 in the factor grid.
template <class F>
PanelEdges<F> panel_corner(const F& c) {
  const F one(1), two(2), three(3);
  F x2 = x(c, two);
  F left22 = x2 * y(two, two);
  F y8_11 = D(r31(c, one, one), one, r21(c, one, one));
  F y4_11 = D(r21(c, one, one), r31(c, one, one), one);
  F y12_21 = x2 * D(one, r21(c, two, one), r31(c, two, one));
  F y4_21 = x2 * D(r21(c, two, one), r31(c, two, one), one);
  F y12_22 = left22 * D(one, r21(c, two, two), r31(c, two, two));
  F y8_22 = left22 * D(r31(c, two, two), one, r21(c, two, two));
  F y12_32 = y(three, two) * x(c, three) * x2 * D(one, r21(c, three, two), r31(c, three, two));
  return {y8_11 + y12_21, y4_11 + y12_22, Y(y12_32, y4_21, y8_22)};
}

/// Left labels of the reduced <r,1> and <r+1,1> with <r,1,1> = 1 in the
/// factor grid.
template <class F>
std::pair<F, F> panel_left_boundary(const F& c, const F& r) {
  const F one(1);
  F p1 = x(c, r + 1);
  F p2 = p1 * x(c, r + 2);
  F y8_r = D(r31(c, r, one), one, r21(c, r, one));
  F y12_r1 = p1 * D(one, r21(c, r + 1, one), r31(c, r + 1, one));
  F y8_r1 = p1 * D(r31(c, r + 1, one), one, r21(c, r + 1, one));
  F y12_r2 = p2 * D(one, r21(c, r + 2, one), r31(c, r + 2, one));
  return {y8_r + y12_r1, y8_r1 + y12_r2};
}

}  // namespace trigrid::sym
