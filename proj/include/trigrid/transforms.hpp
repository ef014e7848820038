#pragma once

// Resistance-preserving circuit transforms.
//
// Orientation follows the upright-triangle convention used throughout the
// library: a triangle with left edge L, right edge R and base B is replaced by
// a downward Y whose legs point to 12, 4 and 8 o'clock. In delta(x, y, z) the
// vertex shared by the edges carrying x and y is the degree-1 end of the leg.
// In wye(a, b, c) the first argument is always the leg opposite the produced
// edge.

#include <stdexcept>

#include "trigrid/scalar.hpp"

namespace trigrid {

template <class S>
struct YTriple {
  S y12;  // towards the apex (shared by L and R)
  S y4;   // towards the bottom-right vertex (shared by R and B)
  S y8;   // towards the bottom-left vertex (shared by B and L)
};

namespace detail {

template <class S>
void require_positive(const S& v, const char* where) {
  if (!is_positive(v)) {
    throw std::domain_error(std::string(where) + ": resistances must be positive, got " +
                            to_string(v));
  }
}

}  // namespace detail

/// Delta-to-Y leg: xy / (x + y + z).
template <class S>
S delta(const S& x, const S& y, const S& z) {
  detail::require_positive(x, "delta");
  detail::require_positive(y, "delta");
  detail::require_positive(z, "delta");
  return x * y / (x + y + z);
}

/// Y-to-delta edge opposite leg `a`: (ab + bc + ca) / a.
template <class S>
S wye(const S& a, const S& b, const S& c) {
  detail::require_positive(a, "wye");
  detail::require_positive(b, "wye");
  detail::require_positive(c, "wye");
  return (a * b + b * c + c * a) / a;
}

/// Legs of the Y equivalent to triangle (L, R, B):
/// y12 = delta(L,R,B), y4 = delta(R,B,L), y8 = delta(B,L,R).
template <class S>
YTriple<S> delta_y(const S& left, const S& right, const S& base) {
  detail::require_positive(left, "delta_y");
  detail::require_positive(right, "delta_y");
  detail::require_positive(base, "delta_y");
  S sum = left + right + base;
  return {left * right / sum, right * base / sum, base * left / sum};
}

template <class S>
struct Edges {
  S left;
  S right;
  S base;
};

/// Inverse of delta_y: L = Y(y4,y8,y12), R = Y(y8,y12,y4), B = Y(y12,y4,y8).
template <class S>
Edges<S> y_delta(const YTriple<S>& y) {
  return {wye(y.y4, y.y8, y.y12), wye(y.y8, y.y12, y.y4), wye(y.y12, y.y4, y.y8)};
}

template <class S>
S series(const S& a, const S& b) {
  detail::require_positive(a, "series");
  detail::require_positive(b, "series");
  return a + b;
}

template <class S>
S parallel(const S& a, const S& b) {
  detail::require_positive(a, "parallel");
  detail::require_positive(b, "parallel");
  return a * b / (a + b);
}

}  // namespace trigrid
