#pragma once

// The factor functions as plain formulas over any field type F (RatFn for
// symbolic work, Rational for sampling). No domain checks: the variables are
// formal, and only a zero denominator is an error.
//
//   D(x,y,z)  = x*y/(x+y+z)
//   Y(x,y,z)  = (x*y+y*z+z*x)/x
//   x(c,r)    = (r-1)/(2*r-1)*(2*(c-r)+3)/(c-r+1)
//   y(r,d)    = (d-1)/(2*d-3)*(2*(r-d)+3)/(r-d+1)
//   z(r,d)    = 1-(d-1)/r*1/(2*(r-d)+3)
//   r21(c,r,d) = (2*(r-d)+1)/(2*d-1)
//   r31(c,r,d) = (2*(c-r)+1)/(2*d-1)
//   f(c,d)    = 1+d/(c-d)*1/(2*c+1)
//   g(c)      = c/(c-1)*(2*c-1)/(2*c+1)

namespace trigrid::sym {

template <class F>
F D(const F& x, const F& y, const F& z) {
  return x * y / (x + y + z);
}

template <class F>
F Y(const F& x, const F& y, const F& z) {
  return (x * y + y * z + z * x) / x;
}

template <class F>
F x(const F& c, const F& r) {
  return (r - 1) / (2 * r - 1) * (2 * (c - r) + 3) / (c - r + 1);
}

template <class F>
F y(const F& r, const F& d) {
  return (d - 1) / (2 * d - 3) * (2 * (r - d) + 3) / (r - d + 1);
}

template <class F>
F z(const F& r, const F& d) {
  return F(1) - (d - 1) / r * (F(1) / (2 * (r - d) + 3));
}

template <class F>
F r21(const F& /*c*/, const F& r, const F& d) {
  return (2 * (r - d) + 1) / (2 * d - 1);
}

template <class F>
F r31(const F& c, const F& r, const F& d) {
  return (2 * (c - r) + 1) / (2 * d - 1);
}

template <class F>
F f(const F& c, const F& d) {
  return F(1) + d / (c - d) * (F(1) / (2 * c + 1));
}

template <class F>
F g(const F& c) {
  return c / (c - 1) * (2 * c - 1) / (2 * c + 1);
}

}  // namespace trigrid::sym
