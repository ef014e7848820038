#pragma once

// Closed-form edge factors. All evaluations are exact; each function checks
// its own domain and throws std::domain_error outside it.
//
//   r21(c,r,d) = (2(r-d)+1) / (2d-1)                       1 <= d <= r <= c
//   r31(c,r,d) = (2(c-r)+1) / (2d-1)                       1 <= d <= r <= c
//   x(c,r)     = (r-1)/(2r-1) * (2(c-r)+3)/((c-r)+1)        2 <= r <= c
//   y(r,d)     = (d-1)/(2d-3) * (2(r-d)+3)/((r-d)+1)        2 <= d <= r
//   z(r,d)     = 1 - (d-1)/r * 1/(2(r-d)+3)                 1 <= d <= r
//   f(c,i)     = 1 + i/(c-i) * 1/(2c+1)                     1 <= i <= c-1
//   g(c)       = c/(c-1) * (2c-1)/(2c+1)                    c >= 2

#include "trigrid/scalar.hpp"

namespace trigrid {

Rational factor_r21(long c, long r, long d);
Rational factor_r31(long c, long r, long d);
Rational factor_x(long c, long r);
Rational factor_y(long r, long d);
Rational factor_z(long r, long d);
Rational factor_f(long c, long i);
Rational factor_g(long c);

}  // namespace trigrid
