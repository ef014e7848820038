#include "trigrid/factors.hpp"

#include <sstream>
#include <stdexcept>

namespace trigrid {

namespace {

[[noreturn]] void domain_violation(const char* name, const std::string& args, const char* rule) {
  throw std::domain_error(std::string(name) + "(" + args + ") outside domain " + rule);
}

std::string args(long a, long b) { return std::to_string(a) + "," + std::to_string(b); }
std::string args(long a, long b, long c) { return args(a, b) + "," + std::to_string(c); }

}  // namespace

Rational factor_r21(long c, long r, long d) {
  if (!(1 <= d && d <= r && r <= c)) domain_violation("r21", args(c, r, d), "1 <= d <= r <= c");
  return Rational(2 * (r - d) + 1, 2 * d - 1);
}

Rational factor_r31(long c, long r, long d) {
  if (!(1 <= d && d <= r && r <= c)) domain_violation("r31", args(c, r, d), "1 <= d <= r <= c");
  return Rational(2 * (c - r) + 1, 2 * d - 1);
}

Rational factor_x(long c, long r) {
  if (!(2 <= r && r <= c)) domain_violation("x", args(c, r), "2 <= r <= c");
  return Rational(r - 1, 2 * r - 1) * Rational(2 * (c - r) + 3, (c - r) + 1);
}

Rational factor_y(long r, long d) {
  if (!(2 <= d && d <= r)) domain_violation("y", args(r, d), "2 <= d <= r");
  return Rational(d - 1, 2 * d - 3) * Rational(2 * (r - d) + 3, (r - d) + 1);
}

Rational factor_z(long r, long d) {
  if (!(1 <= d && d <= r)) domain_violation("z", args(r, d), "1 <= d <= r");
  return Rational(1) - Rational(d - 1, r) * Rational(1, 2 * (r - d) + 3);
}

Rational factor_f(long c, long i) {
  if (!(1 <= i && i <= c - 1)) domain_violation("f", args(c, i), "1 <= i <= c-1");
  return Rational(1) + Rational(i, c - i) * Rational(1, 2 * c + 1);
}

Rational factor_g(long c) {
  if (c < 2) domain_violation("g", std::to_string(c), "c >= 2");
  return Rational(c, c - 1) * Rational(2 * c - 1, 2 * c + 1);
}

}  // namespace trigrid
