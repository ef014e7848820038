#pragma once

// Multivariate rational functions over Q, kept partially factored:
//
//   value = coefficient * prod_k p_k^(e_k)
//
// with each p_k a monic non-constant MPoly and e_k a nonzero integer.
// Products and quotients only merge exponents. A sum pulls out the common
// factors of both operands and expands only what remains, then tries to
// cancel the new polynomial against the known factors by exact division.
// The zero function is exactly the one with coefficient 0, so an identity
// holds iff the difference of its sides comes out with coefficient 0.

#include <map>
#include <string>

#include "trigrid/symbolic/mpoly.hpp"

namespace trigrid::sym {

class RatFn {
 public:
  RatFn() = default;  // zero
  RatFn(long constant);  // NOLINT
  explicit RatFn(const Rational& constant);
  explicit RatFn(const MPoly& p);
  static RatFn variable(Var v);

  bool is_zero() const { return coef_ == 0; }
  const mpq_class& coefficient() const { return coef_; }
  const std::map<MPoly, int>& factors() const { return factors_; }

  /// Expanded numerator and denominator (denominator monic).
  MPoly numerator() const;
  MPoly denominator() const;
  int numerator_degree() const;
  int denominator_degree() const;
  unsigned variables() const;

  RatFn operator-() const;
  RatFn& operator+=(const RatFn& o);
  RatFn& operator-=(const RatFn& o);
  RatFn& operator*=(const RatFn& o);
  RatFn& operator/=(const RatFn& o);  // throws std::domain_error on zero

  friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
  friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
  friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
  friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }

  /// a == b iff a - b is the zero function.
  friend bool operator==(const RatFn& a, const RatFn& b) { return (a - b).is_zero(); }

  /// Throws std::domain_error where a denominator factor vanishes.
  Rational evaluate(const Point& at) const;

  std::string str() const;

 private:
  void absorb(MPoly p, int exponent);

  mpq_class coef_ = 0;
  std::map<MPoly, int> factors_;
};

}  // namespace trigrid::sym
