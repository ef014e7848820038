#pragma once

// Sparse multivariate polynomials with exact rational coefficients over the
// fixed variable set {c, r, d, s, i, m, h}. Terms are kept sorted in
// decreasing graded-lexicographic order (c > r > d > s > i > m > h) with no
// zero coefficients, so structural equality is polynomial equality.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "trigrid/scalar.hpp"

namespace trigrid::sym {

enum class Var : std::uint8_t { c, r, d, s, i, m, h };

inline constexpr int kNumVars = 7;
inline constexpr std::array<char, kNumVars> kVarNames = {'c', 'r', 'd', 's', 'i', 'm', 'h'};

char var_name(Var v);
Var var_from_name(char name);  // throws std::invalid_argument

using Exponents = std::array<std::uint16_t, kNumVars>;

int total_degree(const Exponents& e);

/// True when a precedes b in decreasing graded-lex order.
bool grlex_greater(const Exponents& a, const Exponents& b);

struct Term {
  Exponents exp{};
  mpq_class coef;
};

/// Values for the variables; unused entries are ignored.
using Point = std::array<Rational, kNumVars>;

class MPoly {
 public:
  MPoly() = default;
  MPoly(long constant);  // NOLINT
  explicit MPoly(const Rational& constant);
  static MPoly variable(Var v);
  static MPoly monomial(const Exponents& exp, const mpq_class& coef);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  int total_degree() const;
  /// Bitmask of variables that occur.
  unsigned variables() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const mpq_class& k);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b);

  /// Strict weak order used to key factor tables (not a ring order).
  friend bool operator<(const MPoly& a, const MPoly& b);

  /// Scales so the leading coefficient is 1; returns the old leading coefficient.
  mpq_class make_monic();

  Rational evaluate(const Point& at) const;

  /// "3*c^2*r - 1/2*d + 1"
  std::string str() const;

 private:
  friend std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b);

  void add_scaled(const MPoly& o, const mpq_class& k, const Exponents& shift);

  std::vector<Term> terms_;
};

MPoly pow(const MPoly& base, int exponent);

/// Exact quotient a/b if b divides a in Q[c,r,d,s,i,m,h], else nullopt.
/// Throws std::domain_error if b is zero.
std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b);

}  // namespace trigrid::sym
