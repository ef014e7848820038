#pragma once

// Numeric backends for grid computations.
//
// Two scalar types are provided: an exact arbitrary-precision Rational (GMP)
// and a correctly rounded binary BigFloat (MPFR) with a per-value precision.
// Grid algorithms are templated on the scalar type, so a single computation
// never mixes the two; BigFloat additionally refuses to combine values of
// different precision.

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>
#include <mpfr.h>

namespace trigrid {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(mpz_class(static_cast<long>(value))) {}  // NOLINT

  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& value);

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
  /// input and std::domain_error on a zero denominator.
  static Rational parse(std::string_view text);

  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }
  const mpq_class& mpq() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  double to_double() const { return value_.get_d(); }

  /// "p/q", or "p" when q = 1.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on 0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Rational abs(const Rational& q);
Rational pow(const Rational& base, int exponent);

/// Binary floating-point number with an explicit precision (>= 64 bits).
/// All arithmetic is rounded to nearest at the operands' common precision;
/// combining values of different precision throws std::invalid_argument.
class BigFloat {
 public:
  static constexpr unsigned kMinPrecision = 64;
  static constexpr unsigned kDefaultPrecision = 256;

  explicit BigFloat(unsigned precision_bits = kDefaultPrecision);
  BigFloat(long value, unsigned precision_bits);
  BigFloat(const Rational& value, unsigned precision_bits);

  /// Parses a decimal string, rounded to nearest.
  static BigFloat parse(std::string_view text, unsigned precision_bits);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }
  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Decimal representation with `significant_digits` digits; 0 selects
  /// enough digits for an exact round trip at this precision.
  std::string str(int significant_digits = 0) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get_mutable() { return value_; }

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);  // throws std::domain_error on 0

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.value_, b.value_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

 private:
  void require_same_precision(const BigFloat& o, const char* op) const;

  mpfr_t value_;
};

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

BigFloat abs(const BigFloat& x);

/// Correctly rounded conversion of an exact rational.
BigFloat to_float(const Rational& q, unsigned precision_bits);

/// Euler's number, correctly rounded to `precision_bits`, from the Taylor
/// series sum 1/k! bracketed by its remainder bound 1/(N!*N).
BigFloat e_const(unsigned precision_bits);

// ---------------------------------------------------------------------------
// Scalar traits: how generic code lifts exact constants into a scalar type and
// decides equality.

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool is_exact = true;
  static constexpr const char* mode = "exact";
  static Rational lift(const Rational& q, const Rational& /*like*/) { return q; }
  static bool close(const Rational& a, const Rational& b) { return a == b; }
};

template <>
struct ScalarTraits<BigFloat> {
  static constexpr bool is_exact = false;
  static constexpr const char* mode = "float";
  static BigFloat lift(const Rational& q, const BigFloat& like) {
    return BigFloat(q, like.precision());
  }
  /// Relative tolerance 2^(16 - precision).
  static BigFloat tolerance(unsigned precision_bits);
  static bool close(const BigFloat& a, const BigFloat& b);
};

template <class S>
concept GridScalar = requires { ScalarTraits<S>::is_exact; };

template <class S>
S lift(const Rational& q, const S& like) {
  return ScalarTraits<S>::lift(q, like);
}

template <class S>
bool is_positive(const S& x) {
  return x.sign() > 0;
}

inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const BigFloat& x) { return x.str(); }

// ---------------------------------------------------------------------------
// Runtime scalar: one of the two backends. Arithmetic between different
// alternatives is rejected.

using Scalar = std::variant<Rational, BigFloat>;

enum class ArithOp { Add, Sub, Mul, Div };

/// Throws std::invalid_argument on variant (or precision) mismatch and
/// std::domain_error on division by zero.
Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op);

std::string to_string(const Scalar& s);

}  // namespace trigrid
