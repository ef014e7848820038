#include "trigrid/scalar.hpp"

#include <cctype>
#include <cmath>
#include <memory>
#include <sstream>

namespace trigrid {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw std::invalid_argument("not an integer literal: '" + std::string(s) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

// --- Rational ---------------------------------------------------------------

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text), mpz_class(1));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.mpq().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.mpq().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

// --- BigFloat ---------------------------------------------------------------

namespace {

unsigned checked_precision(unsigned bits) {
  if (bits < BigFloat::kMinPrecision) {
    throw std::invalid_argument("BigFloat precision must be at least 64 bits, got " +
                                std::to_string(bits));
  }
  return bits;
}

}  // namespace

BigFloat::BigFloat(unsigned precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, unsigned precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, unsigned precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_q(value_, value.mpq().get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(std::string_view text, unsigned precision_bits) {
  BigFloat out(precision_bits);
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty decimal number");
  char* end = nullptr;
  mpfr_strtofr(out.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0') {
    throw std::invalid_argument("malformed decimal number: '" + s + "'");
  }
  if (!mpfr_number_p(out.value_)) throw std::invalid_argument("non-finite number: '" + s + "'");
  return out;
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

void BigFloat::require_same_precision(const BigFloat& o, const char* op) const {
  if (mpfr_get_prec(value_) != mpfr_get_prec(o.value_)) {
    throw std::invalid_argument(std::string("BigFloat ") + op + ": precision mismatch (" +
                                std::to_string(precision()) + " vs " +
                                std::to_string(o.precision()) + " bits)");
  }
}

BigFloat BigFloat::operator-() const {
  BigFloat out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  require_same_precision(o, "add");
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  require_same_precision(o, "sub");
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  require_same_precision(o, "mul");
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  require_same_precision(o, "div");
  if (o.is_zero()) throw std::domain_error("BigFloat division by zero");
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

std::string BigFloat::str(int significant_digits) const {
  if (is_zero()) return "0";
  int digits = significant_digits;
  if (digits <= 0) {
    // Enough digits for the decimal string to read back to the same value.
    digits = 1 + static_cast<int>(std::ceil(static_cast<double>(precision()) * std::log10(2.0)));
  }
  // %.*Rg drops trailing zeros; keep the exponent form only for extreme magnitudes.
  int len = mpfr_snprintf(nullptr, 0, "%.*Rg", digits, value_);
  std::string out(static_cast<std::size_t>(len) + 1, '\0');
  mpfr_snprintf(out.data(), out.size(), "%.*Rg", digits, value_);
  out.resize(static_cast<std::size_t>(len));
  return out;
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(); }

BigFloat abs(const BigFloat& x) { return x.sign() < 0 ? -x : x; }

BigFloat to_float(const Rational& q, unsigned precision_bits) {
  return BigFloat(q, precision_bits);
}

BigFloat e_const(unsigned precision_bits) {
  checked_precision(precision_bits);
  // Partial sums s_N / N! with s_N = sum_{k<=N} N!/k!, built by s_j = j*s_{j-1} + 1.
  // The tail satisfies 0 < e - s_N/N! < 1/(N!*N). Once both ends of that
  // bracket round to the same value, that value is the correctly rounded e.
  mpz_class partial = 1;
  mpz_class factorial = 1;
  for (unsigned long n = 1;; ++n) {
    partial = partial * n + 1;
    factorial *= n;
    if (n < 4) continue;
    Rational lower(partial, factorial);
    Rational upper = lower + Rational(mpz_class(1), factorial * n);
    BigFloat lo(lower, precision_bits);
    BigFloat hi(upper, precision_bits);
    if (lo == hi) return lo;
  }
}

BigFloat ScalarTraits<BigFloat>::tolerance(unsigned precision_bits) {
  BigFloat t(1L, precision_bits);
  mpfr_mul_2si(t.get_mutable(), t.get(), 16 - static_cast<long>(precision_bits), MPFR_RNDN);
  return t;
}

bool ScalarTraits<BigFloat>::close(const BigFloat& a, const BigFloat& b) {
  if (a == b) return true;
  BigFloat diff = abs(a - b);
  BigFloat scale = abs(a) < abs(b) ? abs(b) : abs(a);
  return diff <= tolerance(a.precision()) * scale;
}

// --- Scalar -----------------------------------------------------------------

namespace {

template <class T>
T apply(const T& a, const T& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

}  // namespace

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  if (a.index() != b.index()) {
    throw std::invalid_argument("scalar_arith: cannot mix exact and float scalars");
  }
  if (const auto* qa = std::get_if<Rational>(&a)) {
    return apply(*qa, std::get<Rational>(b), op);
  }
  return apply(std::get<BigFloat>(a), std::get<BigFloat>(b), op);
}

std::string to_string(const Scalar& s) {
  return std::visit([](const auto& v) { return v.str(); }, s);
}

}  // namespace trigrid
