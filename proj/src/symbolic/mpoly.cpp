#include "trigrid/symbolic/mpoly.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace trigrid::sym {

char var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

Var var_from_name(char name) {
  for (int k = 0; k < kNumVars; ++k) {
    if (kVarNames[static_cast<std::size_t>(k)] == name) return static_cast<Var>(k);
  }
  throw std::invalid_argument(std::string("unknown variable '") + name + "'");
}

int total_degree(const Exponents& e) {
  int sum = 0;
  for (auto x : e) sum += x;
  return sum;
}

bool grlex_greater(const Exponents& a, const Exponents& b) {
  int da = total_degree(a);
  int db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

namespace {

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out{};
  for (int k = 0; k < kNumVars; ++k) {
    unsigned sum = unsigned(a[k]) + unsigned(b[k]);
    if (sum > std::numeric_limits<std::uint16_t>::max()) {
      throw std::overflow_error("polynomial exponent overflow");
    }
    out[k] = static_cast<std::uint16_t>(sum);
  }
  return out;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (int k = 0; k < kNumVars; ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

Exponents sub_exponents(const Exponents& a, const Exponents& b) {
  Exponents out{};
  for (int k = 0; k < kNumVars; ++k) out[k] = static_cast<std::uint16_t>(a[k] - b[k]);
  return out;
}

}  // namespace

MPoly::MPoly(long constant) {
  if (constant != 0) terms_.push_back({Exponents{}, mpq_class(constant)});
}

MPoly::MPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.push_back({Exponents{}, constant.mpq()});
}

MPoly MPoly::variable(Var v) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = 1;
  return monomial(e, 1);
}

MPoly MPoly::monomial(const Exponents& exp, const mpq_class& coef) {
  MPoly p;
  if (coef != 0) p.terms_.push_back({exp, coef});
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && trigrid::sym::total_degree(terms_[0].exp) == 0);
}

int MPoly::total_degree() const {
  return terms_.empty() ? 0 : trigrid::sym::total_degree(terms_.front().exp);
}

unsigned MPoly::variables() const {
  unsigned mask = 0;
  for (const auto& t : terms_) {
    for (int k = 0; k < kNumVars; ++k) {
      if (t.exp[k]) mask |= 1u << k;
    }
  }
  return mask;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

void MPoly::add_scaled(const MPoly& o, const mpq_class& k, const Exponents& shift) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end()) {
      merged.push_back(std::move(*a++));
      continue;
    }
    Exponents be = add_exponents(b->exp, shift);
    if (a == terms_.end() || grlex_greater(be, a->exp)) {
      merged.push_back({be, b->coef * k});
      ++b;
    } else if (a->exp == be) {
      mpq_class sum = a->coef + b->coef * k;
      if (sum != 0) merged.push_back({a->exp, std::move(sum)});
      ++a;
      ++b;
    } else {
      merged.push_back(std::move(*a++));
    }
  }
  terms_ = std::move(merged);
}

MPoly& MPoly::operator+=(const MPoly& o) {
  add_scaled(o, 1, Exponents{});
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  add_scaled(o, -1, Exponents{});
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const mpq_class& k) {
  if (k == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= k;
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) products.push_back({add_exponents(x.exp, y.exp), x.coef * y.coef});
  }
  std::sort(products.begin(), products.end(),
            [](const Term& p, const Term& q) { return grlex_greater(p.exp, q.exp); });
  MPoly out;
  for (auto& t : products) {
    if (!out.terms_.empty() && out.terms_.back().exp == t.exp) {
      out.terms_.back().coef += t.coef;
      if (out.terms_.back().coef == 0) out.terms_.pop_back();
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].exp != b.terms_[k].exp || a.terms_[k].coef != b.terms_[k].coef) return false;
  }
  return true;
}

bool operator<(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    const auto& x = a.terms_[k];
    const auto& y = b.terms_[k];
    if (x.exp != y.exp) return grlex_greater(x.exp, y.exp);
    int c = cmp(x.coef, y.coef);
    if (c != 0) return c < 0;
  }
  return false;
}

mpq_class MPoly::make_monic() {
  if (terms_.empty()) return 0;
  mpq_class lc = terms_.front().coef;
  for (auto& t : terms_) t.coef /= lc;
  return lc;
}

Rational MPoly::evaluate(const Point& at) const {
  mpq_class sum = 0;
  for (const auto& t : terms_) {
    mpq_class prod = t.coef;
    for (int k = 0; k < kNumVars; ++k) {
      for (int e = 0; e < t.exp[k]; ++e) prod *= at[k].mpq();
    }
    sum += prod;
  }
  return Rational(sum);
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class coef = t.coef;
    bool negative = coef < 0;
    if (negative) coef = -coef;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    bool constant = trigrid::sym::total_degree(t.exp) == 0;
    std::string body;
    if (coef != 1 || constant) body = coef.get_str();
    for (int k = 0; k < kNumVars; ++k) {
      if (!t.exp[k]) continue;
      if (!body.empty()) body += "*";
      body += kVarNames[k];
      if (t.exp[k] > 1) body += "^" + std::to_string(t.exp[k]);
    }
    out += body;
  }
  return out;
}

MPoly pow(const MPoly& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("polynomial power with negative exponent");
  MPoly out(1L);
  MPoly square = base;
  while (exponent > 0) {
    if (exponent & 1) out *= square;
    exponent >>= 1;
    if (exponent > 0) square *= square;
  }
  return out;
}

std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  MPoly quotient;
  MPoly rem = a;
  const Term& lb = b.leading();
  while (!rem.is_zero()) {
    const Term& lt = rem.leading();
    // Over a monomial order, b | a forces every intermediate leading term to
    // be divisible by lt(b).
    if (!divides(lb.exp, lt.exp)) return std::nullopt;
    Exponents shift = sub_exponents(lt.exp, lb.exp);
    mpq_class k = lt.coef / lb.coef;
    quotient.terms_.push_back({shift, k});
    rem.add_scaled(b, -k, shift);
  }
  return quotient;
}

}  // namespace trigrid::sym
