#include "trigrid/symbolic/ratfn.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace trigrid::sym {

namespace {

bool subset(unsigned a, unsigned b) { return (a & ~b) == 0; }

MPoly expand(const mpq_class& coef, std::vector<std::pair<const MPoly*, int>> parts) {
  std::sort(parts.begin(), parts.end(),
            [](const auto& x, const auto& y) { return x.first->size() < y.first->size(); });
  MPoly out = MPoly::monomial({}, coef);
  for (const auto& [p, e] : parts) {
    for (int k = 0; k < e; ++k) out *= *p;
  }
  return out;
}

}  // namespace

RatFn::RatFn(long constant) : coef_(constant) {}

RatFn::RatFn(const Rational& constant) : coef_(constant.mpq()) {}

RatFn::RatFn(const MPoly& p) {
  if (p.is_zero()) return;
  coef_ = 1;
  absorb(p, 1);
}

RatFn RatFn::variable(Var v) { return RatFn(MPoly::variable(v)); }

void RatFn::absorb(MPoly p, int exponent) {
  mpq_class lc = p.make_monic();
  mpq_class scale;
  mpz_pow_ui(scale.get_num_mpz_t(), lc.get_num_mpz_t(), static_cast<unsigned long>(std::abs(exponent)));
  mpz_pow_ui(scale.get_den_mpz_t(), lc.get_den_mpz_t(), static_cast<unsigned long>(std::abs(exponent)));
  scale.canonicalize();
  if (exponent > 0) {
    coef_ *= scale;
  } else {
    coef_ /= scale;
  }
  if (p.is_constant()) return;

  // Split off known factors so that equal pieces share one entry.
  for (auto it = factors_.begin(); it != factors_.end() && !p.is_constant();) {
    const MPoly& q = it->first;
    bool erased = false;
    if (q.total_degree() <= p.total_degree() && subset(q.variables(), p.variables())) {
      while (!p.is_constant()) {
        auto quotient = try_divide(p, q);
        if (!quotient) break;
        p = std::move(*quotient);
        it->second += exponent;
        if (it->second == 0) {
          it = factors_.erase(it);
          erased = true;
          break;
        }
      }
    }
    if (!erased) ++it;
  }
  if (p.is_constant()) return;
  int& e = factors_[p];
  e += exponent;
  if (e == 0) factors_.erase(p);
}

MPoly RatFn::numerator() const {
  std::vector<std::pair<const MPoly*, int>> parts;
  for (const auto& [p, e] : factors_) {
    if (e > 0) parts.emplace_back(&p, e);
  }
  return expand(coef_, parts);
}

MPoly RatFn::denominator() const {
  std::vector<std::pair<const MPoly*, int>> parts;
  for (const auto& [p, e] : factors_) {
    if (e < 0) parts.emplace_back(&p, -e);
  }
  return expand(1, parts);
}

int RatFn::numerator_degree() const {
  int deg = 0;
  for (const auto& [p, e] : factors_) {
    if (e > 0) deg += e * p.total_degree();
  }
  return deg;
}

int RatFn::denominator_degree() const {
  int deg = 0;
  for (const auto& [p, e] : factors_) {
    if (e < 0) deg -= e * p.total_degree();
  }
  return deg;
}

unsigned RatFn::variables() const {
  unsigned mask = 0;
  for (const auto& [p, e] : factors_) mask |= p.variables();
  return mask;
}

RatFn RatFn::operator-() const {
  RatFn out = *this;
  out.coef_ = -out.coef_;
  return out;
}

RatFn& RatFn::operator*=(const RatFn& o) {
  if (is_zero() || o.is_zero()) return *this = RatFn();
  coef_ *= o.coef_;
  for (const auto& [p, e] : o.factors_) {
    int& mine = factors_[p];
    mine += e;
    if (mine == 0) factors_.erase(p);
  }
  return *this;
}

RatFn& RatFn::operator/=(const RatFn& o) {
  if (o.is_zero()) throw std::domain_error("rational function division by zero");
  if (is_zero()) return *this;
  coef_ /= o.coef_;
  for (const auto& [p, e] : o.factors_) {
    int& mine = factors_[p];
    mine -= e;
    if (mine == 0) factors_.erase(p);
  }
  return *this;
}

RatFn& RatFn::operator+=(const RatFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;

  std::map<MPoly, int> common;
  std::vector<std::pair<const MPoly*, int>> rest_a;
  std::vector<std::pair<const MPoly*, int>> rest_b;
  auto a = factors_.begin();
  auto b = o.factors_.begin();
  auto visit = [&](const MPoly& p, int ea, int eb) {
    int g = std::min(ea, eb);
    if (g != 0) common.emplace(p, g);
    if (ea - g > 0) rest_a.emplace_back(&p, ea - g);
    if (eb - g > 0) rest_b.emplace_back(&p, eb - g);
  };
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      visit(a->first, a->second, 0);
      ++a;
    } else if (a == factors_.end() || b->first < a->first) {
      visit(b->first, 0, b->second);
      ++b;
    } else {
      visit(a->first, a->second, b->second);
      ++a;
      ++b;
    }
  }
  MPoly sum = expand(coef_, rest_a) + expand(o.coef_, rest_b);
  RatFn out;
  if (!sum.is_zero()) {
    out.coef_ = 1;
    out.factors_ = std::move(common);
    out.absorb(std::move(sum), 1);
  }
  return *this = std::move(out);
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

Rational RatFn::evaluate(const Point& at) const {
  Rational value{Rational(coef_)};
  for (const auto& [p, e] : factors_) {
    Rational v = p.evaluate(at);
    if (v.is_zero() && e < 0) {
      throw std::domain_error("rational function has a pole at this point");
    }
    value *= pow(v, e);
  }
  return value;
}

std::string RatFn::str() const {
  if (is_zero()) return "0";
  std::string num;
  std::string den;
  for (const auto& [p, e] : factors_) {
    std::string piece = "(" + p.str() + ")";
    if (std::abs(e) > 1) piece += "^" + std::to_string(std::abs(e));
    std::string& side = e > 0 ? num : den;
    if (!side.empty()) side += "*";
    side += piece;
  }
  std::string out = coef_.get_str();
  if (!num.empty()) out += "*" + num;
  if (!den.empty()) out += "/(" + den + ")";
  return out;
}

}  // namespace trigrid::sym
