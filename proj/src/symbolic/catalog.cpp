#include "trigrid/symbolic/catalog.hpp"

#include <bit>
#include <chrono>
#include <stdexcept>
#include <type_traits>

#include "trigrid/symbolic/builtins.hpp"
#include "trigrid/symbolic/panels.hpp"

namespace trigrid::sym {

namespace {

template <class Body>
Identity make(std::string name, std::string statement, std::string domain, bool derived,
              std::vector<Var> vars, Body body) {
  return {std::move(name),
          std::move(statement),
          std::move(domain),
          derived,
          std::move(vars),
          [body](const Env<RatFn>& e) { return body(e); },
          [body](const Env<Rational>& e) { return body(e); }};
}

template <class E>
using field_t = std::decay_t<decltype(std::declval<E>().c)>;

std::vector<Identity> build_catalog() {
  using V = Var;
  std::vector<Identity> out;

  out.push_back(make("A", "f(c,1) = g(c)", "", false, {V::c}, [](const auto& v) {
    using F = field_t<decltype(v)>;
    return std::pair{f(v.c, F(1)), g(v.c)};
  }));

  out.push_back(make("B", "f(c,s+1)/f(c,s) = g(c-s)", "", false, {V::c, V::s}, [](const auto& v) {
    return std::pair{f(v.c, v.s + 1) / f(v.c, v.s), g(v.c - v.s)};
  }));

  out.push_back(make("C", "y(r+1,2)/y(r,2) = 1 - 1/r * 1/(2(r-2)+3)", "", false, {V::r},
                     [](const auto& v) {
                       using F = field_t<decltype(v)>;
                       F two(2);
                       return std::pair{y(v.r + 1, two) / y(v.r, two),
                                        F(1) - F(1) / v.r * (F(1) / (2 * (v.r - 2) + 3))};
                     }));

  out.push_back(make("D", "y(r+1,s+1)/y(r,s+1) = z(r,s+1)/z(r,s)", "", false, {V::r, V::s},
                     [](const auto& v) {
                       return std::pair{y(v.r + 1, v.s + 1) / y(v.r, v.s + 1),
                                        z(v.r, v.s + 1) / z(v.r, v.s)};
                     }));

  out.push_back(make("E", "y(r,r/2+1) * r21(c,r,r/2+1) = 1", "r = 2m", false, {V::c, V::m},
                     [](const auto& v) {
                       using F = field_t<decltype(v)>;
                       F r = 2 * v.m;
                       return std::pair{y(r, v.m + 1) * r21(v.c, r, v.m + 1), F(1)};
                     }));

  out.push_back(make("E-odd", "r21(c,r,(r+1)/2) = 1", "r = 2m+1", true, {V::c, V::m},
                     [](const auto& v) {
                       using F = field_t<decltype(v)>;
                       return std::pair{r21(v.c, 2 * v.m + 1, v.m + 1), F(1)};
                     }));

  out.push_back(make(
      "F", "y(r,r/2-i) * y(r,r/2+2+i) * r21(c,r,r/2+2+i)/r21(c,r,r/2+1+i) = 1", "r = 2m", false,
      {V::c, V::m, V::i}, [](const auto& v) {
        using F = field_t<decltype(v)>;
        F r = 2 * v.m;
        return std::pair{y(r, v.m - v.i) * y(r, v.m + 2 + v.i) * r21(v.c, r, v.m + 2 + v.i) /
                             r21(v.c, r, v.m + 1 + v.i),
                         F(1)};
      }));

  out.push_back(make(
      "F-odd", "y(r,(r+1)/2-i) * y(r,(r+3)/2+i) * r21(c,r,(r+3)/2+i)/r21(c,r,(r+1)/2+i) = 1",
      "r = 2m+1", true, {V::c, V::m, V::i}, [](const auto& v) {
        using F = field_t<decltype(v)>;
        F r = 2 * v.m + 1;
        return std::pair{y(r, v.m + 1 - v.i) * y(r, v.m + 2 + v.i) * r21(v.c, r, v.m + 2 + v.i) /
                             r21(v.c, r, v.m + 1 + v.i),
                         F(1)};
      }));

  out.push_back(make("G", "x(c,(c+d-1)/2+1) * z((c+d-1)/2,d) = 1", "c = 2h+1-d", false,
                     {V::h, V::d}, [](const auto& v) {
                       using F = field_t<decltype(v)>;
                       F c = 2 * v.h + 1 - v.d;
                       return std::pair{x(c, v.h + 1) * z(v.h, v.d), F(1)};
                     }));

  out.push_back(make("G-even", "x(c,k) * x(c,k+1) * z(k-1,d) * z(k,d) = 1 with k = (c+d)/2",
                     "c = 2h-d, k = h", true, {V::h, V::d}, [](const auto& v) {
                       using F = field_t<decltype(v)>;
                       F c = 2 * v.h - v.d;
                       return std::pair{x(c, v.h) * x(c, v.h + 1) * z(v.h - 1, v.d) * z(v.h, v.d),
                                        F(1)};
                     }));

  out.push_back(make(
      "H", "z(k+i+1,d) * z(k-i-1,d) * x(c,k+i+2) * x(c,k-i) = 1 with k = (c+d-1)/2",
      "c = 2h+1-d, k = h", false, {V::h, V::d, V::i}, [](const auto& v) {
        using F = field_t<decltype(v)>;
        F c = 2 * v.h + 1 - v.d;
        return std::pair{z(v.h + v.i + 1, v.d) * z(v.h - v.i - 1, v.d) * x(c, v.h + v.i + 2) *
                             x(c, v.h - v.i),
                         F(1)};
      }));

  out.push_back(make(
      "H-even", "x(c,k+2+i) * z(k+1+i,d) * x(c,k-1-i) * z(k-2-i,d) = 1 with k = (c+d)/2",
      "c = 2h-d, k = h", true, {V::h, V::d, V::i}, [](const auto& v) {
        using F = field_t<decltype(v)>;
        F c = 2 * v.h - v.d;
        return std::pair{x(c, v.h + 2 + v.i) * z(v.h + 1 + v.i, v.d) * x(c, v.h - 1 - v.i) *
                             z(v.h - 2 - v.i, v.d),
                         F(1)};
      }));

  out.push_back(make("I", "interior BASE/LEFT = r31(c-1,r,d)", "", false, {V::c, V::r, V::d},
                     [](const auto& v) {
                       auto p = panel_interior(v.c, v.r, v.d);
                       return std::pair{p.base / p.left, r31(v.c - 1, v.r, v.d)};
                     }));

  out.push_back(make("I-right", "interior RIGHT/LEFT = r21(c-1,r,d)", "", true,
                     {V::c, V::r, V::d}, [](const auto& v) {
                       auto p = panel_interior(v.c, v.r, v.d);
                       return std::pair{p.right / p.left, r21(v.c - 1, v.r, v.d)};
                     }));

  out.push_back(make("I-horizontal",
                     "interior LEFT(c,r,d) * y(r,d-1) / LEFT(c,r,d-1) = y(r,d)", "", true,
                     {V::c, V::r, V::d}, [](const auto& v) {
                       auto here = panel_interior(v.c, v.r, v.d);
                       auto prev = panel_interior(v.c, v.r, v.d - 1);
                       return std::pair{here.left * y(v.r, v.d - 1) / prev.left, y(v.r, v.d)};
                     }));

  out.push_back(make("J1", "corner RIGHT/LEFT = 1", "", false, {V::c}, [](const auto& v) {
    using F = field_t<decltype(v)>;
    auto p = panel_corner(v.c);
    return std::pair{p.right / p.left, F(1)};
  }));

  out.push_back(make("J2", "corner BASE/LEFT = r31(c-1,1,1)", "", false, {V::c},
                     [](const auto& v) {
                       using F = field_t<decltype(v)>;
                       auto p = panel_corner(v.c);
                       return std::pair{p.base / p.left, r31(v.c - 1, F(1), F(1))};
                     }));

  out.push_back(make("K",
                     "(Y8[r+1,1] + Y12[r+2,1])/(Y8[r,1] + Y12[r+1,1]) = x(c-1,r+1)", "", false,
                     {V::c, V::r}, [](const auto& v) {
                       auto [lower, upper] = panel_left_boundary(v.c, v.r);
                       return std::pair{upper / lower, x(v.c - 1, v.r + 1)};
                     }));

  out.push_back(make("L", "g(c) = Y8[1,1] + Y12[2,1]", "", false, {V::c}, [](const auto& v) {
    return std::pair{g(v.c), panel_corner(v.c).left};
  }));

  out.push_back(make("M", "f(c,c-1) * D(1,1,r31(1,1,1)) = c/(2c+1)", "", false, {V::c},
                     [](const auto& v) {
                       using F = field_t<decltype(v)>;
                       F one(1);
                       return std::pair{f(v.c, v.c - 1) * D(one, one, r31(one, one, one)),
                                        v.c / (2 * v.c + 1)};
                     }));

  out.push_back(make("N", "f(c,i) * D(1,1,r31(c-i,1,1)) / (c/(2c+1)) = 1/(c-i)", "", false,
                     {V::c, V::i}, [](const auto& v) {
                       using F = field_t<decltype(v)>;
                       F one(1);
                       return std::pair{f(v.c, v.i) * D(one, one, r31(v.c - v.i, one, one)) /
                                            (v.c / (2 * v.c + 1)),
                                        one / (v.c - v.i)};
                     }));
  return out;
}

Env<RatFn> symbolic_env() {
  return {RatFn::variable(Var::c), RatFn::variable(Var::r), RatFn::variable(Var::d),
          RatFn::variable(Var::s), RatFn::variable(Var::i), RatFn::variable(Var::m),
          RatFn::variable(Var::h)};
}

Rational& slot(Env<Rational>& e, Var v) {
  switch (v) {
    case Var::c: return e.c;
    case Var::r: return e.r;
    case Var::d: return e.d;
    case Var::s: return e.s;
    case Var::i: return e.i;
    case Var::m: return e.m;
    case Var::h: return e.h;
  }
  throw std::invalid_argument("unknown variable");
}

}  // namespace

const std::vector<long>& sample_values() {
  static const std::vector<long> values = {20, 40, 60, 80, 100, 120, 140, 160, 180, 200};
  return values;
}

const std::vector<Identity>& identity_catalog() {
  static const std::vector<Identity> catalog = build_catalog();
  return catalog;
}

const Identity& find_identity(const std::string& name) {
  for (const auto& id : identity_catalog()) {
    if (id.name == name) return id;
  }
  throw std::out_of_range("no identity named '" + name + "'");
}

ProofResult verify_identity(const Identity& id) {
  auto start = std::chrono::steady_clock::now();
  ProofResult result;
  result.name = id.name;
  result.statement = id.statement;
  result.variables = static_cast<int>(id.vars.size());

  auto [lhs, rhs] = id.symbolic(symbolic_env());
  result.degree = std::max(lhs.numerator_degree(), lhs.denominator_degree());
  RatFn diff = lhs - rhs;
  result.exact = diff.is_zero();
  if (!result.exact) result.residual = diff.str();

  const auto& values = sample_values();
  std::vector<std::size_t> idx(id.vars.size(), 0);
  for (;;) {
    Env<Rational> env{0, 0, 0, 0, 0, 0, 0};
    for (std::size_t k = 0; k < id.vars.size(); ++k) slot(env, id.vars[k]) = values[idx[k]];
    ++result.samples_total;
    try {
      auto [a, b] = id.numeric(env);
      if (a == b) ++result.samples_ok;
    } catch (const std::domain_error&) {
      ++result.samples_skipped;
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == values.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  result.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

ProofResult verify_identity(const std::string& name) { return verify_identity(find_identity(name)); }

std::pair<Rational, Rational> evaluate_identity(const std::string& name,
                                                const std::map<char, Rational>& at) {
  Env<Rational> env{0, 0, 0, 0, 0, 0, 0};
  for (const auto& [v, value] : at) slot(env, var_from_name(v)) = value;
  return find_identity(name).numeric(env);
}

nlohmann::ordered_json proof_ledger_json(const std::vector<ProofResult>& results) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    const Identity& id = find_identity(r.name);
    nlohmann::ordered_json entry = {{"name", r.name},
                            {"statement", r.statement},
                            {"domain", id.domain},
                            {"derived", id.derived},
                            {"variables", r.variables},
                            {"degree", r.degree},
                            {"exact", r.exact},
                            {"samples_total", r.samples_total},
                            {"samples_ok", r.samples_ok},
                            {"samples_skipped", r.samples_skipped},
                            {"pass", r.pass()},
                            {"wall_ms", r.wall_ms}};
    if (!r.exact) entry["residual"] = r.residual;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace trigrid::sym
