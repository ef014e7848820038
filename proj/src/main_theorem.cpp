#include "trigrid/main_theorem.hpp"

#include "trigrid/conformance.hpp"
#include "trigrid/reduction.hpp"

namespace trigrid {

namespace {

void expect(ClauseResult& clause, bool ok, const std::string& what) {
  ++clause.checked;
  if (!ok && clause.pass) {
    clause.pass = false;
    clause.detail = what;
  }
}

}  // namespace

bool MainTheoremReport::pass() const {
  for (const auto& cl : clauses) {
    if (!cl.pass) return false;
  }
  return true;
}

MainTheoremReport verify_main_theorem(int c) {
  if (c < 2) throw std::invalid_argument("verify_main_theorem: c must be >= 2");
  MainTheoremReport report;
  report.c = c;
  ClauseResult first_tail{"t_r(c,1) = c/(2c+1)"};
  ClauseResult harmonic{"t_r(c,i) = t_r(c,1)/i"};
  ClauseResult scaling{"T_r(c,c-i) = f(c,i) T_r(c-i)"};
  ClauseResult conform{"edge factors exact on every T_r(c,k)"};
  ClauseResult tail_form{"t_r(c,c-i) = f(c,i) D(1,1,r31(c-i,1,1))"};

  std::vector<TailRecord<Rational>> tails = reduce_streaming<Rational>(
      factor_grid(c), [&](const TriGrid<Rational>& g) {
        int k = g.n();
        expect(conform, conformance(g, k).exact, "T_r(" + std::to_string(c) + "," +
                                                     std::to_string(k) + ") not conformant");
        if (k < c) {
          int i = c - k;
          auto ratio = proportionality(g, factor_grid(k));
          expect(scaling, ratio && *ratio == factor_f(c, i),
                 "T_r(" + std::to_string(c) + "," + std::to_string(k) + ") ratio " +
                     (ratio ? ratio->str() : std::string("none")) + " vs f = " +
                     factor_f(c, i).str());
        }
      });

  report.tails = top_tails(tails);
  const Rational& t1 = report.tails.back();
  expect(first_tail, t1 == Rational(c, 2 * c + 1), "t_r(c,1) = " + t1.str());
  for (int i = 1; i <= c; ++i) {
    const Rational& ti = report.tails[static_cast<std::size_t>(c - i)];
    expect(harmonic, ti == t1 / Rational(i), "t_r(c," + std::to_string(i) + ") = " + ti.str());
  }
  for (int i = 1; i <= c - 1; ++i) {
    const Rational& t = report.tails[static_cast<std::size_t>(i)];
    Rational predicted = factor_f(c, i) * delta(Rational(1), Rational(1), factor_r31(c - i, 1, 1));
    expect(tail_form, t == predicted,
           "t_r(c," + std::to_string(c - i) + ") = " + t.str() + " vs " + predicted.str());
  }
  report.clauses = {first_tail, harmonic, scaling, conform, tail_form};
  return report;
}

}  // namespace trigrid
