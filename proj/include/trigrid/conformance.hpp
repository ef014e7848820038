#pragma once

// Comparison of a grid's edge ratios against the closed-form edge factors.
//
// For a grid labeled as a c-grid every triangle contributes
//   r21: <r,d,2>/<r,d,1>        r31: <r,d,3>/<r,d,1>
// plus one neighbour ratio
//   x:   <r,1,1>/<r-1,1,1>  (d = 1, r >= 2)
//   y:   <r,d,1>/<r,d-1,1>  (d >= 2).
// error = predicted/observed - 1 and deviation = observed/predicted - 1.

#include <iosfwd>
#include <string>
#include <vector>

#include "trigrid/factors.hpp"
#include "trigrid/grid.hpp"

namespace trigrid {

enum class FactorKind { R21, R31, X, Y };

const char* factor_kind_name(FactorKind kind);

template <class S>
struct ConformanceRecord {
  int r;
  int d;
  FactorKind kind;
  S observed;
  Rational predicted;
  S error;
  S deviation;
};

template <class S>
struct ConformanceReport {
  int c = 0;
  std::vector<ConformanceRecord<S>> records;
  S worst_error;  // largest |error|
  bool exact = false;  // every error is exactly zero
};

/// Throws std::invalid_argument if g.n() != c.
template <class S>
ConformanceReport<S> conformance(const TriGrid<S>& g, int c) {
  if (g.n() != c) {
    throw std::invalid_argument("conformance: grid has " + std::to_string(g.n()) +
                                " rows but is labeled as a " + std::to_string(c) + "-grid");
  }
  const S& one_like = g.edge(1, 1, 1);
  ConformanceReport<S> report{c, {}, one_like - one_like, true};
  auto add = [&](int r, int d, FactorKind kind, S observed, Rational predicted) {
    S p = lift(predicted, one_like);
    S one = lift(Rational(1), one_like);
    S error = p / observed - one;
    S deviation = observed / p - one;
    if (!error.is_zero()) report.exact = false;
    if (report.worst_error < abs(error)) report.worst_error = abs(error);
    report.records.push_back({r, d, kind, std::move(observed), std::move(predicted),
                              std::move(error), std::move(deviation)});
  };
  for (int r = 1; r <= c; ++r) {
    for (int d = 1; d <= r; ++d) {
      const auto& t = g.at(r, d);
      add(r, d, FactorKind::R21, t.right / t.left, factor_r21(c, r, d));
      add(r, d, FactorKind::R31, t.base / t.left, factor_r31(c, r, d));
      if (d == 1 && r >= 2) {
        add(r, d, FactorKind::X, t.left / g.edge(r - 1, 1, 1), factor_x(c, r));
      } else if (d >= 2) {
        add(r, d, FactorKind::Y, t.left / g.edge(r, d - 1, 1), factor_y(r, d));
      }
    }
  }
  return report;
}

/// CSV with columns r, d, kind, observed, predicted, error.
template <class S>
void write_conformance_csv(std::ostream& os, const ConformanceReport<S>& report);

extern template void write_conformance_csv(std::ostream&, const ConformanceReport<Rational>&);
extern template void write_conformance_csv(std::ostream&, const ConformanceReport<BigFloat>&);

}  // namespace trigrid
