#pragma once

// Numeric evidence tables for the two limiting-behavior conjectures.
//
// table1: top tails t_1(n,i), i = 1..rows, against (1/i) * 1/(2e).
// table2: twelve selected edge ratios of T_1(n,c) against their edge factors,
//         plus the full conformance report of T_1(n,c).
// error = predicted/observed - 1, deviation = observed/predicted - 1.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trigrid/conformance.hpp"
#include "trigrid/scalar.hpp"

namespace trigrid {

enum class Mode { Exact, Float };

struct Table1Row {
  int i = 0;
  std::optional<Rational> exact;  // exact-mode tail
  BigFloat actual;
  BigFloat conjectured;
  BigFloat error;
  BigFloat deviation;
};

/// Float mode reduces T_1(n) at `precision_bits`; exact mode reduces exactly
/// and converts for the comparison columns. Requires 1 <= rows <= n.
std::vector<Table1Row> table1(int n, int rows, Mode mode, unsigned precision_bits);

/// Table rows from an already computed trace of top tails (order i = n..1).
std::vector<Table1Row> table1_from_tails(const std::vector<BigFloat>& tails, int rows);

struct RatioSpec {
  Coord num;
  int num_edge;
  Coord den;
  int den_edge;
  std::string factor;  // e.g. "r21(10,4,1)"
  Rational predicted;
};

/// The twelve reference ratios for a c-grid (rows not fitting
/// in the grid are dropped).
std::vector<RatioSpec> table2_ratios(int c);

struct Table2Row {
  RatioSpec spec;
  BigFloat observed;
  BigFloat error;
  BigFloat deviation;
};

struct Table2Result {
  int n = 0;
  int c = 0;
  std::vector<Table2Row> rows;
  ConformanceReport<BigFloat> report;
};

/// Reduces T_1(n) to T_1(n,c) in float mode. Throws for c >= n or c < 1.
Table2Result table2(int n, int c, unsigned precision_bits);

/// Table rows for an already reduced grid T_1(n,c) (c = g.n()).
Table2Result table2_from_grid(const TriGrid<BigFloat>& g, int n);

/// Formats a value with `digits` significant digits (default 10).
std::string display(const BigFloat& x, int digits = 10);

/// "<r,d,e>/<r',d',e'>"
std::string ratio_label(const RatioSpec& spec);

void write_table1_csv(std::ostream& os, const std::vector<Table1Row>& rows);
void write_table2_csv(std::ostream& os, const Table2Result& result);

}  // namespace trigrid
