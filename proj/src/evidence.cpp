#include "trigrid/evidence.hpp"

#include <ostream>

#include "trigrid/csv.hpp"
#include "trigrid/reduction.hpp"

namespace trigrid {

std::vector<Table1Row> table1_from_tails(const std::vector<BigFloat>& tails, int rows) {
  const int n = static_cast<int>(tails.size());
  if (rows < 1 || rows > n) {
    throw std::invalid_argument("table1: rows must lie in 1.." + std::to_string(n));
  }
  const unsigned prec = tails.front().precision();
  BigFloat one(1L, prec);
  BigFloat half_over_e = one / (BigFloat(2L, prec) * e_const(prec));
  std::vector<Table1Row> out;
  for (int i = 1; i <= rows; ++i) {
    const BigFloat& actual = tails[static_cast<std::size_t>(n - i)];
    BigFloat conj = half_over_e / BigFloat(static_cast<long>(i), prec);
    out.push_back({i, std::nullopt, actual, conj, conj / actual - one, actual / conj - one});
  }
  return out;
}

std::vector<Table1Row> table1(int n, int rows, Mode mode, unsigned precision_bits) {
  if (n < 1) throw std::invalid_argument("table1: n must be >= 1");
  if (rows < 1 || rows > n) {
    throw std::invalid_argument("table1: rows must lie in 1.." + std::to_string(n));
  }
  if (mode == Mode::Float) return table1_from_tails(tail_sequence_float(n, precision_bits), rows);
  std::vector<Rational> exact = tail_sequence_exact(n);
  std::vector<BigFloat> tails;
  for (const auto& q : exact) tails.emplace_back(q, precision_bits);
  std::vector<Table1Row> out = table1_from_tails(tails, rows);
  for (auto& row : out) row.exact = exact[static_cast<std::size_t>(n - row.i)];
  return out;
}

std::vector<RatioSpec> table2_ratios(int c) {
  auto cs = std::to_string(c);
  auto arg3 = [&](int r, int d) { return "(" + cs + "," + std::to_string(r) + "," + std::to_string(d) + ")"; };
  std::vector<RatioSpec> all;
  auto r21 = [&](int r, int d) {
    if (d <= r && r <= c) all.push_back({{r, d}, 2, {r, d}, 1, "r21" + arg3(r, d), factor_r21(c, r, d)});
  };
  auto r31 = [&](int r, int d) {
    if (d <= r && r <= c) all.push_back({{r, d}, 3, {r, d}, 1, "r31" + arg3(r, d), factor_r31(c, r, d)});
  };
  auto x = [&](int r) {
    if (2 <= r && r <= c) {
      all.push_back({{r, 1}, 1, {r - 1, 1}, 1, "x(" + cs + "," + std::to_string(r) + ")", factor_x(c, r)});
    }
  };
  auto y = [&](int r, int d) {
    if (2 <= d && d <= r && r <= c) {
      all.push_back({{r, d}, 1, {r, d - 1}, 1,
                     "y(" + std::to_string(r) + "," + std::to_string(d) + ")", factor_y(r, d)});
    }
  };
  r21(4, 1);
  r21(4, 2);
  r21(6, 4);
  r31(1, 1);
  r31(5, 3);
  r31(6, 4);
  x(2);
  x(3);
  x(4);
  y(4, 2);
  y(4, 3);
  y(5, 4);
  return all;
}

Table2Result table2_from_grid(const TriGrid<BigFloat>& grid, int n) {
  const int c = grid.n();
  const unsigned prec = grid.edge(1, 1, 1).precision();
  Table2Result result{n, c, {}, conformance(grid, c)};
  BigFloat one(1L, prec);
  for (auto& spec : table2_ratios(c)) {
    BigFloat observed = grid.edge(spec.num.r, spec.num.d, spec.num_edge) /
                        grid.edge(spec.den.r, spec.den.d, spec.den_edge);
    BigFloat predicted(spec.predicted, prec);
    BigFloat error = predicted / observed - one;
    BigFloat deviation = observed / predicted - one;
    result.rows.push_back({std::move(spec), std::move(observed), std::move(error), std::move(deviation)});
  }
  return result;
}

Table2Result table2(int n, int c, unsigned precision_bits) {
  if (c < 1 || c >= n) {
    throw std::invalid_argument("table2: need 1 <= c < n, got n=" + std::to_string(n) +
                                ", c=" + std::to_string(c));
  }
  auto reduced = reduce_steps(uniform_grid(n, BigFloat(1L, precision_bits)), n - c);
  return table2_from_grid(reduced.first, n);
}

std::string display(const BigFloat& x, int digits) { return x.str(digits); }

std::string ratio_label(const RatioSpec& s) {
  auto edge = [](Coord p, int e) {
    return "<" + std::to_string(p.r) + "," + std::to_string(p.d) + "," + std::to_string(e) + ">";
  };
  return edge(s.num, s.num_edge) + "/" + edge(s.den, s.den_edge);
}

void write_table1_csv(std::ostream& os, const std::vector<Table1Row>& rows) {
  CsvWriter csv(os);
  csv.row({"i", "actual", "exact", "conjectured", "error", "deviation"});
  for (const auto& row : rows) {
    csv.row({std::to_string(row.i), display(row.actual), row.exact ? row.exact->str() : "",
             display(row.conjectured), display(row.error, 4), display(row.deviation, 4)});
  }
}

void write_table2_csv(std::ostream& os, const Table2Result& result) {
  CsvWriter csv(os);
  csv.row({"ratio", "actual", "factor", "predicted", "error", "deviation"});
  for (const auto& row : result.rows) {
    csv.row({ratio_label(row.spec), display(row.observed), row.spec.factor, row.spec.predicted.str(),
             display(row.error, 4), display(row.deviation, 4)});
  }
}

}  // namespace trigrid
