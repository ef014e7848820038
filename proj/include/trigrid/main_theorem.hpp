#pragma once

// Exact check of the closed-form description of the reductions of the
// factor grid T_r(c):
//   tails       t_r(c,1) = c/(2c+1) and t_r(c,i) = t_r(c,1)/i
//   scaling     T_r(c,c-i) = f(c,i) * T_r(c-i)
//   conformance every T_r(c,k) satisfies the edge factors with equality
//   tail form   t_r(c,c-i) = f(c,i) * D(1,1,r31(c-i,1,1))

#include <string>
#include <vector>

#include "trigrid/scalar.hpp"

namespace trigrid {

struct ClauseResult {
  std::string name;
  bool pass = true;
  int checked = 0;
  std::string detail;  // first failure, if any
};

struct MainTheoremReport {
  int c = 0;
  std::vector<ClauseResult> clauses;
  std::vector<Rational> tails;  // t_r(c,k) for k = c..1

  bool pass() const;
};

/// Exact mode only. Throws std::invalid_argument for c < 2.
MainTheoremReport verify_main_theorem(int c);

}  // namespace trigrid
