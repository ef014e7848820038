#pragma once

// Named rational-function identities about the factor functions and the
// reduced factor grid. Each identity is one formula template instantiated
// twice: over RatFn for an exact proof (lhs - rhs must cancel to the zero
// function) and over Rational for an independent check at integer sample
// points.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "trigrid/symbolic/ratfn.hpp"

namespace trigrid::sym {

template <class F>
struct Env {
  F c, r, d, s, i, m, h;
};

struct Identity {
  std::string name;
  std::string statement;
  std::string domain;  // parity substitution or range note; may be empty
  bool derived = false;  // an extension beyond the core catalog
  std::vector<Var> vars;
  std::function<std::pair<RatFn, RatFn>(const Env<RatFn>&)> symbolic;
  std::function<std::pair<Rational, Rational>(const Env<Rational>&)> numeric;
};

struct ProofResult {
  std::string name;
  std::string statement;
  int variables = 0;
  int degree = 0;  // max(numerator, denominator) total degree of the left side
  bool exact = false;
  std::string residual;  // nonzero difference, when the exact check fails
  int samples_total = 0;
  int samples_ok = 0;
  int samples_skipped = 0;  // points where some denominator vanishes
  double wall_ms = 0;

  bool samples_pass() const { return samples_ok + samples_skipped == samples_total && samples_ok > 0; }
  bool pass() const { return exact && samples_pass(); }
};

/// Sample values used for every variable: 20, 40, ..., 200.
const std::vector<long>& sample_values();

const std::vector<Identity>& identity_catalog();

/// Throws std::out_of_range for an unknown name.
const Identity& find_identity(const std::string& name);

ProofResult verify_identity(const Identity& id);
ProofResult verify_identity(const std::string& name);

/// Both sides at a concrete point; variables not given are 0.
std::pair<Rational, Rational> evaluate_identity(const std::string& name,
                                                const std::map<char, Rational>& at);

nlohmann::ordered_json proof_ledger_json(const std::vector<ProofResult>& results);

}  // namespace trigrid::sym
