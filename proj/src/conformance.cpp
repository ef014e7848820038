#include "trigrid/conformance.hpp"

#include <ostream>

#include "trigrid/csv.hpp"

namespace trigrid {

const char* factor_kind_name(FactorKind kind) {
  switch (kind) {
    case FactorKind::R21: return "r21";
    case FactorKind::R31: return "r31";
    case FactorKind::X: return "x";
    case FactorKind::Y: return "y";
  }
  return "?";
}

template <class S>
void write_conformance_csv(std::ostream& os, const ConformanceReport<S>& report) {
  CsvWriter csv(os);
  csv.row({"r", "d", "kind", "observed", "predicted", "error"});
  for (const auto& rec : report.records) {
    csv.row({std::to_string(rec.r), std::to_string(rec.d), factor_kind_name(rec.kind),
             rec.observed.str(), rec.predicted.str(), rec.error.str()});
  }
}

template void write_conformance_csv(std::ostream&, const ConformanceReport<Rational>&);
template void write_conformance_csv(std::ostream&, const ConformanceReport<BigFloat>&);

}  // namespace trigrid
