#pragma once

// JSON documents for grids and reduction traces.
//
//   {"n": 3, "mode": "exact"|"float", "precision_bits": 256 (float only),
//    "triangles": [{"r":1,"d":1,"L":"1","R":"1","B":"1"}, ...]}
//
// Triangles are written sorted by (r, d). Exact labels are "p/q" or "p";
// float labels are decimal strings with enough digits to read back the same
// binary value.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "trigrid/grid.hpp"
#include "trigrid/reduction.hpp"

namespace trigrid {

using AnyGrid = std::variant<TriGrid<Rational>, TriGrid<BigFloat>>;

class GridFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

nlohmann::ordered_json grid_to_json(const TriGrid<Rational>& g);
nlohmann::ordered_json grid_to_json(const TriGrid<BigFloat>& g);
nlohmann::ordered_json grid_to_json(const AnyGrid& g);

/// Throws GridFormatError for structural problems and std::invalid_argument
/// (from TriGrid) for nonpositive labels.
AnyGrid grid_from_json(const nlohmann::ordered_json& doc);

template <class S>
nlohmann::ordered_json trace_to_json(const ReductionTrace<S>& trace) {
  nlohmann::ordered_json grids = nlohmann::ordered_json::array();
  for (const auto& g : trace.grids) grids.push_back(grid_to_json(g));
  return grids;
}

/// Columns m, top, bottom_left, bottom_right.
template <class S>
void write_tails_csv(std::ostream& os, const std::vector<TailRecord<S>>& tails);

extern template void write_tails_csv(std::ostream&, const std::vector<TailRecord<Rational>>&);
extern template void write_tails_csv(std::ostream&, const std::vector<TailRecord<BigFloat>>&);

}  // namespace trigrid
