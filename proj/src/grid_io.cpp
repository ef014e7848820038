#include "trigrid/grid_io.hpp"

#include <ostream>

#include "trigrid/csv.hpp"

namespace trigrid {

using json = nlohmann::ordered_json;

namespace {

template <class S>
json grid_document(const TriGrid<S>& g) {
  json doc;
  doc["n"] = g.n();
  doc["mode"] = ScalarTraits<S>::mode;
  if constexpr (!ScalarTraits<S>::is_exact) doc["precision_bits"] = g.edge(1, 1, 1).precision();
  json triangles = json::array();
  for (int r = 1; r <= g.n(); ++r) {
    for (int d = 1; d <= r; ++d) {
      const auto& t = g.at(r, d);
      triangles.push_back({{"r", r}, {"d", d}, {"L", t.left.str()}, {"R", t.right.str()},
                           {"B", t.base.str()}});
    }
  }
  doc["triangles"] = std::move(triangles);
  return doc;
}

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw GridFormatError(std::string("grid document: missing \"") + key + "\"");
  return *it;
}

int int_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_integer()) {
    throw GridFormatError(std::string("grid document: \"") + key + "\" must be an integer");
  }
  return v.get<int>();
}

std::string label_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_string()) {
    throw GridFormatError(std::string("grid document: label \"") + key + "\" must be a string");
  }
  return v.get<std::string>();
}

template <class Parse>
auto read_grid(const json& doc, int n, Parse parse) {
  using S = decltype(parse(std::string()));
  const json& triangles = field(doc, "triangles");
  if (!triangles.is_array()) throw GridFormatError("grid document: \"triangles\" must be an array");
  if (triangles.size() != triangle_count(n)) {
    throw GridFormatError("grid document: expected " + std::to_string(triangle_count(n)) +
                          " triangles, got " + std::to_string(triangles.size()));
  }
  std::vector<std::optional<Triangle<S>>> cells(triangle_count(n));
  for (const json& t : triangles) {
    if (!t.is_object()) throw GridFormatError("grid document: triangle entries must be objects");
    int r = int_field(t, "r");
    int d = int_field(t, "d");
    if (!(1 <= d && d <= r && r <= n)) {
      throw GridFormatError("grid document: triangle <" + std::to_string(r) + "," +
                            std::to_string(d) + "> outside the grid");
    }
    auto& slot = cells[triangle_index(r, d)];
    if (slot) {
      throw GridFormatError("grid document: duplicate triangle <" + std::to_string(r) + "," +
                            std::to_string(d) + ">");
    }
    try {
      slot = Triangle<S>{parse(label_field(t, "L")), parse(label_field(t, "R")),
                         parse(label_field(t, "B"))};
    } catch (const GridFormatError&) {
      throw;
    } catch (const std::exception& e) {
      throw GridFormatError("grid document: bad label in <" + std::to_string(r) + "," +
                            std::to_string(d) + ">: " + e.what());
    }
  }
  std::vector<Triangle<S>> out;
  out.reserve(cells.size());
  for (auto& c : cells) out.push_back(std::move(*c));
  return TriGrid<S>(n, std::move(out));
}

}  // namespace

json grid_to_json(const TriGrid<Rational>& g) { return grid_document(g); }
json grid_to_json(const TriGrid<BigFloat>& g) { return grid_document(g); }
json grid_to_json(const AnyGrid& g) {
  return std::visit([](const auto& v) { return grid_to_json(v); }, g);
}

AnyGrid grid_from_json(const json& doc) {
  if (!doc.is_object()) throw GridFormatError("grid document must be a JSON object");
  int n = int_field(doc, "n");
  if (n < 1) throw GridFormatError("grid document: n must be >= 1");
  const json& mode = field(doc, "mode");
  if (mode == "exact") {
    return read_grid(doc, n, [](const std::string& s) { return Rational::parse(s); });
  }
  if (mode == "float") {
    int bits = int_field(doc, "precision_bits");
    if (bits < static_cast<int>(BigFloat::kMinPrecision)) {
      throw GridFormatError("grid document: precision_bits must be >= 64");
    }
    auto prec = static_cast<unsigned>(bits);
    return read_grid(doc, n, [prec](const std::string& s) { return BigFloat::parse(s, prec); });
  }
  throw GridFormatError("grid document: mode must be \"exact\" or \"float\"");
}

template <class S>
void write_tails_csv(std::ostream& os, const std::vector<TailRecord<S>>& tails) {
  CsvWriter csv(os);
  csv.row({"m", "top", "bottom_left", "bottom_right"});
  for (const auto& t : tails) {
    csv.row({std::to_string(t.source_rows), t.top.str(), t.bottom_left.str(), t.bottom_right.str()});
  }
}

template void write_tails_csv(std::ostream&, const std::vector<TailRecord<Rational>>&);
template void write_tails_csv(std::ostream&, const std::vector<TailRecord<BigFloat>>&);

}  // namespace trigrid
