#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "trigrid/conformance.hpp"
#include "trigrid/evidence.hpp"
#include "trigrid/grid_io.hpp"
#include "trigrid/main_theorem.hpp"
#include "trigrid/oracle.hpp"
#include "trigrid/reduction.hpp"
#include "trigrid/symbolic/catalog.hpp"

namespace trigrid::cli {

using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string mode;  // empty: float for the tables, exact elsewhere
  bool float_default = false;
  unsigned prec = BigFloat::kDefaultPrecision;
  std::string labels = "uniform1";
  int n = 0;
  int c = 0;
  int steps = 1;
  int rows = 10;
  int exact_ceiling = 40;
  std::string grid_path;
  std::string out_path;
  std::string format = "csv";
  bool harmonic = false;
  bool trace = false;
  bool use_oracle = false;
  std::string tails_csv;
  std::string conformance_csv;
  std::string pair = "bl-br";

  bool theorem = false;
  bool identities = false;
  bool oracle_check = false;
  int cmin = 2;
  int cmax = 12;
  int nmax = 8;
  std::vector<std::string> only;
};

/// A failed check (exit 1) rather than a crash.
struct CheckFailed {
  std::string message;
};

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

bool float_mode(const Options& o) {
  if (o.mode.empty()) return o.float_default;
  if (o.mode == "float") return true;
  if (o.mode == "exact") return false;
  throw std::invalid_argument("--mode must be exact or float");
}

void check_ceiling(const Options& o, int n) {
  if (!float_mode(o) && n > o.exact_ceiling) {
    throw std::invalid_argument("exact mode is limited to n <= " + std::to_string(o.exact_ceiling) +
                                " (raise with --exact-ceiling, or use --mode float)");
  }
}

AnyGrid load_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read grid file " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw GridFormatError(std::string("grid file is not valid JSON: ") + e.what());
  }
  return grid_from_json(doc);
}

/// Grid chosen by --grid, or --labels with --n (uniform1) / --c (factors).
AnyGrid source_grid(const Options& o) {
  if (!o.grid_path.empty()) return load_grid(o.grid_path);
  int size = 0;
  if (o.labels == "uniform1") {
    size = o.n;
    if (size < 1) throw std::invalid_argument("--labels uniform1 needs --n >= 1");
  } else if (o.labels == "factors") {
    size = o.c ? o.c : o.n;
    if (size < 1) throw std::invalid_argument("--labels factors needs --c >= 1");
  } else {
    throw std::invalid_argument("--labels must be uniform1 or factors");
  }
  check_ceiling(o, size);
  if (o.labels == "uniform1") {
    if (float_mode(o)) return uniform_grid(size, BigFloat(1L, o.prec));
    return uniform_grid(size, Rational(1));
  }
  if (float_mode(o)) return to_float_grid(factor_grid(size), o.prec);
  return factor_grid(size);
}

template <class S>
json tails_json(const std::vector<TailRecord<S>>& tails) {
  json arr = json::array();
  for (const auto& t : tails) {
    arr.push_back({{"m", t.source_rows},
                   {"top", t.top.str()},
                   {"bottom_left", t.bottom_left.str()},
                   {"bottom_right", t.bottom_right.str()}});
  }
  return arr;
}

// --- reduce -----------------------------------------------------------------

int cmd_reduce(const Options& o, std::ostream& out) {
  AnyGrid grid = source_grid(o);
  return std::visit(
      [&](const auto& g) {
        using S = typename std::decay_t<decltype(g)>::Scalar;
        if (o.steps < 0 || o.steps >= g.n()) {
          throw std::invalid_argument("--steps must lie in 0.." + std::to_string(g.n() - 1));
        }
        std::vector<TriGrid<S>> grids{g};
        std::vector<TailRecord<S>> tails;
        for (int k = 0; k < o.steps; ++k) {
          RowReduction<S> step = row_reduce(grids.back());
          tails.push_back(std::move(step.tail));
          grids.push_back(std::move(*step.grid));
        }
        if (!o.tails_csv.empty()) {
          Output csv(o.tails_csv, out);
          write_tails_csv(*csv, tails);
        }
        Output dst(o.out_path, out);
        if (o.trace) {
          *dst << trace_to_json(ReductionTrace<S>{grids, tails}).dump(2) << "\n";
        } else {
          *dst << grid_to_json(grids.back()).dump(2) << "\n";
        }
        return 0;
      },
      grid);
}

// --- tails ------------------------------------------------------------------

int cmd_tails(const Options& o, std::ostream& out) {
  AnyGrid grid = source_grid(o);
  Output dst(o.out_path, out);
  std::visit(
      [&](const auto& g) {
        auto tails = reduce_streaming(g);
        if (o.format == "json") {
          *dst << tails_json(tails).dump(2) << "\n";
        } else {
          write_tails_csv(*dst, tails);
        }
      },
      grid);
  return 0;
}

// --- table1 / table2 --------------------------------------------------------

int cmd_table1(const Options& o, std::ostream& out) {
  int n = o.n ? o.n : 150;
  check_ceiling(o, n);
  auto rows = table1(n, o.rows, float_mode(o) ? Mode::Float : Mode::Exact, o.prec);
  std::string mode = float_mode(o) ? "float" : "exact";
  Output dst(o.out_path, out);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json row = {{"i", r.i},
                  {"actual", display(r.actual)},
                  {"conjectured", display(r.conjectured)},
                  {"error", display(r.error, 4)},
                  {"deviation", display(r.deviation, 4)}};
      if (r.exact) row["exact"] = r.exact->str();
      arr.push_back(std::move(row));
    }
    *dst << json{{"n", n}, {"mode", mode}, {"precision_bits", o.prec}, {"rows", arr}}.dump(2)
         << "\n";
  } else {
    write_table1_csv(*dst, rows);
  }
  return 0;
}

int cmd_table2(const Options& o, std::ostream& out) {
  int n = o.n ? o.n : 150;
  int c = o.c ? o.c : 10;
  if (!float_mode(o)) {
    throw std::invalid_argument("table2 runs in float mode (pass --mode float)");
  }
  Table2Result result = table2(n, c, o.prec);
  if (!o.conformance_csv.empty()) {
    Output csv(o.conformance_csv, out);
    write_conformance_csv(*csv, result.report);
  }
  Output dst(o.out_path, out);
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& r : result.rows) {
      rows.push_back({{"ratio", ratio_label(r.spec)},
                      {"actual", display(r.observed)},
                      {"factor", r.spec.factor},
                      {"predicted", r.spec.predicted.str()},
                      {"error", display(r.error, 4)},
                      {"deviation", display(r.deviation, 4)}});
    }
    *dst << json{{"n", n},
                 {"c", c},
                 {"precision_bits", o.prec},
                 {"rows", rows},
                 {"worst_conformance_error", display(result.report.worst_error, 4)}}
                .dump(2)
         << "\n";
  } else {
    write_table2_csv(*dst, result);
  }
  return 0;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const Options& o, std::ostream& out) {
  bool all = !o.theorem && !o.identities && !o.oracle_check;
  bool ok = true;
  json ledger = json::object();
  std::ostringstream human;

  if (all || o.theorem) {
    if (o.cmin < 2 || o.cmax < o.cmin) throw std::invalid_argument("need 2 <= cmin <= cmax");
    check_ceiling(o, o.cmax);
    json arr = json::array();
    for (int c = o.cmin; c <= o.cmax; ++c) {
      auto t0 = std::chrono::steady_clock::now();
      MainTheoremReport rep = verify_main_theorem(c);
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      ok = ok && rep.pass();
      json clauses = json::array();
      for (const auto& cl : rep.clauses) {
        clauses.push_back({{"name", cl.name}, {"pass", cl.pass}, {"checked", cl.checked}, {"detail", cl.detail}});
      }
      arr.push_back({{"c", c}, {"pass", rep.pass()}, {"wall_ms", ms}, {"clauses", clauses}});
      human << "theorem  c=" << c << "  " << (rep.pass() ? "PASS" : "FAIL") << "  " << ms << " ms\n";
      for (const auto& cl : rep.clauses) {
        if (!cl.pass) human << "    " << cl.name << ": " << cl.detail << "\n";
      }
    }
    ledger["theorem"] = arr;
  }

  if (all || o.identities) {
    std::vector<sym::ProofResult> results;
    for (const auto& id : sym::identity_catalog()) {
      if (!o.only.empty() && std::find(o.only.begin(), o.only.end(), id.name) == o.only.end()) continue;
      results.push_back(sym::verify_identity(id));
      const auto& r = results.back();
      ok = ok && r.pass();
      human << "identity " << r.name << "  " << (r.pass() ? "PASS" : "FAIL") << "  vars=" << r.variables
            << " deg=" << r.degree << " exact=" << (r.exact ? "yes" : "no") << " samples=" << r.samples_ok
            << "/" << r.samples_total << " (skipped " << r.samples_skipped << ")  " << r.wall_ms
            << " ms  " << r.statement << "\n";
    }
    if (!o.only.empty() && results.size() != o.only.size()) {
      throw std::invalid_argument("unknown identity name in --only");
    }
    ledger["identities"] = sym::proof_ledger_json(results);
  }

  if (all || o.oracle_check) {
    if (o.nmax < 1) throw std::invalid_argument("--nmax must be >= 1");
    json arr = json::array();
    for (int n = 1; n <= o.nmax; ++n) {
      for (const char* labels : {"uniform1", "factors"}) {
        TriGrid<Rational> g = std::string(labels) == "uniform1" ? uniform_grid(n, Rational(1)) : factor_grid(n);
        Corners k = corner_vertices(n);
        Rational lap = effective_resistance(build_graph(g), k.bottom_left, k.bottom_right);
        Rational tails = corner_resistance(g);
        bool pass = lap == tails;
        ok = ok && pass;
        arr.push_back({{"n", n}, {"labels", labels}, {"laplacian", lap.str()}, {"tails", tails.str()}, {"pass", pass}});
        human << "oracle   n=" << n << " " << labels << "  " << (pass ? "PASS" : "FAIL") << "  " << lap
              << (pass ? "" : " vs " + tails.str()) << "\n";
      }
    }
    ledger["oracle"] = arr;
  }

  ledger["pass"] = ok;
  Output dst(o.out_path, out);
  if (o.format == "json") {
    *dst << ledger.dump(2) << "\n";
  } else {
    *dst << human.str() << (ok ? "all checks passed\n" : "some checks FAILED\n");
  }
  return ok ? 0 : 1;
}

// --- resistance / isotropy / oracle -----------------------------------------

int cmd_resistance(const Options& o, std::ostream& out) {
  AnyGrid grid = source_grid(o);
  Output dst(o.out_path, out);
  return std::visit(
      [&](const auto& g) {
        using S = typename std::decay_t<decltype(g)>::Scalar;
        json doc = {{"n", g.n()}, {"mode", ScalarTraits<S>::mode}};
        std::string value;
        if (o.use_oracle) {
          if constexpr (ScalarTraits<S>::is_exact) {
            Corners k = corner_vertices(g.n());
            value = effective_resistance(build_graph(g), k.bottom_left, k.bottom_right).str();
            doc["route"] = "laplacian";
          } else {
            throw std::invalid_argument("--oracle needs exact mode");
          }
        } else {
          if (!check_symmetry(g).isotropic()) {
            throw CheckFailed{"grid is not isotropic; the tail formula does not apply (use --oracle)"};
          }
          S r = corner_resistance(g);
          value = r.str();
          doc["route"] = "tails";
          if (o.harmonic) {
            S h = lift(Rational(0), r);
            for (int i = 1; i <= g.n(); ++i) h += lift(Rational(1, i), r);
            S ratio = r / h;
            doc["exploratory_harmonic_ratio"] = ratio.str();
            if constexpr (ScalarTraits<S>::is_exact) doc["exploratory_harmonic_ratio_decimal"] = ratio.to_double();
          }
        }
        doc["resistance"] = value;
        if (o.format == "json") {
          *dst << doc.dump(2) << "\n";
        } else {
          *dst << "r_" << g.n() << " = " << value << "\n";
          if (doc.contains("exploratory_harmonic_ratio")) {
            *dst << "EXPLORATORY r_n / H_n = " << doc["exploratory_harmonic_ratio"].get<std::string>() << "\n";
          }
        }
        return 0;
      },
      grid);
}

int cmd_isotropy(const Options& o, std::ostream& out) {
  AnyGrid grid = source_grid(o);
  Output dst(o.out_path, out);
  return std::visit(
      [&](const auto& g) {
        using S = typename std::decay_t<decltype(g)>::Scalar;
        SymmetryReport<S> rep = check_symmetry(g);
        json doc = {{"n", g.n()},
                    {"vertical", rep.vertical},
                    {"rotational", rep.rotational},
                    {"slide", rep.slide},
                    {"isotropic", rep.isotropic()},
                    {"max_violation", rep.max_violation.str()}};
        bool ok = rep.isotropic() && rep.slide;
        if (ok) {
          std::function<Triangle<S>(Coord)> upper = [&](Coord p) { return g.at(p); };
          bool rebuilt = reconstruct_from_upper_half<S>(g.n(), upper) == g;
          doc["upper_half_triangles"] = upper_half_coords(g.n()).size();
          doc["upper_half_reconstruction"] = rebuilt;
          ok = rebuilt;
        }
        if (o.format == "json") {
          *dst << doc.dump(2) << "\n";
        } else {
          for (auto it = doc.begin(); it != doc.end(); ++it) *dst << it.key() << " = " << it.value().dump() << "\n";
        }
        return ok ? 0 : 1;
      },
      grid);
}

int cmd_oracle(const Options& o, std::ostream& out) {
  Options exact = o;
  exact.mode = "exact";
  AnyGrid grid = source_grid(exact);
  const auto& g = std::get<TriGrid<Rational>>(grid);
  Corners k = corner_vertices(g.n());
  LatticePoint u = k.bottom_left;
  LatticePoint v = k.bottom_right;
  if (o.pair == "apex-bl") {
    u = k.apex;
    v = k.bottom_left;
  } else if (o.pair == "apex-br") {
    u = k.apex;
    v = k.bottom_right;
  } else if (o.pair != "bl-br") {
    throw std::invalid_argument("--pair must be bl-br, apex-bl or apex-br");
  }
  ResistorGraph graph = build_graph(g);
  Rational lap = effective_resistance(graph, u, v);
  json doc = {{"n", g.n()},
              {"pair", o.pair},
              {"vertices", graph.vertices().size()},
              {"edges", graph.edges().size()},
              {"laplacian", lap.str()}};
  bool ok = true;
  if (o.pair == "bl-br") {
    Rational tails = bottom_corner_resistance(g);
    doc["tails"] = tails.str();
    ok = tails == lap;
    doc["match"] = ok;
  }
  Output dst(o.out_path, out);
  if (o.format == "json") {
    *dst << doc.dump(2) << "\n";
  } else {
    for (auto it = doc.begin(); it != doc.end(); ++it) *dst << it.key() << " = " << it.value().dump() << "\n";
  }
  return ok ? 0 : 1;
}

void add_grid_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--labels", o.labels, "uniform1 or factors")->check(CLI::IsMember({"uniform1", "factors"}));
  cmd->add_option("--n", o.n, "rows of the uniform grid")->check(CLI::Range(1, 100000));
  cmd->add_option("--c", o.c, "size of the factor grid")->check(CLI::Range(1, 100000));
  cmd->add_option("--grid", o.grid_path, "read the grid from a JSON document");
}

void add_mode_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--mode", o.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--prec", o.prec, "float precision in bits")->check(CLI::Range(64u, 1u << 20));
  cmd->add_option("--exact-ceiling", o.exact_ceiling, "largest n allowed in exact mode");
}

void add_output_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out_path, "write to this file instead of stdout");
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Row reduction of triangular resistor grids"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto* reduce = app.add_subcommand("reduce", "row-reduce a grid and print the result as JSON");
  add_grid_options(reduce, o);
  add_mode_options(reduce, o);
  add_output_options(reduce, o);
  reduce->add_option("--steps", o.steps, "number of row reductions");
  reduce->add_flag("--trace", o.trace, "print every intermediate grid");
  reduce->add_option("--tails-csv", o.tails_csv, "also write the tails to this CSV file");
  reduce->callback([&] { action = [&] { return cmd_reduce(o, out); }; });

  auto* tails = app.add_subcommand("tails", "reduce to the end and list the tails");
  add_grid_options(tails, o);
  add_mode_options(tails, o);
  add_output_options(tails, o);
  tails->callback([&] { action = [&] { return cmd_tails(o, out); }; });

  auto* t1 = app.add_subcommand("table1", "tails of T_1(n) against (1/i)/(2e)");
  t1->add_option("--n", o.n, "grid size (default 150)")->check(CLI::Range(1, 100000));
  t1->add_option("--rows", o.rows, "number of rows i = 1..rows")->check(CLI::Range(1, 100000));
  add_mode_options(t1, o);
  add_output_options(t1, o);
  t1->callback([&] {
    o.float_default = true;
    action = [&] { return cmd_table1(o, out); }; });

  auto* t2 = app.add_subcommand("table2", "edge ratios of T_1(n,c) against the edge factors");
  t2->add_option("--n", o.n, "starting grid size (default 150)")->check(CLI::Range(2, 100000));
  t2->add_option("--c", o.c, "reduced grid size (default 10)")->check(CLI::Range(1, 100000));
  add_mode_options(t2, o);
  add_output_options(t2, o);
  t2->add_option("--conformance", o.conformance_csv, "write the full conformance report (CSV)");
  t2->callback([&] {
    o.float_default = true;
    action = [&] { return cmd_table2(o, out); }; });

  auto* verify = app.add_subcommand("verify", "theorem, identity and oracle checks");
  verify->add_flag("--theorem", o.theorem, "exact main theorem check over cmin..cmax");
  verify->add_flag("--identities", o.identities, "prove the identity catalog");
  verify->add_flag("--oracle", o.oracle_check, "compare tails with the Laplacian for n <= nmax");
  verify->add_option("--cmin", o.cmin);
  verify->add_option("--cmax", o.cmax);
  verify->add_option("--nmax", o.nmax);
  verify->add_option("--only", o.only, "restrict --identities to these names");
  verify->add_option("--exact-ceiling", o.exact_ceiling, "largest c allowed");
  add_output_options(verify, o);
  verify->callback([&] { action = [&] { return cmd_verify(o, out); }; });

  auto* res = app.add_subcommand("resistance", "corner-to-corner resistance");
  add_grid_options(res, o);
  add_mode_options(res, o);
  add_output_options(res, o);
  res->add_flag("--harmonic", o.harmonic, "also print r_n / H_n (exploratory)");
  res->add_flag("--oracle", o.use_oracle, "use the Laplacian solver (any grid, exact)");
  res->callback([&] { action = [&] { return cmd_resistance(o, out); }; });

  auto* iso = app.add_subcommand("isotropy", "check vertical, rotational and slide symmetry");
  add_grid_options(iso, o);
  add_mode_options(iso, o);
  add_output_options(iso, o);
  iso->callback([&] { action = [&] { return cmd_isotropy(o, out); }; });

  auto* orc = app.add_subcommand("oracle", "effective resistance by exact Laplacian solve");
  add_grid_options(orc, o);
  add_output_options(orc, o);
  orc->add_option("--pair", o.pair, "bl-br, apex-bl or apex-br");
  orc->add_option("--exact-ceiling", o.exact_ceiling, "largest n allowed");
  orc->callback([&] { action = [&] { return cmd_oracle(o, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    return action();
  } catch (const CheckFailed& e) {
    err << "check failed: " << e.message << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace trigrid::cli
