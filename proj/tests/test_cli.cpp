#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "trigrid");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = trigrid::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("trigrid_cli_test_" + name);
}

}  // namespace

TEST(Cli, ReduceToOneGrid) {
  auto r = run({"reduce", "--n", "3", "--steps", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["n"], 1);
  EXPECT_EQ(doc["triangles"][0]["L"], "4/7");
  EXPECT_EQ(doc["triangles"][0]["B"], "4/7");
}

TEST(Cli, ReduceFactorGrid) {
  auto r = run({"reduce", "--labels", "factors", "--c", "3", "--steps", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["triangles"][0]["L"], "15/14");
  EXPECT_EQ(doc["triangles"][0]["B"], "45/14");
}

TEST(Cli, TailsCsv) {
  auto r = run({"tails", "--n", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "m,top,bottom_left,bottom_right\r\n3,1/3,1/3,1/3\r\n2,4/21,4/21,4/21\r\n1,4/21,4/21,4/21\r\n");
}

TEST(Cli, Resistance) {
  EXPECT_EQ(run({"resistance", "--n", "3"}).out, "r_3 = 10/7\n");
  EXPECT_EQ(run({"resistance", "--n", "3", "--oracle"}).out, "r_3 = 10/7\n");
  EXPECT_EQ(run({"resistance", "--n", "1"}).out, "r_1 = 2/3\n");
  auto h = run({"resistance", "--n", "2", "--harmonic"});
  EXPECT_NE(h.out.find("EXPLORATORY"), std::string::npos);
}

TEST(Cli, Table1FloatByDefault) {
  auto r = run({"table1", "--n", "20", "--rows", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["mode"], "float");
  EXPECT_EQ(doc["rows"].size(), 3u);
}

TEST(Cli, Table2) {
  auto r = run({"table2", "--n", "14", "--c", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find("\r\n")), "ratio,actual,factor,predicted,error,deviation");
  EXPECT_NE(r.out.find("\"r31(10,1,1)\",19"), std::string::npos);
}

TEST(Cli, VerifySubsets) {
  auto t = run({"verify", "--theorem", "--cmin", "2", "--cmax", "5"});
  EXPECT_EQ(t.code, 0) << t.out << t.err;
  auto i = run({"verify", "--identities", "--only", "A"});
  EXPECT_EQ(i.code, 0) << i.out << i.err;
  auto o = run({"verify", "--oracle", "--nmax", "4"});
  EXPECT_EQ(o.code, 0) << o.out << o.err;
  EXPECT_NE(o.out.find("all checks passed"), std::string::npos);
}

TEST(Cli, Isotropy) {
  auto r = run({"isotropy", "--labels", "factors", "--c", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("isotropic = true"), std::string::npos);
  EXPECT_NE(r.out.find("upper_half_reconstruction = true"), std::string::npos);
}

TEST(Cli, GridFileRoundTrip) {
  auto path = temp_file("grid.json");
  auto w = run({"reduce", "--labels", "factors", "--c", "4", "--steps", "0", "--format", "json",
                "--out", path.string()});
  ASSERT_EQ(w.code, 0) << w.err;
  auto r = run({"resistance", "--grid", path.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  auto direct = run({"resistance", "--labels", "factors", "--c", "4"});
  EXPECT_EQ(r.out, direct.out);
  std::filesystem::remove(path);
}

TEST(Cli, AnisotropicGridNeedsOracle) {
  auto path = temp_file("lopsided.json");
  {
    std::ofstream f(path);
    f << R"({"n":2,"mode":"exact","triangles":[)"
      << R"({"r":1,"d":1,"L":"1","R":"1","B":"1"},)"
      << R"({"r":2,"d":1,"L":"2","R":"1","B":"1"},)"
      << R"({"r":2,"d":2,"L":"1","R":"1","B":"1"}]})";
  }
  auto tails = run({"resistance", "--grid", path.string()});
  EXPECT_EQ(tails.code, 1);
  EXPECT_NE(tails.err.find("isotropic"), std::string::npos);
  auto oracle = run({"resistance", "--grid", path.string(), "--oracle"});
  EXPECT_EQ(oracle.code, 0) << oracle.err;
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"reduce", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"reduce", "--n", "3", "--steps", "3"}).code, 2);
  EXPECT_EQ(run({"table2", "--n", "10", "--c", "10"}).code, 2);
  EXPECT_EQ(run({"reduce", "--n", "3", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"resistance", "--grid", "/nonexistent/grid.json"}).code, 1);
}

TEST(Cli, ExactCeiling) {
  auto r = run({"tails", "--n", "60", "--mode", "exact"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ceiling"), std::string::npos);
}
