#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

using nlohmann::json;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
  json j() const { return json::parse(out); }
};

Result call(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Result r;
  r.code = tesscensus::cli::run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<long> longs(const json& a) {
  std::vector<long> out;
  for (const auto& x : a) out.push_back(x.get<long>());
  return out;
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
  ~ScopedEnv() { ::unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST(Cli, Catalog) {
  const auto r = call({"catalog"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.j();
  ASSERT_EQ(j.size(), 8u);
  EXPECT_EQ(j[0]["name"], "escher-dual");
  EXPECT_TRUE(j[3].contains("quoted_gf"));
  EXPECT_FALSE(j[0].contains("quoted_gf"));
}

TEST(Cli, CensusJsonAndClosure) {
  const auto r = call({"census", "--config", "4,6,6", "--seed", "face", "--max-gen", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.j();
  EXPECT_EQ(longs(j["counts"]), (std::vector<long>{4, 4, 8, 4, 4}));
  EXPECT_TRUE(j["closed"].get<bool>());
  EXPECT_TRUE(j["exhausted"].get<bool>());
  EXPECT_NE(j["note"].get<std::string>().find("closed"), std::string::npos);
}

TEST(Cli, CensusCsv) {
  const auto r = call({"census", "--config", "6,8,8", "--max-gen", "3", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("generation,count\n0,6\n1,6\n2,12\n3,24\n"), std::string::npos);
}

TEST(Cli, PrimalCensus) {
  const auto r = call({"census", "--config", "6,8,8", "--seed", "center", "--max-gen", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(longs(r.j()["counts"]), (std::vector<long>{1, 6, 24, 66, 192}));
}

TEST(Cli, Series) {
  const auto r = call({"series", "--entry", "escher-dual", "--max-gen", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(longs(r.j()["coefficients"]), (std::vector<long>{6, 6, 12, 24, 30, 54, 84, 132}));
  const auto s = call({"series", "--num", "1", "--den", "1,-1", "--terms", "3"});
  EXPECT_EQ(longs(s.j()["coefficients"]), (std::vector<long>{1, 1, 1}));
  // pole at the origin is an input error
  EXPECT_EQ(call({"series", "--num", "1", "--den", "0,1"}).code, 2);
}

TEST(Cli, FitFromStdin) {
  const auto r = call({"fit"}, "6 6 12 24 30 54 84 132 210 330 528 828 1314 2082 3288 5208 8238 13038 20628 32640");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.j();
  EXPECT_EQ(longs(j["denominator"]), (std::vector<long>{1, 0, -1, -2, -1, 0, 1}));
  EXPECT_EQ(longs(j["numerator"]), (std::vector<long>{6, 6, 6, 6}));
  EXPECT_EQ(j["fitted_from"], 20);
  const auto short_input = call({"fit"}, "6,6,12");
  EXPECT_EQ(short_input.code, 2);
  EXPECT_EQ(json::parse(short_input.err)["error"], "insufficient_data");
}

TEST(Cli, Growth) {
  const auto dual = call({"growth", "--entry", "escher-dual"});
  ASSERT_EQ(dual.code, 0) << dual.err;
  const auto j = dual.j();
  EXPECT_EQ(j["kind"], "exponential");
  EXPECT_NEAR(j["rate"].get<double>(), 1.582, 5e-4);
  EXPECT_EQ(j["zeta_polynomial"], "-2 - 4zeta + zeta^3");
  EXPECT_EQ(longs(j["zeta_coefficients"]), (std::vector<long>{-2, -4, 0, 1}));
  const auto primal = call({"growth", "--entry", "escher-primal"});
  EXPECT_NEAR(primal.j()["rate"].get<double>(), 2.890, 5e-4);
  EXPECT_EQ(call({"growth", "--entry", "euclid-primal"}).j()["kind"], "polynomial_growth");
  EXPECT_EQ(call({"growth", "--num", "1", "--den", "1,2"}).code, 2);
}

TEST(Cli, ToleranceFromEnvironment) {
  {
    ScopedEnv env("TESSCENSUS_TOL", "1e-6");
    const auto r = call({"growth", "--entry", "escher-dual"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_DOUBLE_EQ(r.j()["tolerance"].get<double>(), 1e-6);
    // the flag wins over the environment
    EXPECT_DOUBLE_EQ(call({"growth", "--entry", "escher-dual", "--tol", "1e-4"}).j()["tolerance"].get<double>(), 1e-4);
  }
  {
    ScopedEnv env("TESSCENSUS_TOL", "banana");
    const auto r = call({"growth", "--entry", "escher-dual"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(json::parse(r.err)["error"], "usage");
  }
}

TEST(Cli, Derive) {
  const auto r = call({"derive"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.j();
  EXPECT_EQ(j["classes"].size(), 7u);
  EXPECT_EQ(longs(j["total"]["coefficients"]), (std::vector<long>{6, 6, 12, 24, 30, 54, 84, 132}));
}

TEST(Cli, RenderToFile) {
  const auto path = (std::filesystem::temp_directory_path() / "tesscensus_cli_render.svg").string();
  const auto r = call({"render", "--config", "6,8,8", "--layers", "3", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream f(path);
  const std::string svg((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("<circle"), std::string::npos);
  std::filesystem::remove(path);
  EXPECT_EQ(call({"render", "--config", "4,6,6", "--layers", "3"}).code, 2);
}

TEST(Cli, VerifyPassAndFail) {
  const auto ok = call({"verify", "--entry", "escher-dual", "--max-gen", "7"});
  ASSERT_EQ(ok.code, 0) << ok.err;
  const auto j = ok.j();
  EXPECT_EQ(j["status"], "PASS");
  std::vector<long> census;
  for (const auto& row : j["entries"][0]["rows"]) census.push_back(row["census"].get<long>());
  EXPECT_EQ(census, (std::vector<long>{6, 6, 12, 24, 30, 54, 84, 132}));

  const auto starved = call({"verify", "--entry", "escher-dual", "--max-darts", "3000"});
  EXPECT_EQ(starved.code, 1);
  EXPECT_EQ(starved.j()["status"], "FAIL");
}

TEST(Cli, VerifyWholeCatalog) {
  const auto r = call({"verify"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.j()["entries"].size(), 8u);
}

TEST(Cli, UsageErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"bogus"},
           {"census", "--config", "6,x,8"},
           {"census", "--config", "6,8,8", "--seed", "middle"},
           {"build", "--config", "6,8,8", "--layers", "-3"},
           {"series", "--entry", "nope"},
           {"fit", "/nonexistent/counts.txt"},
       }) {
    const auto r = call(args);
    EXPECT_EQ(r.code, 2) << args[0];
    ASSERT_FALSE(r.err.empty());
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
    const auto e = json::parse(r.err);
    EXPECT_TRUE(e.contains("error"));
    EXPECT_TRUE(e.contains("message"));
  }
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"catalog"}, {"census", "--config", "8,8,8", "--max-gen", "6"}, {"growth", "--entry", "{8,3}"}, {"derive"}}) {
    EXPECT_EQ(call(args).out, call(args).out) << args[0];
  }
}

TEST(Cli, ManualPage) {
  const auto r = call({"--man"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(".TH"), std::string::npos);
  EXPECT_NE(r.out.find("TESSCENSUS_TOL"), std::string::npos);
  EXPECT_NE(r.out.find(R"(\-\-max\-darts)"), std::string::npos);
}
