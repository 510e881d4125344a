#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "ffla/cli/app.hpp"

using namespace ffla;
using namespace ffla::cli;

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ffla_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& body) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }

  fs::path dir_;
};

}  // namespace

TEST(CliConfig, FieldSpecs) {
  EXPECT_EQ(parse_field_spec("7").p, 7U);
  const FieldSpec s = parse_field_spec("3^5");
  EXPECT_EQ(s.p, 3U);
  EXPECT_EQ(s.k, 5U);
  EXPECT_THROW(parse_field_spec("15"), ConfigError);
  EXPECT_THROW(parse_field_spec("3^0"), ConfigError);
  EXPECT_THROW(parse_field_spec("abc"), ConfigError);
}

TEST(CliConfig, AutoRouteExamples) {
  const std::uint64_t gib = std::uint64_t{1} << 30;
  EXPECT_EQ(auto_route({100, 100, 5000}, gib).route, Route::Dense);
  EXPECT_EQ(auto_route({100000, 100000, 1000000}, gib).route, Route::Blackbox);
  EXPECT_EQ(auto_route({500, 500, 7500}, gib).route, Route::Hybrid);
  EXPECT_EQ(auto_route({200, 200, 10}, gib).route, Route::Dense);
}

TEST(CliConfig, Fallbacks) {
  EXPECT_EQ(fallback_route(Route::Hybrid, {Route::Dense, Route::Sparse}), Route::Sparse);
  EXPECT_EQ(fallback_route(Route::Blackbox, {Route::Dense}), Route::Dense);
  EXPECT_EQ(fallback_route(Route::Dense, {Route::Dense}), Route::Dense);
}

TEST_F(CliFiles, RankAndDetAcrossRoutes) {
  const std::string a = file("a.txt", "3 3\n1 2 3\n4 5 6\n7 8 10\n");
  const std::string s = file("a.sms", "3 3 M\n1 1 1\n1 2 2\n1 3 3\n2 1 4\n2 2 5\n2 3 6\n3 1 7\n3 2 8\n3 3 10\n0 0 0\n");
  for (std::string route : {"dense", "sparse", "hybrid", "blackbox"}) {
    for (const std::string& in : {a, s}) {
      const CliRun r = run({"rank", "--algo", route, in});
      ASSERT_EQ(r.code, 0) << r.err;
      EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "3") << route;
      const CliRun d = run({"det", "--field", "2147483647", "--algo", route, in});
      ASSERT_EQ(d.code, 0) << d.err;
      EXPECT_EQ(d.out.substr(0, d.out.find('\n')), "2147483644") << route;
    }
  }
}

TEST_F(CliFiles, JsonShapeAndDeterminism) {
  const std::string a = file("a.txt", "2 2\n1 2\n3 4\n");
  const CliRun r1 = run({"det", "--out", "json", "--field", "5", a});
  const CliRun r2 = run({"det", "--out", "json", "--field", "5", a});
  ASSERT_EQ(r1.code, 0);
  EXPECT_EQ(r1.out, r2.out);
  const Json j = Json::parse(r1.out);
  EXPECT_EQ(j["command"], "det");
  EXPECT_EQ(j["field"], "5");
  EXPECT_EQ(j["result"], 3);
  EXPECT_TRUE(j["timings"].is_null());
  const Json t = Json::parse(run({"det", "--out", "json", "--timings", "--field", "5", a}).out);
  EXPECT_FALSE(t["timings"].is_null());
}

TEST_F(CliFiles, MulAndEchelon) {
  const std::string a = file("a.txt", "2 2\n1 2\n3 4\n");
  const std::string b = file("b.txt", "2 2\n1 0\n1 1\n");
  for (std::string kernel : {"classic", "fgemm", "strassen"}) {
    const CliRun r = run({"mul", "--field", "5", "--kernel", kernel, a, b});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "2 2\n3 2\n2 4\n") << kernel;
  }
  const std::string z = file("z.txt", "2 2\n0 1\n0 0\n");
  const Json e = Json::parse(run({"rref", "--out", "json", z}).out);
  EXPECT_EQ(e["result"]["rank"], 1);
  EXPECT_EQ(e["result"]["pivot_cols"], Json::array({1}));
}

TEST_F(CliFiles, SolveRoutesAgreeOnValidity) {
  const std::string a = file("a.txt", "3 3\n2 0 1\n0 3 0\n1 0 4\n");
  const std::string b = file("b.txt", "3 1\n1\n2\n3\n");
  for (std::string route : {"dense", "sparse", "blackbox"}) {
    const CliRun r = run({"solve", "--out", "json", "--algo", route, a, b});
    ASSERT_EQ(r.code, 0) << route << r.err << r.out;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["result"]["status"], "solved");
  }
  const std::string s = file("s.txt", "2 2\n1 2\n2 4\n");
  const std::string c = file("c.txt", "1\n1\n");
  const CliRun bad = run({"solve", "--out", "json", "--algo", "dense", s, c});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(Json::parse(bad.out)["result"]["status"], "inconsistent");
}

TEST_F(CliFiles, PolynomialCommands) {
  const std::string a = file("a.txt", "3 3\n0 1 0\n0 0 1\n0 0 0\n");
  const Json c = Json::parse(run({"charpoly", "--out", "json", a}).out);
  EXPECT_EQ(c["result"]["coefficients"], Json::array({0, 0, 0, 1}));
  const Json m = Json::parse(run({"minpoly", "--out", "json", "--algo", "blackbox", a}).out);
  EXPECT_EQ(m["result"]["coefficients"], Json::array({0, 0, 0, 1}));
  EXPECT_TRUE(m.contains("probability_report"));
}

TEST_F(CliFiles, ErrorsAndExitCodes) {
  const std::string bad = file("bad.sms", "2 2 M\n1 1 q\n0 0 0\n");
  const CliRun p = run({"rank", "--out", "json", bad});
  EXPECT_EQ(p.code, 2);
  const Json j = Json::parse(p.out);
  EXPECT_EQ(j["error"]["kind"], "parse");
  EXPECT_EQ(j["error"]["line"], 2);
  EXPECT_EQ(run({"rank", "--field", "12", bad}).code, 2);
  EXPECT_EQ(run({"rank", "--no-such-flag", bad}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  const std::string rect = file("r.txt", "2 3\n1 2 3\n4 5 6\n");
  EXPECT_EQ(run({"det", rect}).code, 2);
  EXPECT_EQ(run({"charpoly", "--algo", "blackbox", rect}).code, 2);
}

TEST(CliBench, MulCountsAndSelftest) {
  const CliRun r = run({"bench", "mul", "--out", "json", "--n", "128", "--strassen-threshold", "32", "--levels", "0,1,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  const auto& rows = j["result"]["levels"];
  ASSERT_EQ(rows.size(), 3U);
  for (const auto& row : rows) {
    EXPECT_EQ(row["base_multiplications"], row["expected_base_multiplications"]);
    EXPECT_TRUE(row["agrees_with_classic"].get<bool>());
  }
  EXPECT_EQ(rows[2]["base_products"], 49);
  const CliRun s = run({"selftest", "--slice", "3"});
  EXPECT_EQ(s.code, 0) << s.out;
}

#ifdef FFLA_CLI_PATH
TEST(CliBinary, ExitCodesThroughTheShell) {
  const std::string bin = FFLA_CLI_PATH;
  auto code = [&](const std::string& args) {
    const int st = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  };
  EXPECT_EQ(code("bench mul --n 64 --strassen-threshold 16"), 0);
  EXPECT_EQ(code("rank --bogus"), 2);
}
#endif
