#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "mconv/convolution.hpp"
#include "mconv/error.hpp"
#include "mconv_cli/cli.hpp"
#include "mconv_cli/fixtures.hpp"
#include "mconv_cli/tuple_file.hpp"
#include "support.hpp"

using namespace mconv;
using mconv::cli::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "mconv_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(TupleFile, RoundTripFixtures) {
  for (const auto& f : cli::fixtures()) {
    if (f.kind != "tuple") continue;
    const auto t = cli::fixture_tuple(f.name);
    const auto back = cli::parse_tuple(cli::format_tuple(t));
    EXPECT_EQ(back, t) << f.name;
    EXPECT_EQ(cli::format_tuple(back), cli::format_tuple(t));
  }
}

TEST(TupleFile, RoundTripRandom) {
  auto g = test::rng(50);
  const std::vector<Field> fields{Field::rational(), Field::cyclotomic(5), Field::finite(7), Field::finite(11, 2),
                                  Field::finite_quadratic(5, 2, 1)};
  for (const auto& f : fields)
    for (int it = 0; it < 4; ++it) {
      auto t = test::random_tuple(g, f, 1 + it % 3, 2 + it % 2);
      if (it % 2) {
        const Points pool{mpq_class(-1, 2), 3, mpq_class(7, 3)};
        t = t.with_points(Points(pool.begin(), pool.begin() + static_cast<long>(t.r())));
      }
      const auto path = temp_path("rt.json").string();
      cli::save_tuple_file(path, t);
      EXPECT_EQ(cli::load_tuple_file(path), t) << f.to_string();
    }
}

TEST(TupleFile, FixturesAreValidTuples) {
  EXPECT_TRUE(equivalent(cli::fixture_tuple("V"), test::printed_V()));
  EXPECT_EQ(cli::fixture_tuple("LstarL"), test::printed_LstarL());
  EXPECT_EQ(cli::fixture_tuple("L").dim(), 1u);
  EXPECT_EQ(cli::fixture_tuple("Lm1").r(), 1u);
  EXPECT_THROW(cli::fixture("nope"), Error);
  EXPECT_THROW(cli::fixture_tuple("counts"), Error);
}

TEST(TupleFile, Rejections) {
  EXPECT_THROW(cli::parse_tuple("{"), Error);
  EXPECT_THROW(cli::parse_tuple(R"({"field": "rational", "dimension": 1, "matrices": [[["2"]], [["2"]]]})"), Error);
  EXPECT_THROW(cli::parse_tuple(R"({"field": "bogus", "dimension": 1, "matrices": [[["1"]]]})"), Error);
  EXPECT_THROW(cli::parse_tuple(R"({"field": "rational", "dimension": 2, "matrices": [[["1"]]]})"), Error);
  EXPECT_THROW(cli::load_tuple_file("/nonexistent/dir/t.json"), Error);
  const auto t = cli::parse_tuple(
      R"({"field": {"kind": "finite", "p": 5, "k": 1}, "dimension": 1, "matrices": [[["2"]], [["3"]]]})");
  EXPECT_EQ(t.field(), Field::finite(5));
}

TEST(Cli, K3Commands) {
  auto r = run({"k3", "trace", "--q", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-3\n");
  r = run({"k3", "count", "--q", "29"});
  EXPECT_EQ(r.out, "891\n");
  r = run({"--json", "k3", "trace", "--q", "121"});
  EXPECT_EQ(json::parse(r.out)["trace"], "75");
  r = run({"k3", "frob", "--q", "29"});
  EXPECT_NE(r.out.find("(25+sqrt(-216))/29"), std::string::npos);
  r = run({"k3", "nsdet"});
  EXPECT_EQ(r.out, "8192*x^2 + 24576*x + 16384\n");
  r = run({"k3", "count", "--q", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("SmallPrime"), std::string::npos);
}

TEST(Cli, JsonAgreesWithText) {
  const auto text = run({"primitivity", "--tuple", "fixture:V", "--mod", "11"});
  const auto js = run({"--json", "primitivity", "--tuple", "fixture:V", "--mod", "11"});
  ASSERT_EQ(text.code, 0);
  const auto j = json::parse(js.out);
  EXPECT_EQ(text.out, "n=3 m=6 x=3 b=" + std::to_string(j["b"].get<int>()) + " bound=3\nprimitive\n");
  EXPECT_EQ(j["bound"], 3);
  EXPECT_EQ(j["primitive"], true);

  const auto g = run({"--json", "group", "--tuple", "fixture:V", "--mod", "11"});
  const auto gj = json::parse(g.out);
  EXPECT_EQ(gj["order"], 2640);
  EXPECT_EQ(gj["recognized"], "O3(F_11)");
  EXPECT_NE(run({"group", "--tuple", "fixture:V", "--mod", "11"}).out.find("order 2640"), std::string::npos);
}

TEST(Cli, ConvolveAndCompare) {
  const auto out = temp_path("ll.json").string();
  auto r = run({"convolve", "--left", "fixture:L", "--right", "fixture:L", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  r = run({"equiv", out, "fixture:LstarL"});
  EXPECT_EQ(r.out, "equivalent\n");
  r = run({"rank", "--left", "fixture:L", "--right", "fixture:L"});
  EXPECT_EQ(r.out.rfind("rank 2", 0), 0u);
  const auto v = temp_path("v.json").string();
  ASSERT_EQ(run({"mcl", "--tuple", out, "--lambda", "-1", "--out", v}).code, 0);
  EXPECT_EQ(run({"equiv", v, "fixture:V"}).out, "equivalent\n");
  EXPECT_EQ(run({"equiv", "fixture:L", "fixture:LstarL"}).out, "not equivalent\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"braid", "--tuple", "fixture:L", "--word", "b3"}).code, 2);
  EXPECT_EQ(run({"braid", "--tuple", "fixture:L", "--word", "x1"}).code, 2);
  EXPECT_EQ(run({"mcl", "--tuple", "fixture:L", "--lambda", "1"}).code, 1);
  EXPECT_EQ(run({"reduce", "--tuple", "fixture:L", "--mod", "9"}).code, 1);
  EXPECT_EQ(run({"k3", "trace", "--q", "5", "--z", "abc"}).code, 2);
  EXPECT_EQ(run({"equiv", "fixture:L"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, BraidAndFixtures) {
  auto r = run({"--json", "braid", "--tuple", "fixture:V", "--word", "b1 b2^-1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto t = cli::tuple_from_json(json::parse(r.out)["tuple"]);
  EXPECT_EQ(t.dim(), 3u);
  r = run({"fixtures", "list"});
  EXPECT_NE(r.out.find("alpha (table)"), std::string::npos);
  r = run({"fixtures", "dump", "alpha"});
  EXPECT_EQ(json::parse(r.out)["u"][7], 25);
  r = run({"fixtures", "dump", "counts"});
  EXPECT_EQ(json::parse(r.out)["N"][0], 27);
}

TEST(Cli, DemoAndPredictions) {
  auto r = run({"--json", "demo", "sl", "--m", "3", "--r", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["rank"], 9);
  r = run({"predict", "--tuple", "fixture:L", "--lambda", "-1"});
  EXPECT_EQ(r.out, "inf: J(-1,2)\n");
}
