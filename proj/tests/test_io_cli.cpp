#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "lefcalc/catalog.hpp"
#include "lefcalc/cli.hpp"
#include "lefcalc/io.hpp"
#include "lefcalc/render.hpp"

using namespace lefcalc;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Run r;
  r.code = cli::run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string parse_error_path(const std::string& doc) {
  try {
    (void)io::parse_ladder(doc);
  } catch (const ParseError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST(Parse, Gr25MatchesCatalog) {
  auto l = io::parse_ladder(R"({"name":"gr25","ambient_rank":10,"right_primitives":[0,0,0,0,2]})");
  EXPECT_TRUE(l.same_shape(catalog_get("gr25").ladder));
}

TEST(Parse, AmbientRankMustBePositive) {
  try {
    (void)io::parse_ladder(R"({"ambient_rank":0,"right_primitives":[1]})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.path(), "/ambient_rank");
    EXPECT_NE(std::string(e.what()).find("ambient_rank must be >= 1"), std::string::npos);
  }
}

TEST(Parse, MirrorsLeftSide) {
  auto l = io::parse_ladder(R"({"name":"a","ambient_rank":5,"right_primitives":[1,0,2]})");
  EXPECT_EQ(l.left, l.right);
}

TEST(Parse, LeftSideListedByIndex) {
  auto l = io::parse_ladder(R"({"name":"c","ambient_rank":6,"right_primitives":[0,0,0,1,1],"left_primitives":[1,1,0,0,0]})");
  EXPECT_TRUE(l.same_shape(catalog_get("clifford_p5").ladder));
}

TEST(Parse, PathAddressedErrors) {
  EXPECT_EQ(parse_error_path("[1,2]"), "");
  EXPECT_EQ(parse_error_path("{not json"), "");
  EXPECT_EQ(parse_error_path(R"({"right_primitives":[1]})"), "/ambient_rank");
  EXPECT_EQ(parse_error_path(R"({"ambient_rank":3,"right_primitives":[1,-1]})"), "/right_primitives/1");
  EXPECT_EQ(parse_error_path(R"({"ambient_rank":3,"right_primitives":[1,"x"]})"), "/right_primitives/1");
  EXPECT_EQ(parse_error_path(R"({"ambient_rank":3,"right_primitives":[1],"colour":1})"), "/colour");
  EXPECT_EQ(parse_error_path(R"({"ambient_rank":3,"right_primitives":[1],"strong":{"right":1}})"), "/strong/right");
  EXPECT_EQ(parse_error_path(R"({"ambient_rank":3,"right_primitives":[1],"blocks":{"right":{"x":[]}}})"),
            "/blocks/right/x");
}

TEST(Parse, InvariantViolationsDelegateToValidation) {
  EXPECT_THROW(io::parse_ladder(R"({"ambient_rank":3,"right_primitives":[1,0]})"), InvalidInput);
  EXPECT_NO_THROW(io::parse_ladder(R"({"ambient_rank":3,"right_primitives":[1,0]})", false));
}

TEST(Serialize, RoundTripIsStable) {
  for (const auto& e : default_catalog()) {
    const auto once = io::serialize_ladder(e.ladder);
    const auto twice = io::serialize_ladder(io::parse_ladder(once));
    EXPECT_EQ(once, twice) << e.name;
  }
  auto l = io::parse_ladder(R"({"ambient_rank":4,"right_primitives":[2,1],"strong":{"left":false}})");
  EXPECT_FALSE(l.strong.left);
  EXPECT_EQ(io::serialize_ladder(io::parse_ladder(io::serialize_ladder(l))), io::serialize_ladder(l));
}

TEST(Render, VeroneseGrid) {
  auto v = catalog_get("veronese_p2").ladder;
  auto text = render_grid(join_primitives(v, v).right_grid);
  for (const char* tag : {"j1:1", "j2:1", "j3:1", "j1 (rank 1)", "j2 (rank 2)", "j3 (rank 1)"})
    EXPECT_NE(text.find(tag), std::string::npos) << tag;
  EXPECT_EQ(text.find("j4"), std::string::npos);
}

TEST(Render, ThreeBySixUnitGrid) {
  auto a = make_symmetric_ladder("a", 4, {1, 1, 1});
  auto b = make_symmetric_ladder("b", 7, {1, 1, 1, 1, 1, 1});
  auto text = render_grid(join_primitives(a, b).right_grid);
  const std::string expected =
      "right grid: rows i1 = 0..2, columns i2 = 0..5\n"
      "     | i2=0 | i2=1 | i2=2 | i2=3 | i2=4 | i2=5 |\n"
      "-----+------+------+------+------+------+------+\n"
      "i1=0 | j1:1 | j2:1 | j3:1 | j4:1 | j5:1 | j6:1 |\n"
      "-----+------+------+------+------+------+------+\n"
      "i1=1 | j2:1 | j3:1 | j4:1 | j5:1 | j6:1 | j7:1 |\n"
      "-----+------+------+------+------+------+------+\n"
      "i1=2 | j3:1 | j4:1 | j5:1 | j6:1 | j7:1 | j8:1 |\n"
      "-----+------+------+------+------+------+------+\n";
  EXPECT_EQ(text.substr(0, expected.size()), expected);
  // every anti-diagonal j1..j8 listed once in the legend
  for (int d = 1; d <= 8; ++d) EXPECT_NE(text.find("\nj" + std::to_string(d) + " (rank"), std::string::npos);
  EXPECT_EQ(text, render_grid(join_primitives(a, b).right_grid));
}

TEST(Render, EmptyGridIsEmptyFrame) {
  PrimitiveGrid g;
  EXPECT_EQ(render_grid(g), "right grid: rows i1 = 0, columns i2 = 0\n+--+\n+--+\n");
}

TEST(Cli, HpdVeronese) {
  auto r = run({"hpd", "@veronese_p2"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto rep = nlohmann::json::parse(r.out);
  EXPECT_EQ(rep["hpd_length"], 5);
  EXPECT_EQ(rep["hpd"]["left_component_ranks"].get<std::vector<Rank>>(), (std::vector<Rank>{2, 2, 2, 2, 1}));
  EXPECT_TRUE(rep["identities"].is_array());
  for (const auto& rec : rep["identities"]) {
    EXPECT_TRUE(rec.contains("name") && rec.contains("lhs") && rec.contains("rhs") && rec.contains("pass"));
  }
}

TEST(Cli, NonlinearGr25) {
  auto r = run({"nonlinear", "@gr25", "@gr25", "-r", "10"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("pure equivalence: no tail components on either side"), std::string::npos);
}

TEST(Cli, ImmoderateIsUsageError) {
  auto r = run({"hpd", "@gr25", "--ambient", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("moderate"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"hpd"}).code, 2);
  EXPECT_EQ(run({"hpd", "@nope"}).code, 2);
  EXPECT_EQ(run({"hpd", "/nonexistent/ladder.json"}).code, 2);
  EXPECT_EQ(run({"join", "@gr25"}).code, 2);
  EXPECT_EQ(run({"hpd", "@gr25", "--json", "--text"}).code, 2);
  EXPECT_EQ(run({"section", "@gr25", "--side", "up", "-s", "2"}).code, 2);
}

TEST(Cli, StdinLadder) {
  auto r = run({"hpd", "-"}, R"({"name":"p","ambient_rank":5,"right_primitives":[0,1]})");
  EXPECT_EQ(r.code, 0) << r.err;
  auto rep = nlohmann::json::parse(r.out);
  EXPECT_EQ(rep["hpd"]["right_primitives"].get<std::vector<Rank>>(), (std::vector<Rank>{0, 0, 1}));
}

TEST(Cli, ValidateReportsViolationsWithExit1) {
  auto bad = run({"validate", "-"}, R"({"name":"x","ambient_rank":6,"right_primitives":[1,1],"left_primitives":[2,1]})");
  EXPECT_EQ(bad.code, 1);
  auto rep = nlohmann::json::parse(bad.out);
  EXPECT_FALSE(rep["valid"].get<bool>());
  EXPECT_FALSE(rep["violations"].empty());
  EXPECT_EQ(run({"validate", "@gr25"}).code, 0);
}

TEST(Cli, EverySubcommandRuns) {
  EXPECT_EQ(run({"join", "@veronese_p2", "@veronese_p2"}).code, 0);
  EXPECT_EQ(run({"check-commute", "@gr25", "@proj_space(5,10)"}).code, 0);
  EXPECT_EQ(run({"check-commute", "--random", "50", "--seed", "3"}).code, 0);
  EXPECT_EQ(run({"check-involution", "@ogr510"}).code, 0);
  EXPECT_EQ(run({"section", "@gr25", "-s", "3"}).code, 0);
  EXPECT_EQ(run({"section", "@gr25", "-s", "3", "--side", "left"}).code, 0);
  EXPECT_EQ(run({"section", "@veronese_p2", "-r", "5"}).code, 0);
  EXPECT_EQ(run({"section", "@veronese_p2", "@veronese_p2", "-r", "9"}).code, 0);
  EXPECT_EQ(run({"iterated", "@veronese_p2", "@veronese_p2", "@veronese_p2", "-r", "6"}).code, 0);
  EXPECT_EQ(run({"project", "@veronese_p2", "--target-rank", "4"}).code, 0);
  EXPECT_EQ(run({"project", "@veronese_p2", "@veronese_p2", "--target-rank", "6"}).code, 0);
  EXPECT_EQ(run({"catalog"}).code, 0);
  EXPECT_EQ(run({"catalog", "@gr25"}).code, 0);
  EXPECT_EQ(run({"render", "@veronese_p2", "@veronese_p2", "--side", "both"}).code, 0);
  EXPECT_EQ(run({"hpd", "@veronese_p2", "--text"}).code, 0);
}

TEST(Cli, RandomCommuteIsSeedDeterministic) {
  auto a = run({"check-commute", "--random", "20", "--seed", "9"});
  auto b = run({"check-commute", "--random", "20", "--seed", "9"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Golden) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases = {
      {{"hpd", "@veronese_p2"}, "hpd_veronese_p2.json"},
      {{"join", "@gr25", "@gr25", "--render"}, "join_gr25_gr25_render.json"},
      {{"nonlinear", "@gr25", "@gr25", "-r", "10"}, "nonlinear_gr25_gr25_r10.json"},
  };
  for (const auto& [args, file] : cases) {
    auto r = run(args);
    EXPECT_EQ(r.code, 0) << file;
    EXPECT_EQ(r.out, read_file(std::string(LEFCALC_GOLDEN_DIR) + "/" + file)) << file;
  }
}
