#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tricolor/cli.hpp"
#include "tricolor/dimacs.hpp"

using namespace tricolor;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tricolor_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const { write_file(path(name), text); }

  int run(std::vector<std::string> args) const {
    args.insert(args.begin(), "tricolor");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    return cli::run(static_cast<int>(argv.size()), argv.data());
  }

  fs::path dir_;
};

const char* kTriangle = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";
const char* kK4 = "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";

}  // namespace

TEST_F(CliTest, GenerateIsDeterministic) {
  std::ostringstream log;
  cli::GenerateConfig c;
  c.n = 100;
  c.edge_prob = 0.5;
  c.seed = 7;
  c.out_prefix = path("a");
  ASSERT_EQ(cli::cmd_generate(c, log), cli::kOk);
  c.out_prefix = path("b");
  ASSERT_EQ(cli::cmd_generate(c, log), cli::kOk);
  for (const char* ext : {".col", ".coloring", ".meta.json"}) {
    EXPECT_EQ(read_file(path("a") + ext), read_file(path("b") + ext)) << ext;
  }
  Graph g = parse_dimacs(read_file(path("a.col")));
  Coloring planted = parse_coloring(read_file(path("a.coloring")), g.order());
  EXPECT_TRUE(is_proper_coloring(g, planted).proper);
  json meta = json::parse(read_file(path("a.meta.json")));
  EXPECT_EQ(meta.at("n"), 100);
  EXPECT_EQ(meta.at("m"), g.num_edges());
}

TEST_F(CliTest, GenerateEdgeless) {
  std::ostringstream log;
  cli::GenerateConfig c;
  c.n = 20;
  c.edge_prob = 0;
  c.out_prefix = path("e");
  ASSERT_EQ(cli::cmd_generate(c, log), cli::kOk);
  EXPECT_EQ(read_file(path("e.col")).substr(0, 13), "p edge 20 0\n");
}

TEST_F(CliTest, GenerateMinDegreeTarget) {
  std::ostringstream log;
  cli::GenerateConfig c;
  c.n = 300;
  c.min_degree = 90;
  c.out_prefix = path("m");
  const int code = cli::cmd_generate(c, log);
  if (code == cli::kOk) {
    EXPECT_GE(json::parse(read_file(path("m.meta.json"))).at("min_degree").get<int>(), 90);
  } else {
    EXPECT_EQ(code, cli::kUsage);
    EXPECT_NE(log.str().find("minimum degree"), std::string::npos);
  }
  c.min_degree = 70;
  ASSERT_EQ(cli::cmd_generate(c, log), cli::kOk);
  EXPECT_GE(json::parse(read_file(path("m.meta.json"))).at("min_degree").get<int>(), 70);
}

TEST_F(CliTest, ColorTriangleAndK4) {
  write("t.col", kTriangle);
  write("k4.col", kK4);
  std::ostringstream out, log;
  cli::ColorConfig c;
  c.input = path("t.col");
  c.output = path("t.coloring");
  ASSERT_EQ(cli::cmd_color(c, out, log), cli::kOk);
  json r = json::parse(out.str());
  EXPECT_EQ(r.at("colors_used"), 3);
  EXPECT_EQ(r.at("proper"), true);
  Coloring col = parse_coloring(read_file(path("t.coloring")), 3);
  EXPECT_TRUE(is_proper_coloring(parse_dimacs(kTriangle), col).proper);

  std::ostringstream out2;
  c.input = path("k4.col");
  c.output.clear();
  EXPECT_EQ(cli::cmd_color(c, out2, log), cli::kNotColorable);
  json w = json::parse(out2.str());
  EXPECT_EQ(w.at("status"), "not_3_colorable");
  EXPECT_EQ(w.at("witness").at("vertices").size(), 3u);
}

TEST_F(CliTest, ExitCodes) {
  write("t.col", kTriangle);
  write("bad.col", "p edge 3 3\ne 1 5\n");
  EXPECT_EQ(run({"color", path("t.col"), "--report", path("r.json")}), cli::kOk);
  EXPECT_EQ(run({"color", path("bad.col"), "--report", path("r.json")}), cli::kIo);
  EXPECT_EQ(run({"color", path("missing.col")}), cli::kIo);
  EXPECT_EQ(run({"color", path("t.col"), "--method", "sdp"}), cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}), cli::kUsage);
  write("k4.col", kK4);
  EXPECT_EQ(run({"color", path("k4.col"), "--report", path("r.json")}), cli::kNotColorable);
}

TEST_F(CliTest, VerifyClaims) {
  write("p3.col", "p edge 3 2\ne 1 2\ne 2 3\n");
  write("one.json", R"({"k": 2, "claims": [{"type": "type1", "vertices": [1, 3]}]})");
  write("empty.json", "[]");
  write("bad.json", R"([{"type": "type0", "pair": [1, 3]}])");
  std::ostringstream out, log;
  cli::VerifyConfig c;
  c.graph = path("p3.col");
  c.claims = path("one.json");
  ASSERT_EQ(cli::cmd_verify(c, out, log), cli::kOk);
  json r = json::parse(out.str());
  ASSERT_EQ(r.at("verdicts").size(), 1u);
  EXPECT_EQ(r.at("verdicts")[0].at("accepted"), true);

  std::ostringstream out2;
  c.claims = path("empty.json");
  ASSERT_EQ(cli::cmd_verify(c, out2, log), cli::kOk);
  EXPECT_TRUE(json::parse(out2.str()).at("verdicts").empty());

  std::ostringstream out3;
  c.claims = path("bad.json");
  EXPECT_EQ(cli::cmd_verify(c, out3, log), cli::kRejected);
}

TEST_F(CliTest, VerifyMonoOnTwelveVertices) {
  // Root 1 adjacent to S = {2..5}; S complete to T = {6..12}; edge 6-7 in T.
  std::ostringstream text;
  std::vector<std::pair<int, int>> e{{6, 7}};
  for (int s = 2; s <= 5; ++s) {
    e.emplace_back(1, s);
    for (int t = 6; t <= 12; ++t) e.emplace_back(s, t);
  }
  text << "p edge 12 " << e.size() << "\n";
  for (auto [a, b] : e) text << "e " << a << ' ' << b << "\n";
  write("g.col", text.str());
  write("claims.json", R"([{"type": "mono", "vertices": [2, 3, 4, 5]},
                           {"type": "mono", "vertices": [2, 6]},
                           {"type": "mono", "vertices": [2, 3], "conditional": [8, 1]},
                           {"type": "multi", "vertices": [6, 7]}])");
  std::ostringstream out, log;
  cli::VerifyConfig c;
  c.graph = path("g.col");
  c.claims = path("claims.json");
  EXPECT_EQ(cli::cmd_verify(c, out, log), cli::kRejected);
  json r = json::parse(out.str());
  EXPECT_EQ(r.at("accepted"), 3);
  EXPECT_EQ(r.at("rejected"), 1);
  EXPECT_EQ(r.at("verdicts")[1].at("accepted"), false);
}

TEST_F(CliTest, BenchRowsAndDeterminism) {
  std::ostringstream log;
  cli::BenchConfig c;
  c.seeds = 5;
  c.csv = path("a.csv");
  c.summary = path("a.json");
  ASSERT_EQ(cli::cmd_bench(c, log), cli::kOk);
  std::istringstream csv(read_file(path("a.csv")));
  std::string header, line;
  std::getline(csv, header);
  std::size_t rows = 0;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 45u);
  EXPECT_EQ(std::count(header.begin(), header.end(), ',') + 1,
            static_cast<std::ptrdiff_t>(cli::bench_columns().size()));
  json s = json::parse(read_file(path("a.json")));
  EXPECT_TRUE(s.contains("ablation"));
  EXPECT_EQ(s.at("rows"), 45);

  c.csv = path("b.csv");
  c.summary = path("b.json");
  c.jobs = 2;
  ASSERT_EQ(cli::cmd_bench(c, log), cli::kOk);
  EXPECT_EQ(read_file(path("a.csv")), read_file(path("b.csv")));
}
