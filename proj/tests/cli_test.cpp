#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "ptchain/cli.hpp"
#include "ptchain/io.hpp"

using namespace ptchain;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  io::Json json() const { return io::Json::parse(out); }
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ptchain_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = (dir_ / name).string();
    io::write_text_file(p, text);
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

io::Json strip_time(io::Json j) {
  j.erase("wall_time_ms");
  return j;
}

std::string strip_time_column(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + '\n';
  return out;
}

}  // namespace

TEST(Sha256, KnownDigest) {
  EXPECT_EQ(cli::sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_F(CliTest, ValidateClosedAndOpenTriples) {
  const auto closed = write("closed.json", R"({"n":3,"e1":[[0,1],[1,2],[0,2]],"e2":[]})");
  const auto ok = run({"validate", closed});
  EXPECT_EQ(ok.code, 0);
  EXPECT_TRUE(ok.json()["report"]["ok"].get<bool>());
  EXPECT_EQ(ok.json()["input_digest"].get<std::string>().rfind("sha256:", 0), 0u);

  const auto open = write("open.json", R"({"n":3,"e1":[[0,1]],"e2":[[1,2]]})");
  const auto bad = run({"validate", open});
  EXPECT_EQ(bad.code, 1);
  const auto v = bad.json()["report"]["violations"];
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0]["rule"], "PSEUDO_TRANS");
  EXPECT_EQ(v[0]["witness"], (io::Json{0, 1, 2}));
}

TEST_F(CliTest, ValidateStrongAndStructure) {
  const auto path = write("e1path.json", R"({"n":3,"e1":[[0,1],[1,2]],"e2":[[0,2]]})");
  EXPECT_EQ(run({"validate", path}).code, 0);
  const auto strong = run({"validate", path, "--strong"});
  EXPECT_EQ(strong.code, 1);
  EXPECT_EQ(strong.json()["report"]["violations"][0]["rule"], "E1_TRANSITIVE");

  const auto cyc = write("cycle.json", R"({"n":2,"e1":[],"e2":[[0,1],[1,0]]})");
  const auto c = run({"validate", cyc});
  EXPECT_EQ(c.code, 1);
  EXPECT_FALSE(c.json()["report"]["ok"].get<bool>());
}

TEST_F(CliTest, ValidateGeneratedChords) {
  const auto inst = path("chords.json");
  ASSERT_EQ(run({"gen", "--kind", "chords", "--n", "15", "--seed", "4", "--out", inst}).code, 0);
  EXPECT_EQ(run({"validate", inst, "--strong"}).code, 0);
}

TEST_F(CliTest, ChainExamples) {
  const auto edge = write("edge.json", R"({"n":2,"weights":[3,4],"e1":[[0,1]],"e2":[]})");
  const auto dp = run({"chain", edge, "--algo", "dp"});
  ASSERT_EQ(dp.code, 0) << dp.err;
  EXPECT_EQ(dp.json()["result"]["value"], 7);
  EXPECT_EQ(dp.json()["result"]["chain"], (io::Json{0, 1}));
  EXPECT_EQ(dp.json()["command"], "chain --algo dp");

  const auto poset = write("poset.json", R"({"n":3,"e1":[[0,1],[1,2],[0,2]],"e2":[]})");
  const auto tr = run({"chain", poset, "--algo", "transition"});
  ASSERT_EQ(tr.code, 0) << tr.err;
  EXPECT_EQ(tr.json()["result"]["value"], 3);
  EXPECT_EQ(tr.json()["result"]["omega_g2"], 1);
  EXPECT_TRUE(tr.json()["counters"].contains("adjacency_checks"));
}

TEST_F(CliTest, BruteAndDpAgreeOnGeneratedChords) {
  for (int seed = 1; seed <= 50; ++seed) {
    const auto inst = path("c.json");
    ASSERT_EQ(run({"gen", "--kind", "chords", "--n", std::to_string(1 + seed % 12), "--seed",
                   std::to_string(seed), "--out", inst})
                  .code,
              0);
    const auto a = run({"chain", inst, "--algo", "brute"});
    const auto b = run({"chain", inst, "--algo", "dp"});
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(b.code, 0);
    EXPECT_EQ(a.json()["result"]["value"], b.json()["result"]["value"]) << "seed " << seed;
  }
}

TEST_F(CliTest, ChainExitCodes) {
  const auto open = write("open.json", R"({"n":3,"e1":[[0,1],[1,2]],"e2":[[0,2]]})");
  const auto r = run({"chain", open, "--algo", "dp"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(io::Json::parse(r.err)["error"], "NOT_STRONG");

  const auto inst = path("rects.json");
  ASSERT_EQ(run({"gen", "--kind", "rects", "--n", "30", "--seed", "2", "--out", inst}).code, 0);
  const auto budget = run({"chain", inst, "--algo", "transition", "--node-budget", "3"});
  EXPECT_EQ(budget.code, 2);
  const auto e = io::Json::parse(budget.err);
  EXPECT_EQ(e["error"], "BUDGET_EXCEEDED");
  EXPECT_GE(e["lower_bound"].get<int>(), 1);

  EXPECT_EQ(run({"chain", path("missing.json")}).code, 1);
  EXPECT_EQ(run({"chain", write("junk.json", "{not json")}).code, 1);
  EXPECT_NE(run({"frobnicate"}).code, 0);
}

TEST_F(CliTest, MisPerKind) {
  const auto chords = write("ch.json", R"({"kind":"chords","items":[[0,5],[1,4],[2,3]]})");
  auto r = run({"mis", chords});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["result"]["size"], 3);
  EXPECT_EQ(r.json()["result"]["method"], "dp");

  const auto rects = write("r.json", R"({"kind":"rects","items":[[0,1,0,1],[2,3,0,1],[4,5,0,1]]})");
  r = run({"mis", rects});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["result"]["mis"], (io::Json{0, 1, 2}));

  const auto acute =
      write("g.json", R"({"kind":"grounded_segments","items":[[0,0,1,3],[2,0,3,3],[4,0,5,3]]})");
  r = run({"mis", acute, "--method", "exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["result"]["size"], 3);

  const auto mixed = write("m.json", R"({"kind":"grounded_segments","items":[[0,0,1,3],[6,0,5,3]]})");
  EXPECT_EQ(run({"mis", mixed, "--method", "exact"}).code, 1);
  r = run({"mis", mixed, "--method", "auto"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["result"]["method"], "half");
  EXPECT_EQ(r.json()["result"]["size"], 1);

  const auto nonstrong = write(
      "ns.json", R"({"kind":"grounded_segments","items":[[0,0,2,20],[1,0,20,2],[10,0,18,1]]})");
  const auto ns = run({"mis", nonstrong, "--method", "exact"});
  EXPECT_EQ(ns.code, 1);
  EXPECT_EQ(io::Json::parse(ns.err)["error"], "NOT_STRONG");

  EXPECT_EQ(run({"mis", write("graph.json", R"({"n":1,"e1":[],"e2":[]})")}).code, 1);
}

TEST_F(CliTest, GenIsDeterministic) {
  const auto a = run({"gen", "--kind", "grounded_segments", "--n", "9", "--seed", "11", "--lean", "mixed"});
  const auto b = run({"gen", "--kind", "grounded_segments", "--n", "9", "--seed", "11", "--lean", "mixed"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.json()["kind"], "grounded_segments");

  const auto f1 = path("one.json"), f2 = path("two.json");
  run({"gen", "--kind", "raw_e2_tournament", "--n", "8", "--seed", "3", "--weight-range", "0,20", "--out", f1});
  run({"gen", "--kind", "raw_e2_tournament", "--n", "8", "--seed", "3", "--weight-range", "0,20", "--out", f2});
  EXPECT_EQ(io::read_text_file(f1), io::read_text_file(f2));

  const auto spec = write("spec.json", R"({"gen":{"kind":"chords","n":9,"seed":11}})");
  EXPECT_EQ(run({"gen", "--spec", spec}).out, run({"gen", "--kind", "chords", "--n", "9", "--seed", "11"}).out);

  EXPECT_EQ(run({"gen", "--kind", "chords", "--n", "-3"}).code, 1);
  EXPECT_EQ(run({"gen", "--kind", "polygons"}).code, 1);
}

TEST_F(CliTest, ResultRecordsAreDeterministic) {
  const auto inst = path("s.json");
  ASSERT_EQ(run({"gen", "--kind", "segments", "--n", "12", "--seed", "5", "--out", inst}).code, 0);
  for (const std::string algo : {"dp", "transition", "brute"}) {
    const auto a = run({"chain", inst, "--algo", algo});
    const auto b = run({"chain", inst, "--algo", algo});
    EXPECT_EQ(a.code, b.code);
    if (a.code == 0) EXPECT_EQ(strip_time(a.json()).dump(), strip_time(b.json()).dump()) << algo;
    else EXPECT_EQ(a.err, b.err);
  }
  EXPECT_EQ(strip_time(run({"mis", inst}).json()).dump(), strip_time(run({"mis", inst}).json()).dump());
}

TEST_F(CliTest, Bench) {
  const auto empty = run({"bench", "--suite", "dp-scaling"});
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(empty.out, "n,m,sum_deg2,inspections,bound,wall_ms\n");

  const auto a = run({"bench", "--suite", "dp-scaling", "--sizes", "50,100,200", "--seed", "7"});
  const auto b = run({"bench", "--suite", "dp-scaling", "--sizes", "50,100,200", "--seed", "7"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(strip_time_column(a.out), strip_time_column(b.out));
  std::istringstream rows(a.out);
  std::string line;
  std::getline(rows, line);
  int count = 0;
  while (std::getline(rows, line)) {
    std::istringstream cells(line);
    std::string cell;
    std::vector<std::uint64_t> v;
    while (std::getline(cells, cell, ',')) v.push_back(std::stoull(cell));
    EXPECT_LE(v[3], v[4]);
    EXPECT_EQ(v[4], 4 * (v[2] + v[0] * v[0]));
    ++count;
  }
  EXPECT_EQ(count, 3);

  const auto t = run({"bench", "--suite", "transition-scaling", "--sizes", "10,20", "--seed", "1"});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(t.out.substr(0, t.out.find('\n')), "n,m,omega_g2,nodes,edges,adjacency_checks,value,wall_ms");
  EXPECT_EQ(run({"bench", "--suite", "nope"}).code, 1);
}

#ifdef PTCHAIN_CLI_PATH
TEST_F(CliTest, BinaryRoundTrip) {
  const auto edge = write("edge.json", R"({"n":2,"weights":[3,4],"e1":[[0,1]],"e2":[]})");
  const std::string cmd = std::string(PTCHAIN_CLI_PATH) + " chain " + edge + " --algo dp";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string text;
  char buf[512];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) text.append(buf, got);
  EXPECT_EQ(pclose(pipe), 0);
  EXPECT_EQ(io::Json::parse(text)["result"]["value"], 7);
}
#endif
