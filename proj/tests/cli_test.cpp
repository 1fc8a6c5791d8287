#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "berge/canonical.hpp"
#include "berge/io.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BERGE_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("berge_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

const char* kK5 = "5 3\n1 2 3\n1 2 4\n1 2 5\n1 3 4\n1 3 5\n1 4 5\n2 3 4\n2 3 5\n2 4 5\n3 4 5\n";

}  // namespace

TEST_F(CliTest, BergeCycleOnCompleteFiveVertexTripleSystem) {
  const auto r = run("berge-cycle --in " + file("k5.hyg", kK5) + " --k 6");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["length"], 5);
  EXPECT_EQ(j["geq_k"], false);
  EXPECT_EQ(j["base"].size(), 5u);
}

TEST_F(CliTest, BoundsTable) {
  const auto r = run("bounds-table --r 3 --k 6");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("C_3(6) = 5/2"), std::string::npos) << r.out;
  const auto csv = run("bounds-table --r 3 --k 6 --n 7 --format csv");
  EXPECT_EQ(csv.out, "k,r,c_r_k,n,bound,floor\n6,3,5/2,6,25/2,12\n6,3,5/2,7,15,15\n");
  const auto sweep = run("bounds-table --r 4 --format csv");
  EXPECT_EQ(sweep.out.rfind("k,r,c_r_k\n5,4,1/3\n6,4,5/4\n7,4,3\n", 0), 0u) << sweep.out;
}

TEST_F(CliTest, GeneratedBlockTreeMeetsTheBoundWithEquality) {
  const auto gen = run("gen-blocktree --k 6 --r 3 --p 2 --out " + path("blocktree_p2.hyg") + " --format text");
  ASSERT_EQ(gen.code, 0);
  const auto r = run("verify-bound --in " + path("blocktree_p2.hyg") + " --k 6");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "equality");
  EXPECT_EQ(j["block_structure"], true);
}

TEST_F(CliTest, GeneratedFilesRoundTrip) {
  for (const std::string attach : {"0:0,0:0", "0:1,1:4", "0:3,1:0"}) {
    ASSERT_EQ(run("gen-blocktree --k 6 --r 3 --p 3 --attach " + attach + " --out " + path("t.hyg")).code, 0);
    const auto json = nlohmann::json::parse(run("gen-blocktree --k 6 --r 3 --p 3 --attach " + attach).out);
    const auto back = berge::read_hyg_file(path("t.hyg"));
    std::istringstream in(json["hyg"].get<std::string>());
    const auto from_json = berge::read_hyg(in);
    EXPECT_EQ(back, from_json);
    EXPECT_EQ(berge::canonical_label(back, 13), berge::canonical_label(from_json, 13));
    EXPECT_EQ(back.size(), 30u);
  }
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run("berge-cycle --in " + file("bad.hyg", "4 3\n1 2\n")).code, 2);
  EXPECT_EQ(run("berge-cycle --in " + path("missing.hyg")).code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("lemma9 --k 4 --r 3").code, 2);
  EXPECT_EQ(run("lemma9 --k 5 --r 3").code, 1);
  EXPECT_EQ(run("lemma9 --k 6 --r 3").code, 0);
  // 13 vertices is beyond the default detector budget.
  EXPECT_EQ(run("berge-path --in " + file("big.hyg", "13 3\n1 2 3\n")).code, 3);
  EXPECT_EQ(run("berge-path --in " + path("big.hyg") + " --max-n 13").code, 0);
  EXPECT_EQ(run("search-max --n 6 --r 3 --k 6 --time-limit 1").code, 3);
}

TEST_F(CliTest, SearchOutputIsIndependentOfJobs) {
  const auto one = run("search-max --n 6 --r 3 --k 6 --no-timing");
  const auto four = run("search-max --n 6 --r 3 --k 6 --no-timing --jobs 4");
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(four.code, 0);
}

TEST_F(CliTest, SearchReportSchema) {
  const auto r = run("search-max --n 5 --r 3 --k 5 --mode probe");
  const auto j = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"params", "max_edges", "bound_numerator", "bound_denominator",
                                            "within_bound", "witness_hyg", "exhaustive", "classes_visited",
                                            "elapsed_ms"}));
  EXPECT_EQ(j["params"]["mode"], "probe");
  EXPECT_EQ(j["max_edges"], 5);
  EXPECT_EQ(j["bound_numerator"], 16);
  EXPECT_EQ(j["bound_denominator"], 3);
  EXPECT_EQ(j["exhaustive"], true);
  std::istringstream in(j["witness_hyg"].get<std::string>());
  EXPECT_EQ(berge::read_hyg(in).size(), 5u);
}

TEST_F(CliTest, BergeResultAndSdrpSchemas) {
  const std::string k5 = file("k5.hyg", kK5);
  const auto path = nlohmann::json::parse(run("berge-path --in " + k5).out);
  for (const char* key : {"length", "base", "edges", "exhaustive"}) EXPECT_TRUE(path.contains(key)) << key;
  EXPECT_EQ(path["length"], 4);
  EXPECT_EQ(path["edges"].size(), 4u);
  EXPECT_EQ(path["edges"][0].size(), 3u);
  const auto sd = nlohmann::json::parse(run("sdrp --in " + k5).out);
  ASSERT_TRUE(sd["sdrp"].is_array());
  for (const auto& entry : sd["sdrp"]) {
    EXPECT_EQ(entry["pair"].size(), 2u);
    EXPECT_EQ(entry["edge"].size(), 3u);
  }
  EXPECT_TRUE(sd.contains("residual_edges"));
}

TEST_F(CliTest, StructuralSubcommands) {
  const std::string k5 = file("k5.hyg", kK5);
  EXPECT_EQ(nlohmann::json::parse(run("shadow --in " + k5).out)["complement"].size(), 0u);
  const auto sd = nlohmann::json::parse(run("sdrp --in " + k5).out);
  EXPECT_EQ(sd["surplus"], true);
  const std::string path5 = file("p.elg", "5\n1 2\n2 3\n3 4\n4 5\n");
  EXPECT_EQ(nlohmann::json::parse(run("blocks --in " + path5).out)["blocks"].size(), 4u);
  EXPECT_EQ(nlohmann::json::parse(run("core --in " + path5 + " --alpha 1").out)["core"].size(), 0u);
  const auto kop = run("kopylov --in " + path5 + " --k 5");
  EXPECT_EQ(kop.code, 2);
  const auto book = file("book.elg", "6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n5 1\n5 2\n6 1\n6 2\n");
  const auto w = run("kopylov --in " + book + " --k 6");
  ASSERT_EQ(w.code, 0) << w.out;
  EXPECT_EQ(nlohmann::json::parse(w.out)["case"], "core");
  const auto l10 = run("lemma10 --n 6 --r 3 --k 7 --samples 200 --seed 5");
  EXPECT_EQ(l10.code, 0);
  EXPECT_EQ(l10.out, run("lemma10 --n 6 --r 3 --k 7 --samples 200 --seed 5").out);
  EXPECT_EQ(run("verify-paths --in " + file("k6.hyg", berge::write_hyg(berge::complete_r_graph(6, 3))) +
                " --k 6 --max-edges 64").code,
            0);
}
