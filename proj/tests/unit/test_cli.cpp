#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lietk/cli.hpp"

using lietk::io::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = lietk::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

// Every verb with arguments producing a successful run.
const std::vector<std::vector<std::string>> kVerbs{
    {"roots", "gen", "--type", "B2"},
    {"roots", "sub", "--type", "G2", "--gens", "1,0;1,3"},
    {"orbits", "distinguished", "--type", "F4"},
    {"orbits", "balacarter", "--type", "C3"},
    {"qdist", "check", "--type", "B3", "--r", "1,1,1"},
    {"l2pair", "build", "--type", "B2", "--r", "1,0", "--theta", "0,1/2"},
    {"mupole", "ledger", "--type", "B3", "--seed", "4"},
    {"mupole", "sqint", "--type", "A2"},
    {"param", "split", "--type", "A2", "--r", "1/2,1", "--theta", "1/3,0"},
    {"param", "discrete", "--type", "B2", "--seed", "9"},
    {"param", "decompose", "--type", "G2", "--seed", "2"},
    {"tables", "golden"},
};

}  // namespace

TEST(Cli, DistinguishedRowsForG2) {
  const auto r = run({"orbits", "distinguished", "--type", "G2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out), 2u);
}

TEST(Cli, QDistinguishedCheck) {
  const auto r = run({"qdist", "check", "--type", "A1", "--r", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "q-distinguished, margin 0\n");
  const auto no = run({"qdist", "check", "--type", "A1", "--r", "0"});
  EXPECT_EQ(no.code, 0);
  EXPECT_EQ(no.out, "not q-distinguished, margin -3\n");
}

TEST(Cli, L2PairOfTheIdentityFails) {
  const auto r = run({"l2pair", "build", "--type", "A1", "--r", "0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("NotQDistinguished: dim g(q)=0 < dim g(1)=3\n", 0), 0u) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"qdist"}).code, 2);
  EXPECT_EQ(run({"qdist", "check", "--type", "A1", "--bogus"}).code, 2);
  EXPECT_EQ(run({"qdist", "check", "--type", "A1", "--r", "1", "--format", "xml"}).code, 2);
  // flags belong to their own verb only
  EXPECT_EQ(run({"tables", "golden", "--type", "A1"}).code, 2);
  EXPECT_EQ(run({"roots", "gen", "--seed", "1", "--type", "A1"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  // neither --type nor --input
  EXPECT_EQ(run({"qdist", "check"}).code, 2);
  // --r with the wrong length
  EXPECT_EQ(run({"qdist", "check", "--type", "A2", "--r", "1"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DomainErrorsExitOne) {
  const auto bad = run({"roots", "gen", "--type", "Q3"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.err.rfind("InvalidType: ", 0), 0u) << bad.err;
  EXPECT_EQ(run({"orbits", "balacarter", "--type", "E7"}).code, 1);
  EXPECT_EQ(run({"l2pair", "verify", "--input", "-"}, "{not json").code, 1);
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
  for (const auto& args : kVerbs)
    for (const char* fmt : {"pretty", "json", "tsv"}) {
      auto a = args;
      a.insert(a.end(), {"--format", fmt});
      const auto first = run(a);
      ASSERT_EQ(first.code, 0) << args[0] << " " << args[1] << " " << fmt << ": " << first.err;
      EXPECT_FALSE(first.out.empty());
      EXPECT_EQ(run(a).out, first.out);
    }
}

TEST(Cli, JsonOutputRoundTrips) {
  for (auto args : kVerbs) {
    args.insert(args.end(), {"--format", "json"});
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j.dump(2) + "\n", r.out) << args[0] << " " << args[1];
  }
}

TEST(Cli, BuildThenVerifyThroughStdin) {
  const auto built = run({"l2pair", "build", "--type", "G2", "--r", "1,0", "--format", "json"});
  ASSERT_EQ(built.code, 0) << built.err;
  const auto v = run({"l2pair", "verify", "--input", "-"}, built.out);
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(v.out, "ok\n");

  auto j = Json::parse(built.out);
  j["weight2"] = Json::array();
  const auto bad = run({"l2pair", "verify", "--input", "-"}, j.dump());
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("VerificationFailed"), std::string::npos) << bad.err;
}

TEST(Cli, DecomposeThenAssemble) {
  for (int seed = 0; seed < 20; ++seed) {
    const auto disc = run({"param", "discrete", "--type", "B3", "--seed", std::to_string(seed), "--format", "json"});
    ASSERT_EQ(disc.code, 0) << disc.err;
    const auto skel = Json::parse(disc.out).at("input");
    const auto d = run({"param", "decompose", "--input", "-", "--format", "json"}, skel.dump());
    ASSERT_EQ(d.code, 0) << d.err;
    const auto a = run({"param", "assemble", "--input", "-", "--format", "json"}, d.out);
    ASSERT_EQ(a.code, 0) << a.err;
    const auto back = Json::parse(a.out);
    EXPECT_EQ(back["frob"], skel["frob"]) << seed;
    EXPECT_EQ(back["cent_members"], skel["cent_members"]) << seed;
    EXPECT_EQ(back["min_levi"], skel["min_levi"]) << seed;
  }
}

TEST(Cli, MupoleFromAnInputDocument) {
  const std::string doc =
      R"({"ambient":"A2","levi":[],"cent_members":[[1,0],[0,1],[1,1],[-1,0],[0,-1],[-1,-1]],)"
      R"("s":{"sys":"A2","vals":[{"r":"1"},{"r":"1"}]}})";
  const auto r = run({"mupole", "ledger", "--input", "-", "--format", "tsv"}, doc);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines(r.out), 3u);
  const auto s = run({"mupole", "sqint", "--input", "-", "--format", "json"}, doc);
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_TRUE(Json::parse(s.out).contains("input"));
}

TEST(Cli, TablesGoldenMatchesTheCheckedInFile) {
  const auto r = run({"tables", "golden"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(std::string(LIETK_GOLDEN_DIR) + "/orbit_counts.json"));
}

TEST(Cli, OutFlagWritesAFile) {
  const std::string path = ::testing::TempDir() + "lietk_cli_out.txt";
  const auto r = run({"roots", "gen", "--type", "A2", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(path), run({"roots", "gen", "--type", "A2"}).out);
  std::remove(path.c_str());
}
