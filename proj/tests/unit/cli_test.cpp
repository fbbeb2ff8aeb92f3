#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wittcurve/cli.hpp"

namespace wittcurve::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, EqualResidueRelation) {
  // <uL, vL> = <1, uv> for every choice of unit classes u, v.
  for (const char* u : {"1", "s"}) {
    for (const char* v : {"1", "s"}) {
      const std::string lhs = std::string("<") + u + "*L1," + v + "*L1>";
      const std::string rhs = std::string("<1,") + u + "*" + v + ">";
      const auto r = run({"equal", lhs, rhs});
      EXPECT_EQ(r.code, kExitSuccess) << lhs << " vs " << rhs << r.err;
      EXPECT_EQ(r.out, "true\n");
    }
  }
}

TEST(Cli, EqualFalseExitsOne) {
  const auto r = run({"equal", "<1>", "<s>", "--format", "json"});
  EXPECT_EQ(r.code, kExitFalse);
  EXPECT_EQ(nlohmann::json::parse(r.out)["equal"], false);
}

TEST(Cli, EnumerateJson) {
  const auto r = run({"enumerate", "--picard-rank", "1", "--q-mod-4", "3", "--format", "json"});
  ASSERT_EQ(r.code, kExitSuccess) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["total"], 64);
  EXPECT_EQ(j["nontrivial"], 63);
  ASSERT_EQ(j["shapes"].size(), 8u);
  const int expected[] = {4, 4, 3, 16, 3, 12, 12, 9};
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_TRUE(j["shapes"][i].contains("shape"));
    EXPECT_EQ(j["shapes"][i]["count"], expected[i]);
  }
  EXPECT_EQ(j["shapes"][0]["shape"], "<sL>");
}

TEST(Cli, EnumerateCsvAndText) {
  const auto csv = run({"--picard-rank", "0", "enumerate", "--format", "csv"});
  EXPECT_EQ(csv.code, kExitSuccess);
  EXPECT_EQ(csv.out.rfind("shape,count\n", 0), 0u) << csv.out;
  EXPECT_NE(csv.out.find("\"<1,sL>\",1\n"), std::string::npos) << csv.out;
  EXPECT_NE(csv.out.find("total,16\n"), std::string::npos);
  const auto text = run({"enumerate", "--picard-rank", "2"});
  EXPECT_NE(text.out.find("total"), std::string::npos);
  EXPECT_NE(text.out.find("256"), std::string::npos);
}

TEST(Cli, ReduceZero) {
  const auto r = run({"reduce", "<1,-1>"});
  EXPECT_EQ(r.code, kExitSuccess);
  EXPECT_EQ(r.out, "shape: ZERO\npayload: <>\n");
}

TEST(Cli, ReduceJson) {
  const auto r = run({"reduce", "<1,-s*L1,L1,pi,-pi*s*L1>", "--format", "json"});
  ASSERT_EQ(r.code, kExitSuccess) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["shape"], "<sL,pi,tpiM>");
  EXPECT_EQ(j["payload"], "<s,pi,pi*L1>");
}

TEST(Cli, InvariantsSchema) {
  const auto r = run({"invariants", "<1,-s*L1,-pi,s*pi*L1>", "--format", "json"});
  ASSERT_EQ(r.code, kExitSuccess);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rank_parity"], 0);
  EXPECT_EQ(j["signed_disc"]["unit"], 0);
  EXPECT_EQ(j["signed_disc"]["pi_exp"], 0);
  EXPECT_EQ(j["signed_disc"]["line"], nlohmann::json::array({0}));
  EXPECT_EQ(j["witt_inv"]["unit"], 1);
  EXPECT_EQ(j["witt_inv"]["line"], nlohmann::json::array({1}));

  const auto odd = run({"invariants", "<s*L1>", "--format", "json"});
  const auto jo = nlohmann::json::parse(odd.out);
  EXPECT_EQ(jo["rank_parity"], 1);
  EXPECT_FALSE(jo.contains("witt_inv"));

  const auto text = run({"invariants", "<s*L1>"});
  EXPECT_EQ(text.out, "rank_parity: 1\nsigned_disc: L1\nwitt_inv: -\n");
}

TEST(Cli, Verify) {
  for (const char* q : {"1", "3"}) {
    for (const char* rank : {"0", "1"}) {
      const auto r = run({"verify", "--q-mod-4", q, "--picard-rank", rank, "--format", "json"});
      EXPECT_EQ(r.code, kExitSuccess) << r.out;
      const auto j = nlohmann::json::parse(r.out);
      EXPECT_TRUE(j["passed"].get<bool>());
      EXPECT_EQ(j["checks"].size(), 7u);
    }
  }
  const auto skipped = run({"verify", "--picard-rank", "3"});
  EXPECT_EQ(skipped.code, kExitSuccess);
  EXPECT_NE(skipped.out.find("skipped"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"equal", "<1>"}).code, kExitUsage);
  EXPECT_EQ(run({"reduce", "<1>", "--format", "xml"}).code, kExitUsage);

  const auto dyadic = run({"reduce", "<1>", "--q-mod-4", "2"});
  EXPECT_EQ(dyadic.code, kExitUsage);
  EXPECT_NE(dyadic.err.find("dyadic or invalid residue class"), std::string::npos);

  const auto label = run({"reduce", "<L3>", "--picard-rank", "1"});
  EXPECT_EQ(label.code, kExitUsage);
  EXPECT_NE(label.err.find("unknown bundle label"), std::string::npos);

  const auto syntax = run({"invariants", "<1,,>"});
  EXPECT_EQ(syntax.code, kExitUsage);
  EXPECT_NE(syntax.err.find("position 3"), std::string::npos);

  EXPECT_EQ(run({"enumerate", "--picard-rank", "5"}).code, kExitUsage);
  EXPECT_EQ(run({"enumerate", "--picard-rank", "-1"}).code, kExitUsage);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, kExitSuccess);
  EXPECT_NE(r.out.find("enumerate"), std::string::npos);
}

TEST(Cli, WritesOutFile) {
  const auto path = std::filesystem::temp_directory_path() / "wittc_cli_test_out.json";
  std::filesystem::remove(path);
  const auto r = run({"enumerate", "--picard-rank", "0", "--format", "json", "--out", path.string()});
  EXPECT_EQ(r.code, kExitSuccess);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["total"], 16);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace wittcurve::cli
