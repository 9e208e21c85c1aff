#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "spx/cli.hpp"

using spx::cli::Record;
using spx::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Record json_of(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const auto r = invoke(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return Record::parse(r.out);
}

}  // namespace

TEST(Cli, CoreOfSixFiveTwo) {
  const auto r = json_of({"core", "--lambda", "6,5,2", "--p", "3"});
  EXPECT_EQ(r["core"], "3,1");
  EXPECT_EQ(r["weight"], 3);
  EXPECT_EQ(r["quotient"], Record::array({"2", "-", "1"}));
}

TEST(Cli, TextModeListsKeys) {
  const auto r = invoke({"core", "--lambda", "6,5,2", "--p", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("core: 3,1\n"), std::string::npos);
  EXPECT_NE(r.out.find("weight: 3\n"), std::string::npos);
}

TEST(Cli, Dim) {
  const auto r = json_of({"dim", "--lambda", "3,2"});
  EXPECT_EQ(r["dim"], 5);
  EXPECT_EQ(r["hook_lengths"], Record::array({"4,3,1", "2,1"}));
}

TEST(Cli, HGroupPrintsCanonicalGenerators) {
  const auto r = json_of({"hgroup", "--lambda", "8,4,1"});
  EXPECT_EQ(r["order"], 144);
  EXPECT_EQ(r["generators"], Record::array({"(2,3,4)(10,11,12)", "(2,3)(10,11)", "(5,6,7,8)", "(5,6)"}));
}

TEST(Cli, StraightenExample) {
  const auto r = json_of({"straighten", "--tableau", "4,7,6,1;2,5,3;8", "--p", "2"});
  EXPECT_EQ(r["row_straightened"], "1,4,6,7;2,3,5;8");
  EXPECT_EQ(r["shape_leq"][7], "(4,3,1)");
  EXPECT_EQ(r["shape_leq"][4], "(2,3,0)");
}

TEST(Cli, EndoDecomposableExample) {
  const auto r = json_of({"endo", "--lambda", "5,1,1", "--p", "2"});
  EXPECT_EQ(r["verdict"], "decomposable");
  EXPECT_EQ(r["specht_dim"], 15);
}

TEST(Cli, BrauerAndVertexCertificate) {
  const auto b = json_of({"brauer", "--lambda", "4,1", "--p", "2", "--q", "(3,4)"});
  EXPECT_EQ(b["quotient_dim"], 2);
  EXPECT_EQ(b["e_t_image"], "nonzero");
  const auto t = json_of({"brauer", "--lambda", "4,1", "--p", "2", "--q", "()"});
  EXPECT_EQ(t["quotient_dim"], 4);
  const auto v = json_of({"vertex-cert", "--lambda", "3,2,1", "--p", "2"});
  std::vector<std::string> keys;
  for (const auto& [k, _] : v.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "lambda", "p", "h_generators", "sylow_generators", "sylow_order",
                                            "specht_dim", "quotient_dim", "e_t_nonzero"}));
  EXPECT_EQ(v["e_t_nonzero"], true);
}

TEST(Cli, BlockInitialTwoRow) {
  const auto b = json_of({"block", "--n", "4", "--p", "2", "--core", "-"});
  ASSERT_EQ(b["blocks"].size(), 1u);
  EXPECT_EQ(b["blocks"][0]["all_heights_zero"], false);
  EXPECT_EQ(b["blocks"][0]["witness_height"], 1);
  const auto all = json_of({"block", "--n", "6", "--p", "3"});
  EXPECT_GE(all["blocks"].size(), 2u);
  const auto i = json_of({"initial", "--core", "2,1", "--w", "1", "--p", "2", "--r", "1"});
  EXPECT_EQ(i["equality"], true);
  EXPECT_EQ(i["local"]["quotient_dim"], 2);
  EXPECT_EQ(i["local"]["ok"], true);
  const auto t = json_of({"two-row", "--n", "10", "--p", "5"});
  EXPECT_EQ(t["core"], "3,2");
  EXPECT_EQ(t["case_matches"], true);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"core", "--lambda", "2,3", "--p", "3"}).code, 1);
  EXPECT_EQ(invoke({"core", "--lambda", "3,2", "--p", "4"}).code, 1);
  EXPECT_EQ(invoke({"core", "--lambda", "3,2"}).code, 1);
  EXPECT_EQ(invoke({"frobnicate"}).code, 1);
  EXPECT_EQ(invoke({"core", "--lambda", "3,2", "--p", "3", "--bogus"}).code, 1);
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"two-row", "--n", "8", "--p", "2"}).code, 1);
  EXPECT_EQ(invoke({"brauer", "--lambda", "4,1", "--p", "2", "--q", "(1,2,3)"}).code, 1);
  EXPECT_EQ(invoke({"--max-dim", "3", "endo", "--lambda", "3,2", "--p", "3"}).code, 2);
  EXPECT_EQ(invoke({"--max-group-order", "10", "vertex-cert", "--lambda", "8", "--p", "2"}).code, 2);
  EXPECT_EQ(invoke({"--help"}).code, 0);
  const auto unknown = invoke({"frobnicate"});
  EXPECT_NE(unknown.err.find("unknown subcommand 'frobnicate'"), std::string::npos);
  EXPECT_NE(unknown.err.find("Usage:"), std::string::npos);
  EXPECT_NE(invoke({"core", "--bogus"}).err.find("Usage:"), std::string::npos);
  const auto bad = invoke({"dim", "--lambda", "x"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, StructuredOutputRoundTripsAndIsDeterministic) {
  const std::vector<std::vector<std::string>> commands{
      {"core", "--lambda", "6,5,2", "--p", "3"},
      {"dim", "--lambda", "4,2,1"},
      {"straighten", "--tableau", "3,1;2", "--p", "3"},
      {"hgroup", "--lambda", "3,3,1"},
      {"vertex-cert", "--lambda", "4,2", "--p", "2"},
      {"brauer", "--lambda", "3,2", "--p", "2", "--q", "(1,2);(4,5)"},
      {"block", "--n", "5", "--p", "2"},
      {"initial", "--core", "1,1", "--w", "1", "--p", "3", "--r", "1"},
      {"two-row", "--n", "9", "--p", "3"},
      {"endo", "--lambda", "3,2", "--p", "3"},
  };
  for (auto args : commands) {
    args.insert(args.begin(), {"--format", "json"});
    const auto a = invoke(args), b = invoke(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const Record rec = Record::parse(a.out);
    EXPECT_EQ(rec.dump() + "\n", a.out);
    EXPECT_EQ(Record::parse(rec.dump()), rec);
    EXPECT_EQ(rec["command"], args[2]);
  }
}

#ifdef SPX_CLI_PATH
TEST(Cli, BinaryExitStatus) {
  const std::string bin = SPX_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("core --lambda 6,5,2 --p 3"), 0);
  EXPECT_EQ(status("core --lambda 6,5,2 --p 6"), 1);
  EXPECT_EQ(status("--max-dim 2 endo --lambda 3,2 --p 3"), 2);
}
#endif
