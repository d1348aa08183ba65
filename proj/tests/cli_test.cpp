/// End-to-end coverage of the command surface: every subcommand is
/// driven in-process through run_cli and checked against frozen output
/// and the documented exit-code contract (0 ok, 2 parse, 3 resource,
/// 4 domain).

#include <nilpotra/cli.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace nilpotra {
namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string first_line(const std::string& s) {
  return s.substr(0, s.find('\n'));
}

TEST(Nf, CollectsASwappedPair) {
  const CliResult r = run({"nf", "-n", "2", "-c", "2", "x2 x1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "x1       1  1\n"
            "x2       1  1\n"
            "[x2,x1]  2  1\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Nf, IdentityPrintsAPlaceholder) {
  const CliResult r = run({"nf", "x1 x1^-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(identity)\n");
}

TEST(Nf, LeftNormedBracketLandsOnOneCoordinate) {
  const CliResult r = run({"nf", "-n", "2", "-c", "3", "[x2,x1,x1]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[[x2,x1],x1]  3  1\n");
}

TEST(Nf, JsonCarriesDecimalStringExponents) {
  const CliResult r = run({"nf", "--format", "json", "x2 x1"});
  EXPECT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("rank"), 2);
  EXPECT_EQ(j.at("class"), 2);
  ASSERT_EQ(j.at("coords").size(), 3u);
  EXPECT_EQ(j.at("coords")[2].at("commutator"), "[x2,x1]");
  EXPECT_EQ(j.at("coords")[2].at("weight"), 2);
  EXPECT_EQ(j.at("coords")[2].at("exp"), "1");
}

TEST(Nf, AcceptsItsOwnJsonBack) {
  const CliResult once = run({"nf", "--format", "json", "x2 x1"});
  ASSERT_EQ(once.code, 0);
  const CliResult again = run({"nf", once.out});
  EXPECT_EQ(again.code, 0);
  EXPECT_EQ(again.out,
            "x1       1  1\n"
            "x2       1  1\n"
            "[x2,x1]  2  1\n");
}

TEST(Nf, ExitCodes) {
  EXPECT_EQ(run({"nf", "[x1]"}).code, 2);            // malformed bracket
  EXPECT_EQ(run({"nf", "x3"}).code, 2);              // generator out of range
  EXPECT_EQ(run({"nf"}).code, 2);                    // missing argument
  EXPECT_EQ(run({"nf", "--format", "xml", "x1"}).code, 2);
  EXPECT_EQ(run({"nf", "--max-word-len", "5", "x1^100"}).code, 3);
  EXPECT_EQ(run({"nf", "-n", "0", "x1"}).code, 4);
  EXPECT_EQ(run({"nf", "-c", "0", "x1"}).code, 4);
  const CliResult r = run({"nf", "x1 $"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("parse error"), std::string::npos);
  EXPECT_NE(r.err.find("position"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Hall, CountsLinesMatchWittNumbers) {
  EXPECT_EQ(run({"hall", "2", "3", "--counts"}).out, "2,1,2\n");
  EXPECT_EQ(run({"hall", "1", "3", "--counts"}).out, "1,0,0\n");
  EXPECT_EQ(run({"hall", "2", "4", "--counts"}).out, "2,1,2,3\n");
  EXPECT_EQ(run({"hall", "3", "2", "--counts"}).out, "3,3\n");
}

TEST(Hall, ListingShowsWeightAndCommutator) {
  const CliResult r = run({"hall", "2", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "1  x1\n"
            "1  x2\n"
            "2  [x2,x1]\n");
}

TEST(Hall, JsonListsBasisUnlessCountsOnly) {
  const CliResult full = run({"hall", "2", "3", "--format", "json"});
  ASSERT_EQ(full.code, 0);
  const Json j = Json::parse(full.out);
  EXPECT_EQ(j.at("rank"), 2);
  EXPECT_EQ(j.at("class"), 3);
  EXPECT_EQ(j.at("counts"), (Json::array({"2", "1", "2"})));
  ASSERT_EQ(j.at("basis").size(), 5u);
  EXPECT_EQ(j.at("basis")[3].at("commutator"), "[[x2,x1],x1]");
  EXPECT_EQ(j.at("basis")[3].at("weight"), 3);

  const CliResult counts =
      run({"hall", "2", "3", "--counts", "--format", "json"});
  const Json jc = Json::parse(counts.out);
  EXPECT_FALSE(jc.contains("basis"));
  EXPECT_EQ(jc.at("counts"), (Json::array({"2", "1", "2"})));
}

TEST(Hall, ExitCodes) {
  EXPECT_EQ(run({"hall"}).code, 2);                   // positionals required
  EXPECT_EQ(run({"hall", "2"}).code, 2);
  EXPECT_EQ(run({"hall", "3", "4", "--max-witt", "10"}).code, 3);
  EXPECT_EQ(run({"hall", "0", "2"}).code, 4);
}

TEST(Aut, CheckPrintsTrueOrFalse) {
  EXPECT_EQ(run({"aut", "check", "x1 -> x1 x2; x2 -> x2"}).out, "true\n");
  EXPECT_EQ(run({"aut", "check", "x1 -> x1; x2 -> x1"}).out, "false\n");
  EXPECT_EQ(run({"aut", "check", "x1 -> x1^2; x2 -> x2"}).out, "false\n");
}

TEST(Aut, IaLevelOfTheIdentityIsTheClass) {
  const CliResult r =
      run({"aut", "ia-level", "-n", "2", "-c", "2", "x1 -> x1; x2 -> x2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
}

TEST(Aut, IaLevelSeesThroughTheFiltration) {
  EXPECT_EQ(run({"aut", "ia-level", "x1 -> x1 x2; x2 -> x2"}).out, "0\n");
  EXPECT_EQ(run({"aut", "ia-level", "-c", "2",
                 "x1 -> x1 [x2,x1]; x2 -> x2"})
                .out,
            "1\n");
}

TEST(Aut, ApplyEvaluatesTheImage) {
  const CliResult r =
      run({"aut", "apply", "x1 -> x1 x2; x2 -> x2", "x1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "x1  1  1\n"
            "x2  1  1\n");
}

TEST(Aut, ComposeAppliesOuterAfterInner) {
  const CliResult r = run({"aut", "compose", "x1 -> x1 x2; x2 -> x2",
                           "x1 -> x1; x2 -> x2 [x2,x1]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out).substr(0, 2), "x1");
}

TEST(Aut, InvertRoundTripsThroughTextOutput) {
  const std::string f = "x1 -> x1 x2^2; x2 -> x2 [x2,x1]";
  const CliResult inv = run({"aut", "invert", f});
  ASSERT_EQ(inv.code, 0);
  const std::string g = first_line(inv.out);
  EXPECT_EQ(run({"aut", "compose", g, f}).out, "x1 -> x1; x2 -> x2\n");
  EXPECT_EQ(run({"aut", "compose", f, g}).out, "x1 -> x1; x2 -> x2\n");
}

TEST(Aut, JsonEndoOutputParsesBack) {
  const CliResult inv =
      run({"aut", "invert", "--format", "json", "x1 -> x1 x2; x2 -> x2"});
  ASSERT_EQ(inv.code, 0);
  const Json j = Json::parse(inv.out);
  EXPECT_EQ(j.at("rank"), 2);
  EXPECT_EQ(j.at("class"), 2);
  ASSERT_EQ(j.at("images").size(), 2u);
  const CliResult back = run({"aut", "check", inv.out});
  EXPECT_EQ(back.out, "true\n");
}

TEST(Aut, ExitCodes) {
  EXPECT_EQ(run({"aut"}).code, 2);  // subcommand required
  EXPECT_EQ(run({"aut", "invert", "x1 -> x1; x2 -> x1"}).code, 4);
  EXPECT_EQ(run({"aut", "ia-level", "x1 -> x1^2; x2 -> x2"}).code, 4);
  EXPECT_EQ(run({"aut", "check", "x1 -> x9; x2 -> x2"}).code, 2);
}

TEST(Verify, UnknownSuiteIsAUsageError) {
  const CliResult r = run({"verify", "no-such-suite"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("unknown suite"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Verify, SingleSuitePassesWithFrozenSummary) {
  const CliResult r = run({"verify", "multilinearity", "--trials", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out).substr(0, 7), "[PASS] ");
  EXPECT_NE(r.out.find("[PASS] multilinearity"), std::string::npos);
  EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos);
  EXPECT_NE(r.out.find("checks passed: 12, failed: 0\n"), std::string::npos);
}

TEST(Verify, GlueProbeIsReportedButNeverAsserted) {
  const CliResult r = run({"verify", "glue-probe"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("checks passed: 9, failed: 0\n"), std::string::npos);
}

TEST(Verify, JsonSchemaAndDeterminism) {
  const std::vector<std::string> args = {"verify",  "center-props",
                                         "--seed",  "7",
                                         "--trials", "10",
                                         "--format", "json"};
  const CliResult a = run(args);
  const CliResult b = run(args);
  ASSERT_EQ(a.code, 0);
  Json ja = Json::parse(a.out);
  Json jb = Json::parse(b.out);
  EXPECT_EQ(ja.at("summary").at("passed"), 2);
  EXPECT_EQ(ja.at("summary").at("failed"), 0);
  EXPECT_EQ(ja.at("summary").at("asserted_failures"), 0);
  for (Json* j : {&ja, &jb})
    for (Json& rep : j->at("reports")) {
      EXPECT_EQ(rep.at("verdict"), "pass");
      EXPECT_EQ(rep.at("seed"), 7);
      rep["millis"] = 0;
    }
  EXPECT_EQ(ja, jb);
}

TEST(EnvVar, CapsWordLengthUnlessTheFlagIsGiven) {
  ASSERT_EQ(::setenv("NILPOTRA_MAX_WORD_LEN", "5", 1), 0);
  EXPECT_EQ(run({"nf", "x1^100"}).code, 3);
  EXPECT_EQ(run({"nf", "--max-word-len", "1000", "x1^100"}).code, 0);
  ASSERT_EQ(::setenv("NILPOTRA_MAX_WORD_LEN", "banana", 1), 0);
  EXPECT_EQ(run({"nf", "x1"}).code, 2);
  ASSERT_EQ(::unsetenv("NILPOTRA_MAX_WORD_LEN"), 0);
  EXPECT_EQ(run({"nf", "x1^100"}).code, 0);
}

TEST(TopLevel, HelpAndMissingCommand) {
  const CliResult help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("Usage"), std::string::npos);
  EXPECT_NE(help.out.find("verify"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(TopLevel, TextOutputIsByteStable) {
  const CliResult a = run({"hall", "3", "3"});
  const CliResult b = run({"hall", "3", "3"});
  EXPECT_EQ(a.out, b.out);
  const long lines = std::count(a.out.begin(), a.out.end(), '\n');
  EXPECT_EQ(lines, 3 + 3 + 8);  // Witt numbers of (3,1..3)
}

}  // namespace
}  // namespace nilpotra
