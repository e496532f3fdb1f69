#include "dispobs/report.hpp"
#include "dispobs_cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace dispobs;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Report, VerdictRoundTrip) {
  for (const ObservabilityVerdict& v :
       {decide_two_segments(kdv_symbol(), Slope(7), Slope(13)), decide_two_segments(schrodinger_symbol(), Slope(0), Slope(1)),
        decide_one_segment(kdv_symbol(), Slope(7)), decide_one_segment(kdv_symbol(), Slope(Rational(5, 3)))}) {
    Json j = to_json(v);
    EXPECT_EQ(j.at("schema"), 1);
    ObservabilityVerdict back = verdict_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.symbol, v.symbol);
    EXPECT_EQ(back.slopes, v.slopes);
    EXPECT_EQ(back.qualitative, v.qualitative);
    EXPECT_EQ(back.quantitative, v.quantitative);
    EXPECT_EQ(back.reason, v.reason);
    EXPECT_EQ(back.pair_witness, v.pair_witness);
    EXPECT_TRUE(verdict_consistent(back));
  }
  Json bad = to_json(decide_one_segment(kdv_symbol(), Slope(7)));
  bad["schema"] = 2;
  EXPECT_THROW(verdict_from_json(bad), InvalidArgument);
}

TEST(Report, StateAndPiJson) {
  FourierState s;
  s.coefficients[-2] = Complex(0.5, -1.0);
  Json j = to_json(s);
  EXPECT_EQ(j.at("-2").at(0), 0.5);
  EXPECT_EQ(j.at("-2").at(1), -1.0);
  Json pi = to_json(pi_set(kdv_symbol(), Slope(7)));
  EXPECT_EQ(pi.at("finite_pairs").size(), 6u);
  EXPECT_TRUE(pi.at("infinite_families").empty());
  Json fam = to_json(pi_set(schrodinger_symbol(), Slope(3)));
  EXPECT_EQ(fam.at("infinite_families"), Json::array({3}));
}

TEST(Cli, AnalyzeExitCodes) {
  CliResult kdv = invoke({"analyze", "--symbol", "kdv", "--v1", "7", "--v2", "49"});
  EXPECT_EQ(kdv.code, 0) << kdv.err;
  Json j = Json::parse(kdv.out);
  EXPECT_EQ(j.at("qualitative"), "yes");
  EXPECT_EQ(j.at("quantitative"), "yes");
  EXPECT_EQ(j.at("kdv_criterion").at("result"), "ObservableBy1");

  CliResult sch = invoke({"analyze", "--symbol", "schrodinger", "--v1", "0", "--v2", "1"});
  EXPECT_EQ(sch.code, 10);
  Json s = Json::parse(sch.out);
  ASSERT_TRUE(s.contains("path_witness"));
  EXPECT_TRUE(validate_path(schrodinger_symbol(), witness_from_json<PathWitness>(s.at("path_witness"))));

  CliResult cyc = invoke({"analyze", "--symbol", "kdv", "--v1", "7", "--v2", "13", "--x1", "1/3pi", "--t2", "1/2"});
  EXPECT_EQ(cyc.code, 20);
  EXPECT_LT(Json::parse(cyc.out).at("witness_residual").get<double>(), 1e-10);

  CliResult one = invoke({"analyze", "--symbol", "kdv", "--v", "3"});
  EXPECT_EQ(one.code, 20);
  EXPECT_EQ(Json::parse(one.out).at("pair_witness"), Json::array({-2, 1}));
}

TEST(Cli, RatioCsv) {
  CliResult r = invoke({"ratio", "--symbol", "schrodinger", "--v1", "0", "--v2", "1", "--n", "2,4,8,16", "--T", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,norm_sq,seg_integral,ratio");
  for (int n : {2, 4, 8, 16}) {
    ASSERT_TRUE(std::getline(in, line));
    std::istringstream row(line);
    std::string a, b;
    std::getline(row, a, ',');
    std::getline(row, b, ',');
    EXPECT_EQ(std::stoi(a), n);
    EXPECT_NEAR(std::stod(b), 4.0 * std::numbers::pi * n, 1e-12);
  }
}

TEST(Cli, OtherCommands) {
  CliResult pi = invoke({"pi", "--symbol", "kdv", "--v", "7", "--oracle", "--window", "30"});
  EXPECT_EQ(pi.code, 0);
  EXPECT_TRUE(Json::parse(pi.out).at("oracle_match").get<bool>());
  CliResult xi = invoke({"xi", "--symbol", "kdv", "--v", "7", "--k", "1"});
  EXPECT_EQ(Json::parse(xi.out).at("members"), Json::array({-3, 1, 2}));
  CliResult dot = invoke({"graph", "--symbol", "schrodinger", "--v1", "0", "--v2", "1", "--format", "dot"});
  EXPECT_EQ(dot.out.rfind("graph", 0), 0u);
  CliResult kdv = invoke({"kdv", "--v1", "4", "--v2", "7"});
  EXPECT_EQ(Json::parse(kdv.out).at("criterion").at("result"), "ObservableBy2");
  CliResult w = invoke({"witness", "--symbol", "kdv", "--kind", "pair", "--v", "3", "--pair", "2,-1"});
  EXPECT_EQ(w.code, 0) << w.err;
  EXPECT_TRUE(Json::parse(w.out).contains("state"));
  CliResult oc = invoke({"oracle-compare", "--symbol", "1,0,-2,1", "--v", "5", "--window", "40"});
  EXPECT_EQ(oc.code, 0) << oc.err;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({"analyze", "--symbol", "kdv"}).code, 2);
  EXPECT_EQ(invoke({"analyze", "--symbol", "kdv", "--v1", "sqrt2", "--v2", "1"}).code, 2);
  EXPECT_EQ(invoke({"analyze", "--symbol", "kdv", "--v1", "3", "--v2", "3"}).code, 2);
  EXPECT_EQ(invoke({"graph", "--symbol", "kdv", "--v1", "3", "--v2", "7", "--format", "png"}).code, 2);
  CliResult irr = invoke({"pi", "--symbol", "kdv", "--v", "pi"});
  EXPECT_EQ(irr.code, 2);
  EXPECT_NE(irr.err.find("irrational"), std::string::npos);
}

TEST(Cli, HelpListsPresets) {
  for (const auto& args : {std::vector<std::string>{"--help"}, std::vector<std::string>{"analyze", "--help"}}) {
    CliResult h = invoke(args);
    EXPECT_EQ(h.code, 0);
    for (const char* preset : {"schrodinger", "kdv", "higher-schrodinger"})
      EXPECT_NE(h.out.find(preset), std::string::npos) << preset;
  }
}

TEST(Cli, SweepIsDeterministic) {
  std::vector<std::string> base{"sweep", "--symbol", "kdv", "--count", "12", "--seed", "9"};
  CliResult a = invoke(base);
  CliResult b = invoke(base);
  auto threaded = base;
  threaded.insert(threaded.end(), {"--threads", "3"});
  CliResult c = invoke(threaded);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  auto other = base;
  other[6] = "10";
  EXPECT_NE(invoke(other).out, a.out);
}
