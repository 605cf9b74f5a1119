#include <gtest/gtest.h>

#include <sstream>

#include "specht/cli.hpp"

using namespace specht;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, DimExamples) {
  EXPECT_EQ(run({"dim", "--lambda", "5,2", "--mu", "3,2,2", "--e", "5"}).out, "1\n");
  EXPECT_EQ(run({"dim", "--lambda", "5,2", "--mu", "3,2,2", "--e", "3"}).out, "0\n");
  EXPECT_EQ(run({"dim", "--lambda", "10,5", "--mu", "8,3,1,1,1,1", "--e", "2", "--p", "2"}).out, "2\n");
  EXPECT_EQ(run({"dim", "--lambda", "3,1", "--mu", "3,1", "--e", "4"}).out, "1\n");
  for (const char* m : {"classifier", "oracle"})
    EXPECT_EQ(lines(run({"dim", "--lambda", "5,2", "--mu", "3,2,2", "--e", "5", "--method", m}).out).front(), "1");
}

TEST(Cli, KernelOutput) {
  const CliRun r = run({"dim", "--lambda", "5,2", "--mu", "3,2,2", "--e", "5", "--kernel"});
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(ls[1], "columns 11122/33 11123/23 11133/22");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"dim", "--lambda", "5,x", "--mu", "3", "--e", "3"}).code, exit_code::usage);
  EXPECT_EQ(run({"dim", "--lambda", "5,2", "--mu", "3,2,2"}).code, exit_code::usage);
  EXPECT_EQ(run({"dim", "--lambda", "5,2", "--mu", "3,2", "--e", "3"}).code, exit_code::usage);
  EXPECT_EQ(run({"dim", "--lambda", "5,2", "--mu", "3,2,2", "--e", "4", "--p", "2"}).code, exit_code::usage);
  EXPECT_EQ(run({"dim", "--lambda", "5,2", "--mu", "3,2,2", "--e", "5", "--method", "magic"}).code, exit_code::usage);
  EXPECT_EQ(run({"frobnicate"}).code, exit_code::usage);
  const CliRun na = run({"dim", "--lambda", "5,4", "--mu", "3,3,2,1", "--e", "3"});
  EXPECT_EQ(na.code, exit_code::not_applicable);
  EXPECT_TRUE(na.out.empty());
  EXPECT_FALSE(na.err.empty());
  EXPECT_EQ(run({"dim", "--lambda", "3,2,1", "--mu", "2,2,2", "--e", "3", "--method", "classifier"}).code,
            exit_code::not_applicable);
  const CliRun big = run({"dim", "--lambda", "6,4", "--mu", "5,4,1", "--e", "3", "--method", "oracle"});
  EXPECT_EQ(big.code, exit_code::size_guard);
  EXPECT_TRUE(big.out.empty());
  EXPECT_EQ(run({"--help"}).code, exit_code::ok);
}

TEST(Cli, JsonRoundTrip) {
  const CliRun r = run({"dim", "--lambda", "5,2", "--mu", "3,2,2", "--e", "5", "--kernel", "--json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["dim"], 1);
  EXPECT_EQ(j["lambda"], Json::array({5, 2}));
  const RunReport rep = run_report_from_json(j);
  EXPECT_EQ(to_json(rep), j);
  EXPECT_EQ(run_report_from_json(to_json(rep)), rep);
  ASSERT_TRUE(rep.kernel.has_value());
  EXPECT_EQ(rep.kernel->size(), 1u);
}

TEST(Cli, JsonRoundTripLargeCoefficients) {
  RunReport r;
  r.lambda = Partition({2, 1});
  r.mu = Partition({1, 1, 1});
  r.dim = 1;
  r.kernel = std::vector<std::vector<LaurentPoly>>{
      {LaurentPoly(mpz_class("123456789012345678901234567890")).shifted(-3) + LaurentPoly(7), LaurentPoly()}};
  r.columns = std::vector<std::string>{"11/2", "12/1"};
  r.hom = 2;
  EXPECT_EQ(run_report_from_json(Json::parse(to_json(r).dump())), r);

  VerifyReport v;
  v.suite = "agreement";
  v.checks = 10;
  v.failures = 1;
  v.first_instance = "lambda=(1,1) mu=(2)";
  v.first_results = {{"algorithm", 0}, {"oracle_hom", 1}};
  const Json vj = to_json(v);
  EXPECT_EQ(vj["consistent"], false);
  EXPECT_EQ(verify_report_from_json(Json::parse(vj.dump())), v);
}

TEST(Cli, ScanExamples) {
  const CliRun one = run({"scan", "--n", "1", "--e", "2"});
  EXPECT_EQ(one.out, "(1) (1) 1\n");
  const CliRun two = run({"scan", "--n", "4", "--e", "2", "--two-row", "--csv"});
  ASSERT_EQ(two.code, 0);
  const auto ls = lines(two.out);
  EXPECT_EQ(ls.front(), "lambda,mu,e,p,method,dim");
  EXPECT_GT(ls.size(), 1u);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const char d = ls[i].back();
    EXPECT_TRUE(d == '0' || d == '1') << ls[i];
  }
  const CliRun seven = run({"scan", "--n", "7", "--e", "5", "--json"});
  bool found = false;
  for (const auto& l : lines(seven.out)) {
    const RunReport r = run_report_from_json(Json::parse(l));
    if (r.lambda == Partition({5, 2}) && r.mu == Partition({3, 2, 2})) found = r.dim == 1;
  }
  EXPECT_TRUE(found);
}

TEST(Cli, VerifySuites) {
  const CliRun ok = run({"verify", "--suite", "specht-dim", "--n", "5", "--e-list", "2,3"});
  EXPECT_EQ(ok.code, exit_code::ok);
  EXPECT_NE(ok.out.find("specht-dim:"), std::string::npos);
  const CliRun js = run({"verify", "--suite", "identities", "--json"});
  ASSERT_EQ(js.code, exit_code::ok);
  const VerifyReport v = verify_report_from_json(Json::parse(js.out));
  EXPECT_TRUE(v.consistent());
  EXPECT_GT(v.checks, 0);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, exit_code::usage);
}
