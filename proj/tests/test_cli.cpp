#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(std::string const& args) {
  std::string cmd = std::string(KHOPF_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), int(buf.size()), pipe)) out += buf.data();
  int st = pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

nlohmann::json run_json(std::string const& args) {
  auto r = run(args);
  EXPECT_EQ(r.status, 0) << args;
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, ExpandDualGrothendieck) {
  EXPECT_EQ(run_json("expand --basis s --of g --label '[2,1]'"), nlohmann::json::parse(R"({"s":{"[2,1]":1,"[2]":1}})"));
  auto m = run_json("expand --basis m --of g --label '[2,1]'");
  EXPECT_EQ(m.at("m").at("[1,1,1]"), 2);
}

TEST(Cli, ExpandInfiniteSeriesStatesItsCap) {
  auto k = run_json("expand --basis s --of Ktilde --label '[1]' --cap 3");
  EXPECT_EQ(k.at("cap"), 3);
  EXPECT_EQ(k.at("s").size(), 3u);
}

TEST(Cli, MultiJordanHolder) {
  EXPECT_EQ(run_json("mjh --shape '[3,1]' --length 4"), nlohmann::json::parse(R"(["2134","2314","2341"])"));
}

TEST(Cli, ProductsAndCoproducts) {
  auto p = run_json("product --basis Ltilde --left '(1)' --right '(1)' --cap 3");
  EXPECT_EQ(p.at("coeffs").size(), 4u);
  EXPECT_EQ(p.at("cap"), 3);
  auto r = run_json("product --basis Rtilde --left '(3,2,5,1)' --right '(4,2)'");
  EXPECT_EQ(r.at("coeffs"), nlohmann::json::parse(R"J({"(3,2,5,5,2)":1,"(3,2,5,1,4,2)":1,"(3,2,5,4,2)":1})J"));
  auto c = run_json("coproduct --basis mMR --label 121");
  EXPECT_EQ(c.at("terms").size(), 7u);
}

TEST(Cli, PumpPairAndOrder) {
  auto p = run_json("pump --basis L --label '(2,1)' --index 2");
  EXPECT_EQ(p.at("coeffs").at("(2,1,1,1)"), 3);
  EXPECT_EQ(run_json("pair --left-of g --left '[1]' --right-of G --right '[1]' --cap 6").at("value"), 1);
  EXPECT_EQ(run_json("order --left '[1,2]' --right '[2,1]' --bound 4").at("leq"), true);
}

TEST(Cli, OracleMatchesExpand) {
  auto o = run_json("oracle --series g --shape '[2,1]' --nvars 3 --maxdeg 3");
  EXPECT_EQ(o.at("nvars"), 3);
  EXPECT_EQ(o.at("terms").at("[1,1,1]"), 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("order --left '[2,1]' --right '[1,2]' --bound 4").status, 1);
  EXPECT_EQ(run("expand --basis s --of g --label '[1,2]'").status, 2);
  EXPECT_EQ(run("expand").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("verify --suite nonsense").status, 1);
}

TEST(Cli, OutputIsDeterministic) {
  auto a = run("coproduct --basis MMR --label '[(1,3),2]'");
  auto b = run("coproduct --basis MMR --label '[(1,3),2]'");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, VerifySmallPasses) {
  auto r = run("verify --suite words --size small");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("[PASS] words"), std::string::npos);
  EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos);
}
