#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gwring/cli.hpp"
#include "gwring/cylinder.hpp"
#include "gwring/expr.hpp"

using namespace gwring;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data_path(const std::string& name) { return std::string(GWRING_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, MulExample) {
  auto r = run({"mul", "x+(1/2)*x-(5/2)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1*M[{1/2:1,5/2:1};(1/2,5/2)]\n");
}

TEST(Cli, MulMatchesLibrary) {
  for (std::string e : {"y+(1/2)*y-(1/2)", "(x+(1/2)+x-(3/2))^3", "x-(1/2)*x+(1/2)"}) {
    EXPECT_EQ(run({"mul", e}).out, expr::evaluate(e) + "\n");
    EXPECT_EQ(run({"normalize", e}).out, expr::normalize(e) + "\n");
  }
  EXPECT_EQ(run({"mul", "g(2)*xp+[1/2,3/2,5/2]", "--n", "2"}).out,
            expr::evaluate("g(2)*xp+[1/2,3/2,5/2]", std::nullopt, 2) + "\n");
}

TEST(Cli, ParseErrorsAreReportedWithOffset) {
  auto r = run({"mul", "x+("});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("offset 3"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"mul", "x+(1/2)", "--bogus"}).code, 2);
  EXPECT_EQ(run({"decompose", data_path("no_such_file.cfg")}).code, 2);
  EXPECT_EQ(run({"sl2", "--k", "7/2", "--l", "-1/2", "--factors", "++"}).code, 2);
  EXPECT_EQ(run({"help"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SimplesAndIndecomposables) {
  auto s = run({"simples", "{1/2:1,5/2:2}"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out,
            "M[{1/2:1,5/2:2};(-inf,1/2)]\nM[{1/2:1,5/2:2};(1/2,5/2)]\nM[{1/2:1,5/2:2};(5/2,inf)]\n");
  auto i = run({"indecomposables", "{1/2:1}"});
  EXPECT_EQ(i.code, 0);
  std::size_t lines = 0;
  for (char c : i.out) lines += c == '\n' ? 1 : 0;
  EXPECT_EQ(lines, 4u);
  EXPECT_EQ(run({"simples", "{1:1}"}).code, 2);
}

TEST(Cli, FourPathCommands) {
  auto d = run({"decompose", data_path("four_paths.cfg")});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out, "paths: 4\n[7/2,7/2,7/2]\n[3/2,7/2,7/2]\n[3/2,5/2,5/2]\n[3/2,3/2,5/2]\n");
  auto c = run({"components", data_path("four_paths.cfg")});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out.rfind("components: 5 (noncontractible: 2)\n", 0), 0u);
  auto k = run({"consistency", data_path("single_path.cfg")});
  EXPECT_EQ(k.code, 0);
  EXPECT_NE(k.out.find("consistent: true"), std::string::npos);
}

TEST(Cli, RenderWritesSvgDeterministically) {
  auto svg = (std::filesystem::temp_directory_path() / "gwring_cli_test.svg").string();
  auto a = run({"render", data_path("four_paths.cfg"), "--svg", svg});
  EXPECT_EQ(a.code, 0);
  auto w = cyl::read_config_file(data_path("four_paths.cfg"));
  EXPECT_EQ(a.out, cyl::render_ascii(w));
  std::ifstream in(svg, std::ios::binary);
  std::stringstream bytes;
  bytes << in.rdbuf();
  EXPECT_EQ(bytes.str(), cyl::render_svg(w));
  std::remove(svg.c_str());
}

TEST(Cli, Sl2Report) {
  auto r = run({"sl2", "--k", "7/2", "--l", "-1/2", "--factors", "-+"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dim=4\n"), std::string::npos);
  EXPECT_NE(r.out.find("h-spectrum: 3 1 -1 -3\n"), std::string::npos);
  EXPECT_NE(r.out.find("relations OK"), std::string::npos);
  EXPECT_NE(r.out.find("casimir="), std::string::npos);
  auto inf = run({"sl2", "--k=3/2", "--l=1/2", "--factors=--"});
  EXPECT_EQ(inf.code, 0);
  EXPECT_NE(inf.out.find("(truncated)"), std::string::npos);
}

TEST(Cli, VerifyCylinderAndOracle) {
  auto v = run({"verify-cylinder", "--m", "3", "--n", "2", "--max-height", "3"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("paths: 10\n"), std::string::npos);
  EXPECT_NE(v.out.find("relations OK"), std::string::npos);
  EXPECT_EQ(run({"verify-cylinder", "--m", "2", "--n", "4", "--max-height", "3"}).code, 2);
  auto o = run({"oracle-rank1", "--roots", "-1/2,1/2", "--window", "-5..5"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("oracle OK"), std::string::npos);
  EXPECT_EQ(run({"oracle-rank1", "--window", "5..-5"}).code, 2);
}
