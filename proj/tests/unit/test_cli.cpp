#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string(SYMLEIB_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Cli, CatalogListJson) {
  Result r = run("catalog list --json");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.size(), 27u);
  EXPECT_EQ(j[0]["slug"], "g31-1");
}

TEST(Cli, NonLeibnizFileExitsOneWithTriple) {
  std::string f = write_temp("e11.json", R"({"dim":2,"products":[{"i":1,"j":1,"coeffs":{"1":"1"}}]})");
  Result r = run("algebra check --json --file " + f);
  EXPECT_EQ(r.code, 1);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["left_violations"][0], nlohmann::json::array({1, 1, 1}));
}

TEST(Cli, UsageAndInputErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("catalog frobnicate").code, 2);
  EXPECT_EQ(run("rack eval --group nope --h 0,0,0 --g 0,0,0").code, 2);
  EXPECT_EQ(run("rack eval --group g31-3 --params eps=5 --h 0,0,0 --g 0,0,0").code, 2);
  EXPECT_EQ(run("rack eval --group g31-1 --h 0.5,0,0 --g 0,0,0").code, 2);
  std::string bad = write_temp("bad.json", R"({"dim":2,"products":[{"i":1,"j":1,"coeffs":{"1":0.5}}]})");
  EXPECT_EQ(run("algebra check --file " + bad).code, 2);
  EXPECT_EQ(run("algebra check --file /nonexistent.json").code, 2);
}

TEST(Cli, RackEvalAndExport) {
  Result r = run("rack eval --group G31 --variant 1 --h 0,1,0 --g 0,0,1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(2, 1, 0)\n");
  Result e = run("catalog export --group g31-4 --params gamma=1/2");
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(nlohmann::json::parse(e.out)["dim"], 3);
}

TEST(Cli, PropertyFailureExitsOne) {
  EXPECT_EQ(run("quandle membership --group g31-1 --point 0,1,0").code, 1);
  EXPECT_EQ(run("quandle membership --group g31-1 --point 0,1,-1").code, 0);
  EXPECT_EQ(run("quandle medial --finite file:/nonexistent").code, 2);
  EXPECT_EQ(run("quandle verify --finite dihedral:6").code, 0);
}

TEST(Cli, NormalForm) {
  Result r = run("normalform g41 --json --params alpha=0,beta=5,gamma=2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["class"], 3);
}
