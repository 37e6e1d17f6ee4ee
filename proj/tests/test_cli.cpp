#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "oddperm/classes.hpp"
#include "oddperm/report.hpp"
#include "oddperm/verify.hpp"

using namespace oddperm;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "oddperm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("oddperm_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, Poincare) {
  const Result r = run_cli({"poincare", "--interval", "5431627", "7461523"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1+3t+5t^2+5t^3+3t^4+t^5\n"), std::string::npos);
  EXPECT_NE(r.out.find("rank vector: [1,3,5,5,3,1]"), std::string::npos);
}

TEST(Cli, Factorize) {
  EXPECT_EQ(run_cli({"factorize", "--interval", "213", "312"}).out, "[2] = 1+t\n");
  EXPECT_EQ(run_cli({"factorize", "--interval", "5431627", "7461523"}).out,
            "[3,3,2] = 1+3t+5t^2+5t^3+3t^4+t^5\n");
}

TEST(Cli, Partition) {
  const Result r = run_cli({"partition", "--interval", "654172839", "958172634"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("k = 4, a = 3, b = 9, anchors = {3,5,7,9}, m = 4"), std::string::npos);
  EXPECT_NE(r.out.find("u = 65[4]1[7]2[8]3[9]"), std::string::npos);
  EXPECT_NE(r.out.find("block 2: [657142839, "), std::string::npos);
}

TEST(Cli, DiagramAndClass) {
  const Result d = run_cli({"diagram", "--perm", "1432"});
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("D_o(w): {(2,3), (3,2)}"), std::string::npos);
  EXPECT_NE(d.out.find(".#*.\n.*..\n"), std::string::npos);

  const Result c = run_cli({"class", "--perm", "6431725", "--members"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("size: 18"), std::string::npos);
  EXPECT_NE(c.out.find("min: 5431627"), std::string::npos);
  EXPECT_NE(c.out.find("max: 7461523"), std::string::npos);
  EXPECT_NE(c.out.find("rank vector: [1,3,5,5,3,1]"), std::string::npos);
}

TEST(Cli, Polynomials) {
  EXPECT_EQ(run_cli({"kl", "--x", "1234", "--y", "3412"}).out, "1+q\n");
  EXPECT_EQ(run_cli({"rpoly", "--x", "12", "--y", "21"}).out, "-1+q\n");
  EXPECT_EQ(run_cli({"rpoly", "--x", "21", "--y", "12"}).out, "0\n");
}

TEST(Cli, HasseDot) {
  const std::string path = temp_path("s3.dot");
  const Result r = run_cli({"hasse", "--interval", "123", "321", "--dot", path});
  EXPECT_EQ(r.code, 0);
  const std::string dot = slurp(path);
  EXPECT_EQ(dot.rfind("graph interval {", 0), 0u);
  EXPECT_NE(dot.find("\"213\" -- \"231\";"), std::string::npos);
  std::remove(path.c_str());
  EXPECT_NE(run_cli({"hasse", "--interval", "213", "312"}).out.find("\"213\" -- \"312\";"),
            std::string::npos);
}

TEST(Cli, ClassesJson) {
  const std::string path = temp_path("classes4.json");
  const Result r = run_cli({"--jobs", "2", "classes", "--n", "4", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "classes: 17 -> " + path + "\n");
  const auto report = nlohmann::json::parse(slurp(path));
  std::remove(path.c_str());
  EXPECT_EQ(report["schema"], 1);
  EXPECT_EQ(report["n"], 4);
  EXPECT_EQ(report["jobs"], 2);
  ASSERT_EQ(report["classes"].size(), 17u);
  std::size_t members = 0;
  for (const auto& c : report["classes"]) {
    members += c["size"].get<std::size_t>();
    std::vector<int> factors = c["factor_lengths"];
    std::size_t product = 1;
    for (int m : factors) product *= m;
    EXPECT_EQ(product, c["size"].get<std::size_t>());
    EXPECT_TRUE(c["self_dual"].get<bool>());
    EXPECT_TRUE(c["kl_is_one"].get<bool>());
  }
  EXPECT_EQ(members, 24u);
}

TEST(Cli, ClassesJsonIsIndependentOfWorkerCount) {
  const Result a = run_cli({"--jobs", "1", "classes", "--n", "5", "--no-kl"});
  const Result b = run_cli({"--jobs", "3", "classes", "--n", "5", "--no-kl"});
  auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  EXPECT_TRUE(ja["classes"][0]["kl_is_one"].is_null());
  ja.erase("jobs");
  jb.erase("jobs");
  EXPECT_EQ(ja, jb);
}

TEST(Cli, ClassRecordFields) {
  const nlohmann::json rec = class_record(class_of(Permutation::parse("5431627")));
  EXPECT_EQ(rec["min"], "5431627");
  EXPECT_EQ(rec["max"], "7461523");
  EXPECT_EQ(rec["size"], 18);
  EXPECT_EQ(rec["rank_vector"], nlohmann::json({1, 3, 5, 5, 3, 1}));
  EXPECT_EQ(rec["poincare_coeffs"], nlohmann::json({1, 3, 5, 5, 3, 1}));
  EXPECT_EQ(rec["factor_lengths"], nlohmann::json({3, 3, 2}));
  EXPECT_EQ(rec["diagram"].size(), 7u);
  EXPECT_EQ(rec["diagram"][0], nlohmann::json({1, 1}));
}

TEST(Cli, Verify) {
  const std::string path = temp_path("verify.json");
  const Result r = run_cli({"verify", "--n", "5", "--checks", "interval,legality_necessity,kl",
                            "--json", path});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("interval            exhaustive    5        70       0"),
            std::string::npos);
  const auto report = nlohmann::json::parse(slurp(path));
  std::remove(path.c_str());
  EXPECT_EQ(report["schema"], 1);
  EXPECT_TRUE(report["ok"].get<bool>());
  ASSERT_EQ(report["checks"].size(), 3u);
  EXPECT_EQ(report["checks"][0]["name"], "legality_necessity");
  EXPECT_EQ(report["checks"][0]["scope"], "exhaustive");

  EXPECT_EQ(run_cli({"verify", "--n", "4", "--checks", "nope"}).code, 2);
}

TEST(Cli, VerifyReportsEveryCheck) {
  const VerificationReport report = run_verification(4, {});
  EXPECT_EQ(report.checks.size(), available_checks().size());
  EXPECT_TRUE(report.ok());
  for (const auto& c : report.checks) {
    EXPECT_EQ(c.failed, 0u) << c.name;
    EXPECT_GT(c.passed, 0u) << c.name;
    EXPECT_TRUE(c.scope == "exhaustive" || c.scope == "sampled");
  }
  EXPECT_THROW(run_verification(10, {}), std::invalid_argument);
}

TEST(Cli, Census) {
  const Result r = run_cli({"census", "--n", "9", "--list"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("classes: 103873, non-self-dual: 8\n", 0), 0u);
  EXPECT_NE(r.out.find("[654172839, 958172634]"), std::string::npos);
  EXPECT_NE(r.out.find("bipartite criterion disagreements: 0"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"bogus"}).code, 2);
  EXPECT_EQ(run_cli({"diagram"}).code, 2);
  EXPECT_EQ(run_cli({"diagram", "--perm", "1123"}).code, 2);
  EXPECT_EQ(run_cli({"poincare", "--interval", "321", "123"}).code, 2);
  EXPECT_EQ(run_cli({"poincare", "--interval", "321"}).code, 2);
  EXPECT_EQ(run_cli({"factorize", "--interval", "123", "321"}).code, 2);
  const Result ten = run_cli({"census", "--n", "10"});
  EXPECT_EQ(ten.code, 2);
  EXPECT_NE(ten.err.find("--long"), std::string::npos);
  const Result eleven = run_cli({"classes", "--n", "11", "--long"});
  EXPECT_EQ(eleven.code, 2);
  EXPECT_NE(eleven.err.find("--override"), std::string::npos);
  EXPECT_EQ(run_cli({"classes", "--n", "17", "--long", "--override"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}
