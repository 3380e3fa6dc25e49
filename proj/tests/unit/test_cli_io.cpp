#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "stabledeg/bench.hpp"
#include "stabledeg/verify.hpp"

using namespace stabledeg;
using testsupport::Z;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

// Runs the command-line tool with stderr merged into stdout.
CliRun cli(const std::string& args) {
  const std::string cmd = std::string(STABLEDEG_CLI) + " " + args + " 2>&1";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "stabledeg_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

BenchRow row(std::size_t n, std::size_t p, double us, std::string op = "keygen") {
  return {std::move(op), n, p, "Z 256", us};
}

}  // namespace

TEST(Bench, KeygenGridExamples) {
  const std::vector<std::size_t> ns{10, 20}, ps{10, 20};
  const auto rows = bench_keygen(ns, ps, Z(256), 1, 3);
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& r : rows) EXPECT_GT(r.micros, 0.0);
  const std::vector<std::size_t> one{10};
  EXPECT_EQ(bench_keygen(one, one, Z(256), 1, 1).size(), 1u);
  const std::vector<std::size_t> big{120};
  EXPECT_THROW((void)bench_keygen(big, one, Z(256), 1, 1), std::exception);
}

TEST(Bench, KeygenShapeCheck) {
  std::vector<BenchRow> good{row(10, 10, 5), row(10, 20, 9), row(20, 10, 50), row(20, 20, 90)};
  EXPECT_TRUE(check_keygen_shape(good).pass);
  std::vector<BenchRow> flat_n{row(10, 10, 5), row(20, 10, 5)};
  EXPECT_FALSE(check_keygen_shape(flat_n).pass);
  std::vector<BenchRow> drop_p{row(10, 10, 9), row(10, 20, 5)};
  const ShapeCheck c = check_keygen_shape(drop_p);
  EXPECT_FALSE(c.pass);
  EXPECT_NE(c.detail.find("p=20 faster than p=10"), std::string::npos);
}

TEST(Bench, EncryptSlope) {
  std::vector<BenchRow> quartic, linear;
  for (std::size_t n : {20u, 40u, 60u, 80u, 100u}) {
    const double x = static_cast<double>(n);
    quartic.push_back(row(n, 10, x * x * x * x, "encrypt"));
    linear.push_back(row(n, 10, x, "encrypt"));
  }
  EXPECT_TRUE(check_encrypt_slope(quartic, "Z 256").pass);
  const ShapeCheck bad = check_encrypt_slope(linear, "Z 256");
  EXPECT_FALSE(bad.pass);
  EXPECT_NE(bad.detail.find("slope 1.000"), std::string::npos);

  const std::vector<std::size_t> single{20};
  const std::vector<Ring> rings{Z(256)};
  const auto rows = bench_encrypt(single, rings, 1, 10, 2, 1);
  ASSERT_EQ(rows.size(), 1u);
  const ShapeCheck skipped = check_encrypt_slope(rows, "Z 256");
  EXPECT_TRUE(skipped.pass);
  EXPECT_NE(skipped.detail.find("skipped"), std::string::npos);
}

TEST(Bench, LogLogSlope) {
  const std::vector<double> x{1, 2, 4, 8}, y{3, 24, 192, 1536};
  EXPECT_NEAR(loglog_slope(x, y), 3.0, 1e-9);
}

TEST(Bench, OutputLayout) {
  std::vector<BenchRow> rows{row(10, 10, 1500), row(10, 20, 2500), row(20, 10, 3500)};
  const std::string csv = to_csv(rows);
  EXPECT_EQ(csv, "op,n,p,ring,micros\nkeygen,10,10,Z 256,1500.0\nkeygen,10,20,Z 256,2500.0\n"
                 "keygen,20,10,Z 256,3500.0\n");
  const std::string table = keygen_table(rows);
  std::istringstream in(table);
  std::string header, r10, r20;
  std::getline(in, header);
  std::getline(in, r10);
  std::getline(in, r20);
  EXPECT_NE(header.find("p=10"), std::string::npos);
  EXPECT_LT(header.find("p=10"), header.find("p=20"));
  EXPECT_EQ(r10.rfind("n=10", 0), 0u);
  EXPECT_NE(r10.find("1.500"), std::string::npos);
  EXPECT_NE(r20.find("-"), std::string::npos);
}

TEST(Verify, ResultMechanics) {
  const CriterionResult bad = run_criterion(11, Scale::smoke);
  EXPECT_FALSE(bad.pass);
  const CriterionResult ten = run_criterion(10, Scale::smoke, 3);
  EXPECT_TRUE(ten.pass) << ten.detail;
  EXPECT_EQ(format_result(ten).rfind("criterion 10 (round trips): PASS", 0), 0u);
}

TEST(Cli, DhDemo) {
  const CliRun r = cli("dh-demo --n 8 --ring Z:65536 --na 37 --nb 22 --seed 7");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("TRANSCRIPT v1"), std::string::npos);
  EXPECT_NE(r.out.find("shared-digest "), std::string::npos);
  EXPECT_EQ(cli("dh-demo --n 8 --ring Z:65536 --na 37 --nb 22 --seed 7").out, r.out);
  EXPECT_NE(cli("dh-demo --n 8 --ring Z:65536 --na 37 --nb 22 --seed 8").out, r.out);
}

TEST(Cli, DhDemoRejectsSmallRing) {
  const CliRun r = cli("dh-demo --n 8 --ring Z:2 --na 3 --nb 4 --seed 7");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("needs at least 3 regular elements"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrorsNameTheFlag) {
  CliRun r = cli("dh-demo --n 8 --na 3 --nb 4");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("--seed"), std::string::npos);
  r = cli("ring-info --ring Q:5");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("--ring"), std::string::npos);
  r = cli("keygen --n 500 --ring Z:256 --p 10 --seed 1 --public-out a --private-out b");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("--n"), std::string::npos);
  EXPECT_EQ(cli("no-such-command").status, 2);
  EXPECT_EQ(cli("walk run --n 6 --ring F:127 --length 4").status, 2);
}

TEST(Cli, GraphVerify) {
  const CliRun r = cli("graph verify --k 3 --q 3");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("order 54"), std::string::npos);
  EXPECT_NE(r.out.find("girth 8"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, RingInfo) {
  const CliRun r = cli("ring-info --ring Z:256");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("regular-elements 128"), std::string::npos);
}

TEST(Cli, KeygenEncryptDecrypt) {
  const auto pub = scratch("pub.stablemap"), priv = scratch("priv.key");
  const std::string keygen = "keygen --n 10 --ring Z:256 --p 10 --seed 4 --public-out " +
                             pub.string() + " --private-out " + priv.string();
  ASSERT_EQ(cli(keygen).status, 0);
  const std::string first = slurp(pub);
  ASSERT_EQ(cli(keygen).status, 0);
  EXPECT_EQ(slurp(pub), first);

  const CliRun enc = cli("encrypt --public " + pub.string() + " --input 1,2,3,4,5,6,7,8,9,10");
  ASSERT_EQ(enc.status, 0) << enc.out;
  const std::string cipher = enc.out.substr(0, enc.out.find('\n'));
  const CliRun dec = cli("decrypt --private " + priv.string() + " --input " + cipher);
  ASSERT_EQ(dec.status, 0) << dec.out;
  EXPECT_EQ(dec.out, "1,2,3,4,5,6,7,8,9,10\n");
}

TEST(Cli, CorruptedStableMapReportsLine) {
  const auto bad = scratch("bad.stablemap");
  std::ofstream(bad) << "STABLEMAP v1\nring Z 256\ndim 2\ncoord 1: 1*x1 +\ncoord 2: 1*x2\n";
  const CliRun r = cli("encrypt --public " + bad.string() + " --input 1,2");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("line 4:"), std::string::npos) << r.out;
}

TEST(Cli, WalkCommands) {
  CliRun r = cli("walk run --n 6 --ring F:127 --walk 1,2,3,4 --start 'P 0,0,0,0,0,0'");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("invariant preserved"), std::string::npos);
  r = cli("walk symbolic --n 3 --ring Z:256 --zwalk 1:3");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("STABLEMAP v1\nring Z 256\ndim 4\n", 0), 0u);
  r = cli("walk run --n 4 --ring Z:256 --zwalk 2:3 --seed 1");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("not a regular element"), std::string::npos);
}

TEST(Cli, VerifySuiteSingleCriterion) {
  const CliRun r = cli("verify-suite --scale smoke --seed 1 --criterion 1");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("criterion 1 (graph facts): PASS"), std::string::npos);
}

TEST(Cli, BenchCsv) {
  const CliRun r = cli("bench keygen --ns 6,12 --ps 4 --seed 1 --runs 1 --csv");
  EXPECT_NE(r.out.find("op,n,p,ring,micros\nkeygen,6,4,Z 256,"), std::string::npos) << r.out;
}
