#include "test_support.hpp"

#include <tightrel/cli.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace tightrel;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("tightrel_cli_" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    return {std::istreambuf_iterator<char>(in), {}};
  }

  /// Runs a construct verb and stores its output under name.
  std::string make(const std::string& name, std::vector<std::string> args) const {
    args.push_back("--out");
    args.push_back(path(name));
    auto r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST(CliData, ShippedSamples) {
  const std::string data = TIGHTREL_DATA_DIR;
  auto v = run({"verify", data + "/fano.blk", "--t", "2"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "t-design: true  lambda=[7,3,1]\n");
  auto c = run({"check-relative", data + "/fano_pair.rd", "--t", "3", "--tight"});
  EXPECT_EQ(c.code, 0) << c.out << c.err;
  EXPECT_NE(c.out.find("tight: true  size=14 bound=14"), std::string::npos);
}

TEST_F(CliTest, VerifyAndCheckRelative) {
  const auto fano = make("fano.blk", {"construct", "fano"});
  EXPECT_EQ(run({"verify", fano, "--t", "2"}).out, "t-design: true  lambda=[7,3,1]\n");
  auto three = run({"verify", fano, "--t", "3"});
  EXPECT_EQ(three.code, 1);
  EXPECT_EQ(three.out, "t-design: false\n");

  const auto pair = make("pair.rd", {"transform", "pair", fano});
  EXPECT_NE(read("pair.rd").find("t=3"), std::string::npos);
  auto ok = run({"check-relative", pair, "--tight"});
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_NE(ok.out.find("oracle: true"), std::string::npos);
  EXPECT_NE(ok.out.find("t-subset criterion: true"), std::string::npos);
  auto four = run({"check-relative", pair, "--t", "4"});
  EXPECT_EQ(four.code, 1);
  EXPECT_NE(four.out.find("oracle: false  witness"), std::string::npos);
}

TEST_F(CliTest, ConstructionsRoundTrip) {
  const auto witt = make("witt.blk", {"construct", "witt23"});
  EXPECT_EQ(run({"verify", witt, "--t", "4"}).out, "t-design: true  lambda=[253,77,21,5,1]\n");
  const auto der = make("der.blk", {"construct", "derived", witt, "22"});
  const auto res = make("res.blk", {"construct", "residual", witt, "22"});
  EXPECT_EQ(run({"verify", der, "--t", "3"}).code, 0);
  EXPECT_EQ(run({"verify", res, "--t", "3"}).code, 0);
  const auto ext = make("ext.blk", {"construct", "extend", der, res});
  EXPECT_EQ(run({"verify", ext, "--t", "4"}).out, "t-design: true  lambda=[253,77,21,5,1]\n");
  const auto join = make("join.rd", {"transform", "union", der, res, "--t", "4"});
  EXPECT_EQ(run({"check-relative", join, "--tight"}).code, 0);
  const auto comp = make("comp.blk", {"construct", "complement", witt});
  EXPECT_EQ(run({"verify", comp, "--t", "4"}).code, 0);
  const auto p11 = make("p11.blk", {"construct", "paley", "11"});
  EXPECT_EQ(run({"verify", p11, "--t", "2"}).out, "t-design: true  lambda=[11,5,2]\n");
}

TEST_F(CliTest, WeightedUnionAndPermute) {
  const auto fano = make("fano.blk", {"construct", "fano"});
  const auto comp = make("comp.blk", {"construct", "complement", fano});
  const auto rd = make("w.rd", {"transform", "union", fano, comp, "--weights", "1,2", "--t", "3"});
  auto r = run({"check-relative", rd});
  EXPECT_EQ(r.code, 1);  // complementary shells need equal weights at t = 3
  EXPECT_NE(r.out.find("weights=(1/1,2/1)"), std::string::npos);
  const auto perm = make("perm.blk", {"transform", "permute", fano, "1,2,3,4,5,6,0"});
  EXPECT_EQ(run({"verify", perm, "--t", "2"}).code, 0);
  EXPECT_EQ(run({"transform", "permute", fano, "0,0,1,2,3,4,5"}).code, 2);
}

TEST_F(CliTest, LambdaSequenceAndConjecture) {
  const auto fano = make("fano.blk", {"construct", "fano"});
  EXPECT_EQ(run({"lambda-seq", fano, "--t", "3"}).out, "(28*0, 7*1)\n");
  fs::create_directories(path("corpus"));
  make("corpus/a.blk", {"construct", "fano"});
  make("corpus/b.blk", {"transform", "permute", fano, "1,0,2,3,4,5,6"});
  make("corpus/c.blk", {"transform", "permute", fano, "0,1,2,3,4,5,6"});
  auto r = run({"conjecture2", path("corpus")});
  EXPECT_EQ(r.code, 0) << r.err;
  // a and c are the same block set, b is a different labelling with the same sequence
  EXPECT_EQ(r.out, "design_a\tdesign_b\na.blk\tb.blk\nb.blk\tc.blk\n");
}

TEST_F(CliTest, NonexistVerdicts) {
  auto brc = run({"nonexist", "--params", "29,8,2"});
  EXPECT_EQ(brc.code, 1);
  EXPECT_NE(brc.out.find("x^2 = 6y^2 + 2z^2 : insolvable"), std::string::npos);
  EXPECT_EQ(run({"nonexist", "--params", "16,6,2"}).code, 0);
  EXPECT_EQ(run({"nonexist", "--params", "22,7,2"}).code, 1);
  auto dr = run({"nonexist", "--params", "11,5,2,3"});
  EXPECT_EQ(dr.code, 1);
  EXPECT_NE(dr.out.find("driessen"), std::string::npos);
  EXPECT_EQ(run({"nonexist", "--params", "29,8"}).code, 2);
  EXPECT_EQ(run({"nonexist", "--params", "a,b,c"}).code, 2);
}

TEST_F(CliTest, ScansAreDeterministicAcrossThreads) {
  auto a = run({"scan-3", "--max-n", "60", "--threads", "1"});
  auto b = run({"scan-3", "--max-n", "60", "--threads", "4"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("n\tr1\tr2", 0), 0u);
  auto c = run({"scan-4", "--max-n", "30", "--threads", "1"});
  auto d = run({"scan-4", "--max-n", "30", "--threads", "3"});
  EXPECT_EQ(c.out, d.out);
  auto e = run({"scan-3", "--max-n", "40", "--cases", "3", "--out", path("c3.tsv")});
  EXPECT_EQ(e.code, 0);
  EXPECT_TRUE(e.out.empty());
  EXPECT_NE(read("c3.tsv").find("31\t6\t16"), std::string::npos);
  EXPECT_EQ(run({"scan-3", "--max-n", "40", "--cases", "9"}).code, 2);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"verify", path("missing.blk"), "--t", "2"}).code, 3);
  const auto bad = write("bad.blk", "not a design\n");
  EXPECT_EQ(run({"verify", bad, "--t", "2"}).code, 3);
  EXPECT_EQ(run({"construct", "paley", "9"}).code, 2);
  EXPECT_EQ(run({"verify", bad}).code, 2);
}
