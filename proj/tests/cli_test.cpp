#include <filesystem>
#include <regex>
#include <sstream>

#include <gtest/gtest.h>

#include "eoa/io.hpp"
#include "eoa_cli/cli.hpp"

namespace eoa::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("eoa_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
  }

  // dual Hamming [5,2]_4, its OA(16,5,4,2) and the Eulerian OA(256,5,4,2).
  void build_family() {
    ASSERT_EQ(call({"code", "hamming", "--q", "4", "--m", "2", "--dual", "--out", path("dh.txt")}).code, 0);
    ASSERT_EQ(call({"oa", "build", "--code", path("dh.txt"), "--out", path("oa16.txt")}).code, 0);
    ASSERT_EQ(call({"euler", "build", "--code", path("dh.txt"), "--out", path("eoa.txt")}).code, 0);
  }

  fs::path dir_;
};

TEST_F(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(call({"--help"}).code, 0);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"code", "hamming", "--q", "4"}).code, 2);
  EXPECT_EQ(call({"code", "info", "--in", path("missing.txt")}).code, 2);
}

TEST_F(Cli, CodeHammingPrintsParameters) {
  auto r = call({"code", "hamming", "--q", "4", "--m", "2", "--dual", "--out", path("dh.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[5,2,4,3]_4\n");
  r = call({"code", "hamming", "--q", "2", "--m", "3", "--out", path("h.txt")});
  EXPECT_EQ(r.out, "[7,4,3,4]_2\n");
  EXPECT_EQ(read_file(path("h.txt")).substr(0, 11), "CODE 2 7 4\n");
}

TEST_F(Cli, CodeHammingToStdoutKeepsSummaryOnStderr) {
  const auto r = call({"code", "hamming", "--q", "4", "--m", "2"});
  EXPECT_EQ(r.out.substr(0, 11), "CODE 4 5 3\n");
  EXPECT_EQ(r.err, "[5,3,3,4]_4\n");
}

TEST_F(Cli, CodeHammingRejectsBadField) {
  const auto r = call({"code", "hamming", "--q", "6", "--m", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("prime power"), std::string::npos);
}

TEST_F(Cli, CodeInfoOnIdentityGenerator) {
  write_file(path("id.txt"), "CODE 4 3 3\n1 0 0\n0 1 0\n0 0 1\n");
  const auto r = call({"code", "info", "--in", path("id.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[3,3,1,4]_4\n");
}

TEST_F(Cli, OaBuildAndVerify) {
  build_family();
  EXPECT_EQ(read_file(path("oa16.txt")).substr(0, 15), "OA 16 5 4 2 1\n0");
  auto r = call({"oa", "verify", "--in", path("oa16.txt"), "--t", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("lambda=4"), std::string::npos);
  r = call({"oa", "verify", "--in", path("oa16.txt"), "--t", "3"});
  EXPECT_EQ(r.code, 1);
}

TEST_F(Cli, OaVerifyReportsTamperedRows) {
  build_family();
  auto text = read_file(path("oa16.txt"));
  const auto first_row = text.find('\n') + 1;
  text[first_row] = text[first_row] == '0' ? '1' : '0';
  write_file(path("bad.txt"), text);
  const auto r = call({"oa", "verify", "--in", path("bad.txt"), "--t", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("rows (0,"), std::string::npos) << r.err;
}

TEST_F(Cli, OaVerifyChecksLambdaClaim) {
  write_file(path("claim.txt"), "OA 4 1 2 1 1\n0 0 1 1\n");
  const auto r = call({"oa", "verify", "--in", path("claim.txt")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("claims lambda 1, counted 2"), std::string::npos);
}

TEST_F(Cli, EulerBuildAndVerify) {
  build_family();
  const auto text = read_file(path("eoa.txt"));
  EXPECT_EQ(text.substr(0, 16), "OA 256 5 4 2 16\n");
  EXPECT_NE(text.find("\nEULER 2 1\n"), std::string::npos);
  const auto r = call({"euler", "verify", "--in", path("eoa.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("full_generating_sets=10/10"), std::string::npos);
}

TEST_F(Cli, EulerVerifyRejectsShuffledColumns) {
  build_family();
  std::istringstream is(read_file(path("eoa.txt")));
  auto file = read_array(is);
  std::vector<std::size_t> order(file.runs);
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = (j * 37) % file.runs;
  std::ostringstream os;
  write_array(os, file.entries.permute_columns(order), file.q, file.t, file.lambda, file.euler);
  write_file(path("shuffled.txt"), os.str());
  EXPECT_EQ(call({"oa", "verify", "--in", path("shuffled.txt")}).code, 0);
  EXPECT_EQ(call({"euler", "verify", "--in", path("shuffled.txt")}).code, 1);
  EXPECT_EQ(call({"sim", "eulerian", "--oa", path("shuffled.txt"), "--t", "2"}).code, 1);
}

TEST_F(Cli, EulerToyCycle) {
  const auto r = call({"euler", "build", "--q", "2", "--k", "1", "--rows", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "OA 4 1 2 1 2\n0 0 1 1\nEULER 1 1\n");
  EXPECT_EQ(call({"euler", "build", "--q", "2", "--k", "1", "--rows", "2"}).code, 2);
  EXPECT_EQ(call({"euler", "build", "--q", "2"}).code, 2);
}

TEST_F(Cli, ScheduleExportAndVerify) {
  build_family();
  auto r = call({"schedule", "export", "--oa", path("eoa.txt"), "--delta", "0.1", "--out",
                 path("s.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("256 segments x 5 channels"), std::string::npos);
  const auto s = schedule_from_json(read_file(path("s.json")));
  EXPECT_EQ(s.size(), 256u);
  r = call({"schedule", "verify", "--in", path("s.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(call({"schedule", "export", "--oa", path("oa16.txt")}).code, 1);
}

TEST_F(Cli, SimEulerianPasses) {
  build_family();
  const auto r = call({"sim", "eulerian", "--oa", path("eoa.txt"), "--n", "5", "--t", "2", "--seed",
                       "7", "--denv", "2", "--out", path("r.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(read_file(path("r.json")).find("\"pass\": true"), std::string::npos);
}

TEST_F(Cli, SimBangBangFailsForThreeBodyDrift) {
  build_family();
  const auto r = call({"sim", "bangbang", "--oa", path("oa16.txt"), "--n", "5", "--t", "3",
                       "--seed", "7", "--out", path("r.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("exceeds strength 2"), std::string::npos);
}

TEST_F(Cli, SimSweepReportsSecondOrderSlope) {
  build_family();
  const auto r = call({"sim", "eulerian", "--oa", path("eoa.txt"), "--t", "2", "--denv", "2",
                       "--n", "3", "--sweep-tc", "3", "--out", path("r.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  std::smatch m;
  const auto text = read_file(path("r.json"));
  ASSERT_TRUE(std::regex_search(text, m, std::regex("\"slope\": ([-0-9.e]+)")));
  EXPECT_NEAR(std::stod(m[1]), 2.0, 0.3);
}

TEST_F(Cli, SimAcceptsDriftFile) {
  build_family();
  write_file(path("drift.json"),
             R"({"n": 2, "d": 2, "terms": [{"support": [0, 1], "sys": )"
             R"([[[1,0],[0,0],[0,0],[0,0]],[[0,0],[-1,0],[0,0],[0,0]],)"
             R"([[0,0],[0,0],[-1,0],[0,0]],[[0,0],[0,0],[0,0],[1,0]]]}]})");
  EXPECT_EQ(call({"sim", "bangbang", "--oa", path("oa16.txt"), "--drift", path("drift.json")}).code, 0);
  EXPECT_EQ(call({"sim", "bangbang", "--oa", path("oa16.txt"), "--drift", path("drift.json"),
                  "--n", "3"})
                .code,
            2);
}

TEST_F(Cli, SimRejectsBadParameters) {
  build_family();
  EXPECT_EQ(call({"sim", "eulerian", "--oa", path("eoa.txt")}).code, 2);  // no drift
  EXPECT_EQ(call({"sim", "eulerian", "--oa", path("eoa.txt"), "--t", "2", "--n", "9"}).code, 2);
  EXPECT_EQ(call({"sim", "eulerian", "--oa", path("eoa.txt"), "--t", "2", "--method", "rk4"}).code, 2);
  EXPECT_EQ(call({"sim", "eulerian", "--oa", path("eoa.txt"), "--t", "2", "--delta", "-1"}).code, 2);
  write_file(path("gf8.txt"), "OA 8 1 8 1 1\n0 1 2 3 4 5 6 7\n");
  EXPECT_EQ(call({"sim", "bangbang", "--oa", path("gf8.txt"), "--t", "1"}).code, 2);
}

TEST_F(Cli, OutputsAreDeterministic) {
  build_family();
  const auto first = read_file(path("eoa.txt"));
  ASSERT_EQ(call({"euler", "build", "--code", path("dh.txt"), "--out", path("eoa2.txt")}).code, 0);
  EXPECT_EQ(read_file(path("eoa2.txt")), first);
  const std::vector<std::string> sim_args{"sim", "eulerian", "--oa", path("eoa.txt"), "--t", "2",
                                          "--seed", "3", "--denv", "2"};
  const auto a = call(sim_args), b = call(sim_args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

}  // namespace
}  // namespace eoa::cli
