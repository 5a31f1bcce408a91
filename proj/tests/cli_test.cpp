#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "sethlab/desk_profile.hpp"
#include "sethlab/orthogonal_vectors.hpp"
#include "sethlab/reduction.hpp"

#ifndef SETH_LAB_BINARY
#error "SETH_LAB_BINARY must point at the seth-lab executable"
#endif

namespace fs = std::filesystem;
using namespace sethlab;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("seth_lab_cli_") + info->name() + "_" + std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  CliResult run(const std::string& args) const {
    const auto err_path = dir_ / "stderr.txt";
    const std::string cmd = std::string("\"") + SETH_LAB_BINARY + "\" " + args + " 2>\"" + err_path.string() + "\"";
    CliResult r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err_path);
    return r;
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write_instance(const std::string& name, const OvInstance& inst) const {
    std::ofstream(path(name)) << to_json(inst).dump() << '\n';
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, EdBasics) {
  auto r = run("ed --a kitten --b sitting");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3\n");
  EXPECT_EQ(run("ed --a x --b x").out, "0\n");
  EXPECT_EQ(run("ed --a kitten --b sitting --engine dp").out, "3\n");
  EXPECT_EQ(run("ed --a kitten --b sitting --engine banded --k 3").out, "3\n");

  r = run("ed --a kitten --b sitting --engine banded --k 0");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, ">0\n");
}

TEST_F(Cli, EdFilesAndTrace) {
  std::ofstream(path("a.seq")) << "0101\n";
  std::ofstream(path("b.seq")) << "0011";
  const auto r = run("ed --a-file " + path("a.seq") + " --b-file " + path("b.seq") + " --trace");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 2), "2\n");
  EXPECT_GT(r.out.size(), 2u);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("ed --a kitten").code, 2);
  EXPECT_EQ(run("ed --a x --b y --engine nope").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("ed --a-file " + path("missing.seq") + " --b y").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, Pat) {
  EXPECT_EQ(run("pat --a ab --b xxabxx").out, "0\n");
  EXPECT_EQ(run("pat --a aa --b b").out, "2\n");
  EXPECT_EQ(run("pat --a \"\" --b anything").out, "0\n");
  EXPECT_EQ(run("pat --a abc --b xxabdxx --engine dp").out, "1\n");
}

TEST_F(Cli, GenOvIsDeterministic) {
  ASSERT_EQ(run("gen-ov --na 4 --nb 5 --d 6 --planted true --seed 11 --out " + path("x.json")).code, 0);
  ASSERT_EQ(run("gen-ov --na 4 --nb 5 --d 6 --planted true --seed 11 --out " + path("y.json")).code, 0);
  ASSERT_EQ(run("gen-ov --na 4 --nb 5 --d 6 --planted true --seed 12 --out " + path("z.json")).code, 0);
  EXPECT_EQ(slurp(path("x.json")), slurp(path("y.json")));
  EXPECT_NE(slurp(path("x.json")), slurp(path("z.json")));
  const auto inst = ov_from_json(nlohmann::json::parse(slurp(path("x.json"))));
  EXPECT_EQ(inst.a.size(), 4u);
  EXPECT_EQ(inst.b.size(), 5u);
  EXPECT_TRUE(solve_ov_bruteforce(inst).found);
  EXPECT_EQ(inst, gen_ov(4, 5, 6, true, default_no_pair_density, 11));
}

TEST_F(Cli, GenOvPairFree) {
  ASSERT_EQ(run("gen-ov --na 3 --nb 3 --d 8 --planted false --seed 2 --out " + path("x.json")).code, 0);
  EXPECT_FALSE(solve_ov_bruteforce(ov_from_json(nlohmann::json::parse(slurp(path("x.json"))))).found);
  // no pair-free instance with 200 vectors exists in dimension 1 at this density budget
  EXPECT_EQ(run("gen-ov --na 200 --nb 200 --d 1 --planted false --density 0.1 --seed 2 --out " + path("y.json")).code,
            1);
}

TEST_F(Cli, ReduceDesk) {
  const auto inst = write_instance("i.json", OvInstance{2, {{1, 0}, {1, 1}}, {{0, 1}, {1, 1}}});
  const auto r = run("reduce --instance " + inst + " --profile desk --out-dir " + path("red"));
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* f : {"p1.seq", "p1_prime.seq", "p2_prime.seq", "meta.json"})
    EXPECT_TRUE(fs::exists(dir_ / "red" / f)) << f;
  const auto meta = nlohmann::json::parse(slurp(dir_ / "red" / "meta.json"));
  const auto p = params_desk(2);
  EXPECT_EQ(meta.at("X").get<std::uint64_t>(), 2 * p.e_u());
  EXPECT_EQ(meta.at("E_u").get<std::uint64_t>(), p.e_u());
  const auto p2p = slurp(dir_ / "red" / "p2_prime.seq");
  EXPECT_EQ(meta.at("Y").get<std::uint64_t>(), 2 * p2p.size() + 2 * p.e_u());
  EXPECT_NE(r.out.find("X=" + std::to_string(2 * p.e_u())), std::string::npos);
}

TEST_F(Cli, ReducePaperPrintsLengthsOnly) {
  const auto inst = write_instance("i.json", OvInstance{1, {{1}, {0}}, {{1}, {1}}});
  const auto r = run("reduce --instance " + inst + " --profile paper --out-dir " + path("red"));
  EXPECT_EQ(r.code, 1);
  const auto len = predict_lengths(2, 2, params_paper(1));
  EXPECT_NE(r.out.find("p1_prime_length=" + std::to_string(len.p1_prime) + "\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("Y=" + std::to_string(len.y) + "\n"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir_ / "red" / "p1_prime.seq"));
  EXPECT_EQ(run("reduce --instance " + inst + " --profile paper --force --out-dir " + path("red")).code, 1);
}

TEST_F(Cli, SolveOvMethodsAgree) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const bool planted = seed % 2 == 0;
    const auto inst = gen_ov(2, 3, 2, planted, planted ? 0.5 : 0.7, seed);
    const auto file = write_instance("i" + std::to_string(seed) + ".json", inst);
    const std::string expected = planted ? "ORTHOGONAL-PAIR\n" : "NO-PAIR\n";
    EXPECT_EQ(run("solve-ov --instance " + file + " --method brute").out.substr(0, expected.size()), expected);
    EXPECT_EQ(run("solve-ov --instance " + file + " --method pat").out, expected);
    EXPECT_EQ(run("solve-ov --instance " + file + " --method edit").out, expected);
    EXPECT_EQ(run("solve-ov --instance " + file + " --method reduction --profile desk").out, expected);
  }
}

TEST_F(Cli, SolveOvSinglePair) {
  const auto file = write_instance("i.json", OvInstance{1, {{1}}, {{1}}});
  EXPECT_EQ(run("solve-ov --instance " + file + " --method brute").out, "NO-PAIR\n");
  EXPECT_EQ(run("solve-ov --instance " + file + " --method edit").out, "NO-PAIR\n");
  const auto zero = write_instance("z.json", OvInstance{1, {{1}}, {{0}}});
  EXPECT_EQ(run("solve-ov --instance " + zero + " --method brute").out, "ORTHOGONAL-PAIR\nwitness a=0 b=0\n");
}

TEST_F(Cli, ReducedRoundTrip) {
  for (bool planted : {true, false}) {
    const auto inst = gen_ov(2, 2, 2, planted, planted ? 0.5 : 0.7, 5);
    const auto file = write_instance("i.json", inst);
    const auto out_dir = path(planted ? "planted" : "free");
    ASSERT_EQ(run("reduce --instance " + file + " --out-dir " + out_dir).code, 0);
    const auto r = run("solve-ov --reduced " + out_dir);
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, run("solve-ov --instance " + file + " --method brute").out.substr(0, r.out.size()));
  }
  EXPECT_EQ(run("solve-ov --reduced " + path("nowhere")).code, 2);
}

TEST_F(Cli, VerifyDimensionOne) {
  const auto r = run("verify --d 1 --instances 4 --samples 200 --json " + path("v.json"));
  EXPECT_EQ(r.code, 0) << r.out;
  const auto p = params_desk(1);
  EXPECT_NE(r.out.find("E_u=" + std::to_string(p.e_u())), std::string::npos);
  EXPECT_NE(r.out.find("checks passed"), std::string::npos);
  const auto j = nlohmann::json::parse(slurp(path("v.json")));
  bool saw_cell = false;
  for (const auto& c : j)
    if (c.at("check") == "coordinate-table" && c.at("inputs").at("x1") == 1 && c.at("inputs").at("x2") == 1) {
      saw_cell = true;
      EXPECT_EQ(c.at("actual"), 3 * p.l0);
    }
  EXPECT_TRUE(saw_cell);
}

TEST_F(Cli, VerifyCorruptedParams) {
  const auto r = run("verify --d 1 --instances 2 --samples 20 --corrupt-l2 1");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("constraint (i)"), std::string::npos) << r.out;
  EXPECT_EQ(run("verify --d 5").code, 2);
  EXPECT_EQ(run("verify --d 1 --mode nope").code, 2);
}

TEST_F(Cli, Bench) {
  auto r = run("bench --selftest");
  EXPECT_EQ(r.code, 0);
  const auto fit = nlohmann::json::parse(r.out);
  EXPECT_NEAR(fit.at("exponent").template get<double>(), 2.0, 1e-6);

  r = run("bench --engines bitparallel --sizes 100,200,300,400 --trials 3 --out " + path("b.csv"));
  ASSERT_EQ(r.code, 0) << r.err;
  const auto csv = slurp(path("b.csv"));
  EXPECT_EQ(csv.rfind("engine,n,trial,wall_time_s,checksum\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 13);
  EXPECT_TRUE(fs::exists(path("b.csv") + ".fit.json"));

  EXPECT_EQ(run("bench --sizes 10,abc").code, 2);
  EXPECT_EQ(run("bench --sizes 10,20 --trials 2").code, 2);
  EXPECT_EQ(run("bench --engines fast --sizes 10").code, 2);
}
