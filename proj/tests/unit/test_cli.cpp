#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace sgdgs;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "sgdgs");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("sgdgs-test-" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST(Cli, CertifyExampleDataset) {
  const Outcome r = invoke({"certify", "--dataset", "example1-poly", "--json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["verdict"], "Certified-DGS");
  EXPECT_EQ(j["result"]["s"], "261502945");
  EXPECT_EQ(j["result"]["irreducible"], true);
}

TEST(Cli, NotCertifiedStillExitsZero) {
  const Outcome r = invoke({"certify", "--dataset", "remark1"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("Not-Certified"), std::string::npos);
}

TEST(Cli, JsonIsByteStable) {
  const Outcome a = invoke({"--json", "certify", "--dataset", "remark2"});
  const Outcome b = invoke({"certify", "--dataset", "remark2", "--json"});
  EXPECT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(invoke({"--json", "recover-q", "dataset:remark1-a", "dataset:remark1-b"}).out,
            invoke({"--json", "recover-q", "dataset:remark1-a", "dataset:remark1-b"}).out);
}

TEST(Cli, RecoverQOnRemarkOne) {
  const Outcome r = invoke({"recover-q", "dataset:remark1-a", "dataset:remark1-b", "--json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["recovery"]["denominator"], "7");
  EXPECT_NE(r.out.find("BlockDiagonal"), std::string::npos);
}

TEST(Cli, InputErrorsExitOne) {
  EXPECT_EQ(invoke({}).code, cli::kExitInput);
  EXPECT_EQ(invoke({"certify", "/nonexistent/file.sg"}).code, cli::kExitInput);
  EXPECT_EQ(invoke({"certify", "--dataset", "nope"}).code, cli::kExitInput);
  EXPECT_EQ(invoke({"spectra", "dataset:nope"}).code, cli::kExitInput);
  EXPECT_EQ(invoke({"exhaustive-check", "--n", "12"}).code, cli::kExitInput);
  EXPECT_EQ(invoke({"--jobs", "0", "spectra", "dataset:remark1-a"}).code, cli::kExitInput);
  EXPECT_EQ(invoke({"dataset", "nope"}).code, cli::kExitInput);
}

TEST(Cli, NonTreeIsRejected) {
  const auto dir = scratch_dir("cycle");
  std::ofstream(dir / "c3.sg") << "3 3\n1 2 1\n2 3 1\n1 3 -1\n";
  const Outcome r = invoke({"certify", (dir / "c3.sg").string()});
  EXPECT_EQ(r.code, cli::kExitInput);
  EXPECT_NE(r.err.find("not a tree"), std::string::npos);
}

TEST(Cli, MaxNFromEnvironment) {
  ::setenv("SPECTRAL_MAX_N", "4", 1);
  const Outcome r = invoke({"search-mates", "dataset:remark1-a", "--pool-n", "6"});
  ::unsetenv("SPECTRAL_MAX_N");
  EXPECT_EQ(r.code, cli::kExitInput);
  EXPECT_EQ(invoke({"--max-n", "4", "search-mates", "dataset:remark1-a", "--pool-n", "6"}).code, cli::kExitInput);
}

TEST(Cli, DatasetEmitRoundTrips) {
  const auto dir = scratch_dir("emit");
  const Outcome r = invoke({"dataset", "remark1", "--emit", "--out-dir", dir.string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  std::ifstream fa(dir / "remark1-a.sg"), fb(dir / "remark1-b.sg");
  EXPECT_EQ(adjacency(read_sg(fa)), adjacency(datasets::remark1_a()));
  EXPECT_EQ(adjacency(read_sg(fb)), adjacency(datasets::remark1_b()));
  const Outcome v = invoke({"verify-structure", (dir / "remark1-a.sg").string(), (dir / "remark1-b.sg").string()});
  EXPECT_EQ(v.code, cli::kExitOk);
  EXPECT_NE(v.out.find("block structure holds: true"), std::string::npos);
}

TEST(Cli, MatrixInput) {
  const auto dir = scratch_dir("matrix");
  std::ofstream(dir / "p2.txt") << "2 2\n0 1\n1 0\n";
  const Outcome r = invoke({"--matrix", "certify", (dir / "p2.txt").string()});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("reducible"), std::string::npos);
}

TEST(Cli, LemmaAndExhaustive) {
  EXPECT_EQ(invoke({"verify-lemma34", "dataset:remark1-a"}).code, cli::kExitOk);
  const Outcome e = invoke({"exhaustive-check", "--n", "6", "--json"});
  ASSERT_EQ(e.code, cli::kExitOk) << e.err;
  const auto j = nlohmann::json::parse(e.out);
  EXPECT_EQ(j["command"], "exhaustive-check");
}
