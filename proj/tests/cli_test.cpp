// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

using scissors::cli::ExitCode;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = scissors::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) { return std::string(SCISSORS_TEST_TMP) + "/" + name; }

// Writes a fixture document once and returns its path.
std::string fixture_file(const std::vector<std::string>& params) {
  std::string name = "cli";
  for (const auto& s : params) name += "_" + s;
  std::string path = tmp(name + ".json");
  std::vector<std::string> args{"fixture"};
  args.insert(args.end(), params.begin(), params.end());
  args.insert(args.end(), {"--emit", path});
  Result r = run(args);
  EXPECT_EQ(r.code, ExitCode::kOk) << r.err;
  return path;
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, ExitCode::kFormat);
  EXPECT_EQ(run({"frobnicate"}).code, ExitCode::kFormat);
  EXPECT_EQ(run({"--help"}).code, ExitCode::kOk);
  EXPECT_EQ(run({"homology", "x.json", "--space", "level7"}).code, ExitCode::kFormat);
}

TEST(Cli, ValidatePreorder) {
  Result r = run({"validate", fixture_file({"preorder5"})});
  EXPECT_EQ(r.code, ExitCode::kOk) << r.err;
  EXPECT_TRUE(has(r.out, "category: OK"));
  EXPECT_TRUE(has(r.out, "axiom R: OK"));
}

TEST(Cli, K0Table) {
  Result r = run({"k0", fixture_file({"finite_sets", "3"})});
  EXPECT_EQ(r.code, ExitCode::kOk) << r.err;
  EXPECT_TRUE(has(r.out, "K0 = Z\n"));
  EXPECT_TRUE(has(r.out, "rank: 1"));
  EXPECT_TRUE(has(r.out, "torsion: none"));
}

TEST(Cli, JsonOutput) {
  Result r = run({"--json", "k0", fixture_file({"sphere_group", "S3"})});
  EXPECT_EQ(r.code, ExitCode::kOk) << r.err;
  ASSERT_FALSE(r.out.empty());
  EXPECT_EQ(r.out.front(), '{');
  EXPECT_TRUE(has(r.out, "\"rank\": 1"));
}

TEST(Cli, LocalizeReportsComplementFailure) {
  Result r = run({"localize", fixture_file({"preorder5"}), "--sieve", "D"});
  EXPECT_EQ(r.code, ExitCode::kFailure);
  EXPECT_TRUE(has(r.out, "sieve hypothesis: OK"));
  EXPECT_TRUE(has(r.out, "complements hypothesis: FAIL"));
  EXPECT_TRUE(has(r.out, "A<B (out of A) lies in no finite disjoint covering family"));
}

TEST(Cli, LocalizeIntervals) {
  Result r = run({"localize", fixture_file({"intervals", "1", "2", "total"}), "--sieve", "points"});
  EXPECT_EQ(r.code, ExitCode::kOk) << r.out << r.err;
  EXPECT_TRUE(has(r.out, "complements hypothesis: OK"));
  EXPECT_TRUE(has(r.out, "π₀ exactness: OK"));
}

TEST(Cli, Devissage) {
  Result r = run({"devissage", fixture_file({"finite_sets", "3"}), "--sub", "points"});
  EXPECT_EQ(r.code, ExitCode::kOk) << r.err;
  EXPECT_TRUE(has(r.out, "subassembler: OK"));
  EXPECT_TRUE(has(r.out, "π₀: iso Z→Z"));
}

TEST(Cli, QuotientEmitsADocument) {
  std::string out = tmp("cli_quotient.json");
  Result r = run({"quotient", fixture_file({"preorder5"}), "--sieve", "D", "--emit", out});
  EXPECT_EQ(r.code, ExitCode::kOk) << r.err;
  EXPECT_TRUE(has(r.out, "K0(C\\D) = Z^2"));
  Result k = run({"k0", out});
  EXPECT_EQ(k.code, ExitCode::kOk) << k.err;
  EXPECT_TRUE(has(k.out, "K0 = Z^2"));
}

TEST(Cli, SinkGroup) {
  Result r = run({"sink-group", fixture_file({"sphere_group", "S3"})});
  EXPECT_EQ(r.code, ExitCode::kOk) << r.err;
  EXPECT_TRUE(has(r.out, "order: 6"));
  EXPECT_TRUE(has(r.out, "projection to S_G: OK"));
  Result bad = run({"sink-group", fixture_file({"preorder5"})});
  EXPECT_EQ(bad.code, ExitCode::kFailure);
  EXPECT_TRUE(has(bad.out, "condition (Ep): FAIL"));
}

TEST(Cli, WCategory) {
  Result r = run({"wcat", fixture_file({"sphere_group", "1"}), "--max-tuple", "3"});
  EXPECT_EQ(r.code, ExitCode::kOk) << r.err;
  EXPECT_TRUE(has(r.out, "all morphisms monic: holds"));
  EXPECT_TRUE(has(r.out, "components: 4"));
}

TEST(Cli, Homology) {
  Result r = run({"homology", fixture_file({"sphere_group", "Z2"}), "--space", "level1", "--degree", "2",
                  "--max-tuple", "2"});
  EXPECT_EQ(r.code, ExitCode::kOk) << r.err;
  EXPECT_TRUE(has(r.out, "H0 = Z\n"));
  EXPECT_TRUE(has(r.out, "H1 = Z\n"));
  EXPECT_TRUE(has(r.out, "boundary squared zero: OK"));
}

TEST(Cli, ScissorsCongruence) {
  std::string file = fixture_file({"intervals", "1", "2", "total"});
  Result r = run({"sc", file, "[00,01]", "[01,02]"});
  EXPECT_EQ(r.code, ExitCode::kOk) << r.err;
  EXPECT_TRUE(has(r.out, "equal K0 classes: yes"));
}

TEST(Cli, BudgetExhaustion) {
  std::string file = fixture_file({"finite_sets", "3"});
  EXPECT_EQ(run({"--budget", "10", "k0", file}).code, ExitCode::kBudget);
  setenv(scissors::cli::kBudgetVariable, "10", 1);
  Result r = run({"k0", file});
  unsetenv(scissors::cli::kBudgetVariable);
  EXPECT_EQ(r.code, ExitCode::kBudget);
  EXPECT_TRUE(has(r.err, "budget exhausted"));
  setenv(scissors::cli::kBudgetVariable, "lots", 1);
  EXPECT_EQ(run({"k0", file}).code, ExitCode::kFormat);
  unsetenv(scissors::cli::kBudgetVariable);
}

TEST(Cli, MalformedDocument) {
  std::string path = tmp("cli_broken.json");
  std::ofstream(path) << "{\"initial\": ";
  Result r = run({"validate", path});
  EXPECT_EQ(r.code, ExitCode::kFormat);
  EXPECT_TRUE(has(r.err, "malformed JSON"));
  EXPECT_EQ(run({"validate", tmp("missing.json")}).code, ExitCode::kFormat);
}

TEST(Cli, UnknownFixture) {
  EXPECT_EQ(run({"fixture", "klein_bottle"}).code, ExitCode::kFailure);
}

}  // namespace
