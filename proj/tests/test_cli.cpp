// Copyright 2026 The chebwalk Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <fstream>
#include <initializer_list>

#include <gtest/gtest.h>

#include "chebwalk/cli.hpp"

namespace chebwalk::cli {
namespace {

using json = nlohmann::json;

const std::string kData = CHEBWALK_DATA_DIR;

std::string data(const std::string &name) { return kData + "/" + name; }

RunOutcome invoke(std::initializer_list<std::string> args) {
  std::vector<std::string> storage = {"chebwalk"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const auto &a : storage) {
    argv.push_back(a.c_str());
  }
  RunOutcome outcome;
  const auto config = parse_args(static_cast<int>(argv.size()), argv.data(), outcome);
  if (!config) {
    return outcome;
  }
  return run(*config);
}

json invoke_json(std::initializer_list<std::string> args, int expected_exit = kExitOk) {
  const RunOutcome r = invoke(args);
  EXPECT_EQ(r.exit_code, expected_exit) << r.error;
  return json::parse(r.output);
}

json expected(const std::string &name) {
  std::ifstream in(data("expected/" + name + ".json"));
  return json::parse(in);
}

TEST(Cli, TraceOfIdentity) {
  const json j = invoke_json(
      {"trace", "--matrix", data("id4.qmat"), "--method", "entangled", "--shots", "0", "--json"});
  EXPECT_EQ(j["command"], "trace");
  EXPECT_EQ(j["method"], "entangled");
  EXPECT_DOUBLE_EQ(j["estimate"]["re"].get<double>(), 4.0);
  EXPECT_DOUBLE_EQ(j["exact"]["re"].get<double>(), 4.0);
  EXPECT_EQ(j["stderr"].get<double>(), 0.0);
  EXPECT_EQ(j["shots"].get<int>(), 0);
}

TEST(Cli, SchemaFields) {
  const json j = invoke_json({"trace", "--matrix", data("rand8a.qmat"), "--json"});
  for (const char *key : {"command", "method", "estimate", "abs", "stderr", "shots", "seed",
                          "normalization"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_TRUE(j["estimate"].contains("re"));
  EXPECT_TRUE(j["estimate"].contains("im"));
  // Shot mode without --verify carries no noiseless value.
  EXPECT_FALSE(j.contains("exact"));
  EXPECT_GT(j["stderr"].get<double>(), 0.0);
  EXPECT_EQ(j["seed"].get<std::uint64_t>(), kDefaultSeed);
  EXPECT_EQ(j["shots"].get<std::uint64_t>(), kDefaultShots);
}

TEST(Cli, ApplyMatchesDenseOracle) {
  const json want = expected("rand8a");
  const json j = invoke_json({"apply", "--matrix", data("rand8a.qmat"), "--state",
                              data("b8.qvec"), "--shots", "0", "--json"});
  EXPECT_NEAR(j["success_probability"].get<double>(),
              want["apply_success_probability"].get<double>(), 1e-12);
  EXPECT_NEAR(j["estimate"]["re"].get<double>(), want["apply_output_norm"].get<double>(), 1e-10);
  const auto &state = j["output_state"];
  const auto &ref = want["apply_output_state"];
  ASSERT_EQ(state.size(), ref.size());
  for (std::size_t k = 0; k < state.size(); ++k) {
    EXPECT_NEAR(state[k][0].get<double>(), ref[k][0].get<double>(), 1e-10);
    EXPECT_NEAR(state[k][1].get<double>(), ref[k][1].get<double>(), 1e-10);
  }
}

TEST(Cli, ExactModeHasNoStochasticFields) {
  const json j = invoke_json({"apply", "--matrix", data("rand8a.qmat"), "--state",
                              data("b8.qvec"), "--shots", "0", "--json"});
  EXPECT_FALSE(j.contains("successes"));
  EXPECT_FALSE(j.contains("stderr_im"));
  EXPECT_EQ(j["stderr"].get<double>(), 0.0);
  const json s = invoke_json({"apply", "--matrix", data("rand8a.qmat"), "--state",
                              data("b8.qvec"), "--json"});
  EXPECT_TRUE(s.contains("successes"));
}

TEST(Cli, VerifyWalkPasses) {
  const RunOutcome r = invoke({"verify-walk", "--matrix", data("rand8b.qmat")});
  EXPECT_EQ(r.exit_code, kExitOk) << r.output;
  const json j = invoke_json({"verify-walk", "--matrix", data("rand8b.qmat"), "--json"});
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_GE(j["checks"].size(), 8u);
  for (const auto &c : j["checks"]) {
    EXPECT_TRUE(c["passed"].get<bool>()) << c["name"];
  }
}

TEST(Cli, SameSeedSameBytes) {
  for (const std::string cmd : {"trace", "trace-prod", "frobenius", "eigmax", "apply"}) {
    std::vector<std::string> args = {cmd, "--matrix", data("rand8b.qmat"), "--json", "--seed", "99"};
    if (cmd == "trace-prod") {
      args.insert(args.end(), {"--matrix-b", data("rand8a.qmat")});
    }
    if (cmd == "apply") {
      args.insert(args.end(), {"--state", data("b8.qvec")});
    }
    std::vector<const char *> argv = {"chebwalk"};
    for (const auto &a : args) {
      argv.push_back(a.c_str());
    }
    RunOutcome o1, o2;
    const auto c1 = parse_args(static_cast<int>(argv.size()), argv.data(), o1);
    const auto c2 = parse_args(static_cast<int>(argv.size()), argv.data(), o2);
    ASSERT_TRUE(c1 && c2);
    const RunOutcome r1 = run(*c1);
    const RunOutcome r2 = run(*c2);
    EXPECT_EQ(r1.exit_code, kExitOk) << cmd << ": " << r1.error;
    EXPECT_EQ(r1.output, r2.output) << cmd;
  }
  const json a = invoke_json({"trace", "--matrix", data("rand8b.qmat"), "--json", "--seed", "1"});
  const json b = invoke_json({"trace", "--matrix", data("rand8b.qmat"), "--json", "--seed", "2"});
  EXPECT_NE(a["estimate"], b["estimate"]);
}

TEST(Cli, EnvironmentSeedIsOverriddenByFlag) {
  ::setenv("CHEBWALK_SEED", "555", 1);
  const json env = invoke_json({"trace", "--matrix", data("id4.qmat"), "--json"});
  const json flag = invoke_json({"trace", "--matrix", data("id4.qmat"), "--json", "--seed", "7"});
  ::unsetenv("CHEBWALK_SEED");
  EXPECT_EQ(env["seed"].get<int>(), 555);
  EXPECT_EQ(flag["seed"].get<int>(), 7);
}

TEST(Cli, ValidationErrorsExitOne) {
  const std::vector<std::vector<std::string>> cases = {
      {"apply", "--matrix", data("rand8a.qmat")},
      {"apply", "--matrix", data("rand8a.qmat"), "--uniform", "--basis", "1"},
      {"frobenius", "--matrix", data("rand8a.qmat"), "--method", "entangled"},
      {"trace", "--matrix", data("rand8a.qmat"), "--method", "swap"},
      {"trace-prod", "--matrix", data("rand8a.qmat")},
      {"trace", "--matrix", data("missing.qmat")},
      {"trace", "--matrix", data("rand8a.qmat"), "--shots", "-5"},
      {"apply", "--matrix", data("id4.qmat"), "--state", data("b8.qvec")},
      {"apply", "--matrix", data("id4.qmat"), "--basis", "4"},
      {"trace"},
      {"bogus"},
      {},
  };
  for (const auto &args : cases) {
    std::vector<const char *> argv = {"chebwalk"};
    for (const auto &a : args) {
      argv.push_back(a.c_str());
    }
    RunOutcome outcome;
    const auto config = parse_args(static_cast<int>(argv.size()), argv.data(), outcome);
    if (config) {
      outcome = run(*config);
    }
    EXPECT_EQ(outcome.exit_code, kExitValidation)
        << (args.empty() ? "<none>" : args.front()) << " " << outcome.error;
    EXPECT_FALSE(outcome.error.empty());
  }
}

TEST(Cli, ValidationErrorNamesField) {
  const RunOutcome r = invoke({"frobenius", "--matrix", data("id4.qmat"), "--method", "entangled",
                               "--json"});
  const json j = json::parse(r.output);
  EXPECT_EQ(j["error"]["kind"], "validation");
  EXPECT_EQ(j["error"]["message"].get<std::string>().rfind("method:", 0), 0u);
}

TEST(Cli, ZeroSuccessProbabilityExitsTwo) {
  const std::string path = ::testing::TempDir() + "/kernel.qmat";
  std::ofstream(path) << "qmat v1\n4 1\n0 0 1 0\n";
  const RunOutcome r = invoke({"apply", "--matrix", path, "--basis", "2", "--shots", "0"});
  EXPECT_EQ(r.exit_code, kExitNumerical);
  EXPECT_NE(r.error.find("success probability is zero"), std::string::npos);
  const RunOutcome e = invoke({"eigmax", "--matrix", path, "--basis", "3"});
  EXPECT_EQ(e.exit_code, kExitNumerical);
}

TEST(Cli, HelpExitsZero) {
  const RunOutcome r = invoke({"--help"});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_NE(r.output.find("trace-prod"), std::string::npos);
}

TEST(Cli, TableOutput) {
  const RunOutcome r = invoke({"trace", "--matrix", data("id4.qmat"), "--shots", "0"});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_NE(r.output.find("estimate  4.0 + 0.0i"), std::string::npos) << r.output;
}

TEST(Cli, FrobeniusReportsBothRoutes) {
  const json want = expected("rand8b");
  const json j = invoke_json({"frobenius", "--matrix", data("rand8b.qmat"), "--shots", "0", "--json"});
  EXPECT_EQ(j["method"], "both");
  EXPECT_NEAR(j["routes"]["mixed_state"]["estimate"]["re"].get<double>(),
              want["frobenius"].get<double>(), 1e-9);
  EXPECT_NEAR(j["routes"]["product"]["estimate"]["re"].get<double>(),
              want["frobenius"].get<double>(), 1e-9);
  EXPECT_LT(j["discrepancy"].get<double>(), 1e-9);
}

// Every corpus instance against the values committed by the dense oracle.
class Corpus : public ::testing::TestWithParam<std::string> {};

TEST_P(Corpus, ExactModeMatchesCommittedValues) {
  const std::string name = GetParam();
  const json want = expected(name);
  const std::string m = data(name + ".qmat");
  const std::string partner = data(want["partner"].get<std::string>() + ".qmat");

  for (const std::string method : {"relocation", "entangled"}) {
    const json t = invoke_json({"trace", "--matrix", m, "--method", method, "--shots", "0", "--json"});
    EXPECT_NEAR(t["estimate"]["re"].get<double>(), want["trace"][0].get<double>(), 1e-10) << method;
  }
  const json p = invoke_json(
      {"trace-prod", "--matrix", m, "--matrix-b", partner, "--shots", "0", "--json"});
  EXPECT_NEAR(p["estimate"]["re"].get<double>(), want["trace_product"][0].get<double>(), 1e-10);
  const json f = invoke_json({"frobenius", "--matrix", m, "--shots", "0", "--json"});
  EXPECT_NEAR(f["estimate"]["re"].get<double>(), want["frobenius"].get<double>(), 1e-9);
  EXPECT_NEAR(f["success_probability"].get<double>(),
              want["mixed_state_probability"].get<double>(), 1e-12);

  const bool uniform = want["state"] == "uniform";
  const json a = uniform ? invoke_json({"apply", "--matrix", m, "--uniform", "--shots", "0", "--json"})
                         : invoke_json({"apply", "--matrix", m, "--state", data("b8.qvec"),
                                        "--shots", "0", "--json"});
  EXPECT_NEAR(a["success_probability"].get<double>(),
              want["apply_success_probability"].get<double>(), 1e-12);

  const RunOutcome v = invoke({"verify-walk", "--matrix", m});
  EXPECT_EQ(v.exit_code, kExitOk);
}

INSTANTIATE_TEST_SUITE_P(Examples, Corpus,
                         ::testing::Values("id4", "diag4", "rand8a", "rand8b"));

TEST(Cli, EigmaxOnGappedCorpusInstance) {
  const json want = expected("rand8b");
  const json j = invoke_json({"eigmax", "--matrix", data("rand8b.qmat"), "--shots", "0",
                              "--tol", "1e-7", "--max-iter", "500", "--json"});
  EXPECT_TRUE(j["converged"].get<bool>());
  EXPECT_FALSE(j["stagnated"].get<bool>());
  EXPECT_NEAR(j["estimate"]["re"].get<double>(), want["lambda_max"].get<double>(), 1e-3);
}

TEST(Cli, EigmaxFlagsNearlyTiedSpectrum) {
  // Eigenvalues close to -1.33 and +1.33: the iterates cannot settle.
  const json j = invoke_json({"eigmax", "--matrix", data("rand8a.qmat"), "--shots", "0", "--json"});
  EXPECT_TRUE(j["stagnated"].get<bool>());
}

} // namespace
} // namespace chebwalk::cli
