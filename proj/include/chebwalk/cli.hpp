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
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "chebwalk/estimators.hpp"

namespace chebwalk::cli {

enum class StateSource { None, File, Basis, Uniform };

struct RunConfig {
  std::string command;
  std::string matrix_path;
  std::string matrix_b_path;
  StateSource state_source = StateSource::None;
  std::string state_path;
  Index basis_index = 0;
  /// How many state sources were given on the command line.
  int state_source_count = 0;
  std::uint64_t shots = kDefaultShots;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::string> method;
  int order = 1;
  bool json = false;
  bool verify = false;
  int max_iterations = 60;
  double tolerance = 1e-3;
};

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;

struct RunOutcome {
  int exit_code = kExitOk;
  /// Text for stdout (JSON document or table).
  std::string output;
  /// Diagnostic for stderr; empty on success.
  std::string error;
};

/// Parses argv into a config. On --help or a parse error, returns nullopt and
/// fills `outcome` with what to print and the exit status.
std::optional<RunConfig> parse_args(int argc, const char *const *argv,
                                    RunOutcome &outcome);

/// Throws ValidationError for an inconsistent config.
void validate(const RunConfig &config);

/// Executes one command. Never throws for input or numerical problems; those
/// become exit statuses 1 and 2.
RunOutcome run(const RunConfig &config);

/// JSON form of an estimate, following the result schema.
nlohmann::ordered_json estimate_json(const ShotEstimate &e);

} // namespace chebwalk::cli
