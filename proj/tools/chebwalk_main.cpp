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
#include <iostream>

#include "chebwalk/cli.hpp"

int main(int argc, char **argv) {
  chebwalk::cli::RunOutcome outcome;
  const auto config = chebwalk::cli::parse_args(argc, argv, outcome);
  if (config) {
    outcome = chebwalk::cli::run(*config);
  }
  std::cout << outcome.output;
  if (!outcome.error.empty()) {
    std::cerr << "chebwalk: " << outcome.error;
    if (outcome.error.back() != '\n') {
      std::cerr << '\n';
    }
  }
  return outcome.exit_code;
}
