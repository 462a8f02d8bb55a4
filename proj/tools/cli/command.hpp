// Copyright 2026 The multseq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MULTSEQ_TOOLS_CLI_COMMAND_HPP_
#define MULTSEQ_TOOLS_CLI_COMMAND_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace multseq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidCertificate = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by parse_args for -h/--help; what() is the help text.
struct HelpRequested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Command {
  std::string verb;  // classify | apply | verify | symbol | certify
  std::string basis = "monomial";
  std::optional<std::string> alpha;
  std::string seq;
  bool complete = false;
  std::uint64_t seed = 0;
  int trials = 200;
  int max_degree = 8;
  int order = 4;
  std::optional<std::string> tolerance;
  std::string poly;  // apply input, "c0,c1,..."
  int cap = -1;
  bool timing = false;
  std::string report;  // certify input path, "-" for stdin
};

// argv without the program name. Throws UsageError naming the offending token,
// or HelpRequested.
// Reads MULTSEQ_DEFAULT_TRIALS when --trials is absent.
Command parse_args(const std::vector<std::string>& args);

// Writes one JSON document to out and diagnostics to err; returns the exit code.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

// parse_args + run with usage errors mapped to kExitUsage.
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace multseq::cli

#endif  // MULTSEQ_TOOLS_CLI_COMMAND_HPP_
