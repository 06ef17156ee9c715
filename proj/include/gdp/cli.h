// Copyright 2026 The gdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GDP_CLI_H_
#define GDP_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gdp/executor.h"

namespace gdp {

struct RunConfig {
  std::string graph_path;
  // centralized, distributed or both.
  std::string mode = "centralized";
  std::string dynamics = "polled";
  std::string plant = "paced";
  // scripted, seeded or bounded. A script path implies scripted.
  std::string stream = "bounded";
  std::uint64_t seed = 1;
  int max_eat = 3;
  double p_switch = 0.5;
  std::string script_path;
  std::int64_t horizon = 100;
  std::string out_path;
  std::string csv_path;
  // ascending, descending, shuffled:SEED or a file of "j: k1 k2" lines.
  std::string order = "ascending";
  bool parallel = false;
};

// Throws InvalidInput on out-of-range settings.
void validate(const RunConfig& config);

NeighbourOrder parse_order(const std::string& spec, const ConflictGraph& g);

ChoiceStream make_stream(const RunConfig& config, const ConflictGraph& g);

// Entry point behind the gdp binary; args exclude the program name.
// Returns 0 on success, 1 on violations or differences, 2 on errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gdp

#endif  // GDP_CLI_H_
