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

#ifndef GDP_TRACE_H_
#define GDP_TRACE_H_

// Text formats: edge-list graphs, choice scripts, NDJSON traces, CSV export.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gdp/executor.h"

namespace gdp {

// First significant line "n <count>", then one "j k" pair per line.
// Blank lines and '#' comments are ignored. Errors cite the line number.
ConflictGraph parse_graph(const std::string& text);

// One row of 0/1/. per line, one character per vertex.
std::vector<MaybeChoiceMap> parse_script(const std::string& text, int width);

// NDJSON, one record per line with keys step, act, choice, cmd, prio, mode;
// distributed records add dvec, and their first record the neighbour order.
std::string record_json(const ConflictGraph& g, const StepRecord& record,
                        const NeighbourOrder* order = nullptr);
void write_trace(std::ostream& out, const ConflictGraph& g, const Trace& trace);

struct ParsedTrace {
  std::vector<StepRecord> records;
  std::optional<NeighbourOrder> order;
};

// Records in file order. Throws InvalidInput citing the line on bad input.
ParsedTrace read_trace(std::istream& in, const ConflictGraph& g);

// Records of one mode, in file order.
std::vector<StepRecord> select_mode(const std::vector<StepRecord>& records,
                                    TraceMode mode);

// Long format: one row per (step, vertex).
void write_csv(std::ostream& out, const ConflictGraph& g,
               const std::vector<StepRecord>& records);

std::string read_file(const std::string& path);

}  // namespace gdp

#endif  // GDP_TRACE_H_
