// Copyright 2026 The tightfree Authors
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

#ifndef TIGHTFREE_REPORT_HPP_
#define TIGHTFREE_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tightfree/hypergraph.hpp"

namespace tightfree {

// One uniformity level of a construction.
struct StageCount {
  int r = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;

  friend bool operator==(const StageCount&, const StageCount&) = default;
};

struct ConstructionReport {
  int r = 3;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t t = 0;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  std::size_t template_edges = 0;
  std::size_t family_edge_sum = 0;
  double union_coverage_ratio = 0.0;
  double predicted_missing_fraction = 1.0;
  std::size_t hyperedge_count = 0;
  std::size_t total_vertices = 0;
  Rational density{0, 1};  // hyperedge_count / total_vertices^(r-1)
  std::vector<StageCount> stages;
  // Filled in by callers that run a check (the CLI does).
  std::string verification = "not run";
  std::string fast_check = "not run";

  friend bool operator==(const ConstructionReport&,
                         const ConstructionReport&) = default;
};

// "key: value" lines for people.
std::string to_text(const ConstructionReport& rep);

// "format=1" followed by "key=value" lines. Doubles are written in their
// shortest round-trip form, so parse_report(to_machine(x)) == x.
std::string to_machine(const ConstructionReport& rep);
ConstructionReport parse_report(std::string_view machine_text);

}  // namespace tightfree

#endif  // TIGHTFREE_REPORT_HPP_
