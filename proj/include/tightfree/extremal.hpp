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

// Exact maximum edge counts of tight-cycle-free r-uniform hypergraphs on n
// vertices, for n small enough to search, and density tables comparing the
// pipeline with the star and complete r-partite baselines.

#ifndef TIGHTFREE_EXTREMAL_HPP_
#define TIGHTFREE_EXTREMAL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tightfree/constructions.hpp"
#include "tightfree/hypergraph.hpp"

namespace tightfree {

inline constexpr std::size_t kDefaultCandidateCap = 40;

struct ExtremalResult {
  int r = 0;
  Vertex n = 0;
  std::size_t value = 0;
  Hypergraph witness;
  std::uint64_t nodes_explored = 0;
  bool exhaustive = false;
};

// Branch and bound over the C(n, r) candidate edges in lexicographic order.
// An included edge must not close a tight cycle, which is tested by a search
// rooted at that edge alone. The incumbent starts at the star. With
// exhaustive = false the value is only a certified lower bound.
// Throws Error when C(n, r) exceeds candidate_cap.
ExtremalResult exact_extremal(int r, Vertex n,
                              std::optional<std::uint64_t> node_budget = {},
                              std::size_t candidate_cap = kDefaultCandidateCap);

// Cache file: one record per line,
//   r n value exhaustive e1 e2 ...
// with exhaustive as 0/1 and each edge written as comma-joined vertices,
// e.g. "3 4 3 1 0,1,2 0,1,3 0,2,3". Lines starting with '#' are ignored.
std::vector<ExtremalResult> read_extremal_cache(std::string_view text);
std::string write_extremal_cache(const std::vector<ExtremalResult>& records);

// Looks (r, n) up in the cache file at `path` (missing file = empty cache);
// on a miss, or a non-exhaustive hit, computes and rewrites the file. Cached
// witnesses are re-checked before use.
ExtremalResult exact_extremal_cached(int r, Vertex n, const std::string& path,
                                     std::optional<std::uint64_t> node_budget = {});

struct ComparisonRow {
  int r = 0;
  std::size_t n = 0;
  std::string construction;  // "star", "complete_partite", "lifted"
  std::uint64_t seed = 0;    // lifted rows only
  std::size_t edges = 0;
  std::size_t total_vertices = 0;
  Rational density{0, 1};    // edges / total_vertices^(r-1)
  std::string tight_cycles;  // "free", "contains tight cycles", "unverified"
};

// Per n: the star and balanced complete r-partite hypergraph on n vertices,
// and the best construct_r_uniform output over `seeds`. Densities are each
// row's edges over its own vertex count^(r-1).
std::vector<ComparisonRow> compare_constructions(
    int r, const std::vector<std::size_t>& n_values,
    const std::vector<std::uint64_t>& seeds, const PipelineParams& base = {},
    std::uint64_t verify_state_budget = 10'000'000);

// Header row "r,n,construction,seed,edges,total_vertices,density_ratio,
// density_ratio_float,tight_cycles".
std::string to_csv(const std::vector<ComparisonRow>& rows);

}  // namespace tightfree

#endif  // TIGHTFREE_EXTREMAL_HPP_
