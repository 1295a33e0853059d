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

// Exact tight-cycle detection.
//
// find_tight_cycle walks ordered tight paths depth first: a path v_0..v_j is
// extended by u when {v_{j-r+2}, ..., v_j, u} is an edge, and closed when the
// r-1 wrap-around windows are edges too. Each cycle is reported from one
// canonical rotation (v_0 is its smallest vertex) and orientation
// (v_1 <= v_{l-1}), so roots are (smallest vertex, edge through it).

#ifndef TIGHTFREE_DETECTOR_HPP_
#define TIGHTFREE_DETECTOR_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>

#include "tightfree/hypergraph.hpp"

namespace tightfree {

struct DetectOptions {
  // Default r + 1.
  std::optional<std::size_t> min_length;
  // Default n_vertices.
  std::optional<std::size_t> max_length;
  // Abort after this many search states.
  std::optional<std::uint64_t> state_budget;
  bool parallel_roots = false;
  // 0 means hardware concurrency; only read when parallel_roots is set.
  unsigned threads = 0;
};

enum class DetectStatus { kFree, kFound, kAborted };

struct DetectResult {
  DetectStatus status = DetectStatus::kFree;
  std::optional<TightCycleWitness> witness;
  std::uint64_t states = 0;

  bool found() const { return status == DetectStatus::kFound; }
  bool aborted() const { return status == DetectStatus::kAborted; }
};

// A cycle with length in [min_length, max_length], or kFree when none exists,
// or kAborted when the budget ran out first. Every returned witness has
// passed verify_witness.
DetectResult find_tight_cycle(const Hypergraph& h, const DetectOptions& opt = {});

// Throws BudgetExhausted instead of guessing when the search aborts.
bool is_tight_cycle_free(const Hypergraph& h, const DetectOptions& opt = {});

inline constexpr Vertex kBruteForceVertexCap = 10;

// Independent oracle: tries every vertex subset of admissible size and every
// cyclic order of it. Throws Error above `vertex_cap` vertices.
DetectResult brute_force_find(const Hypergraph& h, const DetectOptions& opt = {},
                              Vertex vertex_cap = kBruteForceVertexCap);

// Search specialised to 3-uniform hypergraphs whose edges each meet the three
// declared partition classes exactly once. Any tight cycle there reads
// x y z x y z ... with length divisible by 3, so only such sequences are
// explored, rooted at their smallest vertex of the first class. Throws
// Error("not tripartite-transversal") when the input does not qualify.
DetectResult tripartite_fast_find(const Hypergraph& h,
                                  const DetectOptions& opt = {});

// True iff tripartite_fast_find finds nothing; throws BudgetExhausted on abort.
bool tripartite_fast_check(const Hypergraph& h, const DetectOptions& opt = {});

}  // namespace tightfree

#endif  // TIGHTFREE_DETECTOR_HPP_
