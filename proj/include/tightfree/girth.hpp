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

// Girth of bipartite graphs and random subgraphs of K_{n,n} without short
// cycles.

#ifndef TIGHTFREE_GIRTH_HPP_
#define TIGHTFREE_GIRTH_HPP_

#include <cstddef>
#include <optional>

#include "tightfree/hypergraph.hpp"
#include "tightfree/rng.hpp"

namespace tightfree {

// Length of a shortest cycle, or nullopt for a forest.
std::optional<std::size_t> shortest_cycle_length(const BipartiteGraph& g);

// shortest_cycle_length(g) <= max_length, with early exit. max_length >= 2.
bool has_cycle_at_most(const BipartiteGraph& g, std::size_t max_length);

enum class RemovalStrategy {
  // Sample edges independently, then delete one random edge of each cycle of
  // length <= 2k until none is left.
  kDeleteRandomEdgePerShortCycle,
  // Visit all n^2 pairs in random order, keeping a pair unless it would close
  // a cycle of length <= 2k. The result is maximal.
  kGreedyInsertion,
};

struct GirthGenConfig {
  // Edge probability is min(1, scale * n^(-1 + c/k)).
  double density_exponent_c = 1.0;
  double initial_edge_probability_scale = 1.0;
  RemovalStrategy removal_strategy =
      RemovalStrategy::kDeleteRandomEdgePerShortCycle;
  int max_retries = 16;
  // Largest accepted k; defaults to ceil(log2 n).
  std::optional<std::size_t> max_k;

  void validate() const;
};

struct HighGirthGraph {
  BipartiteGraph graph;
  std::size_t sampled_edges = 0;  // before deletion, of the accepted attempt
  int attempts = 0;
  RngSeed attempt_seed;  // seed of the accepted attempt
};

// Edge probability used by the deletion strategy.
double edge_probability(std::size_t n, std::size_t k, const GirthGenConfig& cfg);

// Each pair of K_{n,n}, x-major order, kept with probability p.
BipartiteGraph sample_bipartite(std::size_t n, double p, RngSeed seed);

// A subgraph of K_{n,n} with no cycle of length <= 2k and at least n edges.
// Attempt j > 0 reruns with derive_seed(seed, j). k = 1 returns K_{n,n}.
// Throws Error("girth target infeasible ...") once max_retries attempts fail.
HighGirthGraph generate_high_girth(std::size_t n, std::size_t k,
                                   const GirthGenConfig& cfg, RngSeed seed);

}  // namespace tightfree

#endif  // TIGHTFREE_GIRTH_HPP_
