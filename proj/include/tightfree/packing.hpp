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

// Edge-disjoint families of high-girth subgraphs of K_{n,n}, obtained by
// dropping t randomly relabelled copies of one template into K_{n,n} and
// keeping from each copy only the edges no earlier copy already used.

#ifndef TIGHTFREE_PACKING_HPP_
#define TIGHTFREE_PACKING_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tightfree/hypergraph.hpp"
#include "tightfree/rng.hpp"

namespace tightfree {

struct PackingFamily {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t t = 0;
  std::vector<BipartiteGraph> members;  // G_1..G_t, empty ones kept
  std::size_t template_edge_count = 0;
  RngSeed seed;

  std::size_t edge_sum() const;

  friend bool operator==(const PackingFamily&, const PackingFamily&) = default;
};

// Image of h under independent uniform permutations of both sides.
BipartiteGraph random_copy(const BipartiteGraph& h, RngSeed seed);

// Seed of copy i (0-based): derive_seed(seed, i).
RngSeed copy_seed(RngSeed family_seed, std::size_t index);

// Peels t random copies of h into an edge-disjoint family. Rejects
// k*t > n ("precondition kt > n") and a template with a cycle of length
// <= 2k ("template has short cycle") before sampling anything.
PackingFamily pack(const BipartiteGraph& h, std::size_t t, std::size_t k,
                   RngSeed seed);

// |union of the copies' edge sets|, recomputed from the seeds with a
// separate set union; equals edge_sum() for any family built by pack().
std::size_t union_of_copies(const BipartiteGraph& h, std::size_t t,
                            RngSeed seed);

struct CoverageStats {
  std::size_t edge_sum = 0;
  double coverage_ratio = 0.0;              // edge_sum / n^2
  double predicted_missing_fraction = 1.0;  // exp(-|E(H)| t / n^2)
};

CoverageStats coverage_stats(const PackingFamily& fam);

// Throws Error naming the first failing member: wrong side sizes, an edge
// shared with an earlier member, or a cycle of length <= 2k. Also checks
// k*t <= n and members.size() == t.
void validate_family(const PackingFamily& fam);

// "# family n k t seed edge_sum" followed, for each member, by
// "# member i" and its bipartite edge list.
std::string serialize(const PackingFamily& fam);
PackingFamily parse_family(std::string_view text);

}  // namespace tightfree

#endif  // TIGHTFREE_PACKING_HPP_
