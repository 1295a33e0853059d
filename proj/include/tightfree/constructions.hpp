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

// Hypergraph constructions without tight cycles, and two baselines.
//
// The main pipeline: a high-girth template H in K_{n,n} is packed into an
// edge-disjoint family G_1..G_t (no G_i has a cycle of length <= 2k, kt <= n),
// then every edge xy of G_i becomes the k triples {x, y, z_(i,s)}, s = 1..k.
// Higher uniformity comes from coning: every edge gets one apex vertex from a
// fresh class, once per apex.

#ifndef TIGHTFREE_CONSTRUCTIONS_HPP_
#define TIGHTFREE_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tightfree/girth.hpp"
#include "tightfree/hypergraph.hpp"
#include "tightfree/packing.hpp"
#include "tightfree/report.hpp"
#include "tightfree/rng.hpp"

namespace tightfree {

// 3-uniform, partition X = [0, n), Y = [n, 2n), Z = [2n, 2n + kt); member i
// (1-based) owns Z vertices 2n + (i-1)k + (s-1), s = 1..k. Validates the
// family first (see validate_family).
Hypergraph tripartite_from_family(const PackingFamily& fam);

// Z-block layout used by tripartite_from_family.
inline Vertex z_vertex(std::size_t n, std::size_t k, std::size_t member,
                       std::size_t slot) {
  return static_cast<Vertex>(2 * n + (member - 1) * k + (slot - 1));
}

inline constexpr std::uint64_t kDefaultVerifyStates = 200'000;

struct SumProductOptions {
  // Preconditions are certified by bounded detector runs of at most this many
  // states each; beyond it the result is marked unverified.
  std::uint64_t verify_state_budget = kDefaultVerifyStates;
};

struct SumProductResult {
  Hypergraph graph;
  bool preconditions_verified = false;
};

// All unions e ∪ f with e in G_i and f in H_i for the same i. The Gs share
// one r-uniform vertex set, the Hs one r'-uniform vertex set placed at
// h_offset (default: right after the Gs' vertices). Each G_i must be free of
// tight cycles of length <= r*k and each H_i of those longer than r'*k; a
// detected violation throws, an inconclusive check clears
// preconditions_verified.
SumProductResult sum_product(const std::vector<Hypergraph>& gs,
                             const std::vector<Hypergraph>& hs, std::size_t k,
                             std::optional<Vertex> h_offset = std::nullopt,
                             const SumProductOptions& opt = {});

struct ConeLiftResult {
  Hypergraph graph;
  bool input_verified = false;
};

// (r+1)-uniform: every edge of h joined with each of m new apex vertices
// |V(h)|..|V(h)|+m-1. Partition classes of h are kept and the apex class is
// appended. h is checked for tight cycles when the check fits in
// verify_state_budget states; a found cycle throws.
ConeLiftResult cone_lift(const Hypergraph& h, std::size_t m,
                         std::uint64_t verify_state_budget = kDefaultVerifyStates);

// All C(n-1, r-1) edges through vertex 0. Needs n >= r >= 1.
Hypergraph star(int r, Vertex n);

// All transversals of consecutive classes of the given sizes.
Hypergraph complete_r_partite(int r, const std::vector<Vertex>& part_sizes);

struct PipelineParams {
  std::size_t n = 16;
  double alpha = 0.3;
  std::optional<std::size_t> k_override;
  RngSeed seed{0xC0FFEE};
  GirthGenConfig girth;
  int r = 3;

  // k_override, else max(1, floor(alpha ln n / ln ln n)); 1 for n < e^e.
  std::size_t derived_k() const;
  // floor(n / k).
  std::size_t derived_t() const;
};

struct ConstructionResult {
  Hypergraph graph;
  ConstructionReport report;
  PackingFamily family;
  Hypergraph three_uniform_stage;  // equals graph when r = 3
};

// Template seed derive_seed(seed, 1), packing seed derive_seed(seed, 2).
ConstructionResult paper_construction(const PipelineParams& p);

// r = 3: paper_construction. r > 3: r-3 cone lifts of it, each with an apex
// class as large as the current vertex set.
ConstructionResult construct_r_uniform(const PipelineParams& p);

}  // namespace tightfree

#endif  // TIGHTFREE_CONSTRUCTIONS_HPP_
