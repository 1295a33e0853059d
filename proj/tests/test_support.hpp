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

// Generators and independent oracles shared by the test binaries. Nothing
// here calls into the search or BFS code it is used to check.

#ifndef TIGHTFREE_TESTS_TEST_SUPPORT_HPP_
#define TIGHTFREE_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "tightfree/hypergraph.hpp"
#include "tightfree/packing.hpp"
#include "tightfree/rng.hpp"

namespace tightfree::testing {

// All r-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<Vertex>> all_r_subsets(int r, Vertex n) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> pick(static_cast<std::size_t>(r));
  std::iota(pick.begin(), pick.end(), 0);
  if (static_cast<Vertex>(r) > n) return out;
  while (true) {
    out.push_back(pick);
    int i = r - 1;
    while (i >= 0 && pick[i] == n - static_cast<Vertex>(r) + static_cast<Vertex>(i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// Subset of all r-subsets selected by the bits of `mask`.
inline Hypergraph hypergraph_from_mask(int r, Vertex n, std::uint64_t mask) {
  const auto all = all_r_subsets(r, n);
  std::vector<std::vector<Vertex>> edges;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (mask >> i & 1u) edges.push_back(all[i]);
  }
  return Hypergraph(r, n, edges);
}

inline Hypergraph random_hypergraph(int r, Vertex n, double p, Rng& rng) {
  std::vector<std::vector<Vertex>> edges;
  for (auto& e : all_r_subsets(r, n)) {
    if (rng.bernoulli(p)) edges.push_back(std::move(e));
  }
  return Hypergraph(r, n, edges);
}

// Union-find: does the simple graph have a cycle?
inline bool graph_has_cycle(const Hypergraph& g) {
  std::vector<Vertex> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Vertex a = find(g.edge(i)[0]);
    const Vertex b = find(g.edge(i)[1]);
    if (a == b) return true;
    parent[a] = b;
  }
  return false;
}

// Girth as min over edges uv of dist_{G - uv}(u, v) + 1.
inline std::optional<std::size_t> girth_by_edge_removal(const BipartiteGraph& g) {
  const Vertex nl = g.n_left();
  const std::size_t nv = nl + g.n_right();
  std::optional<std::size_t> best;
  for (const auto& skip : g.edges()) {
    std::vector<std::vector<Vertex>> adj(nv);
    for (const auto& e : g.edges()) {
      if (e == skip) continue;
      adj[e.first].push_back(nl + e.second);
      adj[nl + e.second].push_back(e.first);
    }
    std::vector<std::size_t> dist(nv, std::numeric_limits<std::size_t>::max());
    std::deque<Vertex> queue{skip.first};
    dist[skip.first] = 0;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : adj[u]) {
        if (dist[w] == std::numeric_limits<std::size_t>::max()) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    const std::size_t d = dist[nl + skip.second];
    if (d != std::numeric_limits<std::size_t>::max() && (!best || d + 1 < *best)) {
      best = d + 1;
    }
  }
  return best;
}

inline BipartiteGraph random_bipartite(Vertex n, double p, Rng& rng) {
  std::vector<BipartiteGraph::Edge> edges;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (rng.bernoulli(p)) edges.emplace_back(x, y);
    }
  }
  return BipartiteGraph(n, n, std::move(edges));
}

// Perfect matching x -> (x + shift) mod n.
inline BipartiteGraph shifted_matching(Vertex n, Vertex shift) {
  std::vector<BipartiteGraph::Edge> edges;
  for (Vertex x = 0; x < n; ++x) edges.emplace_back(x, (x + shift) % n);
  return BipartiteGraph(n, n, std::move(edges));
}

// Edge-disjoint family of t shifted matchings of K_{n,n}; forests, so valid
// for every k with k*t <= n.
inline PackingFamily matching_family(std::size_t n, std::size_t k, std::size_t t) {
  PackingFamily fam{n, k, t, {}, n, RngSeed{0}};
  for (std::size_t i = 0; i < t; ++i) {
    fam.members.push_back(
        shifted_matching(static_cast<Vertex>(n), static_cast<Vertex>(i)));
  }
  return fam;
}

// Same cyclic sequence up to rotation and reflection.
inline bool same_cycle(std::vector<Vertex> a, std::vector<Vertex> b) {
  if (a.size() != b.size()) return false;
  for (int flip = 0; flip < 2; ++flip) {
    for (std::size_t s = 0; s < b.size(); ++s) {
      std::rotate(b.begin(), b.begin() + 1, b.end());
      if (a == b) return true;
    }
    std::reverse(b.begin(), b.end());
  }
  return false;
}

}  // namespace tightfree::testing

#endif  // TIGHTFREE_TESTS_TEST_SUPPORT_HPP_
