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

#include "tightfree/girth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "tightfree/errors.hpp"

namespace tightfree {
namespace {

constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
using Adjacency = std::vector<std::vector<Vertex>>;

// Breadth-first search from a root, reused across roots.
//
// A non-tree edge (u, w) met while scanning u closes a walk
// root..u, w..root of length dist[u] + dist[w] + 1, which contains a cycle of
// at most that length. Over all roots the minimum of these walk lengths is
// the girth; for a fixed root on a cycle C some non-tree edge of C closes a
// walk no longer than |C|.
class CycleSearch {
 public:
  explicit CycleSearch(std::size_t num_vertices)
      : dist_(num_vertices, kUnseen), parent_(num_vertices) {}

  // Shortest closing walk through the BFS tree of `root`, bounded by
  // max_length; 0 when none. Stops at the first hit if first_hit is set.
  // The cycle of the best hit is left in cycle().
  std::size_t run(const Adjacency& adj, Vertex root, std::size_t max_length,
                  bool first_hit) {
    for (Vertex v : touched_) dist_[v] = kUnseen;
    touched_.clear();
    queue_.clear();
    cycle_.clear();

    dist_[root] = 0;
    parent_[root] = root;
    touched_.push_back(root);
    queue_.push_back(root);
    std::size_t best = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Vertex u = queue_[head];
      const std::size_t du = dist_[u];
      if (2 * du > max_length) break;
      if (best != 0 && 2 * du + 1 > best) break;
      for (Vertex w : adj[u]) {
        if (dist_[w] == kUnseen) {
          dist_[w] = du + 1;
          parent_[w] = u;
          touched_.push_back(w);
          queue_.push_back(w);
        } else if (w != parent_[u] && parent_[w] != u) {
          const std::size_t walk = du + dist_[w] + 1;
          if (walk <= max_length && (best == 0 || walk < best)) {
            best = walk;
            extract_cycle(u, w);
            if (first_hit) return best;
          }
        }
      }
    }
    return best;
  }

  // Vertices of the last recorded cycle in order; consecutive entries and
  // (back, front) are edges.
  const std::vector<Vertex>& cycle() const { return cycle_; }

 private:
  void extract_cycle(Vertex u, Vertex w) {
    std::vector<Vertex> left{u};
    std::vector<Vertex> right{w};
    Vertex a = u;
    Vertex b = w;
    while (dist_[a] > dist_[b]) left.push_back(a = parent_[a]);
    while (dist_[b] > dist_[a]) right.push_back(b = parent_[b]);
    while (a != b) {
      left.push_back(a = parent_[a]);
      right.push_back(b = parent_[b]);
    }
    right.pop_back();  // common ancestor already ends `left`
    cycle_.assign(left.begin(), left.end());
    cycle_.insert(cycle_.end(), right.rbegin(), right.rend());
  }

  std::vector<std::size_t> dist_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> touched_;
  std::vector<Vertex> queue_;
  std::vector<Vertex> cycle_;
};

void remove_edge(Adjacency& adj, Vertex a, Vertex b) {
  auto drop = [&](Vertex from, Vertex to) {
    auto& list = adj[from];
    list.erase(std::find(list.begin(), list.end(), to));
  };
  drop(a, b);
  drop(b, a);
}

BipartiteGraph from_adjacency(std::size_t n, const Adjacency& adj) {
  std::vector<BipartiteGraph::Edge> edges;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y : adj[x]) edges.emplace_back(x, y - static_cast<Vertex>(n));
  }
  return BipartiteGraph(static_cast<Vertex>(n), static_cast<Vertex>(n),
                        std::move(edges));
}

BipartiteGraph delete_short_cycles(const BipartiteGraph& sample, std::size_t k,
                                   Rng& rng) {
  const std::size_t n = sample.n_left();
  Adjacency adj = sample.adjacency();
  CycleSearch search(adj.size());
  // Deleting edges never creates cycles, so a root that comes back clean
  // stays clean for the rest of the sweep.
  for (Vertex root = 0; root < adj.size(); ++root) {
    while (search.run(adj, root, 2 * k, true) != 0) {
      const auto& cyc = search.cycle();
      const std::size_t i = rng.below(cyc.size());
      remove_edge(adj, cyc[i], cyc[(i + 1) % cyc.size()]);
    }
  }
  return from_adjacency(n, adj);
}

// True if y (joint index) is within distance `limit` of x.
bool within_distance(const Adjacency& adj, Vertex x, Vertex y,
                     std::size_t limit, std::vector<std::size_t>& dist,
                     std::vector<Vertex>& queue) {
  queue.clear();
  queue.push_back(x);
  dist[x] = 0;
  bool found = false;
  for (std::size_t head = 0; head < queue.size() && !found; ++head) {
    const Vertex u = queue[head];
    if (dist[u] >= limit) continue;
    for (Vertex w : adj[u]) {
      if (dist[w] != kUnseen) continue;
      dist[w] = dist[u] + 1;
      if (w == y) {
        found = true;
        break;
      }
      queue.push_back(w);
    }
  }
  for (Vertex v : queue) dist[v] = kUnseen;
  dist[y] = kUnseen;
  return found;
}

BipartiteGraph greedy_insertion(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(n * n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) pairs.emplace_back(x, y);
  }
  rng.shuffle(std::span(pairs));

  Adjacency adj(2 * n);
  std::vector<std::size_t> dist(2 * n, kUnseen);
  std::vector<Vertex> queue;
  for (const auto& [x, y] : pairs) {
    const Vertex yj = static_cast<Vertex>(n) + y;
    // A new edge xy closes a cycle of length dist(x, y) + 1.
    if (within_distance(adj, x, yj, 2 * k - 1, dist, queue)) continue;
    adj[x].push_back(yj);
    adj[yj].push_back(x);
  }
  return from_adjacency(n, adj);
}

}  // namespace

std::optional<std::size_t> shortest_cycle_length(const BipartiteGraph& g) {
  const Adjacency adj = g.adjacency();
  CycleSearch search(adj.size());
  std::size_t best = 0;
  for (Vertex root = 0; root < adj.size(); ++root) {
    const std::size_t bound =
        best == 0 ? std::numeric_limits<std::size_t>::max() / 4 : best - 1;
    const std::size_t found = search.run(adj, root, bound, false);
    if (found != 0) best = found;
  }
  if (best == 0) return std::nullopt;
  return best;
}

bool has_cycle_at_most(const BipartiteGraph& g, std::size_t max_length) {
  if (max_length < 2) throw Error("cycle length bound must be at least 2");
  const Adjacency adj = g.adjacency();
  CycleSearch search(adj.size());
  for (Vertex root = 0; root < adj.size(); ++root) {
    if (search.run(adj, root, max_length, true) != 0) return true;
  }
  return false;
}

void GirthGenConfig::validate() const {
  if (!(density_exponent_c > 0.0) || density_exponent_c > 1.0) {
    throw Error("density exponent c must lie in (0, 1]");
  }
  if (!(initial_edge_probability_scale > 0.0)) {
    throw Error("edge probability scale must be positive");
  }
  if (max_retries < 1) throw Error("max_retries must be at least 1");
}

double edge_probability(std::size_t n, std::size_t k,
                        const GirthGenConfig& cfg) {
  const double p = cfg.initial_edge_probability_scale *
                   std::pow(static_cast<double>(n),
                            -1.0 + cfg.density_exponent_c /
                                       static_cast<double>(k));
  return std::min(1.0, p);
}

BipartiteGraph sample_bipartite(std::size_t n, double p, RngSeed seed) {
  Rng rng(seed);
  std::vector<BipartiteGraph::Edge> edges;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (rng.bernoulli(p)) edges.emplace_back(x, y);
    }
  }
  return BipartiteGraph(static_cast<Vertex>(n), static_cast<Vertex>(n),
                        std::move(edges));
}

HighGirthGraph generate_high_girth(std::size_t n, std::size_t k,
                                   const GirthGenConfig& cfg, RngSeed seed) {
  cfg.validate();
  if (n < 2) throw Error("generate_high_girth needs n >= 2");
  if (k < 1) throw Error("generate_high_girth needs k >= 1");
  const std::size_t bound = cfg.max_k.value_or(static_cast<std::size_t>(
      std::ceil(std::log2(static_cast<double>(n)))));
  if (k > bound) {
    throw Error("k = " + std::to_string(k) + " exceeds the validity bound " +
                std::to_string(bound) + " for n = " + std::to_string(n));
  }

  if (k == 1) {
    // No simple graph has a cycle of length <= 2.
    auto full = BipartiteGraph::complete(static_cast<Vertex>(n),
                                         static_cast<Vertex>(n));
    const std::size_t m = full.num_edges();
    return {std::move(full), m, 1, seed};
  }

  const double p = edge_probability(n, k, cfg);
  std::size_t best_edges = 0;
  for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
    const RngSeed attempt_seed =
        attempt == 0 ? seed : derive_seed(seed, static_cast<std::uint64_t>(attempt));
    HighGirthGraph out;
    out.attempts = attempt + 1;
    out.attempt_seed = attempt_seed;
    if (cfg.removal_strategy == RemovalStrategy::kGreedyInsertion) {
      Rng rng(attempt_seed);
      out.graph = greedy_insertion(n, k, rng);
      out.sampled_edges = out.graph.num_edges();
    } else {
      const BipartiteGraph sample = sample_bipartite(n, p, attempt_seed);
      // The deletion stream is independent of the sampling stream.
      Rng rng(derive_seed(attempt_seed, 0));
      out.sampled_edges = sample.num_edges();
      out.graph = delete_short_cycles(sample, k, rng);
    }
    if (has_cycle_at_most(out.graph, 2 * k)) {
      throw std::logic_error("high-girth generator produced a short cycle");
    }
    best_edges = std::max(best_edges, out.graph.num_edges());
    if (out.graph.num_edges() >= n) return out;
  }
  throw Error("girth target infeasible: " + std::to_string(cfg.max_retries) +
              " attempts kept at most " + std::to_string(best_edges) +
              " edges, need " + std::to_string(n));
}

}  // namespace tightfree
