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

#ifndef TIGHTFREE_HYPERGRAPH_HPP_
#define TIGHTFREE_HYPERGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tightfree {

using Vertex = std::uint32_t;

// Half-open index range [begin, end).
struct VertexRange {
  Vertex begin = 0;
  Vertex end = 0;

  bool contains(Vertex v) const { return v >= begin && v < end; }
  Vertex size() const { return end - begin; }

  friend bool operator==(const VertexRange&, const VertexRange&) = default;
};

// An r-uniform hypergraph on vertices 0..n-1.
//
// Immutable once built. Edges are kept in canonical form: each edge sorted
// ascending, the edge list sorted lexicographically and free of duplicates.
// Storage is one flat array of m*r indices.
class Hypergraph {
 public:
  // Empty 1-uniform hypergraph on no vertices.
  Hypergraph() = default;

  // Validates and canonicalizes. Throws Error naming the offending edge on a
  // repeated vertex, an out-of-range index or the wrong arity, and on a
  // partition that overlaps, leaves [0, n) or is met twice by one edge.
  Hypergraph(int r, Vertex n, const std::vector<std::vector<Vertex>>& edges,
             std::vector<VertexRange> partition = {});

  // Same, with edges given back to back in one array of length m*r.
  static Hypergraph from_flat(int r, Vertex n, std::vector<Vertex> flat,
                              std::vector<VertexRange> partition = {});

  int uniformity() const { return r_; }
  Vertex num_vertices() const { return n_; }
  std::size_t num_edges() const { return r_ == 0 ? 0 : flat_.size() / r_; }
  bool empty() const { return flat_.empty(); }

  std::span<const Vertex> edge(std::size_t i) const {
    return {flat_.data() + i * r_, static_cast<std::size_t>(r_)};
  }

  // Membership test for an ascending r-tuple.
  bool contains(std::span<const Vertex> sorted_edge) const;

  const std::vector<Vertex>& flat_edges() const { return flat_; }
  const std::vector<VertexRange>& partition() const { return partition_; }
  bool has_partition() const { return !partition_.empty(); }

  std::vector<std::vector<Vertex>> edge_list() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  void canonicalize_and_validate();

  int r_ = 1;
  Vertex n_ = 0;
  std::vector<Vertex> flat_;
  std::vector<VertexRange> partition_;
};

// Cyclic vertex sequence v_1..v_l claimed to span a tight cycle.
struct TightCycleWitness {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }

  friend bool operator==(const TightCycleWitness&,
                         const TightCycleWitness&) = default;
};

// True iff l > r, the vertices are distinct and in range, and all l cyclic
// windows of r consecutive vertices are edges of `h`.
bool verify_witness(const Hypergraph& h, const TightCycleWitness& w);

// "cycle l: v1 v2 ... vl"
std::string format_witness(const TightCycleWitness& w);

// Exact non-negative fraction, always reduced.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t num, std::uint64_t den);

  double to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

// |E(H)| / n^(r-1). Throws on n = 0 ("empty vertex set") and on overflow.
Rational density_ratio(const Hypergraph& h);

// A subgraph of K_{n_left, n_right}; pairs are (x, y) with x on side X and y
// on side Y, both 0-based on their own side. Sorted and deduplicated.
class BipartiteGraph {
 public:
  using Edge = std::pair<Vertex, Vertex>;

  BipartiteGraph() = default;
  BipartiteGraph(Vertex n_left, Vertex n_right, std::vector<Edge> edges);

  static BipartiteGraph complete(Vertex n_left, Vertex n_right);

  Vertex n_left() const { return n_left_; }
  Vertex n_right() const { return n_right_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool contains(Edge e) const;

  // Adjacency over the joint index space: X = [0, n_left),
  // Y = [n_left, n_left + n_right).
  std::vector<std::vector<Vertex>> adjacency() const;

  // The same graph as a 2-uniform hypergraph with side Y shifted by n_left
  // and partition {X, Y}.
  Hypergraph to_hypergraph() const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  Vertex n_left_ = 0;
  Vertex n_right_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace tightfree

#endif  // TIGHTFREE_HYPERGRAPH_HPP_
