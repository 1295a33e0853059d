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

#include "tightfree/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tightfree/errors.hpp"

namespace tightfree {
namespace {

std::string edge_to_string(std::span<const Vertex> e) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) os << ',';
    os << e[i];
  }
  os << '}';
  return os.str();
}

bool lex_less(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Hypergraph::Hypergraph(int r, Vertex n,
                       const std::vector<std::vector<Vertex>>& edges,
                       std::vector<VertexRange> partition)
    : r_(r), n_(n), partition_(std::move(partition)) {
  if (r < 1) throw Error("uniformity must be at least 1");
  flat_.reserve(edges.size() * static_cast<std::size_t>(r));
  for (const auto& e : edges) {
    if (e.size() != static_cast<std::size_t>(r)) {
      throw Error("wrong arity in edge " + edge_to_string(e) + ": expected " +
                  std::to_string(r) + " vertices");
    }
    flat_.insert(flat_.end(), e.begin(), e.end());
  }
  canonicalize_and_validate();
}

Hypergraph Hypergraph::from_flat(int r, Vertex n, std::vector<Vertex> flat,
                                 std::vector<VertexRange> partition) {
  if (r < 1) throw Error("uniformity must be at least 1");
  if (flat.size() % static_cast<std::size_t>(r) != 0) {
    throw Error("wrong arity: flat edge array length " +
                std::to_string(flat.size()) + " is not a multiple of " +
                std::to_string(r));
  }
  Hypergraph h;
  h.r_ = r;
  h.n_ = n;
  h.flat_ = std::move(flat);
  h.partition_ = std::move(partition);
  h.canonicalize_and_validate();
  return h;
}

void Hypergraph::canonicalize_and_validate() {
  const std::size_t r = static_cast<std::size_t>(r_);
  const std::size_t m = flat_.size() / r;

  for (std::size_t i = 0; i < m; ++i) {
    auto e = std::span<Vertex>(flat_.data() + i * r, r);
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error("repeated vertex in edge " + edge_to_string(e));
    }
    if (e.back() >= n_) {
      throw Error("vertex index out of range in edge " + edge_to_string(e) +
                  " (n = " + std::to_string(n_) + ")");
    }
  }

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  auto at = [&](std::size_t i) {
    return std::span<const Vertex>(flat_.data() + i * r, r);
  };
  if (!std::is_sorted(order.begin(), order.end(), [&](auto a, auto b) {
        return lex_less(at(a), at(b));
      })) {
    std::sort(order.begin(), order.end(),
              [&](auto a, auto b) { return lex_less(at(a), at(b)); });
  }
  std::vector<Vertex> sorted;
  sorted.reserve(flat_.size());
  for (std::size_t idx = 0; idx < m; ++idx) {
    auto e = at(order[idx]);
    if (idx > 0 && std::equal(e.begin(), e.end(), sorted.end() - r)) continue;
    sorted.insert(sorted.end(), e.begin(), e.end());
  }
  flat_ = std::move(sorted);

  if (partition_.empty()) return;
  auto parts = partition_;
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.begin < b.begin; });
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].begin > parts[i].end || parts[i].end > n_) {
      throw Error("partition range [" + std::to_string(parts[i].begin) + "," +
                  std::to_string(parts[i].end) + ") is invalid for n = " +
                  std::to_string(n_));
    }
    if (i > 0 && parts[i - 1].end > parts[i].begin) {
      throw Error("partition ranges overlap");
    }
  }
  for (std::size_t i = 0; i < num_edges(); ++i) {
    auto e = edge(i);
    for (const auto& part : partition_) {
      auto hits = std::count_if(e.begin(), e.end(),
                                [&](Vertex v) { return part.contains(v); });
      if (hits > 1) {
        throw Error("edge " + edge_to_string(e) +
                    " meets a partition class more than once");
      }
    }
  }
}

bool Hypergraph::contains(std::span<const Vertex> sorted_edge) const {
  if (sorted_edge.size() != static_cast<std::size_t>(r_)) return false;
  std::size_t lo = 0;
  std::size_t hi = num_edges();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (lex_less(edge(mid), sorted_edge)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo < num_edges() &&
         std::equal(sorted_edge.begin(), sorted_edge.end(), edge(lo).begin());
}

std::vector<std::vector<Vertex>> Hypergraph::edge_list() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(num_edges());
  for (std::size_t i = 0; i < num_edges(); ++i) {
    auto e = edge(i);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

bool verify_witness(const Hypergraph& h, const TightCycleWitness& w) {
  const std::size_t r = static_cast<std::size_t>(h.uniformity());
  const std::size_t len = w.length();
  if (len <= r) return false;
  std::vector<Vertex> seen = w.vertices;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  if (seen.back() >= h.num_vertices()) return false;

  std::vector<Vertex> window(r);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < r; ++j) window[j] = w.vertices[(i + j) % len];
    std::sort(window.begin(), window.end());
    if (!h.contains(window)) return false;
  }
  return true;
}

std::string format_witness(const TightCycleWitness& w) {
  std::ostringstream os;
  os << "cycle " << w.length() << ':';
  for (Vertex v : w.vertices) os << ' ' << v;
  return os.str();
}

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw Error("zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string Rational::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational density_ratio(const Hypergraph& h) {
  if (h.num_vertices() == 0) throw Error("empty vertex set");
  std::uint64_t den = 1;
  for (int i = 0; i + 1 < h.uniformity(); ++i) {
    if (den > UINT64_MAX / h.num_vertices()) {
      throw Error("density denominator overflows 64 bits");
    }
    den *= h.num_vertices();
  }
  return Rational::make(h.num_edges(), den);
}

BipartiteGraph::BipartiteGraph(Vertex n_left, Vertex n_right,
                               std::vector<Edge> edges)
    : n_left_(n_left), n_right_(n_right), edges_(std::move(edges)) {
  for (const auto& [x, y] : edges_) {
    if (x >= n_left_ || y >= n_right_) {
      throw Error("bipartite edge (" + std::to_string(x) + "," +
                  std::to_string(y) + ") out of range for sides " +
                  std::to_string(n_left_) + "x" + std::to_string(n_right_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

BipartiteGraph BipartiteGraph::complete(Vertex n_left, Vertex n_right) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n_left) * n_right);
  for (Vertex x = 0; x < n_left; ++x) {
    for (Vertex y = 0; y < n_right; ++y) edges.emplace_back(x, y);
  }
  return BipartiteGraph(n_left, n_right, std::move(edges));
}

bool BipartiteGraph::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::vector<Vertex>> BipartiteGraph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(n_left_ + n_right_);
  for (const auto& [x, y] : edges_) {
    adj[x].push_back(n_left_ + y);
    adj[n_left_ + y].push_back(x);
  }
  return adj;
}

Hypergraph BipartiteGraph::to_hypergraph() const {
  std::vector<Vertex> flat;
  flat.reserve(edges_.size() * 2);
  for (const auto& [x, y] : edges_) {
    flat.push_back(x);
    flat.push_back(n_left_ + y);
  }
  return Hypergraph::from_flat(
      2, n_left_ + n_right_, std::move(flat),
      {{0, n_left_}, {n_left_, n_left_ + n_right_}});
}

}  // namespace tightfree
