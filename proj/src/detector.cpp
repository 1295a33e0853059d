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

#include "tightfree/detector.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

#include "tightfree/errors.hpp"

namespace tightfree {
namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<Vertex>& v) const {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (Vertex x : v) h = (h ^ x) * 0x100000001B3ULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// Edges keyed by their (r-1)-subsets: subset -> vertices completing it.
using ExtensionIndex =
    std::unordered_map<std::vector<Vertex>, std::vector<Vertex>, VectorHash>;

ExtensionIndex build_extension_index(const Hypergraph& h) {
  const std::size_t r = static_cast<std::size_t>(h.uniformity());
  ExtensionIndex index;
  std::vector<Vertex> key(r - 1);
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    auto e = h.edge(i);
    for (std::size_t skip = 0; skip < r; ++skip) {
      for (std::size_t j = 0, out = 0; j < r; ++j) {
        if (j != skip) key[out++] = e[j];
      }
      index[key].push_back(e[skip]);
    }
  }
  for (auto& [_, list] : index) std::sort(list.begin(), list.end());
  return index;
}

struct Bounds {
  std::size_t min_length;
  std::size_t max_length;
};

Bounds resolve_bounds(const Hypergraph& h, const DetectOptions& opt) {
  const std::size_t r = static_cast<std::size_t>(h.uniformity());
  Bounds b{std::max(opt.min_length.value_or(r + 1), r + 1),
           opt.max_length.value_or(h.num_vertices())};
  if (opt.min_length && opt.max_length && *opt.min_length > *opt.max_length) {
    throw Error("min_length exceeds max_length");
  }
  b.max_length = std::min<std::size_t>(b.max_length, h.num_vertices());
  return b;
}

// Shared between workers of one query.
struct SearchControl {
  std::atomic<std::uint64_t> states{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> aborted{false};
  std::optional<std::uint64_t> budget;
  std::mutex mu;
  std::optional<TightCycleWitness> witness;

  // Returns false when the caller must unwind.
  bool tick() {
    if (stop.load(std::memory_order_relaxed)) return false;
    const auto s = states.fetch_add(1, std::memory_order_relaxed) + 1;
    if (budget && s > *budget) {
      aborted.store(true);
      stop.store(true);
      return false;
    }
    return true;
  }

  void report(std::vector<Vertex> cycle) {
    std::lock_guard lock(mu);
    if (!witness) witness = TightCycleWitness{std::move(cycle)};
    stop.store(true);
  }
};

// Depth-first extension of ordered tight paths from one root. `part` is
// empty for the general search; for the tripartite search it gives each
// vertex's class and position j of the path must hold a class-(j mod 3)
// vertex.
class PathSearch {
 public:
  PathSearch(const Hypergraph& h, const ExtensionIndex& index, Bounds bounds,
             const std::vector<int>& part, SearchControl& control)
      : h_(h),
        index_(index),
        r_(static_cast<std::size_t>(h.uniformity())),
        bounds_(bounds),
        part_(part),
        control_(control),
        on_path_(h.num_vertices(), 0),
        key_(r_ - 1),
        window_(r_) {}

  // Explores every path starting with the ordered root window.
  void run(const std::vector<Vertex>& root_window) {
    root_ = root_window.front();
    path_ = root_window;
    for (Vertex v : path_) on_path_[v] = 1;
    extend();
    for (Vertex v : path_) on_path_[v] = 0;
    path_.clear();
  }

 private:
  bool tripartite() const { return !part_.empty(); }

  bool admissible(Vertex u) const {
    if (on_path_[u]) return false;
    if (!tripartite()) return u > root_;
    const int want = static_cast<int>(path_.size() % 3);
    if (part_[u] != want) return false;
    return want != 0 || u > root_;
  }

  bool closes() {
    const std::size_t len = path_.size();
    if (len < bounds_.min_length || len > bounds_.max_length) return false;
    if (tripartite()) {
      if (len % 3 != 0) return false;
    } else if (path_[1] > path_[len - 1]) {
      return false;
    }
    for (std::size_t i = len - r_ + 1; i < len; ++i) {
      for (std::size_t j = 0; j < r_; ++j) window_[j] = path_[(i + j) % len];
      std::sort(window_.begin(), window_.end());
      if (!h_.contains(window_)) return false;
    }
    return true;
  }

  void extend() {
    if (!control_.tick()) return;
    if (path_.size() > r_ && closes()) {
      control_.report(path_);
      return;
    }
    if (path_.size() >= bounds_.max_length) return;

    std::copy(path_.end() - static_cast<std::ptrdiff_t>(r_ - 1), path_.end(),
              key_.begin());
    std::sort(key_.begin(), key_.end());
    auto it = index_.find(key_);
    if (it == index_.end()) return;
    for (Vertex u : it->second) {
      if (!admissible(u)) continue;
      path_.push_back(u);
      on_path_[u] = 1;
      extend();
      on_path_[u] = 0;
      path_.pop_back();
      if (control_.stop.load(std::memory_order_relaxed)) return;
    }
  }

  const Hypergraph& h_;
  const ExtensionIndex& index_;
  const std::size_t r_;
  const Bounds bounds_;
  const std::vector<int>& part_;
  SearchControl& control_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
  std::vector<Vertex> key_;
  std::vector<Vertex> window_;
  Vertex root_ = 0;
};

// Root windows for one root vertex, in a fixed order.
using RootGenerator = std::function<std::vector<std::vector<Vertex>>(Vertex)>;

DetectResult run_search(const Hypergraph& h, const DetectOptions& opt,
                        const std::vector<Vertex>& roots,
                        const RootGenerator& windows_of,
                        const std::vector<int>& part) {
  const Bounds bounds = resolve_bounds(h, opt);
  DetectResult result;
  if (h.empty() || bounds.min_length > bounds.max_length) return result;

  const ExtensionIndex index = build_extension_index(h);
  SearchControl control;
  control.budget = opt.state_budget;

  auto work_on = [&](PathSearch& search, Vertex root) {
    for (const auto& w : windows_of(root)) {
      search.run(w);
      if (control.stop.load()) return;
    }
  };

  unsigned threads = 1;
  if (opt.parallel_roots) {
    threads = opt.threads ? opt.threads : std::thread::hardware_concurrency();
    threads = std::max(1u, threads);
  }
  if (threads == 1 || roots.size() < 2) {
    PathSearch search(h, index, bounds, part, control);
    for (Vertex root : roots) {
      work_on(search, root);
      if (control.stop.load()) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        PathSearch search(h, index, bounds, part, control);
        for (std::size_t i = next++; i < roots.size() && !control.stop.load();
             i = next++) {
          work_on(search, roots[i]);
        }
      });
    }
  }

  result.states = control.states.load();
  if (control.witness) {
    if (!verify_witness(h, *control.witness)) {
      throw std::logic_error("tight-cycle search produced an invalid witness");
    }
    result.status = DetectStatus::kFound;
    result.witness = std::move(control.witness);
  } else if (control.aborted.load()) {
    result.status = DetectStatus::kAborted;
  }
  return result;
}

std::vector<std::vector<std::size_t>> incidence(const Hypergraph& h) {
  std::vector<std::vector<std::size_t>> inc(h.num_vertices());
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    for (Vertex v : h.edge(i)) inc[v].push_back(i);
  }
  return inc;
}

}  // namespace

DetectResult find_tight_cycle(const Hypergraph& h, const DetectOptions& opt) {
  const auto inc = incidence(h);
  std::vector<Vertex> roots;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (!inc[v].empty()) roots.push_back(v);
  }
  auto windows_of = [&](Vertex a) {
    std::vector<std::vector<Vertex>> out;
    for (std::size_t i : inc[a]) {
      auto e = h.edge(i);
      if (e.front() != a) continue;  // a must be the smallest cycle vertex
      std::vector<Vertex> w(e.begin(), e.end());
      do {
        out.push_back(w);
      } while (std::next_permutation(w.begin() + 1, w.end()));
    }
    return out;
  };
  return run_search(h, opt, roots, windows_of, {});
}

bool is_tight_cycle_free(const Hypergraph& h, const DetectOptions& opt) {
  const auto res = find_tight_cycle(h, opt);
  if (res.aborted()) throw BudgetExhausted(res.states);
  return !res.found();
}

DetectResult brute_force_find(const Hypergraph& h, const DetectOptions& opt,
                              Vertex vertex_cap) {
  const Vertex n = h.num_vertices();
  if (n > vertex_cap) {
    throw Error("brute force is capped at " + std::to_string(vertex_cap) +
                " vertices, got " + std::to_string(n));
  }
  const Bounds bounds = resolve_bounds(h, opt);
  const std::size_t r = static_cast<std::size_t>(h.uniformity());
  DetectResult result;
  std::vector<Vertex> window(r);

  auto is_cycle = [&](const std::vector<Vertex>& seq) {
    const std::size_t len = seq.size();
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = 0; j < r; ++j) window[j] = seq[(i + j) % len];
      std::sort(window.begin(), window.end());
      if (!h.contains(window)) return false;
    }
    return true;
  };

  for (std::size_t len = bounds.min_length; len <= bounds.max_length; ++len) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != len) continue;
      std::vector<Vertex> seq;
      for (Vertex v = 0; v < n; ++v) {
        if (mask >> v & 1u) seq.push_back(v);
      }
      // seq[0] is the smallest; every order of the rest is one cyclic order
      // up to rotation, each reflection pair visited twice.
      do {
        if (opt.state_budget && result.states >= *opt.state_budget) {
          result.status = DetectStatus::kAborted;
          return result;
        }
        ++result.states;
        if (is_cycle(seq)) {
          result.status = DetectStatus::kFound;
          result.witness = TightCycleWitness{seq};
          return result;
        }
      } while (std::next_permutation(seq.begin() + 1, seq.end()));
    }
  }
  return result;
}

DetectResult tripartite_fast_find(const Hypergraph& h,
                                  const DetectOptions& opt) {
  if (h.uniformity() != 3 || h.partition().size() != 3) {
    throw Error("not tripartite-transversal: need a 3-uniform hypergraph "
                "with a 3-class partition");
  }
  std::vector<int> part(h.num_vertices(), -1);
  for (int c = 0; c < 3; ++c) {
    const auto& range = h.partition()[c];
    for (Vertex v = range.begin; v < range.end; ++v) part[v] = c;
  }
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    int seen = 0;
    for (Vertex v : h.edge(i)) {
      if (part[v] >= 0) seen |= 1 << part[v];
    }
    if (seen != 0b111) {
      throw Error("not tripartite-transversal: edge " + std::to_string(i) +
                  " misses a class");
    }
  }

  const auto inc = incidence(h);
  std::vector<Vertex> roots;
  for (Vertex v = h.partition()[0].begin; v < h.partition()[0].end; ++v) {
    if (!inc[v].empty()) roots.push_back(v);
  }
  auto windows_of = [&](Vertex x) {
    std::vector<std::vector<Vertex>> out;
    for (std::size_t i : inc[x]) {
      std::vector<Vertex> w(3);
      for (Vertex v : h.edge(i)) w[part[v]] = v;
      out.push_back(std::move(w));
    }
    return out;
  };
  return run_search(h, opt, roots, windows_of, part);
}

bool tripartite_fast_check(const Hypergraph& h, const DetectOptions& opt) {
  const auto res = tripartite_fast_find(h, opt);
  if (res.aborted()) throw BudgetExhausted(res.states);
  return !res.found();
}

}  // namespace tightfree
