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

#include "tightfree/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "tightfree/detector.hpp"
#include "tightfree/errors.hpp"

namespace tightfree {
namespace {

void require_disjoint(const std::vector<Hypergraph>& list, const char* name) {
  std::set<std::vector<Vertex>> seen;
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < list[i].num_edges(); ++j) {
      auto e = list[i].edge(j);
      if (!seen.emplace(e.begin(), e.end()).second) {
        throw Error(std::string(name) + "[" + std::to_string(i + 1) +
                    "] shares an edge with an earlier member");
      }
    }
  }
}

// kFound throws, kAborted returns false.
bool certify_absent(const Hypergraph& h, const DetectOptions& opt,
                    const std::string& what) {
  const auto res = find_tight_cycle(h, opt);
  if (res.found()) {
    throw Error(what + " contains a tight cycle: " +
                format_witness(*res.witness));
  }
  return !res.aborted();
}

std::vector<VertexRange> shifted(const std::vector<VertexRange>& parts,
                                 Vertex offset) {
  std::vector<VertexRange> out;
  for (const auto& p : parts) out.push_back({p.begin + offset, p.end + offset});
  return out;
}

}  // namespace

Hypergraph tripartite_from_family(const PackingFamily& fam) {
  validate_family(fam);
  const std::size_t n = fam.n;
  const std::size_t k = fam.k;
  std::vector<Vertex> flat;
  flat.reserve(3 * k * fam.edge_sum());
  for (std::size_t i = 1; i <= fam.t; ++i) {
    for (const auto& [x, y] : fam.members[i - 1].edges()) {
      for (std::size_t s = 1; s <= k; ++s) {
        flat.push_back(x);
        flat.push_back(static_cast<Vertex>(n) + y);
        flat.push_back(z_vertex(n, k, i, s));
      }
    }
  }
  const auto nv = static_cast<Vertex>(n);
  const auto total = static_cast<Vertex>(2 * n + k * fam.t);
  Hypergraph out = Hypergraph::from_flat(
      3, total, std::move(flat), {{0, nv}, {nv, 2 * nv}, {2 * nv, total}});
  if (out.num_edges() != k * fam.edge_sum()) {
    throw std::logic_error("tripartite lifting lost hyperedges");
  }
  return out;
}

SumProductResult sum_product(const std::vector<Hypergraph>& gs,
                             const std::vector<Hypergraph>& hs, std::size_t k,
                             std::optional<Vertex> h_offset,
                             const SumProductOptions& opt) {
  if (gs.size() != hs.size()) {
    throw Error("length mismatch: " + std::to_string(gs.size()) + " Gs vs " +
                std::to_string(hs.size()) + " Hs");
  }
  if (gs.empty()) throw Error("sum_product needs at least one pair");
  const int rg = gs.front().uniformity();
  const int rh = hs.front().uniformity();
  const Vertex ng = gs.front().num_vertices();
  const Vertex nh = hs.front().num_vertices();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (gs[i].uniformity() != rg || gs[i].num_vertices() != ng) {
      throw Error("Gs do not share one vertex set and uniformity");
    }
    if (hs[i].uniformity() != rh || hs[i].num_vertices() != nh) {
      throw Error("Hs do not share one vertex set and uniformity");
    }
  }
  const Vertex offset = h_offset.value_or(ng);
  if (offset < ng) {
    throw Error("vertex-set collision: H vertices start at " +
                std::to_string(offset) + " but G uses " + std::to_string(ng));
  }
  require_disjoint(gs, "G");
  require_disjoint(hs, "H");

  bool verified = true;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    DetectOptions short_cycles;
    short_cycles.max_length = static_cast<std::size_t>(rg) * k;
    short_cycles.state_budget = opt.verify_state_budget;
    verified &= certify_absent(gs[i], short_cycles,
                               "G[" + std::to_string(i + 1) + "]");
    DetectOptions long_cycles;
    long_cycles.min_length = static_cast<std::size_t>(rh) * k + 1;
    long_cycles.state_budget = opt.verify_state_budget;
    verified &= certify_absent(hs[i], long_cycles,
                               "H[" + std::to_string(i + 1) + "]");
  }

  std::vector<Vertex> flat;
  std::size_t expected = 0;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    expected += gs[i].num_edges() * hs[i].num_edges();
    for (std::size_t a = 0; a < gs[i].num_edges(); ++a) {
      for (std::size_t b = 0; b < hs[i].num_edges(); ++b) {
        for (Vertex v : gs[i].edge(a)) flat.push_back(v);
        for (Vertex v : hs[i].edge(b)) flat.push_back(offset + v);
      }
    }
  }
  std::vector<VertexRange> partition;
  if (gs.front().has_partition() && hs.front().has_partition()) {
    partition = gs.front().partition();
    for (const auto& p : shifted(hs.front().partition(), offset)) {
      partition.push_back(p);
    }
  }
  Hypergraph out = Hypergraph::from_flat(rg + rh, offset + nh, std::move(flat),
                                         std::move(partition));
  if (out.num_edges() != expected) {
    throw std::logic_error("sum_product produced coinciding unions");
  }
  return {std::move(out), verified};
}

ConeLiftResult cone_lift(const Hypergraph& h, std::size_t m,
                         std::uint64_t verify_state_budget) {
  if (m == 0) throw Error("cone_lift needs at least one apex (m = 0)");
  DetectOptions opt;
  opt.state_budget = verify_state_budget;
  const bool verified = certify_absent(h, opt, "cone_lift input");

  const Vertex base = h.num_vertices();
  const int r = h.uniformity();
  std::vector<Vertex> flat;
  flat.reserve(h.num_edges() * m * static_cast<std::size_t>(r + 1));
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    for (std::size_t a = 0; a < m; ++a) {
      for (Vertex v : h.edge(i)) flat.push_back(v);
      flat.push_back(base + static_cast<Vertex>(a));
    }
  }
  std::vector<VertexRange> partition;
  if (h.has_partition()) {
    partition = h.partition();
    partition.push_back({base, base + static_cast<Vertex>(m)});
  }
  return {Hypergraph::from_flat(r + 1, base + static_cast<Vertex>(m),
                                std::move(flat), std::move(partition)),
          verified};
}

Hypergraph star(int r, Vertex n) {
  if (r < 1) throw Error("star needs r >= 1");
  if (n < static_cast<Vertex>(r)) {
    throw Error("star needs n >= r (n = " + std::to_string(n) +
                ", r = " + std::to_string(r) + ")");
  }
  // Combinations of r-1 vertices from 1..n-1, lexicographic.
  std::vector<Vertex> flat;
  std::vector<Vertex> pick(static_cast<std::size_t>(r - 1));
  for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = static_cast<Vertex>(i + 1);
  while (true) {
    flat.push_back(0);
    flat.insert(flat.end(), pick.begin(), pick.end());
    std::size_t i = pick.size();
    while (i > 0 && pick[i - 1] == n - pick.size() + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
  }
  return Hypergraph::from_flat(r, n, std::move(flat));
}

Hypergraph complete_r_partite(int r, const std::vector<Vertex>& part_sizes) {
  if (r < 1 || part_sizes.size() != static_cast<std::size_t>(r)) {
    throw Error("wrong part count: expected " + std::to_string(r) + ", got " +
                std::to_string(part_sizes.size()));
  }
  std::vector<VertexRange> parts;
  Vertex next = 0;
  for (Vertex s : part_sizes) {
    if (s < 1) throw Error("every part needs at least one vertex");
    parts.push_back({next, next + s});
    next += s;
  }
  std::vector<Vertex> flat;
  std::vector<Vertex> pick(part_sizes.size());
  for (std::size_t i = 0; i < parts.size(); ++i) pick[i] = parts[i].begin;
  while (true) {
    flat.insert(flat.end(), pick.begin(), pick.end());
    std::size_t i = pick.size();
    while (i > 0 && pick[i - 1] + 1 == parts[i - 1].end) {
      pick[i - 1] = parts[i - 1].begin;
      --i;
    }
    if (i == 0) break;
    ++pick[i - 1];
  }
  return Hypergraph::from_flat(r, next, std::move(flat), std::move(parts));
}

std::size_t PipelineParams::derived_k() const {
  if (k_override) {
    if (*k_override < 1 || *k_override > n) {
      throw Error("k must lie in [1, n]");
    }
    return *k_override;
  }
  if (n < 3) throw Error("pipeline needs n >= 3");
  const double ln = std::log(static_cast<double>(n));
  if (ln <= std::numbers::e) return 1;  // n < e^e: log log n < 1
  const double k = std::floor(alpha * ln / std::log(ln));
  return k < 1.0 ? 1 : static_cast<std::size_t>(k);
}

std::size_t PipelineParams::derived_t() const { return n / derived_k(); }

ConstructionResult paper_construction(const PipelineParams& p) {
  if (p.n < 4) throw Error("paper_construction needs n >= 4");
  if (!(p.alpha > 0.0)) throw Error("alpha must be positive");
  const std::size_t k = p.derived_k();
  const std::size_t t = p.derived_t();

  const auto tmpl = generate_high_girth(p.n, k, p.girth, derive_seed(p.seed, 1));
  PackingFamily fam = pack(tmpl.graph, t, k, derive_seed(p.seed, 2));
  Hypergraph h = tripartite_from_family(fam);

  const auto cov = coverage_stats(fam);
  ConstructionReport rep;
  rep.r = 3;
  rep.n = p.n;
  rep.k = k;
  rep.t = t;
  rep.alpha = p.alpha;
  rep.seed = p.seed.value;
  rep.template_edges = tmpl.graph.num_edges();
  rep.family_edge_sum = cov.edge_sum;
  rep.union_coverage_ratio = cov.coverage_ratio;
  rep.predicted_missing_fraction = cov.predicted_missing_fraction;
  rep.hyperedge_count = h.num_edges();
  rep.total_vertices = h.num_vertices();
  rep.density = density_ratio(h);
  rep.stages.push_back({3, h.num_vertices(), h.num_edges()});
  Hypergraph stage = h;
  return {std::move(h), std::move(rep), std::move(fam), std::move(stage)};
}

ConstructionResult construct_r_uniform(const PipelineParams& p) {
  if (p.r < 3) throw Error("construct_r_uniform needs r >= 3");
  ConstructionResult res = paper_construction(p);
  for (int r = 4; r <= p.r; ++r) {
    // The input is the previous stage, tight-cycle-free by construction;
    // the lift re-checks it only within its small default budget.
    auto lifted = cone_lift(res.graph, res.graph.num_vertices());
    res.graph = std::move(lifted.graph);
    res.report.stages.push_back(
        {r, res.graph.num_vertices(), res.graph.num_edges()});
  }
  res.report.r = p.r;
  res.report.hyperedge_count = res.graph.num_edges();
  res.report.total_vertices = res.graph.num_vertices();
  res.report.density = density_ratio(res.graph);
  return res;
}

}  // namespace tightfree
