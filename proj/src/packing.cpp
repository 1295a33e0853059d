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

#include "tightfree/packing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tightfree/errors.hpp"
#include "tightfree/format.hpp"
#include "tightfree/girth.hpp"

namespace tightfree {
namespace {

std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(std::span(perm));
  return perm;
}

}  // namespace

std::size_t PackingFamily::edge_sum() const {
  std::size_t sum = 0;
  for (const auto& g : members) sum += g.num_edges();
  return sum;
}

BipartiteGraph random_copy(const BipartiteGraph& h, RngSeed seed) {
  Rng rng(seed);
  const auto left = random_permutation(h.n_left(), rng);
  const auto right = random_permutation(h.n_right(), rng);
  std::vector<BipartiteGraph::Edge> edges;
  edges.reserve(h.num_edges());
  for (const auto& [x, y] : h.edges()) edges.emplace_back(left[x], right[y]);
  return BipartiteGraph(h.n_left(), h.n_right(), std::move(edges));
}

RngSeed copy_seed(RngSeed family_seed, std::size_t index) {
  return derive_seed(family_seed, index);
}

PackingFamily pack(const BipartiteGraph& h, std::size_t t, std::size_t k,
                   RngSeed seed) {
  if (t < 1) throw Error("pack needs t >= 1");
  if (k < 1) throw Error("pack needs k >= 1");
  if (h.n_left() != h.n_right()) {
    throw Error("template must have equal sides");
  }
  const std::size_t n = h.n_left();
  if (k * t > n) {
    throw Error("precondition kt > n: k*t = " + std::to_string(k * t) +
                " exceeds n = " + std::to_string(n));
  }
  if (2 * k >= 2 && has_cycle_at_most(h, 2 * k)) {
    throw Error("template has short cycle (length <= " +
                std::to_string(2 * k) + ")");
  }

  PackingFamily fam{n, k, t, {}, h.num_edges(), seed};
  fam.members.reserve(t);
  std::vector<char> used(n * n, 0);
  for (std::size_t i = 0; i < t; ++i) {
    const BipartiteGraph copy = random_copy(h, copy_seed(seed, i));
    std::vector<BipartiteGraph::Edge> fresh;
    for (const auto& e : copy.edges()) {
      char& slot = used[static_cast<std::size_t>(e.first) * n + e.second];
      if (!slot) {
        slot = 1;
        fresh.push_back(e);
      }
    }
    fam.members.emplace_back(static_cast<Vertex>(n), static_cast<Vertex>(n),
                             std::move(fresh));
  }

  if (fam.edge_sum() != union_of_copies(h, t, seed)) {
    throw std::logic_error("packing lost or duplicated edges");
  }
  return fam;
}

std::size_t union_of_copies(const BipartiteGraph& h, std::size_t t,
                            RngSeed seed) {
  std::set<BipartiteGraph::Edge> all;
  for (std::size_t i = 0; i < t; ++i) {
    const auto copy = random_copy(h, copy_seed(seed, i));
    all.insert(copy.edges().begin(), copy.edges().end());
  }
  return all.size();
}

CoverageStats coverage_stats(const PackingFamily& fam) {
  CoverageStats s;
  s.edge_sum = fam.edge_sum();
  const double cells = static_cast<double>(fam.n) * static_cast<double>(fam.n);
  if (cells > 0) {
    s.coverage_ratio = static_cast<double>(s.edge_sum) / cells;
    s.predicted_missing_fraction =
        std::exp(-static_cast<double>(fam.template_edge_count) *
                 static_cast<double>(fam.t) / cells);
  }
  return s;
}

void validate_family(const PackingFamily& fam) {
  if (fam.k < 1) throw Error("family has k = 0");
  if (fam.k * fam.t > fam.n) {
    throw Error("precondition kt > n: k*t = " + std::to_string(fam.k * fam.t) +
                " exceeds n = " + std::to_string(fam.n));
  }
  if (fam.members.size() != fam.t) {
    throw Error("family declares t = " + std::to_string(fam.t) + " but has " +
                std::to_string(fam.members.size()) + " members");
  }
  std::vector<char> used(fam.n * fam.n, 0);
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    const auto& g = fam.members[i];
    const std::string who = "family member " + std::to_string(i + 1);
    if (g.n_left() != fam.n || g.n_right() != fam.n) {
      throw Error(who + " is not a subgraph of K_{n,n}");
    }
    for (const auto& [x, y] : g.edges()) {
      char& slot = used[static_cast<std::size_t>(x) * fam.n + y];
      if (slot) {
        throw Error(who + " shares edge (" + std::to_string(x) + "," +
                    std::to_string(y) + ") with an earlier member");
      }
      slot = 1;
    }
    if (has_cycle_at_most(g, 2 * fam.k)) {
      throw Error(who + " has a cycle of length <= " +
                  std::to_string(2 * fam.k));
    }
  }
}

std::string serialize(const PackingFamily& fam) {
  std::string out = "# family " + std::to_string(fam.n) + " " +
                    std::to_string(fam.k) + " " + std::to_string(fam.t) + " " +
                    std::to_string(fam.seed.value) + " " +
                    std::to_string(fam.edge_sum()) + "\n";
  out += "# template_edges " + std::to_string(fam.template_edge_count) + "\n";
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    out += "# member " + std::to_string(i + 1) + "\n";
    out += serialize(fam.members[i]);
  }
  return out;
}

PackingFamily parse_family(std::string_view text) {
  detail::LineReader in(text);
  if (in.at_end() || !in.peek().starts_with("# family")) {
    throw ParseError("missing \"# family\" manifest", 1);
  }
  auto manifest = detail::parse_uints(in.next().substr(8));
  if (!manifest || manifest->size() != 5) {
    throw ParseError("malformed family manifest", 1);
  }
  PackingFamily fam;
  fam.n = (*manifest)[0];
  fam.k = (*manifest)[1];
  fam.t = (*manifest)[2];
  fam.seed = RngSeed{(*manifest)[3]};
  const std::size_t declared_sum = (*manifest)[4];

  if (!in.at_end() && in.peek().starts_with("# template_edges")) {
    const std::size_t line = in.line_number();
    auto v = detail::parse_uints(in.next().substr(16));
    if (!v || v->size() != 1) throw ParseError("malformed template_edges", line);
    fam.template_edge_count = (*v)[0];
  }
  while (!in.at_end()) {
    if (in.peek().find_first_not_of(" \t\r") == std::string_view::npos) {
      in.next();
      continue;
    }
    const std::size_t first = in.line_number();
    auto block = detail::read_edge_list(in);
    fam.members.push_back(
        detail::bipartite_from_block(block, first + block.comments.size()));
  }
  if (fam.members.size() != fam.t) {
    throw ParseError("family declares t = " + std::to_string(fam.t) +
                         " but lists " + std::to_string(fam.members.size()) +
                         " members",
                     in.line_number());
  }
  if (fam.edge_sum() != declared_sum) {
    throw ParseError("edge_sum in manifest does not match members", 1);
  }
  return fam;
}

}  // namespace tightfree
