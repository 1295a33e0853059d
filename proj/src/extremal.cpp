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

#include "tightfree/extremal.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tightfree/detector.hpp"
#include "tightfree/errors.hpp"
#include "tightfree/format.hpp"

namespace tightfree {
namespace {

using Mask = std::uint32_t;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// Tight-cycle test on a vertex-mask edge table, for n <= 20 or so.
class MaskCycleSearch {
 public:
  MaskCycleSearch(int r, Vertex n) : r_(r), n_(n), present_(Mask{1} << n, 0) {}

  void set(Mask e, bool on) { present_[e] = on ? 1 : 0; }

  // Whether some tight cycle uses edge e (which must be present) as a window.
  bool cycle_through(Mask e) {
    std::vector<Vertex> order;
    for (Vertex v = 0; v < n_; ++v) {
      if (e >> v & 1u) order.push_back(v);
    }
    // Reading a cycle backwards reverses the window, so one of the two
    // orientations has order.front() < order.back().
    do {
      if (r_ >= 2 && order.front() > order.back()) continue;
      path_ = order;
      if (extend(e)) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
  }

 private:
  Mask window(std::size_t start) const {
    Mask m = 0;
    for (int j = 0; j < r_; ++j) m |= Mask{1} << path_[(start + j) % path_.size()];
    return m;
  }

  bool closes() const {
    const std::size_t len = path_.size();
    for (std::size_t i = len - static_cast<std::size_t>(r_) + 1; i < len; ++i) {
      if (!present_[window(i)]) return false;
    }
    return true;
  }

  bool extend(Mask used) {
    if (path_.size() > static_cast<std::size_t>(r_) && closes()) return true;
    Mask tail = 0;
    for (std::size_t j = path_.size() - static_cast<std::size_t>(r_) + 1;
         j < path_.size(); ++j) {
      tail |= Mask{1} << path_[j];
    }
    for (Vertex u = 0; u < n_; ++u) {
      const Mask bit = Mask{1} << u;
      if ((used & bit) || !present_[tail | bit]) continue;
      path_.push_back(u);
      const bool hit = extend(used | bit);
      path_.pop_back();
      if (hit) return true;
    }
    return false;
  }

  int r_;
  Vertex n_;
  std::vector<char> present_;
  std::vector<Vertex> path_;
};

class BranchAndBound {
 public:
  BranchAndBound(int r, Vertex n, std::optional<std::uint64_t> budget)
      : r_(r), n_(n), budget_(budget), search_(r, n) {
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      if (std::popcount(m) == r) candidates_.push_back(m);
    }
    // Lexicographic order of the sorted vertex tuples.
    std::sort(candidates_.begin(), candidates_.end(), [](Mask a, Mask b) {
      while (a && b) {
        const int la = std::countr_zero(a);
        const int lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
      }
      return false;
    });
  }

  void seed_incumbent(const Hypergraph& h) {
    best_.clear();
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
      Mask m = 0;
      for (Vertex v : h.edge(i)) m |= Mask{1} << v;
      best_.push_back(m);
    }
  }

  void run() { dfs(0); }

  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }

  Hypergraph best() const {
    std::vector<Vertex> flat;
    for (Mask m : best_) {
      for (Vertex v = 0; v < n_; ++v) {
        if (m >> v & 1u) flat.push_back(v);
      }
    }
    return Hypergraph::from_flat(r_, n_, std::move(flat));
  }

 private:
  void dfs(std::size_t idx) {
    if (aborted_) return;
    if (budget_ && nodes_ >= *budget_) {
      aborted_ = true;
      return;
    }
    ++nodes_;
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (idx == candidates_.size()) return;
    if (chosen_.size() + (candidates_.size() - idx) <= best_.size()) return;

    const Mask e = candidates_[idx];
    search_.set(e, true);
    // A cycle created by e must pass through e.
    if (!search_.cycle_through(e)) {
      chosen_.push_back(e);
      dfs(idx + 1);
      chosen_.pop_back();
    }
    search_.set(e, false);
    // Any nonempty answer relabels to one containing {0, ..., r-1}, the first
    // candidate, so it is never excluded.
    if (idx == 0) return;
    dfs(idx + 1);
  }

  int r_;
  Vertex n_;
  std::optional<std::uint64_t> budget_;
  MaskCycleSearch search_;
  std::vector<Mask> candidates_;
  std::vector<Mask> chosen_;
  std::vector<Mask> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

std::string rational_csv(const Rational& q) { return q.str(); }

std::string verdict(const DetectResult& res) {
  if (res.found()) return "contains tight cycles";
  if (res.aborted()) return "unverified";
  return "free";
}

}  // namespace

ExtremalResult exact_extremal(int r, Vertex n,
                              std::optional<std::uint64_t> node_budget,
                              std::size_t candidate_cap) {
  if (r < 2) throw Error("exact_extremal needs r >= 2");
  if (n < static_cast<Vertex>(r)) throw Error("exact_extremal needs n >= r");
  const std::uint64_t m = binomial(n, static_cast<std::uint64_t>(r));
  if (n > 24 || m > candidate_cap) {
    throw Error("instance too large: C(" + std::to_string(n) + "," +
                std::to_string(r) + ") = " + std::to_string(m) +
                " candidate edges exceeds the cap of " +
                std::to_string(candidate_cap));
  }

  BranchAndBound bb(r, n, node_budget);
  bb.seed_incumbent(star(r, n));
  bb.run();

  ExtremalResult res;
  res.r = r;
  res.n = n;
  res.witness = bb.best();
  res.value = res.witness.num_edges();
  res.nodes_explored = bb.nodes();
  res.exhaustive = !bb.aborted();
  if (!is_tight_cycle_free(res.witness)) {
    throw std::logic_error("extremal witness contains a tight cycle");
  }
  return res;
}

std::vector<ExtremalResult> read_extremal_cache(std::string_view text) {
  std::vector<ExtremalResult> out;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    ExtremalResult rec;
    int exhaustive = 0;
    unsigned n = 0;
    if (!(ls >> rec.r >> n >> rec.value >> exhaustive) || rec.r < 1 ||
        (exhaustive != 0 && exhaustive != 1)) {
      throw ParseError("malformed cache record", lineno);
    }
    rec.n = n;
    rec.exhaustive = exhaustive == 1;
    std::vector<std::vector<Vertex>> edges;
    std::string tok;
    while (ls >> tok) {
      std::replace(tok.begin(), tok.end(), ',', ' ');
      auto values = detail::parse_uints(tok);
      if (!values) throw ParseError("malformed cache edge", lineno);
      edges.emplace_back(values->begin(), values->end());
    }
    try {
      rec.witness = Hypergraph(rec.r, rec.n, edges);
    } catch (const Error& e) {
      throw ParseError(e.what(), lineno);
    }
    if (rec.witness.num_edges() != rec.value) {
      throw ParseError("cache value does not match its witness", lineno);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::string write_extremal_cache(const std::vector<ExtremalResult>& records) {
  std::string out;
  for (const auto& rec : records) {
    out += std::to_string(rec.r) + ' ' + std::to_string(rec.n) + ' ' +
           std::to_string(rec.value) + ' ' + (rec.exhaustive ? "1" : "0");
    for (std::size_t i = 0; i < rec.witness.num_edges(); ++i) {
      out += ' ';
      auto e = rec.witness.edge(i);
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(e[j]);
      }
    }
    out += '\n';
  }
  return out;
}

ExtremalResult exact_extremal_cached(int r, Vertex n, const std::string& path,
                                     std::optional<std::uint64_t> node_budget) {
  std::vector<ExtremalResult> records;
  {
    std::ifstream in(path);
    if (in) {
      std::stringstream buf;
      buf << in.rdbuf();
      records = read_extremal_cache(buf.str());
    }
  }
  for (const auto& rec : records) {
    if (rec.r == r && rec.n == n && rec.exhaustive &&
        is_tight_cycle_free(rec.witness)) {
      return rec;
    }
  }
  ExtremalResult res = exact_extremal(r, n, node_budget);
  std::erase_if(records, [&](const auto& rec) { return rec.r == r && rec.n == n; });
  records.push_back(res);
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return std::pair(a.r, a.n) < std::pair(b.r, b.n);
  });
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write extremal cache " + path);
  out << write_extremal_cache(records);
  return res;
}

std::vector<ComparisonRow> compare_constructions(
    int r, const std::vector<std::size_t>& n_values,
    const std::vector<std::uint64_t>& seeds, const PipelineParams& base,
    std::uint64_t verify_state_budget) {
  if (r < 3) throw Error("compare_constructions needs r >= 3");
  if (seeds.empty()) throw Error("compare_constructions needs a seed");
  DetectOptions opt;
  opt.state_budget = verify_state_budget;

  std::vector<ComparisonRow> rows;
  for (std::size_t n : n_values) {
    if (n < static_cast<std::size_t>(r) || n < 4) {
      throw Error("n = " + std::to_string(n) + " is too small for r = " +
                  std::to_string(r));
    }
    auto add = [&](const char* name, std::uint64_t seed, const Hypergraph& h,
                   std::string flag) {
      rows.push_back({r, n, name, seed, h.num_edges(), h.num_vertices(),
                      density_ratio(h), std::move(flag)});
    };

    const Hypergraph s = star(r, static_cast<Vertex>(n));
    add("star", 0, s, verdict(find_tight_cycle(s, opt)));

    std::vector<Vertex> sizes(static_cast<std::size_t>(r),
                              static_cast<Vertex>(n / r));
    for (std::size_t i = 0; i < n % static_cast<std::size_t>(r); ++i) ++sizes[i];
    const Hypergraph cp = complete_r_partite(r, sizes);
    add("complete_partite", 0, cp, verdict(find_tight_cycle(cp, opt)));

    std::optional<ConstructionResult> best;
    for (std::uint64_t seed : seeds) {
      PipelineParams p = base;
      p.r = r;
      p.n = n;
      p.seed = RngSeed{seed};
      auto res = construct_r_uniform(p);
      if (!best || res.graph.num_edges() > best->graph.num_edges()) {
        best = std::move(res);
      }
    }
    const DetectResult check = r == 3
                                   ? tripartite_fast_find(best->graph, opt)
                                   : find_tight_cycle(best->graph, opt);
    add("lifted", best->report.seed, best->graph, verdict(check));
  }
  return rows;
}

std::string to_csv(const std::vector<ComparisonRow>& rows) {
  std::ostringstream os;
  os << "r,n,construction,seed,edges,total_vertices,density_ratio,"
        "density_ratio_float,tight_cycles\n";
  for (const auto& row : rows) {
    os << row.r << ',' << row.n << ',' << row.construction << ',' << row.seed
       << ',' << row.edges << ',' << row.total_vertices << ','
       << rational_csv(row.density) << ',' << row.density.to_double() << ','
       << row.tight_cycles << '\n';
  }
  return os.str();
}

}  // namespace tightfree
