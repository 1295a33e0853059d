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

#include "tightfree/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "tightfree/constructions.hpp"
#include "tightfree/detector.hpp"
#include "tightfree/errors.hpp"
#include "tightfree/extremal.hpp"
#include "tightfree/format.hpp"
#include "tightfree/girth.hpp"
#include "tightfree/packing.hpp"

namespace tightfree::cli {
namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string seed = std::to_string(kDefaultSeed);
  std::string out;
  std::string format = "text";
  bool quiet = false;
  unsigned threads = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << content;
  if (!out.flush()) throw IoError("write failed for " + path);
}

RngSeed resolve_seed(const std::string& text) {
  if (text == "random") {
    std::random_device rd;
    return RngSeed{(std::uint64_t{rd()} << 32) ^ rd()};
  }
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-') {
    throw CLI::ValidationError("--seed", "expected an unsigned integer or 'random'");
  }
  return RngSeed{v};
}

// Key/value records, printed as "key: value" or, in machine format, as
// "format=1" then "key=value".
class Record {
 public:
  void add(std::string key, std::string value) {
    items_.emplace_back(std::move(key), std::move(value));
  }
  std::string render(const std::string& format) const {
    std::string s = format == "machine" ? "format=1\n" : "";
    for (const auto& [k, v] : items_) {
      s += k + (format == "machine" ? "=" : ": ") + v + "\n";
    }
    return s;
  }

 private:
  std::vector<std::pair<std::string, std::string>> items_;
};

RemovalStrategy parse_strategy(const std::string& s) {
  return s == "greedy" ? RemovalStrategy::kGreedyInsertion
                       : RemovalStrategy::kDeleteRandomEdgePerShortCycle;
}

void add_common(CLI::App* sub, Common& c, bool seeded) {
  if (seeded) {
    sub->add_option("--seed", c.seed,
                    "64-bit seed (decimal or 0x hex), or 'random'")
        ->capture_default_str();
  }
  sub->add_option("--out", c.out, "output file (default: stdout)");
  sub->add_option("--format", c.format, "text or machine")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  sub->add_flag("--quiet", c.quiet, "suppress the summary");
  sub->add_option("--threads", c.threads,
                  "worker threads for detection (0 = all cores)")
      ->capture_default_str();
}

void add_girth_options(CLI::App* sub, GirthGenConfig& cfg, std::string& strategy) {
  sub->add_option("--strategy", strategy, "deletion or greedy")
      ->check(CLI::IsMember({"deletion", "greedy"}))
      ->capture_default_str();
  sub->add_option("--scale", cfg.initial_edge_probability_scale,
                  "edge probability multiplier")
      ->capture_default_str();
  sub->add_option("--c", cfg.density_exponent_c,
                  "density exponent: p = scale * n^(-1 + c/k)")
      ->capture_default_str();
  sub->add_option("--max-retries", cfg.max_retries)->capture_default_str();
}

// Primary output goes to --out when given, else to stdout; the summary then
// goes to stdout or, when stdout already holds the payload, to stderr.
void emit(const Common& c, const std::string& payload, const Record& summary,
          std::ostream& out, std::ostream& err) {
  if (!c.out.empty()) {
    write_file(c.out, payload);
    if (!c.quiet) out << summary.render(c.format);
  } else {
    out << payload;
    if (!c.quiet) err << summary.render(c.format);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Construct and certify hypergraphs without tight cycles."};
  app.name("tightfree");
  app.require_subcommand(1);

  Common common;
  GirthGenConfig girth_cfg;
  std::string strategy = "deletion";

  // girth
  std::size_t g_n = 0;
  std::size_t g_k = 2;
  auto* girth = app.add_subcommand(
      "girth", "Random subgraph of K_{n,n} with no cycle of length <= 2k");
  girth->add_option("--n", g_n, "side size")->required();
  girth->add_option("--k", g_k, "forbid cycles of length <= 2k")
      ->capture_default_str();
  add_girth_options(girth, girth_cfg, strategy);
  add_common(girth, common, true);

  // pack
  std::string p_in;
  std::size_t p_k = 1;
  std::size_t p_t = 0;
  auto* packc = app.add_subcommand(
      "pack", "Edge-disjoint family from random copies of a template");
  packc->add_option("--in", p_in, "template (bipartite edge list)")->required();
  packc->add_option("--k", p_k, "girth parameter")->required();
  packc->add_option("--t", p_t, "number of copies (default floor(n/k))");
  add_common(packc, common, true);

  // construct
  PipelineParams params;
  std::optional<std::size_t> c_k;
  std::string report_path;
  std::uint64_t verify_states = 10'000'000;
  auto* construct = app.add_subcommand(
      "construct", "Build an r-uniform hypergraph without tight cycles");
  construct->add_option("--r", params.r, "uniformity (>= 3)")
      ->capture_default_str();
  construct->add_option("--n", params.n, "side size of K_{n,n}")->required();
  construct->add_option("--alpha", params.alpha, "k = alpha ln n / ln ln n")
      ->capture_default_str();
  construct->add_option("--k", c_k, "override k");
  construct->add_option("--report", report_path, "also write the report here");
  construct->add_option("--verify-states", verify_states,
                        "state budget for the full detector check")
      ->capture_default_str();
  add_girth_options(construct, girth_cfg, strategy);
  add_common(construct, common, true);

  // lift
  std::string l_in;
  std::size_t l_m = 0;
  auto* lift = app.add_subcommand(
      "lift", "Cone lift: join every edge with each of m new apex vertices");
  lift->add_option("--in", l_in, "input edge list")->required();
  lift->add_option("--m", l_m, "apex count (default: vertex count)");
  add_common(lift, common, false);

  // detect
  std::string d_in;
  std::optional<std::size_t> d_min;
  std::optional<std::size_t> d_max;
  std::optional<std::uint64_t> d_budget;
  bool d_brute = false;
  bool d_fast = false;
  auto* detect = app.add_subcommand(
      "detect", "Search for a tight cycle (exit 0 none, 1 found, 2 aborted)");
  detect->add_option("--in", d_in, "input edge list")->required();
  detect->add_option("--min", d_min, "minimum cycle length");
  detect->add_option("--max", d_max, "maximum cycle length");
  detect->add_option("--budget", d_budget, "abort after this many states");
  detect->add_flag("--brute-force", d_brute, "use the enumeration oracle");
  detect->add_flag("--tripartite", d_fast,
                   "use the search for 3-partite transversal inputs");
  add_common(detect, common, false);

  // extremal
  int e_r = 3;
  Vertex e_n = 0;
  std::optional<std::uint64_t> e_budget;
  std::string e_cache;
  auto* extremal =
      app.add_subcommand("extremal", "Exact f_r(n) by branch and bound");
  extremal->add_option("--r", e_r)->required();
  extremal->add_option("--n", e_n)->required();
  extremal->add_option("--budget", e_budget, "node budget");
  extremal->add_option("--cache", e_cache, "results cache file");
  add_common(extremal, common, false);

  // bench
  int b_r = 3;
  std::vector<std::size_t> b_ns{8, 16, 32};
  std::vector<std::string> b_seeds{std::to_string(kDefaultSeed)};
  auto* bench = app.add_subcommand(
      "bench", "CSV comparing the construction with the baselines");
  bench->add_option("--r", b_r)->capture_default_str();
  bench->add_option("--n-values", b_ns)->delimiter(',')->capture_default_str();
  bench->add_option("--seeds", b_seeds)->delimiter(',')->capture_default_str();
  bench->add_option("--alpha", params.alpha)->capture_default_str();
  bench->add_option("--k", c_k, "override k");
  add_girth_options(bench, girth_cfg, strategy);
  add_common(bench, common, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    for (auto* sub : app.get_subcommands()) err << sub->help();
    return kExitUsage;
  }

  girth_cfg.removal_strategy = parse_strategy(strategy);
  DetectOptions detect_opt;
  detect_opt.parallel_roots = common.threads != 1;
  detect_opt.threads = common.threads;

  try {
    if (*girth) {
      const RngSeed seed = resolve_seed(common.seed);
      const auto res = generate_high_girth(g_n, g_k, girth_cfg, seed);
      const auto g = shortest_cycle_length(res.graph);
      Record rec;
      rec.add("seed", std::to_string(seed.value));
      rec.add("n", std::to_string(g_n));
      rec.add("k", std::to_string(g_k));
      rec.add("edges", std::to_string(res.graph.num_edges()));
      rec.add("sampled_edges", std::to_string(res.sampled_edges));
      rec.add("attempts", std::to_string(res.attempts));
      rec.add("girth", g ? std::to_string(*g) : "inf");
      emit(common, serialize(res.graph), rec, out, err);
      return kExitOk;
    }

    if (*packc) {
      const RngSeed seed = resolve_seed(common.seed);
      const BipartiteGraph tmpl = parse_bipartite(read_file(p_in));
      if (p_k == 0) throw Error("k must be at least 1");
      const std::size_t t = p_t ? p_t : tmpl.n_left() / p_k;
      const auto fam = pack(tmpl, t, p_k, seed);
      const auto cov = coverage_stats(fam);
      Record rec;
      rec.add("seed", std::to_string(seed.value));
      rec.add("n", std::to_string(fam.n));
      rec.add("k", std::to_string(fam.k));
      rec.add("t", std::to_string(fam.t));
      rec.add("template_edges", std::to_string(fam.template_edge_count));
      rec.add("edge_sum", std::to_string(cov.edge_sum));
      rec.add("coverage_ratio", std::to_string(cov.coverage_ratio));
      rec.add("predicted_missing_fraction",
              std::to_string(cov.predicted_missing_fraction));
      emit(common, serialize(fam), rec, out, err);
      return kExitOk;
    }

    if (*construct) {
      params.seed = resolve_seed(common.seed);
      params.k_override = c_k;
      params.girth = girth_cfg;
      const auto started = std::chrono::steady_clock::now();
      auto res = construct_r_uniform(params);

      const bool fast_ok = tripartite_fast_check(res.three_uniform_stage);
      res.report.fast_check = fast_ok ? "free" : "contains tight cycles";
      DetectOptions full = detect_opt;
      full.state_budget = verify_states;
      const auto check = find_tight_cycle(res.graph, full);
      if (check.found()) {
        res.report.verification =
            "contains tight cycles (" + format_witness(*check.witness) + ")";
      } else if (check.aborted()) {
        res.report.verification =
            "structurally guaranteed, not exhaustively verified";
      } else {
        res.report.verification = "free (full detector)";
      }
      const std::string report = common.format == "machine"
                                     ? to_machine(res.report)
                                     : to_text(res.report);
      if (!report_path.empty()) write_file(report_path, to_machine(res.report));
      const std::string payload = serialize(res.graph);
      if (!common.out.empty()) {
        write_file(common.out, payload);
        if (!common.quiet) out << report;
      } else {
        out << payload;
        if (!common.quiet) err << report;
      }
      if (!common.quiet) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
        err << "elapsed_ms: " << ms << "\n";
      }
      return check.found() || !fast_ok ? kExitData : kExitOk;
    }

    if (*lift) {
      const Hypergraph h = parse_hypergraph(read_file(l_in));
      const std::size_t m = l_m ? l_m : h.num_vertices();
      const auto res = cone_lift(h, m);
      Record rec;
      rec.add("r", std::to_string(res.graph.uniformity()));
      rec.add("vertices", std::to_string(res.graph.num_vertices()));
      rec.add("edges", std::to_string(res.graph.num_edges()));
      rec.add("input_verified", res.input_verified ? "yes" : "no");
      emit(common, serialize(res.graph), rec, out, err);
      return kExitOk;
    }

    if (*detect) {
      const Hypergraph h = parse_hypergraph(read_file(d_in));
      DetectOptions opt = detect_opt;
      opt.min_length = d_min;
      opt.max_length = d_max;
      opt.state_budget = d_budget;
      const DetectResult res = d_brute  ? brute_force_find(h, opt)
                               : d_fast ? tripartite_fast_find(h, opt)
                                        : find_tight_cycle(h, opt);
      std::string line;
      int code = kExitOk;
      if (res.found()) {
        line = format_witness(*res.witness);
        code = kExitCycleFound;
      } else if (res.aborted()) {
        line = "aborted after " + std::to_string(res.states) + " states";
        code = kExitAborted;
      } else {
        line = "free";
      }
      if (!common.out.empty()) write_file(common.out, line + "\n");
      if (common.format == "machine") {
        out << "format=1\nresult="
            << (res.found() ? "found" : res.aborted() ? "aborted" : "free")
            << "\n";
        if (res.found()) out << "witness=" << line << "\n";
        out << "states=" << res.states << "\n";
      } else {
        out << line << "\n";
      }
      return code;
    }

    if (*extremal) {
      const auto res = e_cache.empty()
                           ? exact_extremal(e_r, e_n, e_budget)
                           : exact_extremal_cached(e_r, e_n, e_cache, e_budget);
      if (!common.out.empty()) write_file(common.out, serialize(res.witness));
      if (common.format == "machine") {
        out << "format=1\nr=" << res.r << "\nn=" << res.n
            << "\nvalue=" << res.value
            << "\nexhaustive=" << (res.exhaustive ? 1 : 0)
            << "\nnodes=" << res.nodes_explored << "\n";
      } else {
        out << "value " << res.value << "\n";
        if (!common.quiet) {
          out << "exhaustive " << (res.exhaustive ? "yes" : "no") << "\n"
              << "nodes " << res.nodes_explored << "\n";
        }
      }
      return kExitOk;
    }

    if (*bench) {
      std::vector<std::uint64_t> seeds;
      for (const auto& s : b_seeds) seeds.push_back(resolve_seed(s).value);
      params.k_override = c_k;
      params.girth = girth_cfg;
      const auto rows = compare_constructions(b_r, b_ns, seeds, params);
      const std::string csv = to_csv(rows);
      if (!common.out.empty()) {
        write_file(common.out, csv);
      } else {
        out << csv;
      }
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kExitAborted;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace tightfree::cli
