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

#include "tightfree/report.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "tightfree/errors.hpp"

namespace tightfree {
namespace {

// Shortest form that reads back to the same double.
std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string stages_str(const std::vector<StageCount>& stages) {
  std::string out;
  for (const auto& s : stages) {
    if (!out.empty()) out += ' ';
    out += std::to_string(s.r) + ':' + std::to_string(s.vertices) + ':' +
           std::to_string(s.edges);
  }
  return out;
}

using Field = std::pair<std::string, std::string>;

std::vector<Field> fields(const ConstructionReport& rep) {
  return {
      {"r", std::to_string(rep.r)},
      {"n", std::to_string(rep.n)},
      {"k", std::to_string(rep.k)},
      {"t", std::to_string(rep.t)},
      {"alpha", fmt_double(rep.alpha)},
      {"seed", std::to_string(rep.seed)},
      {"template_edges", std::to_string(rep.template_edges)},
      {"family_edge_sum", std::to_string(rep.family_edge_sum)},
      {"union_coverage_ratio", fmt_double(rep.union_coverage_ratio)},
      {"predicted_missing_fraction", fmt_double(rep.predicted_missing_fraction)},
      {"hyperedge_count", std::to_string(rep.hyperedge_count)},
      {"total_vertices", std::to_string(rep.total_vertices)},
      {"density_ratio", rep.density.str()},
      {"density_ratio_float", fmt_double(rep.density.to_double())},
      {"stages", stages_str(rep.stages)},
      {"verification", rep.verification},
      {"fast_check", rep.fast_check},
  };
}

}  // namespace

std::string to_text(const ConstructionReport& rep) {
  std::string out;
  for (const auto& [k, v] : fields(rep)) out += k + ": " + v + "\n";
  return out;
}

std::string to_machine(const ConstructionReport& rep) {
  std::string out = "format=1\n";
  for (const auto& [k, v] : fields(rep)) out += k + "=" + v + "\n";
  return out;
}

ConstructionReport parse_report(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", lineno);
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  if (kv["format"] != "1") throw ParseError("unsupported report format", 1);

  auto get = [&](const char* key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error(std::string("report lacks key ") + key);
    return it->second;
  };
  auto u64 = [&](const char* key) {
    const auto& s = get(key);
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) {
      throw Error(std::string("bad integer for ") + key);
    }
    return v;
  };
  auto dbl = [&](const char* key) { return std::stod(get(key)); };

  ConstructionReport rep;
  rep.r = static_cast<int>(u64("r"));
  rep.n = u64("n");
  rep.k = u64("k");
  rep.t = u64("t");
  rep.alpha = dbl("alpha");
  rep.seed = u64("seed");
  rep.template_edges = u64("template_edges");
  rep.family_edge_sum = u64("family_edge_sum");
  rep.union_coverage_ratio = dbl("union_coverage_ratio");
  rep.predicted_missing_fraction = dbl("predicted_missing_fraction");
  rep.hyperedge_count = u64("hyperedge_count");
  rep.total_vertices = u64("total_vertices");

  const auto& dens = get("density_ratio");
  const auto slash = dens.find('/');
  if (slash == std::string::npos) throw Error("bad density_ratio");
  rep.density = Rational{std::stoull(dens.substr(0, slash)),
                         std::stoull(dens.substr(slash + 1))};

  std::istringstream st(get("stages"));
  std::string tok;
  while (st >> tok) {
    StageCount s;
    if (std::sscanf(tok.c_str(), "%d:%zu:%zu", &s.r, &s.vertices, &s.edges) !=
        3) {
      throw Error("bad stages entry " + tok);
    }
    rep.stages.push_back(s);
  }
  rep.verification = get("verification");
  rep.fast_check = get("fast_check");
  return rep;
}

}  // namespace tightfree
