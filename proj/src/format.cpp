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

#include "tightfree/format.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "tightfree/errors.hpp"

namespace tightfree {
namespace detail {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<VertexRange> parse_partition(std::string_view body,
                                         std::size_t line) {
  std::vector<VertexRange> parts;
  std::istringstream is{std::string(body)};
  std::string token;
  while (is >> token) {
    const auto colon = token.find(':');
    std::uint64_t b = 0;
    std::uint64_t e = 0;
    if (colon == std::string::npos) throw ParseError("malformed partition", line);
    auto r1 = std::from_chars(token.data(), token.data() + colon, b);
    auto r2 = std::from_chars(token.data() + colon + 1,
                              token.data() + token.size(), e);
    if (r1.ec != std::errc{} || r1.ptr != token.data() + colon ||
        r2.ec != std::errc{} || r2.ptr != token.data() + token.size() ||
        e > UINT32_MAX || b > e) {
      throw ParseError("malformed partition", line);
    }
    parts.push_back({static_cast<Vertex>(b), static_cast<Vertex>(e)});
  }
  return parts;
}

}  // namespace

LineReader::LineReader(std::string_view text) {
  while (!text.empty()) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) {
      lines_.push_back(text);
      break;
    }
    lines_.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
}

std::optional<std::vector<std::uint64_t>> parse_uints(std::string_view line) {
  std::vector<std::uint64_t> out;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end) break;
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{}) return std::nullopt;
    if (ptr < end && *ptr != ' ' && *ptr != '\t' && *ptr != '\r') {
      return std::nullopt;
    }
    out.push_back(v);
    p = ptr;
  }
  return out;
}

EdgeListBlock read_edge_list(LineReader& in) {
  EdgeListBlock block;
  while (!in.at_end() && trim(in.peek()).starts_with('#')) {
    const std::size_t line = in.line_number();
    auto body = trim(trim(in.next()).substr(1));
    if (body.starts_with("partition")) {
      block.partition = parse_partition(body.substr(9), line);
    }
    block.comments.emplace_back(body);
  }
  if (in.at_end()) throw ParseError("missing header", in.line_number());

  const std::size_t header_line = in.line_number();
  auto header = parse_uints(in.next());
  if (!header || header->size() != 3 || (*header)[0] < 1 ||
      (*header)[0] > 64 || (*header)[1] > UINT32_MAX) {
    throw ParseError("malformed header (expected \"r n m\")", header_line);
  }
  block.r = static_cast<int>((*header)[0]);
  block.n = static_cast<Vertex>((*header)[1]);
  const std::uint64_t m = (*header)[2];

  block.flat.reserve(std::min<std::uint64_t>(m, 1u << 20) * block.r);
  std::vector<Vertex> sorted(block.r);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (in.at_end()) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " +
                           std::to_string(i),
                       in.line_number());
    }
    const std::size_t line = in.line_number();
    auto values = parse_uints(in.next());
    if (!values) throw ParseError("non-numeric token", line);
    if (values->size() != static_cast<std::size_t>(block.r)) {
      throw ParseError("wrong edge arity (expected " +
                           std::to_string(block.r) + ", got " +
                           std::to_string(values->size()) + ")",
                       line);
    }
    for (std::size_t j = 0; j < values->size(); ++j) {
      if ((*values)[j] >= block.n) throw ParseError("index out of range", line);
      sorted[j] = static_cast<Vertex>((*values)[j]);
    }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError("repeated vertex", line);
    }
    block.flat.insert(block.flat.end(), sorted.begin(), sorted.end());
  }
  return block;
}

std::string write_edge_list(const Hypergraph& h,
                            const std::vector<std::string>& comments,
                            bool emit_partition) {
  std::string out;
  out.reserve(16 + h.flat_edges().size() * 4);
  for (const auto& c : comments) {
    out += "# ";
    out += c;
    out += '\n';
  }
  if (emit_partition && h.has_partition()) {
    out += "# partition";
    for (const auto& p : h.partition()) {
      out += ' ' + std::to_string(p.begin) + ':' + std::to_string(p.end);
    }
    out += '\n';
  }
  out += std::to_string(h.uniformity()) + ' ' +
         std::to_string(h.num_vertices()) + ' ' +
         std::to_string(h.num_edges()) + '\n';
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    auto e = h.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(e[j]);
    }
    out += '\n';
  }
  return out;
}

BipartiteGraph bipartite_from_block(const EdgeListBlock& block,
                                    std::size_t header_line) {
  std::optional<std::pair<Vertex, Vertex>> sides;
  for (const auto& c : block.comments) {
    if (!c.starts_with("bipartite")) continue;
    auto v = parse_uints(std::string_view(c).substr(9));
    if (!v || v->size() != 2) {
      throw ParseError("malformed bipartite comment", header_line);
    }
    sides = {static_cast<Vertex>((*v)[0]), static_cast<Vertex>((*v)[1])};
  }
  if (!sides) throw ParseError("missing \"# bipartite\" comment", header_line);
  const auto [nl, nr] = *sides;
  if (block.r != 2 || static_cast<std::uint64_t>(nl) + nr != block.n) {
    throw ParseError("bipartite sides do not match header", header_line);
  }
  std::vector<BipartiteGraph::Edge> edges;
  edges.reserve(block.flat.size() / 2);
  for (std::size_t i = 0; i < block.flat.size(); i += 2) {
    const Vertex a = block.flat[i];
    const Vertex b = block.flat[i + 1];
    if (a >= nl || b < nl) {
      throw ParseError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                           "} does not cross the bipartition",
                       header_line + 1 + i / 2);
    }
    edges.emplace_back(a, b - nl);
  }
  return BipartiteGraph(nl, nr, std::move(edges));
}

}  // namespace detail

std::string serialize(const Hypergraph& h) {
  return detail::write_edge_list(h, {}, true);
}

Hypergraph parse_hypergraph(std::string_view text) {
  detail::LineReader in(text);
  auto block = detail::read_edge_list(in);
  while (!in.at_end()) {
    const std::size_t line = in.line_number();
    if (!detail::trim(in.next()).empty()) {
      throw ParseError("unexpected trailing content", line);
    }
  }
  try {
    return Hypergraph::from_flat(block.r, block.n, std::move(block.flat),
                                 std::move(block.partition));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 1);
  }
}

std::string serialize(const BipartiteGraph& g) {
  return detail::write_edge_list(
      g.to_hypergraph(),
      {"bipartite " + std::to_string(g.n_left()) + " " +
       std::to_string(g.n_right())},
      false);
}

BipartiteGraph parse_bipartite(std::string_view text) {
  detail::LineReader in(text);
  const std::size_t first = in.line_number();
  auto block = detail::read_edge_list(in);
  const std::size_t header_line = first + block.comments.size();
  return detail::bipartite_from_block(block, header_line);
}

}  // namespace tightfree
