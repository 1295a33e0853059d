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

// Edge-list text format.
//
//   # optional comment lines, only before the header
//   r n m
//   v_1 ... v_r        (m lines, ascending within a line,
//   ...                 lines in lexicographic order)
//
// Two comments carry structure and survive a round trip:
//   "# partition b:e b:e ..."   the optional vertex partition of a Hypergraph
//   "# bipartite nl nr"         marks an r=2 list as a BipartiteGraph whose
//                               side Y occupies indices nl..nl+nr-1

#ifndef TIGHTFREE_FORMAT_HPP_
#define TIGHTFREE_FORMAT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tightfree/hypergraph.hpp"

namespace tightfree {

std::string serialize(const Hypergraph& h);
Hypergraph parse_hypergraph(std::string_view text);

std::string serialize(const BipartiteGraph& g);
BipartiteGraph parse_bipartite(std::string_view text);

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::string_view text);

  bool at_end() const { return pos_ >= lines_.size(); }
  std::string_view peek() const { return lines_[pos_]; }
  std::string_view next() { return lines_[pos_++]; }
  // 1-based number of the line peek() would return.
  std::size_t line_number() const { return pos_ + 1; }

 private:
  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
};

// Whitespace-separated unsigned integers; nullopt on any non-numeric token.
std::optional<std::vector<std::uint64_t>> parse_uints(std::string_view line);

struct EdgeListBlock {
  std::vector<std::string> comments;  // without the leading '#', trimmed
  std::vector<VertexRange> partition;
  int r = 0;
  Vertex n = 0;
  std::vector<Vertex> flat;
};

// Reads comments, header and m edge lines, validating each edge line.
EdgeListBlock read_edge_list(LineReader& in);

std::string write_edge_list(const Hypergraph& h,
                            const std::vector<std::string>& comments,
                            bool emit_partition);

BipartiteGraph bipartite_from_block(const EdgeListBlock& block,
                                    std::size_t header_line);

}  // namespace detail
}  // namespace tightfree

#endif  // TIGHTFREE_FORMAT_HPP_
