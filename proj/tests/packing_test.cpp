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


#include <set>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tightfree/errors.hpp"
#include "tightfree/girth.hpp"
#include "tightfree/packing.hpp"

namespace tightfree {
namespace {

using ::testing::HasSubstr;
using ::testing::ThrowsMessage;

std::vector<std::size_t> degrees(const BipartiteGraph& g, bool left) {
  std::vector<std::size_t> d(left ? g.n_left() : g.n_right(), 0);
  for (const auto& [x, y] : g.edges()) ++d[left ? x : y];
  std::sort(d.begin(), d.end());
  return d;
}

TEST(RandomCopy, IsomorphicImage) {
  Rng rng(RngSeed{2});
  for (int trial = 0; trial < 50; ++trial) {
    const BipartiteGraph h = testing::random_bipartite(10, 0.3, rng);
    const BipartiteGraph c = random_copy(h, RngSeed{static_cast<std::uint64_t>(trial)});
    EXPECT_EQ(c.num_edges(), h.num_edges());
    EXPECT_EQ(degrees(c, true), degrees(h, true));
    EXPECT_EQ(degrees(c, false), degrees(h, false));
    EXPECT_EQ(testing::girth_by_edge_removal(c), testing::girth_by_edge_removal(h));
    EXPECT_EQ(c, random_copy(h, RngSeed{static_cast<std::uint64_t>(trial)}));
  }
}

TEST(Pack, MatchingTemplate) {
  // One perfect matching, t = 2, k = 2: disjoint members, sum = |union|.
  const BipartiteGraph h = testing::shifted_matching(4, 0);
  const PackingFamily fam = pack(h, 2, 2, RngSeed{1});
  ASSERT_EQ(fam.members.size(), 2u);
  EXPECT_EQ(fam.members[0].num_edges(), 4u);
  EXPECT_EQ(fam.edge_sum(), union_of_copies(h, 2, RngSeed{1}));
  EXPECT_LE(fam.edge_sum(), 8u);
  EXPECT_NO_THROW(validate_family(fam));
}

TEST(Pack, DisjointHereditaryAndComplete) {
  const auto h = generate_high_girth(32, 2, GirthGenConfig{}, RngSeed{4}).graph;
  for (std::uint64_t s = 0; s < 5; ++s) {
    const PackingFamily fam = pack(h, 16, 2, RngSeed{s});
    std::set<BipartiteGraph::Edge> seen;
    std::size_t sum = 0;
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
      const auto& g = fam.members[i];
      const auto copy = random_copy(h, copy_seed(RngSeed{s}, i));
      for (const auto& e : g.edges()) {
        EXPECT_TRUE(seen.insert(e).second);
        EXPECT_TRUE(copy.contains(e));
      }
      EXPECT_FALSE(has_cycle_at_most(g, 4));
      sum += g.num_edges();
    }
    // Every edge of every copy is kept by exactly one member.
    std::set<BipartiteGraph::Edge> all;
    for (std::size_t i = 0; i < 16; ++i) {
      const auto copy = random_copy(h, copy_seed(RngSeed{s}, i));
      all.insert(copy.edges().begin(), copy.edges().end());
    }
    EXPECT_EQ(sum, all.size());
    EXPECT_EQ(seen, all);
  }
}

TEST(Pack, Errors) {
  EXPECT_THAT([] { pack(testing::shifted_matching(8, 0), 5, 2, RngSeed{1}); },
              ThrowsMessage<Error>(HasSubstr("precondition kt > n")));
  EXPECT_THAT([] { pack(BipartiteGraph::complete(4, 4), 2, 2, RngSeed{1}); },
              ThrowsMessage<Error>(HasSubstr("template has short cycle")));
}

TEST(Coverage, Values) {
  const PackingFamily fam = testing::matching_family(4, 2, 2);
  const CoverageStats s = coverage_stats(fam);
  EXPECT_EQ(s.edge_sum, 8u);
  EXPECT_DOUBLE_EQ(s.coverage_ratio, 0.5);
  EXPECT_DOUBLE_EQ(s.predicted_missing_fraction, std::exp(-0.5));
}

TEST(Coverage, TracksPrediction) {
  const GirthGenConfig cfg;
  int hits = 0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto h = generate_high_girth(64, 2, cfg, RngSeed{s}).graph;
    const CoverageStats c = coverage_stats(pack(h, 32, 2, derive_seed(RngSeed{s}, 9)));
    if (c.coverage_ratio >= 1.0 - c.predicted_missing_fraction) ++hits;
  }
  EXPECT_GE(hits, 8);
}

TEST(ValidateFamily, NamesOffendingMember) {
  PackingFamily fam = testing::matching_family(4, 2, 2);
  fam.members[1] = testing::shifted_matching(4, 0);
  EXPECT_THAT([&] { validate_family(fam); },
              ThrowsMessage<Error>(HasSubstr("family member 2")));
  fam = testing::matching_family(4, 2, 2);
  fam.members[0] = BipartiteGraph::complete(4, 4);
  fam.members[1] = BipartiteGraph(4, 4, {});
  EXPECT_THAT([&] { validate_family(fam); },
              ThrowsMessage<Error>(HasSubstr("family member 1")));
  fam = testing::matching_family(4, 3, 2);
  EXPECT_THAT([&] { validate_family(fam); },
              ThrowsMessage<Error>(HasSubstr("precondition kt > n")));
}

TEST(FamilyFormat, RoundTrip) {
  const auto h = generate_high_girth(16, 2, GirthGenConfig{}, RngSeed{8}).graph;
  const PackingFamily fam = pack(h, 8, 2, RngSeed{8});
  const std::string text = serialize(fam);
  EXPECT_EQ(parse_family(text), fam);
  EXPECT_EQ(serialize(parse_family(text)), text);
  EXPECT_THROW(parse_family("3 4 0\n"), ParseError);
}

}  // namespace
}  // namespace tightfree
