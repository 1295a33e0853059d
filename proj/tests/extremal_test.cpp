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


#include <cstdio>
#include <fstream>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tightfree/constructions.hpp"
#include "tightfree/detector.hpp"
#include "tightfree/errors.hpp"
#include "tightfree/extremal.hpp"

namespace tightfree {
namespace {

using ::testing::HasSubstr;
using ::testing::StartsWith;

// Maximum over all edge subsets, checked with the general detector.
std::size_t plain_enumeration(int r, Vertex n) {
  const std::size_t m = testing::all_r_subsets(r, n).size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const auto bits = static_cast<std::size_t>(std::popcount(mask));
    if (bits <= best) continue;
    if (!find_tight_cycle(testing::hypergraph_from_mask(r, n, mask)).found()) {
      best = bits;
    }
  }
  return best;
}

TEST(Extremal, FrozenValues) {
  struct Row {
    int r;
    Vertex n;
    std::size_t value;
  };
  for (const Row& row : {Row{2, 3, 2}, Row{2, 4, 3}, Row{2, 5, 4}, Row{2, 6, 5},
                         Row{2, 7, 6}, Row{3, 4, 3}, Row{3, 5, 6}, Row{3, 6, 11},
                         Row{4, 5, 4}, Row{4, 6, 10}}) {
    const ExtremalResult res = exact_extremal(row.r, row.n);
    EXPECT_TRUE(res.exhaustive);
    EXPECT_EQ(res.value, row.value) << row.r << " " << row.n;
    EXPECT_EQ(res.witness.num_edges(), res.value);
    EXPECT_TRUE(is_tight_cycle_free(res.witness));
  }
}

TEST(Extremal, MatchesPlainEnumeration) {
  for (int r : {2, 3, 4}) {
    for (Vertex n = static_cast<Vertex>(r); n <= 8; ++n) {
      if (testing::all_r_subsets(r, n).size() > 20) continue;
      EXPECT_EQ(exact_extremal(r, n).value, plain_enumeration(r, n))
          << r << " " << n;
    }
  }
}

TEST(Extremal, MonotoneAndAboveStar) {
  for (int r : {2, 3}) {
    std::size_t prev = 0;
    for (Vertex n = static_cast<Vertex>(r); n <= 6; ++n) {
      const std::size_t v = exact_extremal(r, n).value;
      EXPECT_GE(v, prev);
      EXPECT_GE(v, star(r, n).num_edges());
      prev = v;
    }
  }
}

TEST(Extremal, LiftingInequality) {
  // Coning a tight-cycle-free graph on 3 vertices over 3 apexes.
  EXPECT_GE(exact_extremal(3, 6).value, exact_extremal(2, 3).value * 3);
}

TEST(Extremal, BudgetAndCap) {
  const ExtremalResult partial = exact_extremal(3, 6, 10);
  EXPECT_FALSE(partial.exhaustive);
  EXPECT_GE(partial.value, star(3, 6).num_edges());
  EXPECT_TRUE(is_tight_cycle_free(partial.witness));
  EXPECT_THROW(exact_extremal(3, 9), Error);  // C(9,3) = 84 > 40
}

TEST(ExtremalCache, RoundTripAndReuse) {
  const std::vector<ExtremalResult> recs{exact_extremal(3, 4), exact_extremal(2, 5)};
  const std::string text = write_extremal_cache(recs);
  EXPECT_THAT(text, HasSubstr("3 4 3 1 "));
  const auto back = read_extremal_cache(text);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].value, 4u);
  EXPECT_EQ(back[1].witness, recs[1].witness);
  EXPECT_EQ(write_extremal_cache(back), text);
  EXPECT_THROW(read_extremal_cache("3 4 4 1 0,1,2 0,1,3 0,2,3\n"), ParseError);

  const std::string path = std::string(TIGHTFREE_TEST_TMPDIR) + "/extremal_cache.txt";
  std::remove(path.c_str());
  EXPECT_EQ(exact_extremal_cached(3, 5, path).value, 6u);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_THAT(line, StartsWith("3 5 6 1 "));
  EXPECT_EQ(exact_extremal_cached(3, 5, path).value, 6u);
}

TEST(Compare, RowsAndCsv) {
  PipelineParams base;
  base.k_override = 2;
  const auto rows = compare_constructions(3, {8, 16}, {1, 2}, base);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0].construction, "star");
  EXPECT_EQ(rows[0].edges, 21u);
  EXPECT_EQ(rows[1].construction, "complete_partite");
  EXPECT_EQ(rows[2].construction, "lifted");
  for (const auto& row : rows) {
    if (row.construction != "complete_partite") EXPECT_EQ(row.tight_cycles, "free");
  }
  const std::string csv = to_csv(rows);
  EXPECT_THAT(csv, StartsWith("r,n,construction,seed,edges,total_vertices,"
                              "density_ratio,density_ratio_float,tight_cycles\n"));
  EXPECT_THAT(csv, HasSubstr("3,8,star,"));
}

}  // namespace
}  // namespace tightfree
