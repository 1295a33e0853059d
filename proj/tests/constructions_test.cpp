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


#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tightfree/constructions.hpp"
#include "tightfree/detector.hpp"
#include "tightfree/errors.hpp"

namespace tightfree {
namespace {

using ::testing::HasSubstr;
using ::testing::ThrowsMessage;

// Member i of the family as G_i, and the k Z-slots of member i as the
// 1-uniform H_i.
void as_sum_product_input(const PackingFamily& fam, std::vector<Hypergraph>& gs,
                          std::vector<Hypergraph>& hs) {
  const auto kt = static_cast<Vertex>(fam.k * fam.t);
  for (std::size_t i = 1; i <= fam.t; ++i) {
    gs.push_back(fam.members[i - 1].to_hypergraph());
    std::vector<std::vector<Vertex>> slots;
    for (std::size_t s = 1; s <= fam.k; ++s) {
      slots.push_back({static_cast<Vertex>((i - 1) * fam.k + (s - 1))});
    }
    hs.emplace_back(1, kt, slots, std::vector<VertexRange>{{0, kt}});
  }
}

TEST(Tripartite, LiftedMatchings) {
  const PackingFamily fam = testing::matching_family(4, 2, 2);
  const Hypergraph h = tripartite_from_family(fam);
  EXPECT_EQ(h.num_edges(), 16u);
  EXPECT_EQ(h.num_vertices(), 12u);
  EXPECT_TRUE(h.contains(std::vector<Vertex>{0, 4, z_vertex(4, 2, 1, 1)}));
  EXPECT_TRUE(h.contains(std::vector<Vertex>{0, 5, z_vertex(4, 2, 2, 2)}));
  EXPECT_EQ(z_vertex(4, 2, 2, 2), 11u);
  EXPECT_TRUE(is_tight_cycle_free(h));
  EXPECT_TRUE(brute_force_find(Hypergraph(3, 10,
      [&] {
        // Drop the last Z vertex of member 2 to fit the brute-force cap.
        std::vector<std::vector<Vertex>> e;
        for (auto& edge : h.edge_list()) {
          if (edge[2] < 10) e.push_back(edge);
        }
        return e;
      }())).status == DetectStatus::kFree);
}

TEST(Tripartite, EdgeCountIsKTimesFamilySum) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    PipelineParams p;
    p.n = 24;
    p.k_override = 3;
    p.seed = RngSeed{s};
    const auto res = paper_construction(p);
    EXPECT_EQ(res.graph.num_edges(), 3 * res.family.edge_sum());
    EXPECT_EQ(res.graph.num_vertices(), 2 * 24 + 3 * 8u);
    EXPECT_TRUE(tripartite_fast_check(res.graph));
  }
}

TEST(SumProduct, ReproducesTripartiteLifting) {
  for (std::uint64_t s = 0; s < 3; ++s) {
    PipelineParams p;
    p.n = 16;
    p.k_override = 2;
    p.seed = RngSeed{s};
    const auto res = paper_construction(p);
    std::vector<Hypergraph> gs;
    std::vector<Hypergraph> hs;
    as_sum_product_input(res.family, gs, hs);
    const auto sp = sum_product(gs, hs, 2);
    EXPECT_TRUE(sp.preconditions_verified);
    EXPECT_EQ(sp.graph, res.graph);
  }
}

TEST(SumProduct, Errors) {
  const PackingFamily fam = testing::matching_family(4, 2, 2);
  std::vector<Hypergraph> gs;
  std::vector<Hypergraph> hs;
  as_sum_product_input(fam, gs, hs);
  EXPECT_THAT([&] { sum_product(gs, {hs[0]}, 2); },
              ThrowsMessage<Error>(HasSubstr("length mismatch")));
  EXPECT_THAT([&] { sum_product(gs, hs, 2, Vertex{3}); },
              ThrowsMessage<Error>(HasSubstr("vertex-set collision")));
  EXPECT_THAT([&] { sum_product({gs[0], gs[0]}, hs, 2); },
              ThrowsMessage<Error>(HasSubstr("shares an edge")));
  // K_{2,2} as G_1 has a 4-cycle, which k = 2 forbids.
  const Hypergraph c4 = BipartiteGraph::complete(2, 2).to_hypergraph();
  const Hypergraph one(1, 2, {{0}, {1}});
  EXPECT_THAT([&] { sum_product({c4}, {one}, 2); },
              ThrowsMessage<Error>(HasSubstr("contains a tight cycle")));
}

TEST(ConeLift, CountsAndFreeness) {
  const Hypergraph base = tripartite_from_family(testing::matching_family(4, 2, 2));
  const auto lifted = cone_lift(base, 3);
  EXPECT_TRUE(lifted.input_verified);
  EXPECT_EQ(lifted.graph.uniformity(), 4);
  EXPECT_EQ(lifted.graph.num_vertices(), 15u);
  EXPECT_EQ(lifted.graph.num_edges(), 48u);
  EXPECT_EQ(lifted.graph.partition().size(), 4u);
  EXPECT_TRUE(is_tight_cycle_free(lifted.graph));

  const auto path = cone_lift(Hypergraph(2, 4, {{0, 1}, {1, 2}, {2, 3}}), 2);
  EXPECT_EQ(path.graph.num_edges(), 6u);
  EXPECT_FALSE(brute_force_find(path.graph).found());
}

TEST(ConeLift, Errors) {
  EXPECT_THAT([] { cone_lift(star(3, 5), 0); },
              ThrowsMessage<Error>(HasSubstr("m = 0")));
  EXPECT_THAT([] { cone_lift(complete_r_partite(3, {2, 2, 2}), 1); },
              ThrowsMessage<Error>(HasSubstr("contains a tight cycle")));
}

TEST(Baselines, Counts) {
  EXPECT_EQ(star(3, 5).num_edges(), 6u);
  EXPECT_EQ(star(4, 8).num_edges(), 35u);
  EXPECT_EQ(star(2, 6).num_edges(), 5u);
  EXPECT_TRUE(is_tight_cycle_free(star(4, 8)));
  EXPECT_EQ(complete_r_partite(3, {2, 2, 2}).num_edges(), 8u);
  EXPECT_EQ(complete_r_partite(3, {1, 2, 3}).num_edges(), 6u);
  EXPECT_EQ(complete_r_partite(4, {2, 2, 2, 2}).num_vertices(), 8u);
  EXPECT_THAT([] { complete_r_partite(3, {2, 2}); },
              ThrowsMessage<Error>(HasSubstr("wrong part count")));
}

TEST(Pipeline, DerivedParameters) {
  PipelineParams p;
  p.n = 16;
  EXPECT_EQ(p.derived_k(), 1u);  // ln 16 < e
  p.n = 1 << 20;
  p.alpha = 1.0;
  // ln n = 13.86, ln ln n = 2.63.
  EXPECT_EQ(p.derived_k(), 5u);
  EXPECT_EQ(p.derived_t(), (std::size_t{1} << 20) / 5);
  p.k_override = 0;
  EXPECT_THROW(p.derived_k(), Error);
}

TEST(Pipeline, DeterministicAndReported) {
  PipelineParams p;
  p.n = 32;
  p.k_override = 2;
  p.seed = RngSeed{17};
  const auto a = paper_construction(p);
  const auto b = paper_construction(p);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.report, b.report);
  EXPECT_EQ(a.report.hyperedge_count, a.graph.num_edges());
  EXPECT_EQ(a.report.family_edge_sum, a.family.edge_sum());
  EXPECT_EQ(a.report.density, density_ratio(a.graph));
  EXPECT_EQ(a.report.t, 16u);
  p.seed = RngSeed{18};
  EXPECT_NE(paper_construction(p).graph, a.graph);
}

TEST(Report, MachineFormRoundTrips) {
  PipelineParams p;
  p.n = 16;
  p.k_override = 2;
  p.r = 4;
  auto rep = construct_r_uniform(p).report;
  rep.verification = "free (full detector)";
  const std::string text = to_machine(rep);
  EXPECT_THAT(text, ::testing::StartsWith("format=1\n"));
  EXPECT_THAT(text, HasSubstr("\nalpha=0.3\n"));
  EXPECT_EQ(parse_report(text), rep);
  EXPECT_THAT(to_text(rep), HasSubstr("density_ratio: " + rep.density.str() + "\n"));
  EXPECT_THROW(parse_report("format=2\n"), ParseError);
  EXPECT_THROW(parse_report("format=1\nr=3\n"), Error);
}

TEST(Pipeline, FourUniform) {
  PipelineParams p;
  p.n = 8;
  p.k_override = 2;
  p.r = 4;
  p.seed = RngSeed{5};
  const auto res = construct_r_uniform(p);
  EXPECT_EQ(res.graph.uniformity(), 4);
  const std::size_t v3 = res.three_uniform_stage.num_vertices();
  EXPECT_EQ(res.graph.num_vertices(), 2 * v3);
  EXPECT_EQ(res.graph.num_edges(), v3 * res.three_uniform_stage.num_edges());
  ASSERT_EQ(res.report.stages.size(), 2u);
  EXPECT_EQ(res.report.stages[1], (StageCount{4, 2 * v3, res.graph.num_edges()}));
  DetectOptions opt;
  opt.state_budget = 50'000'000;
  EXPECT_TRUE(is_tight_cycle_free(res.graph, opt));
}

}  // namespace
}  // namespace tightfree
