// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <numeric>

#include "cubemap/labeling.hpp"
#include "cubemap/objective.hpp"
#include "cubemap/topology.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace cubemap;

TEST_SUITE("coco") {
  TEST_CASE("one PE") {
    const Graph gp = generate_topology(TopologySpec::parse("grid2d:2x2"));
    auto pl = label_partial_cube(gp);
    Rng rng(1);
    const Graph ga = testing::random_connected_graph(rng, 10, 10);
    const auto ls = extend_labels(ga, Mapping(10, 2), pl, rng, ExtendOptions{true});
    CHECK(coco(ga, ls) == 0);
    CHECK(div(ga, ls) > 0);
  }

  TEST_CASE("single weighted edge") {
    const Graph gp = generate_topology(TopologySpec::parse("grid2d:2x2"));
    const auto pl = label_partial_cube(gp);
    const std::vector<WeightedEdge> edges{{0, 1, 3}};
    const Graph ga = Graph::from_edges(2, edges);
    Rng rng(1);
    const Mapping mu{0, 3};
    const auto ls = extend_labels(ga, mu, pl, rng, ExtendOptions{true});
    CHECK(coco(ga, ls) == 6);
    CHECK(coco(ga, mu, bfs_all_pairs(gp)) == 6);
  }

  TEST_CASE("label form equals distance form") {
    Rng rng(2);
    for (int i = 0; i < 100; ++i) {
      const auto inst = testing::random_instance(rng, 200);
      const auto ls = extend_labels(inst.ga, inst.mapping, inst.pl, rng);
      const auto fw = oracle::floyd_warshall(inst.gp);
      const auto expected = oracle::coco_by_distance(inst.ga, inst.mapping, fw);
      REQUIRE(coco(inst.ga, ls) == expected);
      REQUIRE(coco(inst.ga, inst.mapping, bfs_all_pairs(inst.gp)) == expected);
      const auto split = oracle::bitloop_cost(inst.ga, std::vector<Label>(ls.labels().begin(),
                                                                          ls.labels().end()),
                                              ls.layout().masks());
      CHECK(split.coco == expected);
      CHECK(split.div == div(inst.ga, ls));
      CHECK(coco_plus(inst.ga, ls) == split.coco - split.div);
    }
  }
}

TEST_SUITE("div") {
  TEST_CASE("identical extension parts") {
    const LabelState ls(LabelLayout::unpermuted(2, 3), {0b000, 0b010, 0b100});
    const std::vector<WeightedEdge> edges{{0, 1, 4}, {1, 2, 1}};
    CHECK(div(Graph::from_edges(3, edges), ls) == 0);
  }

  TEST_CASE("two differing extension digits") {
    const LabelState ls(LabelLayout::unpermuted(1, 3), {0b000, 0b011});
    const std::vector<WeightedEdge> edges{{0, 1, 2}};
    const Graph g = Graph::from_edges(2, edges);
    CHECK(div(g, ls) == 4);
    CHECK(coco(g, ls) == 0);
    CHECK(coco_plus(g, ls) == -4);
  }
}

TEST_SUITE("edge_cut") {
  TEST_CASE("examples") {
    Rng rng(3);
    const Graph g = testing::random_connected_graph(rng, 25, 30);
    CHECK(edge_cut(g, Partition{std::vector<BlockId>(25, 0), 1}) == 0);
    Partition id{std::vector<BlockId>(25), 25};
    std::iota(id.block.begin(), id.block.end(), BlockId{0});
    CHECK(edge_cut(g, id) == g.total_weight());
    CHECK(edge_cut(g, std::span<const VertexId>(id.block)) == g.total_weight());
  }
}

TEST_SUITE("swap_gain") {
  TEST_CASE("symmetric neighborhoods") {
    // u=0, v=1 both tied to 2 with weight 3
    const std::vector<WeightedEdge> edges{{0, 2, 3}, {1, 2, 3}, {0, 1, 5}};
    const Graph g = Graph::from_edges(3, edges);
    const std::vector<Label> labels{0b100, 0b101, 0b010};
    CHECK(swap_gain(g, labels, DigitMasks{0b110, 0b001}, 0, 1) == 0);
  }

  TEST_CASE("diversity gain of one") {
    // a=000 b=001 c=010 d=011 e=100 f=101; digit 0 is extension, the two
    // upper digits are processor digits
    const std::vector<WeightedEdge> edges{{0, 2, 1}, {2, 3, 2}, {4, 5, 1}, {3, 5, 1}};
    const Graph g = Graph::from_edges(6, edges);
    std::vector<Label> labels{0, 1, 2, 3, 4, 5};
    const DigitMasks masks{0b110, 0b001};
    const auto before = oracle::bitloop_cost(g, labels, masks);
    auto swapped = labels;
    std::swap(swapped[0], swapped[1]);
    const auto after = oracle::bitloop_cost(g, swapped, masks);
    CHECK(after.coco - before.coco == 0);
    CHECK(after.div - before.div == 1);
    CHECK(swap_gain(g, labels, masks, 0, 1) == -1);
    CHECK(swap_gain(g, labels, masks, 1, 0) == -1);
  }

  TEST_CASE("matches full recomputation") {
    Rng rng(4);
    for (int i = 0; i < 1000; ++i) {
      const VertexId n = 2 + static_cast<VertexId>(rng.below(40));
      const Graph g = testing::random_connected_graph(rng, n, rng.below(3 * n));
      const unsigned width = 6 + static_cast<unsigned>(rng.below(7));
      const auto labels = testing::random_unique_labels(rng, n, width);
      const Label ext = low_mask(static_cast<unsigned>(rng.below(width + 1)));
      const DigitMasks masks{low_mask(width) & ~ext, ext};
      const auto u = static_cast<VertexId>(rng.below(n));
      auto v = static_cast<VertexId>(rng.below(n - 1));
      v += v >= u ? 1 : 0;
      auto swapped = labels;
      std::swap(swapped[u], swapped[v]);
      const auto delta = oracle::bitloop_coco_plus(g, swapped, masks) -
                         oracle::bitloop_coco_plus(g, labels, masks);
      REQUIRE(swap_gain(g, labels, masks, u, v) == delta);
    }
  }
}

TEST_SUITE("balance") {
  TEST_CASE("examples") {
    CHECK(balance_check(Partition{{0, 1, 2, 0, 1, 2}, 3}, 0.0));
    CHECK_FALSE(balance_check(Partition{std::vector<BlockId>(10, 0), 2}, 0.03));
    CHECK(balance_check(Partition{{0, 0, 1}, 2}, 0.0));
    CHECK_FALSE(balance_check(Partition{{0, 0, 0, 1}, 2}, 0.03));
    CHECK(max_block_size(100, 4, 0.03) == 25);
    CHECK(max_block_size(100, 3, 0.03) == 35);
    CHECK(achieved_imbalance(Partition{{0, 0, 0, 1}, 2}) == doctest::Approx(0.5));
  }
}

TEST_SUITE("evaluate") {
  TEST_CASE("consistent fields") {
    Rng rng(5);
    const auto inst = testing::random_instance(rng, 100);
    const auto ls = extend_labels(inst.ga, inst.mapping, inst.pl, rng);
    const auto value = evaluate(inst.ga, ls, inst.pl);
    CHECK(value.coco == coco(inst.ga, ls));
    CHECK(value.div == div(inst.ga, ls));
    CHECK(value.coco_plus == value.coco - value.div);
    CHECK(value.edge_cut == edge_cut(inst.ga, std::span<const VertexId>(inst.mapping)));
  }
}
