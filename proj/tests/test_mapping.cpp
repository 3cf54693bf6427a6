// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "cubemap/errors.hpp"
#include "cubemap/mapping.hpp"
#include "cubemap/objective.hpp"
#include "cubemap/topology.hpp"
#include "support/instances.hpp"

using namespace cubemap;

namespace {

bool is_bijection(const Assignment &a) {
  auto sorted = a;
  std::sort(sorted.begin(), sorted.end());
  for (VertexId i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) {
      return false;
    }
  }
  return true;
}

Graph path(VertexId n) {
  std::vector<WeightedEdge> edges;
  for (VertexId i = 0; i + 1 < n; ++i) {
    edges.push_back({i, i + 1, 1});
  }
  return Graph::from_edges(n, edges);
}

// center 2 with spokes of weight 3, 2, 1
Graph star() {
  const std::vector<WeightedEdge> edges{{0, 2, 3}, {1, 2, 2}, {2, 3, 1}};
  return Graph::from_edges(4, edges);
}

// 0 is heaviest; 2 has two medium edges, 3 one heavier edge
Graph kite() {
  const std::vector<WeightedEdge> edges{{0, 1, 5}, {0, 2, 3}, {1, 2, 3}, {0, 3, 4}};
  return Graph::from_edges(4, edges);
}

} // namespace

TEST_SUITE("identity") {
  TEST_CASE("block i on PE i") {
    const auto pl = label_partial_cube(generate_topology(TopologySpec::parse("grid2d:2x2")));
    const Partition p{{0, 1, 2, 3, 3, 1}, 4};
    CHECK(identity_mapping(p, pl) == Mapping{0, 1, 2, 3, 3, 1});
    CHECK_THROWS_AS(identity_mapping(Partition{{0, 1, 2}, 3}, pl), InvalidArgument);
  }

  TEST_CASE("survives extend and decode") {
    Rng rng(1);
    const Graph gp = generate_topology(TopologySpec::parse("grid2d:4x4"));
    const auto pl = label_partial_cube(gp);
    for (int i = 0; i < 20; ++i) {
      const Graph ga = testing::random_connected_graph(rng, 200, 300);
      const auto p = grow_partition(ga, 16, 0.03, rng);
      const auto mu = identity_mapping(p, pl);
      CHECK(decode_mapping(extend_labels(ga, mu, pl, rng), pl) == mu);
    }
  }
}

TEST_SUITE("greedy") {
  TEST_CASE("single edge on two PEs") {
    const std::vector<WeightedEdge> edges{{0, 1, 5}};
    const Graph gc = Graph::from_edges(2, edges);
    const auto dist = bfs_all_pairs(path(2));
    for (const auto &a : {greedy_allc(gc, dist), greedy_min(gc, dist)}) {
      CHECK(is_bijection(a));
      CHECK(coco(gc, a, dist) == 5);
    }
  }

  TEST_CASE("star on the 2x2 grid") {
    const auto dist = bfs_all_pairs(generate_topology(TopologySpec::parse("grid2d:2x2")));
    // center first onto PE 0, then spokes by weight onto PEs 1, 2, 3
    CHECK(greedy_allc(star(), dist) == Assignment{1, 2, 0, 3});
    CHECK(greedy_min(star(), dist) == Assignment{1, 2, 0, 3});
    CHECK(coco(star(), greedy_allc(star(), dist), dist) == 7);
  }

  TEST_CASE("total versus single-best scoring") {
    const auto dist = bfs_all_pairs(path(4));
    const auto allc = greedy_allc(kite(), dist);
    const auto gmin = greedy_min(kite(), dist);
    CHECK(allc == Assignment{1, 0, 2, 3});
    CHECK(gmin == Assignment{1, 0, 3, 2});
    CHECK(coco(kite(), allc, dist) == 22);
    CHECK(coco(kite(), gmin, dist) == 24);
  }

  TEST_CASE("bijections on random inputs") {
    Rng rng(2);
    for (int i = 0; i < 30; ++i) {
      const Graph gp = generate_topology(testing::random_small_topology(rng));
      const auto dist = bfs_all_pairs(gp);
      const Graph gc = testing::random_connected_graph(rng, gp.num_vertices(), rng.below(40));
      CHECK(is_bijection(greedy_allc(gc, dist)));
      CHECK(is_bijection(greedy_min(gc, dist)));
    }
  }

  TEST_CASE("size mismatch") {
    const auto dist = bfs_all_pairs(path(3));
    CHECK_THROWS_AS(greedy_allc(kite(), dist), InvalidArgument);
    CHECK_THROWS_AS(greedy_min(kite(), dist), InvalidArgument);
  }
}

TEST_SUITE("grow_partition") {
  TEST_CASE("extremes") {
    Rng rng(3);
    const Graph g = testing::random_connected_graph(rng, 30, 30);
    const auto one = grow_partition(g, 1, 0.03, rng);
    CHECK(std::all_of(one.block.begin(), one.block.end(), [](BlockId b) { return b == 0; }));
    const auto all = grow_partition(g, 30, 0.03, rng);
    auto sizes = all.block_sizes();
    CHECK(std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 1; }));
    CHECK_THROWS(grow_partition(g, 31, 0.03, rng));
  }

  TEST_CASE("balanced on random graphs") {
    Rng rng(4);
    for (int i = 0; i < 100; ++i) {
      const VertexId n = 1 + static_cast<VertexId>(rng.below(400));
      const Graph g = i % 2 == 0 ? testing::random_connected_graph(rng, n, rng.below(2 * n))
                                 : random_geometric_graph(n, 6.0, rng);
      const auto k = static_cast<BlockId>(1 + rng.below(n));
      const auto p = grow_partition(g, k, 0.03, rng);
      REQUIRE(p.block.size() == n);
      CHECK(balance_check(p, 0.03));
      CHECK_NOTHROW(validate_partition(g, p, true));
    }
  }
}
