// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "cubemap/errors.hpp"
#include "cubemap/labeling.hpp"
#include "cubemap/topology.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace cubemap;

namespace {

// 8 tasks on the 4-cycle, two per PE, tasks of a block form a path
Graph colored_ring() {
  const std::vector<WeightedEdge> edges{{0, 1, 2}, {1, 2, 1}, {2, 3, 2}, {3, 4, 1},
                                        {4, 5, 2}, {5, 6, 1}, {6, 7, 2}, {0, 7, 1}};
  return Graph::from_edges(8, edges);
}

std::vector<std::uint8_t> random_perm(Rng &rng, unsigned width) {
  std::vector<std::uint8_t> perm(width);
  std::iota(perm.begin(), perm.end(), std::uint8_t{0});
  rng.shuffle(std::span<std::uint8_t>(perm));
  return perm;
}

} // namespace

TEST_SUITE("dim_ga") {
  TEST_CASE("examples") {
    const std::vector<std::size_t> eight{8, 3, 1};
    CHECK(dim_ga(8, eight) == 11);
    const std::vector<std::size_t> singles(900, 1);
    CHECK(dim_ga(30, singles) == 30);
    const std::vector<std::size_t> big{1000, 10};
    CHECK(dim_ga(30, big) == 40);
    const std::vector<std::size_t> two{2};
    CHECK(dim_ga(3, two) == 4);
  }

  TEST_CASE("capacity") {
    const std::vector<std::size_t> huge{std::size_t{1} << 40};
    CHECK_THROWS_AS(dim_ga(30, huge), CapacityError);
    const std::vector<std::size_t> empty{3, 0};
    CHECK_THROWS(dim_ga(3, empty));
  }
}

TEST_SUITE("extend_labels") {
  TEST_CASE("two blocks of two") {
    const std::vector<WeightedEdge> pe_edge{{0, 1, 1}};
    const Graph gp = Graph::from_edges(2, pe_edge);
    const auto pl = label_partial_cube(gp);
    const std::vector<WeightedEdge> edges{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}};
    const Graph ga = Graph::from_edges(4, edges);
    const Mapping mu{0, 0, 1, 1};
    Rng rng(4);
    const auto ls = extend_labels(ga, mu, pl, rng);
    CHECK(ls.layout().dim_ga == 2);
    CHECK(ls.layout().proc_mask == 0b10);
    CHECK(ls.layout().ext_mask == 0b01);
    std::set<Label> block0{ls.label(0), ls.label(1)};
    std::set<Label> block1{ls.label(2), ls.label(3)};
    const Label p0 = pl.labels[0] << 1;
    const Label p1 = pl.labels[1] << 1;
    CHECK(block0 == std::set<Label>{p0, p0 | 1});
    CHECK(block1 == std::set<Label>{p1, p1 | 1});
  }

  TEST_CASE("singleton blocks carry the processor label") {
    const Graph gp = generate_topology(TopologySpec::parse("grid2d:3x3"));
    const auto pl = label_partial_cube(gp);
    Rng rng(5);
    const Mapping mu{4, 2, 0, 8, 7, 1, 3, 6, 5};
    const Graph ga = testing::random_connected_graph(rng, 9, 5);
    const auto ls = extend_labels(ga, mu, pl, rng);
    CHECK(ls.layout().ext_width() == 0);
    for (VertexId v = 0; v < 9; ++v) {
      CHECK(ls.label(v) == pl.labels[mu[v]]);
    }
  }

  TEST_CASE("empty PE") {
    const Graph gp = generate_topology(TopologySpec::parse("grid2d:2x2"));
    const auto pl = label_partial_cube(gp);
    const std::vector<WeightedEdge> edges{{0, 1, 1}, {1, 2, 1}};
    const Graph ga = Graph::from_edges(3, edges);
    Rng rng(1);
    const Mapping mu{0, 1, 2};
    CHECK_THROWS_AS(extend_labels(ga, mu, pl, rng), InvalidArgument);
    const auto ls = extend_labels(ga, mu, pl, rng, ExtendOptions{true});
    CHECK(decode_mapping(ls, pl) == mu);
    const Mapping bad{0, 1, 9};
    CHECK_THROWS_AS(extend_labels(ga, bad, pl, rng, ExtendOptions{true}), InvalidArgument);
  }

  TEST_CASE("colored 4-cycle round trip") {
    const Graph gp = generate_topology(TopologySpec::parse("grid2d:2x2"));
    const auto pl = label_partial_cube(gp);
    const Graph ga = colored_ring();
    const Mapping mu{0, 0, 1, 1, 3, 3, 2, 2};
    Rng rng(6);
    const auto ls = extend_labels(ga, mu, pl, rng);
    CHECK(ls.layout().dim_ga == 3);
    CHECK(decode_mapping(ls, pl) == mu);
    for (VertexId v = 0; v < 8; ++v) {
      CHECK((ls.label(v) >> 1) == pl.labels[mu[v]]);
    }
  }

  TEST_CASE("random round trips and invariants") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
      const auto inst = testing::random_instance(rng, 150);
      const auto ls = extend_labels(inst.ga, inst.mapping, inst.pl, rng);
      CHECK(decode_mapping(ls, inst.pl) == inst.mapping);
      const auto set = ls.label_set();
      CHECK(std::adjacent_find(set.begin(), set.end()) == set.end());
      for (VertexId v = 0; v < ls.size(); ++v) {
        REQUIRE(ls.vertex_of(ls.label(v)) == std::optional<VertexId>{v});
      }
      const auto &layout = ls.layout();
      CHECK((layout.proc_mask & layout.ext_mask) == 0);
      CHECK((layout.proc_mask | layout.ext_mask) == low_mask(layout.dim_ga));
    }
  }
}

TEST_SUITE("label state") {
  TEST_CASE("rejects duplicates and stray bits") {
    const auto layout = LabelLayout::unpermuted(1, 2);
    CHECK_THROWS(LabelState(layout, {0, 1, 1}));
    CHECK_THROWS(LabelState(layout, {0, 4}));
    CHECK_NOTHROW(LabelState(layout, {0, 3}));
  }

  TEST_CASE("swap keeps the index") {
    LabelState ls(LabelLayout::unpermuted(1, 2), {0, 1, 2});
    ls.swap_labels(0, 2);
    CHECK(ls.label(0) == 2);
    CHECK(ls.vertex_of(2) == std::optional<VertexId>{0});
    CHECK(ls.vertex_of(0) == std::optional<VertexId>{2});
    CHECK_FALSE(ls.vertex_of(3).has_value());
  }
}

TEST_SUITE("permute") {
  TEST_CASE("identity permutation") {
    Rng rng(9);
    const auto inst = testing::random_instance(rng, 60);
    const auto ls = extend_labels(inst.ga, inst.mapping, inst.pl, rng);
    std::vector<std::uint8_t> id(ls.layout().dim_ga);
    std::iota(id.begin(), id.end(), std::uint8_t{0});
    CHECK(permute_positions(ls, id) == ls);
  }

  TEST_CASE("inverse and hamming invariance") {
    Rng rng(10);
    for (int i = 0; i < 50; ++i) {
      const auto inst = testing::random_instance(rng, 80);
      const auto ls = extend_labels(inst.ga, inst.mapping, inst.pl, rng);
      const auto perm = random_perm(rng, ls.layout().dim_ga);
      const auto moved = permute_positions(ls, perm);
      CHECK(unpermute(moved) == ls);
      CHECK(moved.layout().perm == perm);
      const auto twice = permute_positions(moved, random_perm(rng, ls.layout().dim_ga));
      CHECK(unpermute(twice) == ls);
      for (int s = 0; s < 50; ++s) {
        const auto u = static_cast<VertexId>(rng.below(ls.size()));
        const auto v = static_cast<VertexId>(rng.below(ls.size()));
        CHECK(hamming(moved.label(u), moved.label(v), moved.layout().proc_mask) ==
              hamming(ls.label(u), ls.label(v), ls.layout().proc_mask));
        CHECK(hamming(moved.label(u), moved.label(v), moved.layout().ext_mask) ==
              hamming(ls.label(u), ls.label(v), ls.layout().ext_mask));
      }
    }
  }

  TEST_CASE("decode needs the identity layout") {
    Rng rng(12);
    const Graph gp = generate_topology(TopologySpec::parse("hypercube:2"));
    const auto pl = label_partial_cube(gp);
    const Graph ga = colored_ring();
    const Mapping mu{0, 0, 1, 1, 3, 3, 2, 2};
    const auto ls = extend_labels(ga, mu, pl, rng);
    const std::vector<std::uint8_t> rot{1, 2, 0};
    CHECK_THROWS_AS(decode_mapping(permute_positions(ls, rot), pl), IntegrityError);
  }
}

TEST_SUITE("labels csv") {
  TEST_CASE("format") {
    const LabelState ls(LabelLayout::unpermuted(3, 5), {0x1f, 0x02});
    CHECK(labels_to_csv(ls) == "vertex,hex_label\n0,1f\n1,02\n");
  }
}
