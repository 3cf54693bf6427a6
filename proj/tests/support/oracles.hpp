// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
//
// Brute-force reference computations used to freeze and cross-check expected
// values. Nothing here calls the code path it is meant to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "cubemap/graph.hpp"
#include "cubemap/labeling.hpp"

namespace cubemap::oracle {

inline constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;

/// All-pairs distances by Floyd-Warshall over the edge list.
inline std::vector<std::vector<std::uint32_t>> floyd_warshall(const Graph &g) {
  const VertexId n = g.num_vertices();
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
  for (VertexId u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (const auto &nb : g.neighbors(u)) {
      d[u][nb.target] = 1;
    }
  }
  for (VertexId k = 0; k < n; ++k) {
    for (VertexId i = 0; i < n; ++i) {
      for (VertexId j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

/// Djokovic relation straight from the definition: one endpoint of f strictly
/// closer to x than to y, the other strictly closer to y than to x.
inline bool theta_related(const std::vector<std::vector<std::uint32_t>> &d,
                          std::pair<VertexId, VertexId> e, std::pair<VertexId, VertexId> f) {
  const auto [x, y] = e;
  auto closer_to_x = [&](VertexId w) { return d[w][x] < d[w][y]; };
  auto closer_to_y = [&](VertexId w) { return d[w][y] < d[w][x]; };
  return (closer_to_x(f.first) && closer_to_y(f.second)) ||
         (closer_to_y(f.first) && closer_to_x(f.second));
}

/// Sum of weight * hop distance over an explicit edge scan.
inline std::int64_t coco_by_distance(const Graph &ga, const std::vector<VertexId> &mapping,
                                     const std::vector<std::vector<std::uint32_t>> &d) {
  std::int64_t total = 0;
  for (const auto &e : ga.edges()) {
    total += e.weight * static_cast<std::int64_t>(d[mapping[e.u]][mapping[e.v]]);
  }
  return total;
}

struct SplitCost {
  std::int64_t coco = 0;
  std::int64_t div = 0;
};

/// Bit-by-bit evaluation of the processor and extension Hamming sums.
inline SplitCost bitloop_cost(const Graph &g, const std::vector<Label> &labels,
                              DigitMasks masks) {
  SplitCost cost;
  for (const auto &e : g.edges()) {
    for (unsigned j = 0; j < 64; ++j) {
      const bool differs = ((labels[e.u] >> j) & 1) != ((labels[e.v] >> j) & 1);
      if (!differs) {
        continue;
      }
      if ((masks.proc >> j) & 1) {
        cost.coco += e.weight;
      }
      if ((masks.ext >> j) & 1) {
        cost.div += e.weight;
      }
    }
  }
  return cost;
}

inline std::int64_t bitloop_coco_plus(const Graph &g, const std::vector<Label> &labels,
                                      DigitMasks masks) {
  const auto c = bitloop_cost(g, labels, masks);
  return c.coco - c.div;
}

/// Sorted multiset of block sizes of a mapping.
inline std::vector<std::size_t> block_size_multiset(const std::vector<VertexId> &mapping,
                                                    VertexId num_pes) {
  std::vector<std::size_t> sizes(num_pes, 0);
  for (const auto pe : mapping) {
    ++sizes[pe];
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

} // namespace cubemap::oracle
