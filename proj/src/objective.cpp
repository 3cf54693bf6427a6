// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#include "cubemap/objective.hpp"

#include <algorithm>
#include <cmath>

#include "cubemap/errors.hpp"

namespace cubemap {

namespace {

/// Sum over undirected edges of weight * popcount(xor & mask).
std::int64_t masked_hamming_sum(const Graph &g, std::span<const Label> labels, Label mask) {
  std::int64_t total = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    const Label lu = labels[u];
    for (const auto &nb : g.neighbors(u)) {
      if (u < nb.target) {
        total += nb.weight * hamming(lu, labels[nb.target], mask);
      }
    }
  }
  return total;
}

/// Signed contribution of a label pair to coco_plus.
inline std::int64_t pair_cost(Label a, Label b, DigitMasks m) {
  const Label diff = a ^ b;
  return std::popcount(diff & m.proc) - std::popcount(diff & m.ext);
}

} // namespace

std::int64_t coco(const Graph &ga, std::span<const Label> labels, DigitMasks masks) {
  return masked_hamming_sum(ga, labels, masks.proc);
}

std::int64_t coco(const Graph &ga, const LabelState &ls) {
  return coco(ga, ls.labels(), ls.layout().masks());
}

std::int64_t div(const Graph &ga, std::span<const Label> labels, DigitMasks masks) {
  return masked_hamming_sum(ga, labels, masks.ext);
}

std::int64_t div(const Graph &ga, const LabelState &ls) {
  return div(ga, ls.labels(), ls.layout().masks());
}

std::int64_t coco_plus(const Graph &ga, std::span<const Label> labels, DigitMasks masks) {
  std::int64_t total = 0;
  for (VertexId u = 0; u < ga.num_vertices(); ++u) {
    for (const auto &nb : ga.neighbors(u)) {
      if (u < nb.target) {
        total += nb.weight * pair_cost(labels[u], labels[nb.target], masks);
      }
    }
  }
  return total;
}

std::int64_t coco_plus(const Graph &ga, const LabelState &ls) {
  return coco_plus(ga, ls.labels(), ls.layout().masks());
}

std::int64_t coco(const Graph &ga, std::span<const VertexId> mapping, const DistanceTable &dist) {
  if (mapping.size() != ga.num_vertices()) {
    throw InvalidArgument("coco: mapping size differs from vertex count");
  }
  std::int64_t total = 0;
  for (VertexId u = 0; u < ga.num_vertices(); ++u) {
    for (const auto &nb : ga.neighbors(u)) {
      if (u < nb.target) {
        total += nb.weight * static_cast<std::int64_t>(dist(mapping[u], mapping[nb.target]));
      }
    }
  }
  return total;
}

std::int64_t edge_cut(const Graph &ga, std::span<const VertexId> mapping) {
  std::int64_t total = 0;
  for (VertexId u = 0; u < ga.num_vertices(); ++u) {
    for (const auto &nb : ga.neighbors(u)) {
      if (u < nb.target && mapping[u] != mapping[nb.target]) {
        total += nb.weight;
      }
    }
  }
  return total;
}

std::int64_t edge_cut(const Graph &ga, const Partition &p) {
  validate_partition(ga, p);
  return edge_cut(ga, std::span<const VertexId>(p.block));
}

std::int64_t swap_gain(const Graph &g, std::span<const Label> labels, DigitMasks masks,
                       VertexId u, VertexId v) {
  const Label lu = labels[u];
  const Label lv = labels[v];
  std::int64_t delta = 0;
  for (const auto &nb : g.neighbors(u)) {
    if (nb.target != v) {
      const Label lx = labels[nb.target];
      delta += nb.weight * (pair_cost(lv, lx, masks) - pair_cost(lu, lx, masks));
    }
  }
  for (const auto &nb : g.neighbors(v)) {
    if (nb.target != u) {
      const Label lx = labels[nb.target];
      delta += nb.weight * (pair_cost(lu, lx, masks) - pair_cost(lv, lx, masks));
    }
  }
  return delta;
}

std::size_t max_block_size(std::size_t n, std::size_t k, double eps) {
  if (k == 0) {
    throw InvalidArgument("block count must be positive");
  }
  const std::size_t ideal = (n + k - 1) / k;
  // The epsilon guards against 1.03 * 100 landing just below 103.
  return static_cast<std::size_t>(std::floor((1.0 + eps) * static_cast<double>(ideal) + 1e-9));
}

bool balance_check(const Partition &p, double eps) {
  const auto limit = max_block_size(p.block.size(), p.k, eps);
  const auto sizes = p.block_sizes();
  return std::all_of(sizes.begin(), sizes.end(), [&](std::size_t s) { return s <= limit; });
}

double achieved_imbalance(const Partition &p) {
  if (p.k == 0 || p.block.empty()) {
    return 0.0;
  }
  const auto sizes = p.block_sizes();
  const double ideal = std::ceil(static_cast<double>(p.block.size()) / p.k);
  return static_cast<double>(*std::max_element(sizes.begin(), sizes.end())) / ideal - 1.0;
}

ObjectiveValue evaluate(const Graph &ga, const LabelState &ls, const PcubeLabeling &pl) {
  ObjectiveValue value;
  value.coco = coco(ga, ls);
  value.div = div(ga, ls);
  value.coco_plus = value.coco - value.div;
  Partition p;
  p.block = decode_mapping(ls.layout().is_identity() ? ls : unpermute(ls), pl);
  p.k = pl.num_vertices();
  value.edge_cut = edge_cut(ga, p);
  value.balance_eps = achieved_imbalance(p);
  return value;
}

AgreementCounts agreement_counts(const Graph &ga, const LabelState &ls) {
  AgreementCounts counts;
  const auto m = ls.layout().masks();
  for (VertexId u = 0; u < ga.num_vertices(); ++u) {
    for (const auto &nb : ga.neighbors(u)) {
      if (u < nb.target) {
        const Label diff = ls.label(u) ^ ls.label(nb.target);
        counts.same_proc += (diff & m.proc) == 0 ? 1 : 0;
        counts.same_ext += (diff & m.ext) == 0 ? 1 : 0;
      }
    }
  }
  return counts;
}

} // namespace cubemap
