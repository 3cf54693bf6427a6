// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>

#include "cubemap/graph.hpp"
#include "cubemap/labeling.hpp"

namespace cubemap {

struct ObjectiveValue {
  std::int64_t coco = 0;
  std::int64_t div = 0;
  std::int64_t coco_plus = 0;
  std::int64_t edge_cut = 0;
  double balance_eps = 0.0;
};

/// Hop-weighted communication cost: sum over edges of weight times the
/// Hamming distance of the processor digits.
std::int64_t coco(const Graph &ga, const LabelState &ls);
std::int64_t coco(const Graph &ga, std::span<const Label> labels, DigitMasks masks);

/// Sum over edges of weight times the Hamming distance of extension digits.
std::int64_t div(const Graph &ga, const LabelState &ls);
std::int64_t div(const Graph &ga, std::span<const Label> labels, DigitMasks masks);

/// coco - div, in one pass.
std::int64_t coco_plus(const Graph &ga, std::span<const Label> labels, DigitMasks masks);
std::int64_t coco_plus(const Graph &ga, const LabelState &ls);

/// Same cost evaluated through PE distances rather than labels.
std::int64_t coco(const Graph &ga, std::span<const VertexId> mapping, const DistanceTable &dist);

std::int64_t edge_cut(const Graph &ga, const Partition &p);
std::int64_t edge_cut(const Graph &ga, std::span<const VertexId> mapping);

/// Change of coco_plus restricted to edges at u and v if u and v exchange
/// labels. Negative means improvement. u and v are expected to be siblings.
std::int64_t swap_gain(const Graph &g, std::span<const Label> labels, DigitMasks masks,
                       VertexId u, VertexId v);

/// Largest admissible block size, floor((1 + eps) * ceil(n / k)).
std::size_t max_block_size(std::size_t n, std::size_t k, double eps);

/// Every block size <= (1 + eps) * ceil(n / k).
bool balance_check(const Partition &p, double eps);

/// max block size / ceil(n / k) - 1.
double achieved_imbalance(const Partition &p);

ObjectiveValue evaluate(const Graph &ga, const LabelState &ls, const PcubeLabeling &pl);

/// Sizes of the edge sets whose endpoints agree on the processor part and on
/// the extension part, respectively.
struct AgreementCounts {
  std::size_t same_proc = 0;
  std::size_t same_ext = 0;
};
AgreementCounts agreement_counts(const Graph &ga, const LabelState &ls);

} // namespace cubemap
