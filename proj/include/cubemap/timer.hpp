// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cubemap/graph.hpp"
#include "cubemap/labeling.hpp"
#include "cubemap/objective.hpp"
#include "cubemap/rng.hpp"

namespace cubemap {

/// One level of a label hierarchy. Level 1 is the application graph with
/// full-width (permuted) labels; each further level drops the lowest digit.
struct HierarchyLevel {
  Graph graph;
  std::vector<Label> labels;
  /// Vertices in ascending order of label >> 1; sibling pairs are adjacent.
  std::vector<VertexId> order;
  unsigned width = 0;
  DigitMasks masks;
  /// Canonical id of the set of finest-level label suffixes below each
  /// vertex. Siblings may only exchange labels when their ids agree.
  std::vector<std::uint32_t> shape;
};

/// Builds level 1 from full labels in the permuted frame.
HierarchyLevel make_finest_level(const Graph &g, std::vector<Label> labels, unsigned width,
                                 DigitMasks masks);

/// One pass over the sibling pairs in ascending prefix order; a pair of
/// equal shape exchanges labels iff that strictly lowers coco_plus on this
/// level.
/// Returns the number of swaps.
std::size_t swap_phase(HierarchyLevel &level);

/// Merges sibling pairs, drops the lowest digit and sums parallel edges.
/// parent[v] receives the coarse vertex of v.
HierarchyLevel contract(const HierarchyLevel &level, std::vector<VertexId> &parent);

/// Rebuilds full labels for the finest level from the hierarchy.
///
/// Digit 0 and the most significant digit come from the finest level. The
/// digits in between are fixed from low to high: vertices that agree on the
/// most significant digit and on all digits fixed so far form a group, and
/// each vertex prefers the lowest digit of its ancestor one level up. If
/// more vertices prefer a digit than `label_set` holds labels with that
/// extension of the group's prefix, the excess (highest vertex ids first)
/// takes the other digit. The result is therefore a bijection onto
/// `label_set`. `parents[i]` maps level i + 1 to level i + 2 (1-based).
std::vector<Label> assemble(std::span<const HierarchyLevel> levels,
                            std::span<const std::vector<VertexId>> parents,
                            std::span<const Label> label_set, unsigned width);

struct HierarchyStats {
  std::size_t swaps = 0;
  std::size_t levels = 0;
};

/// One improvement attempt: random position permutation, swap and contract
/// down to two digits, assemble, undo the permutation. The caller decides
/// whether to keep the candidate.
LabelState run_hierarchy(const Graph &ga, const LabelState &ls, Rng &rng,
                         HierarchyStats *stats = nullptr);

struct TimerConfig {
  std::uint32_t n_hierarchies = 50;
  std::uint64_t seed = 0;
  ExtendOptions extend;
};

struct HierarchyRecord {
  std::uint32_t index = 0;
  std::int64_t coco = 0;
  std::int64_t div = 0;
  std::int64_t coco_plus = 0;
  std::size_t swaps = 0;
  bool accepted = false;
  double millis = 0.0;
};

struct TimerResult {
  Mapping mapping;
  LabelState state;
  ObjectiveValue initial;
  ObjectiveValue final;
  std::vector<HierarchyRecord> trace;
};

/// Labels the mapping and runs `n_hierarchies` attempts, reverting any
/// candidate whose coco_plus exceeds the current one. Deterministic in
/// (ga, pl, mapping, seed).
TimerResult run_timer(const Graph &ga, const PcubeLabeling &pl, std::span<const VertexId> mapping,
                      const TimerConfig &cfg);

/// JSON lines, one object per hierarchy. Timings are omitted when
/// `with_timing` is false so that runs can be compared byte for byte.
std::string trace_to_jsonl(std::span<const HierarchyRecord> trace, bool with_timing = true);

} // namespace cubemap
