// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#include "cubemap/timer.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <map>
#include <numeric>

#include "cubemap/errors.hpp"
#include "json.hpp"

namespace cubemap {

HierarchyLevel make_finest_level(const Graph &g, std::vector<Label> labels, unsigned width,
                                 DigitMasks masks) {
  HierarchyLevel level;
  level.graph = g;
  level.labels = std::move(labels);
  level.width = width;
  level.masks = masks;
  level.shape.assign(level.labels.size(), 1);
  level.order.resize(level.labels.size());
  std::iota(level.order.begin(), level.order.end(), VertexId{0});
  std::sort(level.order.begin(), level.order.end(),
            [&](VertexId a, VertexId b) { return level.labels[a] < level.labels[b]; });
  return level;
}

std::size_t swap_phase(HierarchyLevel &level) {
  std::size_t swaps = 0;
  const auto &order = level.order;
  auto &labels = level.labels;
  std::size_t i = 0;
  while (i + 1 < order.size()) {
    const VertexId u = order[i];
    const VertexId v = order[i + 1];
    if ((labels[u] >> 1) != (labels[v] >> 1)) {
      ++i;
      continue;
    }
    if (level.shape[u] == level.shape[v] && swap_gain(level.graph, labels, level.masks, u, v) < 0) {
      std::swap(labels[u], labels[v]);
      ++swaps;
    }
    i += 2;
  }
  return swaps;
}

HierarchyLevel contract(const HierarchyLevel &level, std::vector<VertexId> &parent) {
  const VertexId n = level.graph.num_vertices();
  parent.assign(n, 0);

  HierarchyLevel coarse;
  coarse.width = level.width - 1;
  coarse.masks = level.masks.shifted(1);
  std::vector<std::size_t> first_member; // index into level.order
  for (std::size_t idx = 0; idx < level.order.size(); ++idx) {
    const VertexId v = level.order[idx];
    const Label key = level.labels[v] >> 1;
    if (coarse.labels.empty() || coarse.labels.back() != key) {
      coarse.labels.push_back(key);
      first_member.push_back(idx);
    }
    parent[v] = static_cast<VertexId>(coarse.labels.size() - 1);
  }
  const auto nc = static_cast<VertexId>(coarse.labels.size());
  first_member.push_back(level.order.size());

  // A coarse shape is the pair (shape of the 0-child, shape of the 1-child),
  // with 0 for a missing child.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> shape_ids;
  coarse.shape.resize(nc);
  for (VertexId c = 0; c < nc; ++c) {
    std::uint32_t child[2] = {0, 0};
    for (std::size_t idx = first_member[c]; idx < first_member[c + 1]; ++idx) {
      const VertexId v = level.order[idx];
      child[level.labels[v] & 1] = level.shape[v];
    }
    const auto next_id = static_cast<std::uint32_t>(shape_ids.size() + 1);
    coarse.shape[c] = shape_ids.try_emplace({child[0], child[1]}, next_id).first->second;
  }

  std::vector<std::size_t> offsets{0};
  offsets.reserve(static_cast<std::size_t>(nc) + 1);
  std::vector<Neighbor> adjacency;
  adjacency.reserve(level.graph.adjacency().size());
  std::vector<Weight> accum(nc, 0);
  std::vector<char> marked(nc, 0);
  std::vector<VertexId> touched;
  for (VertexId c = 0; c < nc; ++c) {
    touched.clear();
    for (std::size_t idx = first_member[c]; idx < first_member[c + 1]; ++idx) {
      for (const auto &nb : level.graph.neighbors(level.order[idx])) {
        const VertexId t = parent[nb.target];
        if (t == c) {
          continue;
        }
        if (!marked[t]) {
          marked[t] = 1;
          touched.push_back(t);
        }
        accum[t] += nb.weight;
      }
    }
    for (const VertexId t : touched) {
      adjacency.push_back({t, accum[t]});
      accum[t] = 0;
      marked[t] = 0;
    }
    offsets.push_back(adjacency.size());
  }
  coarse.graph = Graph::unchecked(std::move(offsets), std::move(adjacency));
  coarse.order.resize(nc);
  std::iota(coarse.order.begin(), coarse.order.end(), VertexId{0});
  return coarse;
}

namespace {

/// Stable split of `values` into entries with bit `bit` clear, then set.
/// Returns the number of clear entries.
template <typename T, typename BitOf>
std::size_t stable_split(std::span<T> values, std::vector<T> &scratch, BitOf bit_of) {
  scratch.clear();
  std::size_t zeros = 0;
  for (const T &x : values) {
    if (bit_of(x) == 0) {
      values[zeros++] = x;
    } else {
      scratch.push_back(x);
    }
  }
  std::copy(scratch.begin(), scratch.end(), values.begin() + static_cast<std::ptrdiff_t>(zeros));
  return zeros;
}

} // namespace

std::vector<Label> assemble(std::span<const HierarchyLevel> levels,
                            std::span<const std::vector<VertexId>> parents,
                            std::span<const Label> label_set, unsigned width) {
  if (levels.empty()) {
    throw InvalidArgument("assemble: no levels");
  }
  const auto &finest = levels.front();
  const auto n = static_cast<VertexId>(finest.labels.size());
  if (label_set.size() != n) {
    throw InvalidArgument("assemble: label set size differs from vertex count");
  }
  if (width <= 2) {
    return finest.labels;
  }
  if (levels.size() != width - 1 || parents.size() != width - 2) {
    throw InvalidArgument("assemble: hierarchy depth does not match the label width");
  }

  const unsigned msb = width - 1;
  auto fixed_key = [msb](Label l) { return ((l >> msb) << 1) | (l & 1); };

  // Vertices and labels, both grouped by (msb, digit 0), vertex ids ascending
  // within each group.
  std::vector<VertexId> verts(n);
  std::iota(verts.begin(), verts.end(), VertexId{0});
  std::stable_sort(verts.begin(), verts.end(), [&](VertexId a, VertexId b) {
    return fixed_key(finest.labels[a]) < fixed_key(finest.labels[b]);
  });
  std::vector<Label> pool(label_set.begin(), label_set.end());
  std::stable_sort(pool.begin(), pool.end(),
                   [&](Label a, Label b) { return fixed_key(a) < fixed_key(b); });

  std::vector<std::size_t> bounds{0};
  for (std::size_t i = 1; i < n; ++i) {
    if (fixed_key(finest.labels[verts[i]]) != fixed_key(finest.labels[verts[i - 1]])) {
      bounds.push_back(i);
    }
  }
  bounds.push_back(n);
  for (std::size_t g = 0; g + 1 < bounds.size(); ++g) {
    const Label key = fixed_key(finest.labels[verts[bounds[g]]]);
    for (std::size_t i = bounds[g]; i < bounds[g + 1]; ++i) {
      if (fixed_key(pool[i]) != key) {
        throw IntegrityError("assemble: finest labels are not a bijection onto the label set");
      }
    }
  }

  std::vector<Label> result(n);
  std::vector<VertexId> ancestor(n);
  std::vector<std::uint8_t> digit(n);
  std::vector<std::uint8_t> preferred(n);
  for (VertexId v = 0; v < n; ++v) {
    result[v] = finest.labels[v] & ((Label{1} << msb) | 1);
    ancestor[v] = v;
  }

  std::vector<VertexId> vert_scratch;
  std::vector<Label> pool_scratch;
  std::vector<std::size_t> next_bounds;
  for (unsigned k = 1; k < msb; ++k) {
    const auto &up = parents[k - 1];
    const auto &up_labels = levels[k].labels;
    for (VertexId v = 0; v < n; ++v) {
      ancestor[v] = up[ancestor[v]];
      preferred[v] = static_cast<std::uint8_t>(up_labels[ancestor[v]] & 1);
    }
    next_bounds.assign(1, 0);
    for (std::size_t g = 0; g + 1 < bounds.size(); ++g) {
      const std::size_t lo = bounds[g];
      const std::size_t hi = bounds[g + 1];
      const std::size_t cap0 = stable_split(std::span<Label>(pool).subspan(lo, hi - lo),
                                            pool_scratch, [k](Label l) { return (l >> k) & 1; });
      const std::size_t cap1 = (hi - lo) - cap0;
      std::size_t taken0 = 0;
      std::size_t taken1 = 0;
      for (std::size_t i = lo; i < hi; ++i) {
        const VertexId v = verts[i];
        if (preferred[v] == 0) {
          digit[v] = taken0 < cap0 ? 0 : 1;
          taken0 += digit[v] == 0 ? 1 : 0;
        } else {
          digit[v] = taken1 < cap1 ? 1 : 0;
          taken1 += digit[v] == 1 ? 1 : 0;
        }
      }
      const std::size_t zeros =
          stable_split(std::span<VertexId>(verts).subspan(lo, hi - lo), vert_scratch,
                       [&](VertexId v) { return digit[v]; });
      if (zeros != cap0) {
        throw IntegrityError("assemble: capacity bookkeeping violated");
      }
      for (std::size_t i = lo; i < hi; ++i) {
        result[verts[i]] |= Label{digit[verts[i]]} << k;
      }
      if (cap0 != 0 && cap1 != 0) {
        next_bounds.push_back(lo + cap0);
      }
      next_bounds.push_back(hi);
    }
    bounds.swap(next_bounds);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (result[verts[i]] != pool[i]) {
      throw IntegrityError("assemble: result is not a bijection onto the label set");
    }
  }
  return result;
}

LabelState run_hierarchy(const Graph &ga, const LabelState &ls, Rng &rng, HierarchyStats *stats) {
  const unsigned width = ls.layout().dim_ga;
  if (stats != nullptr) {
    *stats = {};
  }
  if (width <= 2) {
    return ls;
  }

  std::vector<std::uint8_t> perm(width);
  std::iota(perm.begin(), perm.end(), std::uint8_t{0});
  rng.shuffle(std::span<std::uint8_t>(perm));
  std::vector<std::uint8_t> inverse(width);
  for (unsigned j = 0; j < width; ++j) {
    inverse[perm[j]] = static_cast<std::uint8_t>(j);
  }

  const auto masks = ls.layout().masks();
  const DigitMasks permuted_masks{permute_bits(masks.proc, perm), permute_bits(masks.ext, perm)};
  std::vector<Label> labels(ls.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    labels[v] = permute_bits(ls.labels()[v], perm);
  }
  std::vector<Label> label_set(labels);
  std::sort(label_set.begin(), label_set.end());

  std::vector<HierarchyLevel> levels;
  std::vector<std::vector<VertexId>> parents;
  levels.reserve(width - 1);
  parents.reserve(width - 2);
  levels.push_back(make_finest_level(ga, std::move(labels), width, permuted_masks));
  std::size_t swaps = 0;
  for (unsigned i = 2; i <= width - 1; ++i) {
    swaps += swap_phase(levels.back());
    parents.emplace_back();
    HierarchyLevel next = contract(levels.back(), parents.back());
    levels.push_back(std::move(next));
  }

  auto assembled = assemble(levels, parents, label_set, width);
  for (auto &l : assembled) {
    l = permute_bits(l, inverse);
  }
  if (stats != nullptr) {
    stats->swaps = swaps;
    stats->levels = levels.size();
  }
  return LabelState(ls.layout(), std::move(assembled));
}

TimerResult run_timer(const Graph &ga, const PcubeLabeling &pl, std::span<const VertexId> mapping,
                      const TimerConfig &cfg) {
  Rng rng(cfg.seed);
  Rng label_rng = rng.split();
  Rng hierarchy_rng = rng.split();

  TimerResult result;
  result.state = extend_labels(ga, mapping, pl, label_rng, cfg.extend);
  result.initial = evaluate(ga, result.state, pl);
  std::int64_t current = result.initial.coco_plus;

  for (std::uint32_t h = 1; h <= cfg.n_hierarchies; ++h) {
    const auto start = std::chrono::steady_clock::now();
    HierarchyStats stats;
    LabelState candidate = run_hierarchy(ga, result.state, hierarchy_rng, &stats);
    HierarchyRecord record;
    record.index = h;
    record.coco = coco(ga, candidate);
    record.div = div(ga, candidate);
    record.coco_plus = record.coco - record.div;
    record.swaps = stats.swaps;
    record.accepted = !(record.coco_plus > current);
    if (record.accepted) {
      result.state = std::move(candidate);
      current = record.coco_plus;
    }
    record.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              start)
                        .count();
    result.trace.push_back(record);
  }

  result.mapping = decode_mapping(result.state, pl);
  result.final = evaluate(ga, result.state, pl);
  return result;
}

std::string trace_to_jsonl(std::span<const HierarchyRecord> trace, bool with_timing) {
  std::string out;
  for (const auto &r : trace) {
    nlohmann::ordered_json j;
    j["index"] = r.index;
    j["coco"] = r.coco;
    j["div"] = r.div;
    j["coco_plus"] = r.coco_plus;
    j["swaps"] = r.swaps;
    j["accepted"] = r.accepted;
    if (with_timing) {
      j["millis"] = r.millis;
    }
    out += j.dump();
    out += '\n';
  }
  return out;
}

} // namespace cubemap
