// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#include "cubemap/mapping.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "cubemap/errors.hpp"
#include "cubemap/objective.hpp"

namespace cubemap {

namespace {

constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

void check_sizes(const Graph &gc, const DistanceTable &dist) {
  if (gc.num_vertices() != dist.size()) {
    throw InvalidArgument("communication graph has " + std::to_string(gc.num_vertices()) +
                          " vertices but there are " + std::to_string(dist.size()) + " PEs");
  }
}

/// Heaviest vertex on the PE of least eccentricity.
std::pair<VertexId, VertexId> seed_pair(const Graph &gc, const DistanceTable &dist) {
  const VertexId n = gc.num_vertices();
  VertexId vc = 0;
  Weight best = -1;
  for (VertexId v = 0; v < n; ++v) {
    Weight total = 0;
    for (const auto &nb : gc.neighbors(v)) {
      total += nb.weight;
    }
    if (total > best) {
      best = total;
      vc = v;
    }
  }
  VertexId vp = 0;
  for (VertexId p = 1; p < n; ++p) {
    if (dist.eccentricity(p) < dist.eccentricity(vp)) {
      vp = p;
    }
  }
  return {vc, vp};
}

} // namespace

Mapping identity_mapping(const Partition &p, VertexId num_pes) {
  if (p.k != num_pes) {
    throw InvalidArgument("identity mapping needs one block per PE: " + std::to_string(p.k) +
                          " blocks, " + std::to_string(num_pes) + " PEs");
  }
  for (const auto b : p.block) {
    if (b >= p.k) {
      throw InvalidArgument("block id out of range");
    }
  }
  return Mapping(p.block.begin(), p.block.end());
}

Mapping identity_mapping(const Partition &p, const PcubeLabeling &pl) {
  return identity_mapping(p, pl.num_vertices());
}

Assignment greedy_allc(const Graph &gc, const DistanceTable &dist) {
  check_sizes(gc, dist);
  const VertexId n = gc.num_vertices();
  Assignment assigned(n, kNone);
  if (n == 0) {
    return assigned;
  }
  std::vector<char> pe_used(n, 0);
  std::vector<Weight> to_mapped(n, 0);
  auto place = [&](VertexId vc, VertexId vp) {
    assigned[vc] = vp;
    pe_used[vp] = 1;
    for (const auto &nb : gc.neighbors(vc)) {
      to_mapped[nb.target] += nb.weight;
    }
  };
  const auto [first_vc, first_vp] = seed_pair(gc, dist);
  place(first_vc, first_vp);

  for (VertexId step = 1; step < n; ++step) {
    VertexId vc = kNone;
    for (VertexId v = 0; v < n; ++v) {
      if (assigned[v] == kNone && (vc == kNone || to_mapped[v] > to_mapped[vc])) {
        vc = v;
      }
    }
    VertexId vp = kNone;
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (VertexId p = 0; p < n; ++p) {
      if (pe_used[p]) {
        continue;
      }
      std::int64_t score = 0;
      for (const auto &nb : gc.neighbors(vc)) {
        if (assigned[nb.target] != kNone) {
          score += nb.weight * static_cast<std::int64_t>(dist(p, assigned[nb.target]));
        }
      }
      if (score < best) {
        best = score;
        vp = p;
      }
    }
    place(vc, vp);
  }
  return assigned;
}

Assignment greedy_min(const Graph &gc, const DistanceTable &dist) {
  check_sizes(gc, dist);
  const VertexId n = gc.num_vertices();
  Assignment assigned(n, kNone);
  if (n == 0) {
    return assigned;
  }
  std::vector<char> pe_used(n, 0);
  std::vector<Weight> heaviest(n, 0);
  std::vector<VertexId> anchor(n, kNone);
  auto place = [&](VertexId vc, VertexId vp) {
    assigned[vc] = vp;
    pe_used[vp] = 1;
    for (const auto &nb : gc.neighbors(vc)) {
      const VertexId t = nb.target;
      if (nb.weight > heaviest[t] || (nb.weight == heaviest[t] && vc < anchor[t])) {
        heaviest[t] = nb.weight;
        anchor[t] = vc;
      }
    }
  };
  const auto [first_vc, first_vp] = seed_pair(gc, dist);
  place(first_vc, first_vp);

  for (VertexId step = 1; step < n; ++step) {
    VertexId vc = kNone;
    for (VertexId v = 0; v < n; ++v) {
      if (assigned[v] == kNone && (vc == kNone || heaviest[v] > heaviest[vc])) {
        vc = v;
      }
    }
    VertexId vp = kNone;
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (VertexId p = 0; p < n; ++p) {
      if (pe_used[p]) {
        continue;
      }
      const std::uint32_t d = anchor[vc] == kNone ? 0 : dist(p, assigned[anchor[vc]]);
      if (vp == kNone || d < best) {
        best = d;
        vp = p;
      }
    }
    place(vc, vp);
  }
  return assigned;
}

Mapping compose(const Partition &p, std::span<const VertexId> assignment) {
  if (assignment.size() != p.k) {
    throw InvalidArgument("assignment size differs from block count");
  }
  Mapping mapping(p.block.size());
  for (std::size_t v = 0; v < p.block.size(); ++v) {
    mapping[v] = assignment[p.block[v]];
  }
  return mapping;
}

Partition grow_partition(const Graph &ga, BlockId k, double eps, Rng &rng) {
  const VertexId n = ga.num_vertices();
  if (k == 0 || k > n) {
    throw InvalidArgument("grow_partition needs 1 <= k <= n");
  }
  const std::size_t cap = max_block_size(n, k, eps);
  Partition p;
  p.k = k;
  p.block.assign(n, kNone);
  std::vector<std::size_t> sizes(k, 0);

  std::vector<VertexId> candidates(n);
  std::iota(candidates.begin(), candidates.end(), VertexId{0});
  rng.shuffle(std::span<VertexId>(candidates));

  struct Frontier {
    std::vector<VertexId> queue;
    std::size_t head = 0;
    std::size_t cursor = 0; // next neighbor of queue[head] to inspect
  };
  std::vector<Frontier> frontier(k);
  for (BlockId b = 0; b < k; ++b) {
    const VertexId s = candidates[b];
    p.block[s] = b;
    sizes[b] = 1;
    frontier[b].queue.push_back(s);
  }

  // Round robin: every active block claims one unassigned neighbor per turn.
  bool active = true;
  while (active) {
    active = false;
    for (BlockId b = 0; b < k; ++b) {
      auto &f = frontier[b];
      if (sizes[b] >= cap) {
        continue;
      }
      while (f.head < f.queue.size()) {
        const auto nbs = ga.neighbors(f.queue[f.head]);
        while (f.cursor < nbs.size() && p.block[nbs[f.cursor].target] != kNone) {
          ++f.cursor;
        }
        if (f.cursor < nbs.size()) {
          const VertexId v = nbs[f.cursor].target;
          p.block[v] = b;
          ++sizes[b];
          f.queue.push_back(v);
          active = true;
          break;
        }
        ++f.head;
        f.cursor = 0;
      }
    }
  }

  // Leftovers: adjacent block with room first, then any block with room.
  bool progress = true;
  while (progress) {
    progress = false;
    for (VertexId v = 0; v < n; ++v) {
      if (p.block[v] != kNone) {
        continue;
      }
      BlockId best = kNone;
      for (const auto &nb : ga.neighbors(v)) {
        const BlockId b = p.block[nb.target];
        if (b != kNone && sizes[b] < cap &&
            (best == kNone || sizes[b] < sizes[best] || (sizes[b] == sizes[best] && b < best))) {
          best = b;
        }
      }
      if (best != kNone) {
        p.block[v] = best;
        ++sizes[best];
        progress = true;
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (p.block[v] == kNone) {
      const auto it = std::min_element(sizes.begin(), sizes.end());
      const auto b = static_cast<BlockId>(it - sizes.begin());
      p.block[v] = b;
      ++sizes[b];
    }
  }
  return p;
}

} // namespace cubemap
