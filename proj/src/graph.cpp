// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#include "cubemap/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "cubemap/errors.hpp"

namespace cubemap {

namespace {

void check_structure(std::span<const std::size_t> offsets, std::span<const Neighbor> adjacency) {
  if (offsets.empty() || offsets.front() != 0 || offsets.back() != adjacency.size()) {
    throw IntegrityError("graph: offsets do not describe the adjacency array");
  }
  const auto n = static_cast<VertexId>(offsets.size() - 1);
  std::vector<VertexId> seen(n, std::numeric_limits<VertexId>::max());
  for (VertexId u = 0; u < n; ++u) {
    if (offsets[u] > offsets[u + 1]) {
      throw IntegrityError("graph: offsets are not monotone");
    }
    for (std::size_t e = offsets[u]; e < offsets[u + 1]; ++e) {
      const VertexId v = adjacency[e].target;
      if (v >= n) {
        throw IntegrityError("graph: neighbor " + std::to_string(v) + " out of range");
      }
      if (v == u) {
        throw IntegrityError("graph: self-loop at vertex " + std::to_string(u));
      }
      if (seen[v] == u) {
        throw IntegrityError("graph: duplicate edge {" + std::to_string(u) + "," +
                             std::to_string(v) + "}");
      }
      seen[v] = u;
      if (adjacency[e].weight < 0) {
        throw IntegrityError("graph: negative edge weight");
      }
    }
  }
  // Symmetry: the sorted list of (u, v, w) must equal the sorted list of (v, u, w).
  struct Arc {
    VertexId from;
    VertexId to;
    Weight weight;
    auto operator<=>(const Arc &) const = default;
  };
  std::vector<Arc> forward;
  std::vector<Arc> backward;
  forward.reserve(adjacency.size());
  backward.reserve(adjacency.size());
  for (VertexId u = 0; u < n; ++u) {
    for (std::size_t e = offsets[u]; e < offsets[u + 1]; ++e) {
      forward.push_back({u, adjacency[e].target, adjacency[e].weight});
      backward.push_back({adjacency[e].target, u, adjacency[e].weight});
    }
  }
  std::sort(forward.begin(), forward.end());
  std::sort(backward.begin(), backward.end());
  const auto mismatch = std::mismatch(forward.begin(), forward.end(), backward.begin());
  if (mismatch.first != forward.end()) {
    const auto &a = *mismatch.first;
    throw IntegrityError("graph: asymmetric adjacency at {" + std::to_string(a.from) + "," +
                         std::to_string(a.to) + "}");
  }
}

} // namespace

Graph::Graph(std::vector<std::size_t> offsets, std::vector<Neighbor> adjacency)
    : offsets_(std::move(offsets)), adjacency_(std::move(adjacency)) {
  check_structure(offsets_, adjacency_);
}

Graph Graph::unchecked(std::vector<std::size_t> offsets, std::vector<Neighbor> adjacency) {
  Graph g;
  g.offsets_ = std::move(offsets);
  g.adjacency_ = std::move(adjacency);
  return g;
}

Graph Graph::from_edges(VertexId n, std::span<const WeightedEdge> edges) {
  std::vector<std::size_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (const auto &e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InvalidArgument("edge endpoint out of range");
    }
    if (e.weight <= 0) {
      throw InvalidArgument("edge weights must be positive");
    }
    ++offsets[e.u + 1];
    ++offsets[e.v + 1];
  }
  for (VertexId u = 0; u < n; ++u) {
    offsets[u + 1] += offsets[u];
  }
  std::vector<Neighbor> adjacency(offsets.back());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (const auto &e : edges) {
    adjacency[fill[e.u]++] = {e.v, e.weight};
    adjacency[fill[e.v]++] = {e.u, e.weight};
  }
  for (VertexId u = 0; u < n; ++u) {
    std::sort(adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[u]),
              adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[u + 1]),
              [](const Neighbor &a, const Neighbor &b) { return a.target < b.target; });
  }
  return Graph(std::move(offsets), std::move(adjacency));
}

Weight Graph::total_weight() const {
  Weight total = 0;
  for (const auto &nb : adjacency_) {
    total += nb.weight;
  }
  return total / 2;
}

bool Graph::is_unit_weighted() const {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [](const Neighbor &nb) { return nb.weight == 1; });
}

std::vector<WeightedEdge> Graph::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices(); ++u) {
    for (const auto &nb : neighbors(u)) {
      if (u < nb.target) {
        out.push_back({u, nb.target, nb.weight});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const WeightedEdge &a, const WeightedEdge &b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return out;
}

std::vector<std::size_t> Partition::block_sizes() const {
  std::vector<std::size_t> sizes(k, 0);
  for (const BlockId b : block) {
    ++sizes[b];
  }
  return sizes;
}

void validate_partition(const Graph &g, const Partition &p, bool require_nonempty) {
  if (p.block.size() != g.num_vertices()) {
    throw InvalidArgument("partition has " + std::to_string(p.block.size()) +
                          " entries, graph has " + std::to_string(g.num_vertices()) +
                          " vertices");
  }
  if (p.k == 0 && !p.block.empty()) {
    throw InvalidArgument("partition has no blocks");
  }
  for (const BlockId b : p.block) {
    if (b >= p.k) {
      throw InvalidArgument("block id " + std::to_string(b) + " out of range");
    }
  }
  if (require_nonempty) {
    const auto sizes = p.block_sizes();
    for (BlockId b = 0; b < p.k; ++b) {
      if (sizes[b] == 0) {
        throw InvalidArgument("block " + std::to_string(b) + " is empty");
      }
    }
  }
}

std::uint32_t DistanceTable::eccentricity(VertexId u) const {
  const auto r = row(u);
  return r.empty() ? 0 : *std::max_element(r.begin(), r.end());
}

std::vector<std::uint32_t> bfs_distances(const Graph &g, VertexId source) {
  constexpr auto kUnreached = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(g.num_vertices(), kUnreached);
  std::vector<VertexId> queue;
  queue.reserve(g.num_vertices());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    for (const auto &nb : g.neighbors(u)) {
      if (dist[nb.target] == kUnreached) {
        dist[nb.target] = dist[u] + 1;
        queue.push_back(nb.target);
      }
    }
  }
  return dist;
}

DistanceTable bfs_all_pairs(const Graph &g) {
  const VertexId n = g.num_vertices();
  std::vector<std::uint32_t> data;
  data.reserve(static_cast<std::size_t>(n) * n);
  for (VertexId s = 0; s < n; ++s) {
    const auto row = bfs_distances(g, s);
    for (VertexId t = 0; t < n; ++t) {
      if (row[t] == std::numeric_limits<std::uint32_t>::max()) {
        throw DisconnectedGraph("graph is disconnected: no path from " + std::to_string(s) +
                                " to " + std::to_string(t));
      }
    }
    data.insert(data.end(), row.begin(), row.end());
  }
  return DistanceTable(n, std::move(data));
}

Graph contract_blocks(const Graph &g, const Partition &p) {
  validate_partition(g, p);
  std::vector<std::vector<VertexId>> members(p.k);
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    members[p.block[u]].push_back(u);
  }
  std::vector<std::size_t> offsets{0};
  std::vector<Neighbor> adjacency;
  std::vector<Weight> accum(p.k, 0);
  std::vector<char> marked(p.k, 0);
  std::vector<BlockId> touched;
  for (BlockId b = 0; b < p.k; ++b) {
    touched.clear();
    for (const VertexId u : members[b]) {
      for (const auto &nb : g.neighbors(u)) {
        const BlockId c = p.block[nb.target];
        if (c == b) {
          continue;
        }
        if (!marked[c]) {
          marked[c] = 1;
          touched.push_back(c);
        }
        accum[c] += nb.weight;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (const BlockId c : touched) {
      adjacency.push_back({c, accum[c]});
      accum[c] = 0;
      marked[c] = 0;
    }
    offsets.push_back(adjacency.size());
  }
  return Graph::unchecked(std::move(offsets), std::move(adjacency));
}

} // namespace cubemap
