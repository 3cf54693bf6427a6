// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cubemap {

using VertexId = std::uint32_t;
using BlockId = std::uint32_t;
using Weight = std::int64_t;

struct Neighbor {
  VertexId target;
  Weight weight;

  friend bool operator==(const Neighbor &, const Neighbor &) = default;
};

struct WeightedEdge {
  VertexId u;
  VertexId v;
  Weight weight = 1;
};

/// Undirected weighted graph in compressed adjacency form. Every undirected
/// edge is stored twice, once per endpoint. Immutable after construction.
class Graph {
public:
  Graph() = default;

  /// Takes ownership of a CSR structure. `offsets` has n + 1 entries.
  /// Symmetry, absence of self-loops and of duplicate neighbors are checked
  /// and reported with IntegrityError.
  Graph(std::vector<std::size_t> offsets, std::vector<Neighbor> adjacency);

  /// Builds a graph from an undirected edge list. Each edge must appear once;
  /// self-loops, duplicates and non-positive weights are rejected.
  static Graph from_edges(VertexId n, std::span<const WeightedEdge> edges);

  /// Skips validation; for CSR built by code that already guarantees the
  /// invariants (contraction).
  static Graph unchecked(std::vector<std::size_t> offsets, std::vector<Neighbor> adjacency);

  [[nodiscard]] VertexId num_vertices() const {
    return static_cast<VertexId>(offsets_.empty() ? 0 : offsets_.size() - 1);
  }
  /// Number of undirected edges.
  [[nodiscard]] std::size_t num_edges() const { return adjacency_.size() / 2; }

  [[nodiscard]] std::span<const Neighbor> neighbors(VertexId u) const {
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }
  [[nodiscard]] std::size_t degree(VertexId u) const { return offsets_[u + 1] - offsets_[u]; }

  /// Sum of weights over undirected edges.
  [[nodiscard]] Weight total_weight() const;
  [[nodiscard]] bool is_unit_weighted() const;

  /// Undirected edges (u < v), sorted lexicographically.
  [[nodiscard]] std::vector<WeightedEdge> edges() const;

  [[nodiscard]] std::span<const std::size_t> offsets() const { return offsets_; }
  [[nodiscard]] std::span<const Neighbor> adjacency() const { return adjacency_; }

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
};

/// Block assignment of the vertices of a graph.
struct Partition {
  std::vector<BlockId> block;
  BlockId k = 0;

  [[nodiscard]] std::vector<std::size_t> block_sizes() const;
};

/// Checks block ids against k and the vertex count; throws InvalidArgument.
/// With `require_nonempty`, every block must own at least one vertex.
void validate_partition(const Graph &g, const Partition &p, bool require_nonempty = false);

/// Unweighted all-pairs shortest path lengths, n x n row-major.
class DistanceTable {
public:
  DistanceTable() = default;
  DistanceTable(VertexId n, std::vector<std::uint32_t> data) : n_(n), data_(std::move(data)) {}

  [[nodiscard]] VertexId size() const { return n_; }
  [[nodiscard]] std::uint32_t operator()(VertexId u, VertexId v) const {
    return data_[static_cast<std::size_t>(u) * n_ + v];
  }
  [[nodiscard]] std::span<const std::uint32_t> row(VertexId u) const {
    return {data_.data() + static_cast<std::size_t>(u) * n_, n_};
  }
  [[nodiscard]] std::uint32_t eccentricity(VertexId u) const;

private:
  VertexId n_ = 0;
  std::vector<std::uint32_t> data_;
};

/// BFS from every vertex. Throws DisconnectedGraph if some pair is
/// unreachable.
DistanceTable bfs_all_pairs(const Graph &g);

/// Single-source BFS; unreachable vertices get UINT32_MAX.
std::vector<std::uint32_t> bfs_distances(const Graph &g, VertexId source);

/// Contracts every block to one vertex. Edge weights between blocks are the
/// summed weights of crossing edges; intra-block edges vanish.
Graph contract_blocks(const Graph &g, const Partition &p);

} // namespace cubemap
