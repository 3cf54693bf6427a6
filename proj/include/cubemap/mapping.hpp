// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "cubemap/graph.hpp"
#include "cubemap/labeling.hpp"
#include "cubemap/rng.hpp"

namespace cubemap {

/// Communication vertex -> PE; a bijection when both sides have equal size.
using Assignment = std::vector<VertexId>;

/// Block i goes to PE i. Requires p.k == number of PEs.
Mapping identity_mapping(const Partition &p, const PcubeLabeling &pl);
Mapping identity_mapping(const Partition &p, VertexId num_pes);

/// Greedy construction scoring against all mapped vertices: next is the
/// unmapped communication vertex with the largest total weight to mapped
/// ones, placed on the free PE with the least weighted distance to its
/// mapped neighbors' PEs. Ties go to the lowest id.
Assignment greedy_allc(const Graph &gc, const DistanceTable &dist);

/// Greedy construction scoring against the single best: next is the
/// unmapped vertex with the heaviest single edge to a mapped vertex, placed
/// on the free PE closest to that neighbor's PE.
Assignment greedy_min(const Graph &gc, const DistanceTable &dist);

/// Vertex-level mapping from a partition and a block assignment.
Mapping compose(const Partition &p, std::span<const VertexId> assignment);

/// Round-robin BFS growth from k distinct random seeds, each block capped
/// at max_block_size(n, k, eps). Vertices no block could reach go to the
/// least-full adjacent block with room, else the least-full block.
Partition grow_partition(const Graph &ga, BlockId k, double eps, Rng &rng);

} // namespace cubemap
