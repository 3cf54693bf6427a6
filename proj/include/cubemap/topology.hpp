// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cubemap/graph.hpp"

namespace cubemap {

enum class TopologyKind { grid2d, grid3d, torus2d, torus3d, hypercube, file };

struct TopologySpec {
  TopologyKind kind = TopologyKind::grid2d;
  std::vector<unsigned> dims;
  std::string path; // only for TopologyKind::file

  /// Parses "grid2d:16x16", "torus3d:8x8x8", "hypercube:8" or "file:p.graph".
  /// Throws ParseError on anything else, including dims out of range.
  static TopologySpec parse(std::string_view text);

  [[nodiscard]] std::string to_string() const;
};

/// Row-major numbering for grids and tori (last extent varies fastest),
/// binary index for the hypercube. Odd tori are generated as requested.
/// For kind == file the graph is read from METIS with weights forced to 1.
Graph generate_topology(const TopologySpec &spec);

/// Random geometric graph on the unit square with expected average degree
/// `avg_degree`. Unit edge weights; may contain isolated vertices.
class Rng;
Graph random_geometric_graph(VertexId n, double avg_degree, Rng &rng);

} // namespace cubemap
