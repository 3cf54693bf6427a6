// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubemap/bits.hpp"
#include "cubemap/errors.hpp"
#include "cubemap/graph.hpp"

namespace cubemap {

using VertexPair = std::pair<VertexId, VertexId>;

/// Hamming-isometric labeling of a partial cube. Bit j of a label tells on
/// which side of the j-th convex cut (Djokovic class) the vertex lies.
struct PcubeLabeling {
  unsigned dim = 0;
  std::vector<Label> labels;
  /// Undirected edges (u < v) in lexicographic order ...
  std::vector<VertexPair> edges;
  /// ... and the class each of them belongs to.
  std::vector<unsigned> class_of_edge;

  [[nodiscard]] VertexId num_vertices() const { return static_cast<VertexId>(labels.size()); }

  /// PE carrying `label`, if any.
  [[nodiscard]] std::optional<VertexId> pe_of(Label label) const;

  /// Must be called after filling `labels`; builds the reverse lookup.
  void build_index();

private:
  std::unordered_map<Label, VertexId> index_;
};

/// Largest processor-label width accepted by label_partial_cube.
inline constexpr unsigned kMaxProcessorDim = 32;

enum class NotPartialCubeReason { NotBipartite, OverlappingClasses, IsometryViolation };

const char *to_string(NotPartialCubeReason reason);

/// Raised when the processor graph is not a partial cube. The witness is
///  - NotBipartite: an edge whose endpoints have equal BFS parity;
///  - OverlappingClasses: the seed edge of the new class, an edge already
///    owned by an earlier class, and the seed edge of that earlier class;
///  - IsometryViolation: a vertex pair whose Hamming and graph distance differ.
class NotPartialCube : public Error {
public:
  NotPartialCube(NotPartialCubeReason reason, std::vector<VertexPair> witness);

  [[nodiscard]] NotPartialCubeReason reason() const { return reason_; }
  [[nodiscard]] const std::vector<VertexPair> &witness() const { return witness_; }

private:
  NotPartialCubeReason reason_;
  std::vector<VertexPair> witness_;
};

struct ThetaClass {
  /// Edges (u < v) Djokovic-related to the seed.
  std::vector<VertexPair> edges;
  /// side[w] == 0 iff w is strictly closer to the seed's first endpoint.
  std::vector<std::uint8_t> side;
};

/// Djokovic class of the edge {x, y}. Requires a connected bipartite graph
/// so that no vertex is equidistant from x and y.
ThetaClass theta_class(const Graph &gp, const DistanceTable &dist, VertexPair e);

/// Recognizes partial cubes and labels them. Seeds are taken in
/// lexicographic edge order; the side holding the seed's smaller endpoint
/// gets bit 0. Throws NotPartialCube, DisconnectedGraph, or CapacityError
/// when more than kMaxProcessorDim classes exist.
PcubeLabeling label_partial_cube(const Graph &gp);
PcubeLabeling label_partial_cube(const Graph &gp, const DistanceTable &dist);

/// Exhaustive comparison of Hamming and BFS distance over all pairs.
bool verify_isometry(const Graph &gp, const PcubeLabeling &lab);
bool verify_isometry(const DistanceTable &dist, const PcubeLabeling &lab);

/// Labeled-topology JSON: {"n", "dim", "edges": [[u,v],...], "labels": [hex]}.
std::string labeling_to_json(const PcubeLabeling &lab, int indent = -1);
/// Parses the JSON form, rebuilds the graph and checks isometry; throws
/// ParseError or NotPartialCube(IsometryViolation).
std::pair<Graph, PcubeLabeling> labeling_from_json(const std::string &text);

} // namespace cubemap
