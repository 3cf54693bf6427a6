// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#include "cubemap/pcube.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "json.hpp"

namespace cubemap {

namespace {

std::string describe(NotPartialCubeReason reason, const std::vector<VertexPair> &witness) {
  std::string msg = std::string("not a partial cube: ") + to_string(reason);
  for (const auto &[a, b] : witness) {
    msg += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return msg;
}

constexpr unsigned kUnassigned = std::numeric_limits<unsigned>::max();

} // namespace

const char *to_string(NotPartialCubeReason reason) {
  switch (reason) {
  case NotPartialCubeReason::NotBipartite:
    return "NotBipartite";
  case NotPartialCubeReason::OverlappingClasses:
    return "OverlappingClasses";
  case NotPartialCubeReason::IsometryViolation:
    return "IsometryViolation";
  }
  return "unknown";
}

NotPartialCube::NotPartialCube(NotPartialCubeReason reason, std::vector<VertexPair> witness)
    : Error(describe(reason, witness)), reason_(reason), witness_(std::move(witness)) {}

std::optional<VertexId> PcubeLabeling::pe_of(Label label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

void PcubeLabeling::build_index() {
  index_.clear();
  index_.reserve(labels.size());
  for (VertexId v = 0; v < labels.size(); ++v) {
    index_.emplace(labels[v], v);
  }
}

ThetaClass theta_class(const Graph &gp, const DistanceTable &dist, VertexPair e) {
  const auto [x, y] = e;
  ThetaClass cls;
  cls.side.resize(gp.num_vertices());
  for (VertexId w = 0; w < gp.num_vertices(); ++w) {
    cls.side[w] = dist(w, x) < dist(w, y) ? 0 : 1;
  }
  for (VertexId u = 0; u < gp.num_vertices(); ++u) {
    for (const auto &nb : gp.neighbors(u)) {
      if (u < nb.target && cls.side[u] != cls.side[nb.target]) {
        cls.edges.emplace_back(u, nb.target);
      }
    }
  }
  return cls;
}

PcubeLabeling label_partial_cube(const Graph &gp) {
  return label_partial_cube(gp, bfs_all_pairs(gp));
}

PcubeLabeling label_partial_cube(const Graph &gp, const DistanceTable &dist) {
  const VertexId n = gp.num_vertices();

  // Bipartite iff no edge joins vertices of equal distance parity from 0.
  for (VertexId u = 0; u < n; ++u) {
    for (const auto &nb : gp.neighbors(u)) {
      if (u < nb.target && (dist(0, u) % 2) == (dist(0, nb.target) % 2)) {
        throw NotPartialCube(NotPartialCubeReason::NotBipartite, {{u, nb.target}});
      }
    }
  }

  PcubeLabeling lab;
  for (const auto &e : gp.edges()) {
    lab.edges.emplace_back(e.u, e.v);
  }
  lab.class_of_edge.assign(lab.edges.size(), kUnassigned);
  lab.labels.assign(n, 0);
  auto edge_index = [&](VertexPair e) {
    return static_cast<std::size_t>(
        std::lower_bound(lab.edges.begin(), lab.edges.end(), e) - lab.edges.begin());
  };

  std::vector<VertexPair> seeds;
  for (std::size_t s = 0; s < lab.edges.size(); ++s) {
    if (lab.class_of_edge[s] != kUnassigned) {
      continue;
    }
    const auto cls = theta_class(gp, dist, lab.edges[s]);
    const auto j = static_cast<unsigned>(seeds.size());
    for (const auto &f : cls.edges) {
      const std::size_t fi = edge_index(f);
      if (lab.class_of_edge[fi] != kUnassigned) {
        throw NotPartialCube(NotPartialCubeReason::OverlappingClasses,
                             {lab.edges[s], f, seeds[lab.class_of_edge[fi]]});
      }
      lab.class_of_edge[fi] = j;
    }
    if (j >= kMaxProcessorDim) {
      throw CapacityError("processor graph has more than " + std::to_string(kMaxProcessorDim) +
                          " convex cuts");
    }
    seeds.push_back(lab.edges[s]);
    for (VertexId w = 0; w < n; ++w) {
      lab.labels[w] |= Label{cls.side[w]} << j;
    }
  }
  lab.dim = static_cast<unsigned>(seeds.size());

  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (static_cast<std::uint32_t>(hamming(lab.labels[u], lab.labels[v])) != dist(u, v)) {
        throw NotPartialCube(NotPartialCubeReason::IsometryViolation, {{u, v}});
      }
    }
  }
  lab.build_index();
  return lab;
}

bool verify_isometry(const DistanceTable &dist, const PcubeLabeling &lab) {
  const VertexId n = dist.size();
  if (lab.labels.size() != n) {
    return false;
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (static_cast<std::uint32_t>(hamming(lab.labels[u], lab.labels[v])) != dist(u, v)) {
        return false;
      }
    }
  }
  return true;
}

bool verify_isometry(const Graph &gp, const PcubeLabeling &lab) {
  if (lab.labels.size() != gp.num_vertices()) {
    return false;
  }
  try {
    return verify_isometry(bfs_all_pairs(gp), lab);
  } catch (const DisconnectedGraph &) {
    return false;
  }
}

std::string labeling_to_json(const PcubeLabeling &lab, int indent) {
  nlohmann::ordered_json j;
  j["n"] = lab.labels.size();
  j["dim"] = lab.dim;
  auto edges = nlohmann::ordered_json::array();
  for (const auto &[u, v] : lab.edges) {
    edges.push_back({u, v});
  }
  j["edges"] = std::move(edges);
  auto labels = nlohmann::ordered_json::array();
  for (const Label l : lab.labels) {
    labels.push_back(to_hex(l, lab.dim));
  }
  j["labels"] = std::move(labels);
  return j.dump(indent);
}

std::pair<Graph, PcubeLabeling> labeling_from_json(const std::string &text) {
  PcubeLabeling lab;
  std::vector<WeightedEdge> edges;
  VertexId n = 0;
  try {
    const auto j = nlohmann::json::parse(text);
    n = j.at("n").get<VertexId>();
    lab.dim = j.at("dim").get<unsigned>();
    for (const auto &e : j.at("edges")) {
      edges.push_back({e.at(0).get<VertexId>(), e.at(1).get<VertexId>(), 1});
    }
    for (const auto &l : j.at("labels")) {
      lab.labels.push_back(from_hex(l.get<std::string>()));
    }
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("labeled topology: ") + e.what());
  }
  if (lab.labels.size() != n || lab.dim > kMaxProcessorDim) {
    throw ParseError("labeled topology: label count or dimension inconsistent");
  }
  Graph g;
  try {
    g = Graph::from_edges(n, edges);
  } catch (const Error &e) {
    throw ParseError(std::string("labeled topology: ") + e.what());
  }
  for (const auto &e : g.edges()) {
    lab.edges.emplace_back(e.u, e.v);
    const Label diff = lab.labels[e.u] ^ lab.labels[e.v];
    if (std::popcount(diff) != 1 || std::countr_zero(diff) >= static_cast<int>(lab.dim)) {
      throw NotPartialCube(NotPartialCubeReason::IsometryViolation, {{e.u, e.v}});
    }
    lab.class_of_edge.push_back(static_cast<unsigned>(std::countr_zero(diff)));
  }
  const auto dist = bfs_all_pairs(g);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (static_cast<std::uint32_t>(hamming(lab.labels[u], lab.labels[v])) != dist(u, v)) {
        throw NotPartialCube(NotPartialCubeReason::IsometryViolation, {{u, v}});
      }
    }
  }
  lab.build_index();
  return {std::move(g), std::move(lab)};
}

} // namespace cubemap
