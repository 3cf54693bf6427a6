// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#include "cubemap/topology.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <utility>

#include "cubemap/errors.hpp"
#include "cubemap/metis_io.hpp"
#include "cubemap/rng.hpp"

namespace cubemap {

namespace {

struct KindName {
  TopologyKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {TopologyKind::grid2d, "grid2d"},       {TopologyKind::grid3d, "grid3d"},
    {TopologyKind::torus2d, "torus2d"},     {TopologyKind::torus3d, "torus3d"},
    {TopologyKind::hypercube, "hypercube"}, {TopologyKind::file, "file"},
};

unsigned expected_rank(TopologyKind kind) {
  switch (kind) {
  case TopologyKind::grid2d:
  case TopologyKind::torus2d:
    return 2;
  case TopologyKind::grid3d:
  case TopologyKind::torus3d:
    return 3;
  case TopologyKind::hypercube:
    return 1;
  case TopologyKind::file:
    return 0;
  }
  return 0;
}

/// Lattice with optional wrap-around in every dimension.
Graph lattice(std::span<const unsigned> extents, bool wrap) {
  VertexId n = 1;
  for (const unsigned e : extents) {
    n *= e;
  }
  std::set<std::pair<VertexId, VertexId>> edge_set;
  std::vector<unsigned> coord(extents.size(), 0);
  for (VertexId id = 0; id < n; ++id) {
    // Decode row-major coordinates; last extent varies fastest.
    VertexId rest = id;
    for (std::size_t d = extents.size(); d-- > 0;) {
      coord[d] = rest % extents[d];
      rest /= extents[d];
    }
    VertexId stride = 1;
    for (std::size_t d = extents.size(); d-- > 0;) {
      const unsigned c = coord[d];
      if (c + 1 < extents[d]) {
        edge_set.emplace(id, id + stride);
      } else if (wrap && extents[d] > 1) {
        const VertexId other = id - c * stride;
        edge_set.emplace(std::min(id, other), std::max(id, other));
      }
      stride *= extents[d];
    }
  }
  std::vector<WeightedEdge> edges;
  edges.reserve(edge_set.size());
  for (const auto &[u, v] : edge_set) {
    if (u != v) {
      edges.push_back({u, v, 1});
    }
  }
  return Graph::from_edges(n, edges);
}

} // namespace

TopologySpec TopologySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("topology spec '" + std::string(text) + "' lacks ':'");
  }
  const auto name = text.substr(0, colon);
  const auto args = text.substr(colon + 1);
  const auto *it = std::find_if(std::begin(kKindNames), std::end(kKindNames),
                                [&](const KindName &k) { return k.name == name; });
  if (it == std::end(kKindNames)) {
    throw ParseError("unknown topology kind '" + std::string(name) + "'");
  }
  TopologySpec spec;
  spec.kind = it->kind;
  if (spec.kind == TopologyKind::file) {
    if (args.empty()) {
      throw ParseError("file topology needs a path");
    }
    spec.path = std::string(args);
    return spec;
  }
  std::size_t pos = 0;
  while (pos <= args.size()) {
    const auto next = std::min(args.find('x', pos), args.size());
    const auto token = args.substr(pos, next - pos);
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("bad extent '" + std::string(token) + "' in topology spec");
    }
    spec.dims.push_back(value);
    pos = next + 1;
  }
  if (spec.dims.size() != expected_rank(spec.kind)) {
    throw ParseError("topology '" + std::string(name) + "' expects " +
                     std::to_string(expected_rank(spec.kind)) + " extents");
  }
  if (spec.kind == TopologyKind::hypercube) {
    if (spec.dims[0] < 1 || spec.dims[0] > 24) {
      throw ParseError("hypercube dimension must be in [1, 24]");
    }
  } else {
    for (const unsigned d : spec.dims) {
      if (d < 2) {
        throw ParseError("grid and torus extents must be at least 2");
      }
    }
  }
  return spec;
}

std::string TopologySpec::to_string() const {
  const auto *it = std::find_if(std::begin(kKindNames), std::end(kKindNames),
                                [&](const KindName &k) { return k.kind == kind; });
  std::string out(it->name);
  out += ':';
  if (kind == TopologyKind::file) {
    return out + path;
  }
  for (std::size_t i = 0; i < dims.size(); ++i) {
    out += (i ? "x" : "") + std::to_string(dims[i]);
  }
  return out;
}

Graph generate_topology(const TopologySpec &spec) {
  switch (spec.kind) {
  case TopologyKind::grid2d:
  case TopologyKind::grid3d:
    return lattice(spec.dims, false);
  case TopologyKind::torus2d:
  case TopologyKind::torus3d:
    return lattice(spec.dims, true);
  case TopologyKind::hypercube: {
    const unsigned d = spec.dims.at(0);
    const VertexId n = VertexId{1} << d;
    std::vector<WeightedEdge> edges;
    for (VertexId u = 0; u < n; ++u) {
      for (unsigned j = 0; j < d; ++j) {
        const VertexId v = u ^ (VertexId{1} << j);
        if (u < v) {
          edges.push_back({u, v, 1});
        }
      }
    }
    return Graph::from_edges(n, edges);
  }
  case TopologyKind::file: {
    const Graph g = read_metis_file(spec.path);
    if (g.is_unit_weighted()) {
      return g;
    }
    auto edges = g.edges();
    for (auto &e : edges) {
      e.weight = 1;
    }
    return Graph::from_edges(g.num_vertices(), edges);
  }
  }
  throw InvalidArgument("unhandled topology kind");
}

Graph random_geometric_graph(VertexId n, double avg_degree, Rng &rng) {
  std::vector<double> xs(n);
  std::vector<double> ys(n);
  for (VertexId i = 0; i < n; ++i) {
    xs[i] = rng.uniform();
    ys[i] = rng.uniform();
  }
  const double radius = std::sqrt(avg_degree / (M_PI * std::max<double>(n, 1)));
  const auto cells = static_cast<std::size_t>(std::max(1.0, std::floor(1.0 / radius)));
  std::vector<std::vector<VertexId>> grid(cells * cells);
  auto cell_of = [&](double c) {
    return std::min(cells - 1, static_cast<std::size_t>(c * static_cast<double>(cells)));
  };
  for (VertexId i = 0; i < n; ++i) {
    grid[cell_of(xs[i]) * cells + cell_of(ys[i])].push_back(i);
  }
  const double r2 = radius * radius;
  std::vector<WeightedEdge> edges;
  for (VertexId i = 0; i < n; ++i) {
    const std::size_t cx = cell_of(xs[i]);
    const std::size_t cy = cell_of(ys[i]);
    for (std::size_t gx = cx == 0 ? 0 : cx - 1; gx <= std::min(cells - 1, cx + 1); ++gx) {
      for (std::size_t gy = cy == 0 ? 0 : cy - 1; gy <= std::min(cells - 1, cy + 1); ++gy) {
        for (const VertexId j : grid[gx * cells + gy]) {
          if (j <= i) {
            continue;
          }
          const double dx = xs[i] - xs[j];
          const double dy = ys[i] - ys[j];
          if (dx * dx + dy * dy <= r2) {
            edges.push_back({i, j, 1});
          }
        }
      }
    }
  }
  return Graph::from_edges(n, edges);
}

} // namespace cubemap
