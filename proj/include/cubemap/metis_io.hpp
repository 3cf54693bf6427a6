// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cubemap/graph.hpp"

namespace cubemap {

/// Reads a graph in METIS/Chaco format: header "n m [fmt [ncon]]", then one
/// line of 1-based neighbors per vertex. Lines starting with '%' are
/// comments. Vertex weights (fmt x1x) are skipped; edge weights (fmt xx1)
/// must be positive.
Graph parse_metis(std::istream &in);
Graph parse_metis(std::string_view text);
Graph read_metis_file(const std::string &path);

/// Writes METIS format; the weight flag is emitted only when some edge
/// weight differs from 1.
void write_metis(const Graph &g, std::ostream &out);
std::string to_metis(const Graph &g);
void write_metis_file(const Graph &g, const std::string &path);

/// One non-negative integer per line, line i = vertex i.
std::vector<std::uint32_t> parse_id_list(std::istream &in);
std::vector<std::uint32_t> read_id_list_file(const std::string &path);
void write_id_list(std::span<const std::uint32_t> ids, std::ostream &out);
void write_id_list_file(std::span<const std::uint32_t> ids, const std::string &path);

/// Partition file: k is one past the largest block id.
Partition read_partition_file(const std::string &path);

} // namespace cubemap
