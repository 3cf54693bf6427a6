// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#include "cubemap/metis_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "cubemap/errors.hpp"

namespace cubemap {

namespace {

bool is_comment(const std::string &line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first != std::string::npos && line[first] == '%';
}

bool is_blank(const std::string &line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<long long> tokens_of(const std::string &line, std::size_t line_no) {
  std::istringstream ss(line);
  std::vector<long long> out;
  std::string token;
  while (ss >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != token.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": bad token '" + token + "'");
    }
    out.push_back(value);
  }
  return out;
}

} // namespace

Graph parse_metis(std::istream &in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!is_comment(line) && !is_blank(line)) {
      have_header = true;
      break;
    }
  }
  if (!have_header) {
    throw ParseError("missing METIS header");
  }
  const auto header = tokens_of(line, line_no);
  if (header.size() < 2 || header.size() > 4 || header[0] < 0 || header[1] < 0) {
    throw ParseError("malformed METIS header '" + line + "'");
  }
  const auto n = static_cast<std::size_t>(header[0]);
  const auto m = static_cast<std::size_t>(header[1]);
  long long fmt = header.size() >= 3 ? header[2] : 0;
  if (fmt < 0 || fmt > 111 || (fmt % 10) > 1 || (fmt / 10 % 10) > 1 || fmt / 100 > 1) {
    throw ParseError("unsupported METIS format code " + std::to_string(fmt));
  }
  const bool edge_weights = fmt % 10 == 1;
  const bool vertex_weights = fmt / 10 % 10 == 1;
  const bool vertex_sizes = fmt / 100 == 1;
  const auto ncon = static_cast<std::size_t>(header.size() == 4 ? header[3] : 1);
  const std::size_t skip = (vertex_sizes ? 1 : 0) + (vertex_weights ? ncon : 0);

  std::vector<std::size_t> offsets{0};
  std::vector<Neighbor> adjacency;
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<long long> values;
    while (true) {
      if (!std::getline(in, line)) {
        line.clear(); // missing trailing lines denote isolated vertices
        break;
      }
      ++line_no;
      if (!is_comment(line)) {
        break;
      }
    }
    values = tokens_of(line, line_no);
    if (values.size() < skip) {
      throw ParseError("line " + std::to_string(line_no) + ": missing vertex weights");
    }
    const std::size_t stride = edge_weights ? 2 : 1;
    if ((values.size() - skip) % stride != 0) {
      throw ParseError("line " + std::to_string(line_no) + ": neighbor without weight");
    }
    for (std::size_t i = skip; i < values.size(); i += stride) {
      const long long v = values[i];
      if (v < 1 || static_cast<std::size_t>(v) > n) {
        throw ParseError("line " + std::to_string(line_no) + ": neighbor " + std::to_string(v) +
                         " out of range");
      }
      const long long w = edge_weights ? values[i + 1] : 1;
      if (w <= 0) {
        throw ParseError("line " + std::to_string(line_no) + ": edge weight " +
                         std::to_string(w) + " is not positive");
      }
      adjacency.push_back({static_cast<VertexId>(v - 1), static_cast<Weight>(w)});
    }
    offsets.push_back(adjacency.size());
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!is_blank(line) && !is_comment(line)) {
      throw ParseError("line " + std::to_string(line_no) + ": data after the last vertex");
    }
  }

  Graph g;
  try {
    g = Graph(std::move(offsets), std::move(adjacency));
  } catch (const IntegrityError &e) {
    throw ParseError(std::string("METIS: ") + e.what());
  }
  if (g.num_edges() != m || g.adjacency().size() % 2 != 0) {
    throw ParseError("METIS header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(g.num_edges()));
  }
  return g;
}

Graph parse_metis(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_metis(in);
}

Graph read_metis_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  return parse_metis(in);
}

void write_metis(const Graph &g, std::ostream &out) {
  const bool weighted = !g.is_unit_weighted();
  out << g.num_vertices() << ' ' << g.num_edges();
  if (weighted) {
    out << " 001";
  }
  out << '\n';
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    bool first = true;
    for (const auto &nb : g.neighbors(u)) {
      out << (first ? "" : " ") << nb.target + 1;
      if (weighted) {
        out << ' ' << nb.weight;
      }
      first = false;
    }
    out << '\n';
  }
}

std::string to_metis(const Graph &g) {
  std::ostringstream out;
  write_metis(g, out);
  return out.str();
}

void write_metis_file(const Graph &g, const std::string &path) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write '" + path + "'");
  }
  write_metis(g, out);
}

std::vector<std::uint32_t> parse_id_list(std::istream &in) {
  std::vector<std::uint32_t> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line) || is_comment(line)) {
      continue;
    }
    const auto values = tokens_of(line, line_no);
    if (values.size() != 1 || values[0] < 0 || values[0] > 0xFFFFFFFFLL) {
      throw ParseError("line " + std::to_string(line_no) + ": expected one id");
    }
    ids.push_back(static_cast<std::uint32_t>(values[0]));
  }
  return ids;
}

std::vector<std::uint32_t> read_id_list_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  return parse_id_list(in);
}

void write_id_list(std::span<const std::uint32_t> ids, std::ostream &out) {
  for (const auto id : ids) {
    out << id << '\n';
  }
}

void write_id_list_file(std::span<const std::uint32_t> ids, const std::string &path) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write '" + path + "'");
  }
  write_id_list(ids, out);
}

Partition read_partition_file(const std::string &path) {
  Partition p;
  p.block = read_id_list_file(path);
  for (const auto b : p.block) {
    p.k = std::max(p.k, b + 1);
  }
  return p;
}

} // namespace cubemap
