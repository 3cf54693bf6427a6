// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cubemap/bench.hpp"
#include "cubemap/cli.hpp"
#include "cubemap/errors.hpp"
#include "cubemap/labeling.hpp"
#include "cubemap/mapping.hpp"
#include "cubemap/metis_io.hpp"
#include "cubemap/objective.hpp"
#include "cubemap/pcube.hpp"
#include "cubemap/timer.hpp"
#include "cubemap/topology.hpp"

namespace py = pybind11;
using namespace cubemap;

namespace {

Partition to_partition(const std::vector<BlockId> &blocks) {
  Partition p;
  p.block = blocks;
  for (const auto b : blocks) {
    p.k = std::max(p.k, b + 1);
  }
  return p;
}

py::dict objective_dict(const ObjectiveValue &v) {
  py::dict d;
  d["coco"] = v.coco;
  d["div"] = v.div;
  d["coco_plus"] = v.coco_plus;
  d["edge_cut"] = v.edge_cut;
  d["balance_eps"] = v.balance_eps;
  return d;
}

} // namespace

PYBIND11_MODULE(_cubemap, m) {
  m.doc() = "Partial-cube labeling and label-swapping mapping enhancement";

  static py::exception<Error> error(m, "CubemapError");
  static py::exception<NotPartialCube> not_pcube(m, "NotPartialCube", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (const NotPartialCube &e) {
      py::list witness;
      for (const auto &[a, b] : e.witness()) {
        witness.append(py::make_tuple(a, b));
      }
      py::tuple args = py::make_tuple(e.what(), to_string(e.reason()), witness);
      PyErr_SetObject(not_pcube.ptr(), args.ptr());
    } catch (const Error &e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def_static(
          "from_edges",
          [](VertexId n, const std::vector<std::tuple<VertexId, VertexId, Weight>> &edges) {
            std::vector<WeightedEdge> list;
            list.reserve(edges.size());
            for (const auto &[u, v, w] : edges) {
              list.push_back({u, v, w});
            }
            return Graph::from_edges(n, list);
          },
          py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("total_weight", &Graph::total_weight)
      .def("edges",
           [](const Graph &g) {
             std::vector<std::tuple<VertexId, VertexId, Weight>> out;
             for (const auto &e : g.edges()) {
               out.emplace_back(e.u, e.v, e.weight);
             }
             return out;
           })
      .def("neighbors", [](const Graph &g, VertexId u) {
        std::vector<std::pair<VertexId, Weight>> out;
        for (const auto &nb : g.neighbors(u)) {
          out.emplace_back(nb.target, nb.weight);
        }
        return out;
      });

  py::class_<PcubeLabeling>(m, "PcubeLabeling")
      .def_readonly("dim", &PcubeLabeling::dim)
      .def_readonly("labels", &PcubeLabeling::labels)
      .def_readonly("edges", &PcubeLabeling::edges)
      .def_readonly("class_of_edge", &PcubeLabeling::class_of_edge)
      .def("to_json", [](const PcubeLabeling &l) { return labeling_to_json(l); });

  m.def("parse_metis", [](const std::string &text) { return parse_metis(text); });
  m.def("to_metis", &to_metis);
  m.def("generate_topology",
        [](const std::string &spec) { return generate_topology(TopologySpec::parse(spec)); });
  m.def(
      "random_geometric_graph",
      [](VertexId n, double avg_degree, std::uint64_t seed) {
        Rng rng(seed);
        return random_geometric_graph(n, avg_degree, rng);
      },
      py::arg("n"), py::arg("avg_degree") = 8.0, py::arg("seed") = 0);
  m.def("bfs_all_pairs", [](const Graph &g) {
    const auto dist = bfs_all_pairs(g);
    std::vector<std::vector<std::uint32_t>> rows;
    for (VertexId u = 0; u < dist.size(); ++u) {
      const auto r = dist.row(u);
      rows.emplace_back(r.begin(), r.end());
    }
    return rows;
  });
  m.def("label_partial_cube", [](const Graph &g) { return label_partial_cube(g); });
  m.def("verify_isometry",
        [](const Graph &g, const PcubeLabeling &l) { return verify_isometry(g, l); });
  m.def("dim_ga", [](unsigned dim_gp, const std::vector<std::size_t> &sizes) {
    return dim_ga(dim_gp, sizes);
  });
  m.def("contract_blocks", [](const Graph &g, const std::vector<BlockId> &blocks) {
    return contract_blocks(g, to_partition(blocks));
  });
  m.def(
      "grow_partition",
      [](const Graph &g, BlockId k, double eps, std::uint64_t seed) {
        Rng rng(seed);
        return grow_partition(g, k, eps, rng).block;
      },
      py::arg("graph"), py::arg("k"), py::arg("eps") = 0.03, py::arg("seed") = 0);
  m.def(
      "balance_check",
      [](const std::vector<BlockId> &blocks, BlockId k, double eps) {
        return balance_check(Partition{blocks, k}, eps);
      },
      py::arg("blocks"), py::arg("k"), py::arg("eps") = 0.03);
  m.def("identity_mapping", [](const std::vector<BlockId> &blocks, VertexId num_pes) {
    Partition p{blocks, num_pes};
    return identity_mapping(p, num_pes);
  });
  m.def("greedy_allc", [](const Graph &gc, const Graph &gp) {
    return greedy_allc(gc, bfs_all_pairs(gp));
  });
  m.def("greedy_min", [](const Graph &gc, const Graph &gp) {
    return greedy_min(gc, bfs_all_pairs(gp));
  });
  m.def("coco", [](const Graph &ga, const std::vector<VertexId> &mapping, const Graph &gp) {
    return coco(ga, mapping, bfs_all_pairs(gp));
  });
  m.def("edge_cut", [](const Graph &ga, const std::vector<VertexId> &mapping) {
    return edge_cut(ga, std::span<const VertexId>(mapping));
  });
  m.def(
      "run_timer",
      [](const Graph &ga, const PcubeLabeling &pl, const std::vector<VertexId> &mapping,
         std::uint32_t hierarchies, std::uint64_t seed) {
        TimerConfig cfg;
        cfg.n_hierarchies = hierarchies;
        cfg.seed = seed;
        TimerResult result;
        {
          py::gil_scoped_release release;
          result = run_timer(ga, pl, mapping, cfg);
        }
        py::dict d;
        d["mapping"] = result.mapping;
        d["initial"] = objective_dict(result.initial);
        d["final"] = objective_dict(result.final);
        d["dim_ga"] = result.state.layout().dim_ga;
        py::list trace;
        for (const auto &r : result.trace) {
          py::dict rec;
          rec["index"] = r.index;
          rec["coco"] = r.coco;
          rec["div"] = r.div;
          rec["coco_plus"] = r.coco_plus;
          rec["swaps"] = r.swaps;
          rec["accepted"] = r.accepted;
          rec["millis"] = r.millis;
          trace.append(rec);
        }
        d["trace"] = trace;
        return d;
      },
      py::arg("ga"), py::arg("labeling"), py::arg("mapping"), py::arg("hierarchies") = 50,
      py::arg("seed") = 0);
  m.def("aggregate_json", [](const std::vector<py::dict> &runs) {
    std::vector<RunRecord> records;
    for (const auto &d : runs) {
      RunRecord r;
      r.instance = d["instance"].cast<std::string>();
      r.coco_before = d["coco_before"].cast<double>();
      r.coco_after = d["coco_after"].cast<double>();
      r.cut_before = d["cut_before"].cast<double>();
      r.cut_after = d["cut_after"].cast<double>();
      r.time_before = d["time_before"].cast<double>();
      r.time_after = d["time_after"].cast<double>();
      records.push_back(r);
    }
    return report_to_json(aggregate(records), -1);
  });
  m.def("cli", [](const std::vector<std::string> &args) {
    std::vector<const char *> argv{"cubemap"};
    for (const auto &a : args) {
      argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
