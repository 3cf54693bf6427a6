// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#include "cubemap/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cubemap/bench.hpp"
#include "cubemap/errors.hpp"
#include "cubemap/labeling.hpp"
#include "cubemap/mapping.hpp"
#include "cubemap/metis_io.hpp"
#include "cubemap/objective.hpp"
#include "cubemap/pcube.hpp"
#include "cubemap/timer.hpp"
#include "cubemap/topology.hpp"
#include "json.hpp"

namespace cubemap {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

/// Malformed command line content detected after CLI11 parsing.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

TopologySpec parse_spec(const std::string &text) {
  try {
    return TopologySpec::parse(text);
  } catch (const ParseError &e) {
    throw UsageError(e.what());
  }
}

bool ends_with(const std::string &s, const std::string &suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// Processor graph and its labeling. A "file:" spec pointing at a .json file
/// is read as a labeled topology.
struct Topology {
  Graph graph;
  PcubeLabeling labeling;
};

Topology load_topology(const std::string &text) {
  const auto spec = parse_spec(text);
  if (spec.kind == TopologyKind::file && ends_with(spec.path, ".json")) {
    std::ifstream in(spec.path);
    if (!in) {
      throw ParseError("cannot open '" + spec.path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto [g, lab] = labeling_from_json(buffer.str());
    return {std::move(g), std::move(lab)};
  }
  Topology t;
  t.graph = generate_topology(spec);
  t.labeling = label_partial_cube(t.graph);
  return t;
}

json objective_json(const ObjectiveValue &v) {
  return {{"coco", v.coco},
          {"div", v.div},
          {"coco_plus", v.coco_plus},
          {"edge_cut", v.edge_cut},
          {"balance_eps", v.balance_eps}};
}

json not_partial_cube_json(const NotPartialCube &e) {
  auto witness = json::array();
  for (const auto &[a, b] : e.witness()) {
    witness.push_back({a, b});
  }
  return {{"error", "NotPartialCube"}, {"reason", to_string(e.reason())}, {"witness", witness}};
}

void emit(std::ostream &out, const std::string &path, const std::string &content) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(path);
  if (!file) {
    throw ParseError("cannot write '" + path + "'");
  }
  file << content;
}

std::string ids_text(std::span<const std::uint32_t> ids) {
  std::ostringstream s;
  write_id_list(ids, s);
  return s.str();
}

struct Options {
  std::string spec;
  std::string graph;
  std::string partition;
  std::string mapping;
  std::string topology;
  std::string output;
  std::string trace;
  std::string labels_csv;
  std::string csv;
  std::string runs_path;
  std::string init = "identity";
  std::vector<std::string> graphs;
  std::vector<unsigned> rgg;
  std::vector<double> baseline_seconds;
  double rgg_degree = 8.0;
  unsigned k = 0;
  double eps = 0.03;
  std::uint64_t seed = 0;
  std::uint32_t hierarchies = 50;
  unsigned repeats = 5;
  bool allow_empty = false;
  bool no_timing = false;
};

int cmd_topo_gen(const Options &o, std::ostream &out) {
  const auto spec = parse_spec(o.spec);
  const Graph g = generate_topology(spec);
  emit(out, o.output, to_metis(g));
  if (!o.output.empty()) {
    out << json{{"topology", spec.to_string()}, {"n", g.num_vertices()}, {"m", g.num_edges()}}.dump()
        << '\n';
  }
  return kExitOk;
}

int cmd_topo_label(const Options &o, std::ostream &out, std::ostream &err) {
  try {
    const auto t = load_topology(o.spec);
    emit(out, o.output, labeling_to_json(t.labeling) + "\n");
    return kExitOk;
  } catch (const NotPartialCube &e) {
    err << not_partial_cube_json(e).dump() << '\n';
    return kExitDomain;
  }
}

int cmd_topo_check(const Options &o, std::ostream &out) {
  json report{{"topology", o.spec}};
  try {
    const auto t = load_topology(o.spec);
    report["partial_cube"] = true;
    report["n"] = t.graph.num_vertices();
    report["m"] = t.graph.num_edges();
    report["dim"] = t.labeling.dim;
    report["isometric"] = verify_isometry(t.graph, t.labeling);
  } catch (const NotPartialCube &e) {
    report["partial_cube"] = false;
    const auto detail = not_partial_cube_json(e);
    report["reason"] = detail["reason"];
    report["witness"] = detail["witness"];
  }
  emit(out, o.output, report.dump() + "\n");
  return kExitOk;
}

int cmd_map(const std::string &method, const Options &o, std::ostream &out) {
  const auto t = load_topology(o.topology);
  const Partition p = read_partition_file(o.partition);
  Mapping mapping;
  if (method == "identity") {
    mapping = identity_mapping(p, t.labeling);
  } else {
    const Graph ga = read_metis_file(o.graph);
    validate_partition(ga, p, true);
    const Graph gc = contract_blocks(ga, p);
    const auto dist = bfs_all_pairs(t.graph);
    const auto assignment = method == "greedy-min" ? greedy_min(gc, dist) : greedy_allc(gc, dist);
    mapping = compose(p, assignment);
  }
  emit(out, o.output, ids_text(mapping));
  if (!o.output.empty()) {
    out << json{{"method", method}, {"vertices", mapping.size()}}.dump() << '\n';
  }
  return kExitOk;
}

int cmd_partition_grow(const Options &o, std::ostream &out) {
  const Graph ga = read_metis_file(o.graph);
  Rng rng(o.seed);
  const Partition p = grow_partition(ga, o.k, o.eps, rng);
  emit(out, o.output, ids_text(p.block));
  if (!o.output.empty()) {
    out << json{{"k", p.k},
                {"edge_cut", edge_cut(ga, p)},
                {"balanced", balance_check(p, o.eps)},
                {"balance_eps", achieved_imbalance(p)}}
               .dump()
        << '\n';
  }
  return kExitOk;
}

int cmd_enhance(const Options &o, std::ostream &out) {
  const auto t = load_topology(o.topology);
  const Graph ga = read_metis_file(o.graph);
  const auto mapping = read_id_list_file(o.mapping);
  TimerConfig cfg;
  cfg.n_hierarchies = o.hierarchies;
  cfg.seed = o.seed;
  cfg.extend.allow_empty_pes = o.allow_empty;
  const auto start = Clock::now();
  const auto result = run_timer(ga, t.labeling, mapping, cfg);
  const double elapsed = seconds_since(start);

  if (!o.trace.empty()) {
    emit(out, o.trace, trace_to_jsonl(result.trace, !o.no_timing));
  }
  if (!o.labels_csv.empty()) {
    emit(out, o.labels_csv, labels_to_csv(result.state));
  }
  std::size_t accepted = 0;
  for (const auto &r : result.trace) {
    accepted += r.accepted ? 1 : 0;
  }
  json report{{"seed", o.seed},
              {"hierarchies", o.hierarchies},
              {"accepted", accepted},
              {"dim_gp", result.state.layout().dim_gp},
              {"dim_ga", result.state.layout().dim_ga},
              {"initial", objective_json(result.initial)},
              {"final", objective_json(result.final)}};
  if (!o.no_timing) {
    report["millis"] = elapsed * 1e3;
  }
  if (o.output.empty()) {
    report["mapping"] = result.mapping;
  } else {
    emit(out, o.output, ids_text(result.mapping));
  }
  out << report.dump() << '\n';
  return kExitOk;
}

int cmd_eval(const Options &o, std::ostream &out) {
  const auto spec = parse_spec(o.topology);
  const Graph gp = spec.kind == TopologyKind::file && ends_with(spec.path, ".json")
                       ? load_topology(o.topology).graph
                       : generate_topology(spec);
  const Graph ga = read_metis_file(o.graph);
  const auto mapping = read_id_list_file(o.mapping);
  if (mapping.size() != ga.num_vertices()) {
    throw InvalidArgument("mapping size differs from vertex count");
  }
  for (const auto pe : mapping) {
    if (pe >= gp.num_vertices()) {
      throw InvalidArgument("mapping refers to PE " + std::to_string(pe) + " out of range");
    }
  }
  const auto dist = bfs_all_pairs(gp);
  Partition p{mapping, gp.num_vertices()};
  const auto sizes = p.block_sizes();
  json report{{"n", ga.num_vertices()},
              {"m", ga.num_edges()},
              {"pes", gp.num_vertices()},
              {"coco", coco(ga, mapping, dist)},
              {"edge_cut", edge_cut(ga, p)},
              {"max_block", sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end())},
              {"balance_eps", achieved_imbalance(p)}};
  emit(out, o.output, report.dump() + "\n");
  return kExitOk;
}

int cmd_bench(const Options &o, std::ostream &out) {
  const auto t = load_topology(o.topology);
  const auto dist = bfs_all_pairs(t.graph);
  const VertexId num_pes = t.graph.num_vertices();
  const BlockId k = o.k == 0 ? num_pes : o.k;
  if (k != num_pes) {
    throw UsageError("bench maps one block per PE; --k must equal the PE count");
  }

  struct Instance {
    std::string name;
    Graph graph;
  };
  std::vector<Instance> instances;
  for (const auto &path : o.graphs) {
    instances.push_back({path, read_metis_file(path)});
  }
  Rng instance_rng(o.seed ^ 0x5eedULL);
  for (const unsigned n : o.rgg) {
    instances.push_back({"rgg" + std::to_string(n) + "_" + std::to_string(instances.size()),
                         random_geometric_graph(n, o.rgg_degree, instance_rng)});
  }
  if (instances.empty()) {
    throw UsageError("bench needs --graph or --rgg instances");
  }
  if (!o.baseline_seconds.empty() && o.baseline_seconds.size() != instances.size()) {
    throw UsageError("--baseline-seconds needs one value per instance");
  }

  std::vector<RunRecord> runs;
  std::string trace_lines;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto &inst = instances[i];
    for (unsigned r = 0; r < o.repeats; ++r) {
      const std::uint64_t seed = Rng::mix(o.seed + r);
      const auto start = Clock::now();
      Rng rng(seed);
      const Partition p = grow_partition(inst.graph, k, o.eps, rng);
      Mapping mapping;
      if (o.init == "identity") {
        mapping = identity_mapping(p, num_pes);
      } else {
        const Graph gc = contract_blocks(inst.graph, p);
        mapping = compose(p, o.init == "greedy-min" ? greedy_min(gc, dist) : greedy_allc(gc, dist));
      }
      const double init_seconds = seconds_since(start);

      TimerConfig cfg;
      cfg.n_hierarchies = o.hierarchies;
      cfg.seed = seed;
      const auto timer_start = Clock::now();
      const auto result = run_timer(inst.graph, t.labeling, mapping, cfg);
      const double timer_seconds = seconds_since(timer_start);

      RunRecord rec;
      rec.instance = inst.name;
      rec.topology = o.topology;
      rec.seed = seed;
      rec.coco_before = static_cast<double>(coco(inst.graph, mapping, dist));
      rec.coco_after = static_cast<double>(coco(inst.graph, result.mapping, dist));
      rec.cut_before = static_cast<double>(edge_cut(inst.graph, std::span<const VertexId>(mapping)));
      rec.cut_after = static_cast<double>(result.final.edge_cut);
      rec.time_before = o.baseline_seconds.empty() ? init_seconds : o.baseline_seconds[i];
      rec.time_after = timer_seconds;
      runs.push_back(rec);
    }
  }

  const auto report = aggregate(runs);
  if (!o.csv.empty()) {
    emit(out, o.csv, report_to_csv(report));
  }
  json doc;
  doc["topology"] = o.topology;
  doc["init"] = o.init;
  doc["hierarchies"] = o.hierarchies;
  doc["repeats"] = o.repeats;
  doc["eps"] = o.eps;
  auto run_list = json::array();
  for (const auto &r : runs) {
    run_list.push_back({{"instance", r.instance},
                        {"seed", r.seed},
                        {"coco_before", r.coco_before},
                        {"coco_after", r.coco_after},
                        {"cut_before", r.cut_before},
                        {"cut_after", r.cut_after},
                        {"time_before", r.time_before},
                        {"time_after", r.time_after}});
  }
  doc["runs"] = std::move(run_list);
  doc["report"] = json::parse(report_to_json(report));
  emit(out, o.output, doc.dump(2) + "\n");
  return kExitOk;
}

} // namespace

int cli_dispatch(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"cubemap: partial-cube labels and multi-hierarchical label swapping for "
               "task-to-processor mappings"};
  app.require_subcommand(1);
  Options o;
  if (const char *env = std::getenv("CUBEMAP_SEED")) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception &) {
      err << "CUBEMAP_SEED is not an unsigned integer\n";
      return kExitUsage;
    }
  }

  auto *topo = app.add_subcommand("topo", "Processor topologies")->require_subcommand(1);
  auto *topo_gen = topo->add_subcommand("gen", "Write a topology as METIS");
  auto *topo_label = topo->add_subcommand("label", "Partial-cube labeling as JSON");
  auto *topo_check = topo->add_subcommand("check", "Report whether a topology is a partial cube");
  for (auto *sub : {topo_gen, topo_label, topo_check}) {
    sub->add_option("spec", o.spec, "grid2d:AxB, grid3d:AxBxC, torus2d/3d, hypercube:D, file:PATH")
        ->required();
    sub->add_option("-o,--output", o.output);
  }

  auto *map = app.add_subcommand("map", "Initial mappings")->require_subcommand(1);
  auto *map_identity = map->add_subcommand("identity", "Block i to PE i");
  auto *map_gmin = map->add_subcommand("greedy-min", "Greedy construction, single-best scoring");
  auto *map_gallc = map->add_subcommand("greedy-allc", "Greedy construction, total scoring");
  for (auto *sub : {map_identity, map_gmin, map_gallc}) {
    sub->add_option("--partition", o.partition)->required();
    sub->add_option("--topology", o.topology)->required();
    sub->add_option("-o,--output", o.output);
  }
  map_gmin->add_option("--graph", o.graph)->required();
  map_gallc->add_option("--graph", o.graph)->required();

  auto *part = app.add_subcommand("partition", "Partitioning")->require_subcommand(1);
  auto *grow = part->add_subcommand("grow", "BFS-grown balanced partition");
  grow->add_option("--graph", o.graph)->required();
  grow->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
  grow->add_option("--eps", o.eps)->check(CLI::NonNegativeNumber);
  grow->add_option("--seed", o.seed);
  grow->add_option("-o,--output", o.output);

  auto *enhance = app.add_subcommand("enhance", "Improve a mapping by label swapping");
  enhance->add_option("--graph", o.graph)->required();
  enhance->add_option("--topology", o.topology)->required();
  enhance->add_option("--mapping", o.mapping)->required();
  enhance->add_option("--hierarchies", o.hierarchies);
  enhance->add_option("--seed", o.seed);
  enhance->add_option("-o,--output", o.output, "Mapping file to write");
  enhance->add_option("--trace", o.trace, "JSON lines, one record per hierarchy");
  enhance->add_option("--labels-csv", o.labels_csv);
  enhance->add_flag("--allow-empty-pes", o.allow_empty);
  enhance->add_flag("--no-timing", o.no_timing, "Omit wall-clock fields from the output");

  auto *eval = app.add_subcommand("eval", "Evaluate a mapping");
  eval->add_option("--graph", o.graph)->required();
  eval->add_option("--topology", o.topology)->required();
  eval->add_option("--mapping", o.mapping)->required();
  eval->add_option("-o,--output", o.output);

  auto *bench = app.add_subcommand("bench", "Repeated partition, map, enhance runs");
  bench->add_option("--topology", o.topology)->required();
  bench->add_option("--graph", o.graphs);
  bench->add_option("--rgg", o.rgg, "Random geometric instances with this many vertices");
  bench->add_option("--rgg-degree", o.rgg_degree);
  bench->add_option("--init", o.init)
      ->check(CLI::IsMember({"identity", "greedy-min", "greedy-allc"}));
  bench->add_option("--k", o.k);
  bench->add_option("--eps", o.eps)->check(CLI::NonNegativeNumber);
  bench->add_option("--repeats", o.repeats)->check(CLI::PositiveNumber);
  bench->add_option("--hierarchies", o.hierarchies);
  bench->add_option("--seed", o.seed);
  bench->add_option("--baseline-seconds", o.baseline_seconds);
  bench->add_option("--csv", o.csv);
  bench->add_option("-o,--output", o.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*topo_gen) {
      return cmd_topo_gen(o, out);
    }
    if (*topo_label) {
      return cmd_topo_label(o, out, err);
    }
    if (*topo_check) {
      return cmd_topo_check(o, out);
    }
    if (*map_identity) {
      return cmd_map("identity", o, out);
    }
    if (*map_gmin) {
      return cmd_map("greedy-min", o, out);
    }
    if (*map_gallc) {
      return cmd_map("greedy-allc", o, out);
    }
    if (*grow) {
      return cmd_partition_grow(o, out);
    }
    if (*enhance) {
      return cmd_enhance(o, out);
    }
    if (*eval) {
      return cmd_eval(o, out);
    }
    if (*bench) {
      return cmd_bench(o, out);
    }
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotPartialCube &e) {
    err << not_partial_cube_json(e).dump() << '\n';
    return kExitDomain;
  } catch (const Error &e) {
    err << json{{"error", e.what()}}.dump() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

} // namespace cubemap
