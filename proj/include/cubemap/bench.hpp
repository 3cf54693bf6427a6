// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cubemap {

/// Before/after measurements of one enhance run.
struct RunRecord {
  std::string instance;
  std::string topology;
  std::uint64_t seed = 0;
  double coco_before = 0;
  double coco_after = 0;
  double cut_before = 0;
  double cut_after = 0;
  /// Time of the tool that produced the initial mapping (or the external
  /// baseline time when supplied), and of the enhancement, in seconds.
  double time_before = 0;
  double time_after = 0;
  std::string trace_path;
};

struct MinMeanMax {
  double min = 0;
  double mean = 0;
  double max = 0;
};

/// Quotients after/before of min, mean and max for one instance.
struct InstanceQuotients {
  std::string instance;
  MinMeanMax time;
  MinMeanMax cut;
  MinMeanMax coco;
  std::size_t runs = 0;
};

struct GeoStats {
  double geo_mean = 1.0;
  double geo_std = 1.0;
  std::size_t count = 0;
};

struct MetricAggregate {
  GeoStats min;
  GeoStats mean;
  GeoStats max;
};

struct AggregateReport {
  std::vector<InstanceQuotients> instances;
  MetricAggregate time;
  MetricAggregate cut;
  MetricAggregate coco;
  /// Instances dropped because a baseline value was zero or negative.
  std::vector<std::string> excluded;
};

MinMeanMax min_mean_max(std::span<const double> values);

/// Geometric mean and geometric standard deviation (population form,
/// exp of the RMS deviation of the logs). Only positive values contribute.
GeoStats geometric_stats(std::span<const double> values);

/// Groups runs by instance name (first-seen order) and forms the nine
/// quotients per instance and their geometric statistics.
AggregateReport aggregate(std::span<const RunRecord> runs);

std::string report_to_json(const AggregateReport &report, int indent = 2);
/// One row per metric (T, Cut, Co); columns are the min/mean/max geometric
/// means, their geometric deviations and the instance count.
std::string report_to_csv(const AggregateReport &report);

} // namespace cubemap
