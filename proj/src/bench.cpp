// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#include "cubemap/bench.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "cubemap/errors.hpp"
#include "json.hpp"

namespace cubemap {

MinMeanMax min_mean_max(std::span<const double> values) {
  if (values.empty()) {
    throw InvalidArgument("min_mean_max of an empty sample");
  }
  MinMeanMax s;
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  double sum = 0;
  for (const double v : values) {
    sum += v;
  }
  s.mean = sum / static_cast<double>(values.size());
  return s;
}

GeoStats geometric_stats(std::span<const double> values) {
  GeoStats g;
  double log_sum = 0;
  for (const double v : values) {
    if (v > 0 && std::isfinite(v)) {
      log_sum += std::log(v);
      ++g.count;
    }
  }
  if (g.count == 0) {
    return g;
  }
  const double log_mean = log_sum / static_cast<double>(g.count);
  double sq = 0;
  for (const double v : values) {
    if (v > 0 && std::isfinite(v)) {
      const double d = std::log(v) - log_mean;
      sq += d * d;
    }
  }
  g.geo_mean = std::exp(log_mean);
  g.geo_std = std::exp(std::sqrt(sq / static_cast<double>(g.count)));
  return g;
}

namespace {

bool positive(const MinMeanMax &s) { return s.min > 0 && s.mean > 0 && s.max > 0; }

MinMeanMax quotient(const MinMeanMax &after, const MinMeanMax &before) {
  return {after.min / before.min, after.mean / before.mean, after.max / before.max};
}

MetricAggregate aggregate_metric(const std::vector<InstanceQuotients> &rows,
                                 MinMeanMax InstanceQuotients::*field) {
  std::vector<double> mins;
  std::vector<double> means;
  std::vector<double> maxs;
  for (const auto &row : rows) {
    mins.push_back((row.*field).min);
    means.push_back((row.*field).mean);
    maxs.push_back((row.*field).max);
  }
  return {geometric_stats(mins), geometric_stats(means), geometric_stats(maxs)};
}

nlohmann::ordered_json to_json(const MinMeanMax &s) {
  return {{"min", s.min}, {"mean", s.mean}, {"max", s.max}};
}

nlohmann::ordered_json to_json(const GeoStats &g) {
  return {{"geo_mean", g.geo_mean}, {"geo_std", g.geo_std}, {"count", g.count}};
}

nlohmann::ordered_json to_json(const MetricAggregate &m) {
  return {{"min", to_json(m.min)}, {"mean", to_json(m.mean)}, {"max", to_json(m.max)}};
}

} // namespace

AggregateReport aggregate(std::span<const RunRecord> runs) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<const RunRecord *>> by_instance;
  for (const auto &r : runs) {
    auto &bucket = by_instance[r.instance];
    if (bucket.empty()) {
      order.push_back(r.instance);
    }
    bucket.push_back(&r);
  }

  AggregateReport report;
  for (const auto &name : order) {
    const auto &bucket = by_instance[name];
    std::vector<double> tb, ta, cb, ca, ob, oa;
    for (const auto *r : bucket) {
      tb.push_back(r->time_before);
      ta.push_back(r->time_after);
      cb.push_back(r->cut_before);
      ca.push_back(r->cut_after);
      ob.push_back(r->coco_before);
      oa.push_back(r->coco_after);
    }
    const auto time_before = min_mean_max(tb);
    const auto cut_before = min_mean_max(cb);
    const auto coco_before = min_mean_max(ob);
    if (!positive(time_before) || !positive(cut_before) || !positive(coco_before)) {
      report.excluded.push_back(name);
      continue;
    }
    InstanceQuotients q;
    q.instance = name;
    q.runs = bucket.size();
    q.time = quotient(min_mean_max(ta), time_before);
    q.cut = quotient(min_mean_max(ca), cut_before);
    q.coco = quotient(min_mean_max(oa), coco_before);
    report.instances.push_back(q);
  }
  report.time = aggregate_metric(report.instances, &InstanceQuotients::time);
  report.cut = aggregate_metric(report.instances, &InstanceQuotients::cut);
  report.coco = aggregate_metric(report.instances, &InstanceQuotients::coco);
  return report;
}

std::string report_to_json(const AggregateReport &report, int indent) {
  nlohmann::ordered_json j;
  auto instances = nlohmann::ordered_json::array();
  for (const auto &q : report.instances) {
    instances.push_back({{"instance", q.instance},
                         {"runs", q.runs},
                         {"qT", to_json(q.time)},
                         {"qCut", to_json(q.cut)},
                         {"qCo", to_json(q.coco)}});
  }
  j["instances"] = std::move(instances);
  j["geometric"] = {
      {"qT", to_json(report.time)}, {"qCut", to_json(report.cut)}, {"qCo", to_json(report.coco)}};
  j["excluded"] = report.excluded;
  return j.dump(indent);
}

std::string report_to_csv(const AggregateReport &report) {
  std::ostringstream out;
  out.precision(17);
  out << "metric,gm_min,gm_mean,gm_max,gsd_min,gsd_mean,gsd_max,instances\n";
  const std::pair<const char *, const MetricAggregate *> rows[] = {
      {"T", &report.time}, {"Cut", &report.cut}, {"Co", &report.coco}};
  for (const auto &[name, m] : rows) {
    out << name << ',' << m->min.geo_mean << ',' << m->mean.geo_mean << ',' << m->max.geo_mean
        << ',' << m->min.geo_std << ',' << m->mean.geo_std << ',' << m->max.geo_std << ','
        << m->mean.count << '\n';
  }
  return out.str();
}

} // namespace cubemap
