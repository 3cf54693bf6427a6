// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <cmath>

#include "cubemap/bench.hpp"
#include "json.hpp"

using namespace cubemap;

namespace {

RunRecord run(const std::string &name, double coco_before, double coco_after) {
  RunRecord r;
  r.instance = name;
  r.topology = "grid2d:16x16";
  r.coco_before = coco_before;
  r.coco_after = coco_after;
  r.cut_before = 10;
  r.cut_after = 10;
  r.time_before = 2;
  r.time_after = 2;
  return r;
}

} // namespace

TEST_SUITE("aggregate") {
  TEST_CASE("no change") {
    const std::vector<RunRecord> runs{run("a", 5, 5), run("a", 7, 7), run("b", 3, 3)};
    const auto report = aggregate(runs);
    REQUIRE(report.instances.size() == 2);
    CHECK(report.coco.mean.geo_mean == 1.0);
    CHECK(report.coco.mean.geo_std == 1.0);
    CHECK(report.time.max.geo_mean == 1.0);
    CHECK(report.cut.min.count == 2);
  }

  TEST_CASE("reciprocal quotients cancel") {
    const std::vector<RunRecord> runs{run("a", 10, 5), run("b", 10, 20)};
    const auto report = aggregate(runs);
    CHECK(report.coco.mean.geo_mean == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.coco.mean.geo_std == doctest::Approx(2.0).epsilon(1e-12));
  }

  TEST_CASE("min mean max quotients") {
    const std::vector<RunRecord> runs{run("a", 100, 50), run("a", 200, 80)};
    const auto report = aggregate(runs);
    REQUIRE(report.instances.size() == 1);
    const auto &q = report.instances[0].coco;
    CHECK(q.min == doctest::Approx(0.5));
    CHECK(q.mean == doctest::Approx(65.0 / 150.0));
    CHECK(q.max == doctest::Approx(0.4));
    CHECK(report.instances[0].runs == 2);
  }

  TEST_CASE("non-positive baseline excluded") {
    const std::vector<RunRecord> runs{run("a", 0, 0), run("b", 4, 2)};
    const auto report = aggregate(runs);
    REQUIRE(report.excluded == std::vector<std::string>{"a"});
    REQUIRE(report.instances.size() == 1);
    CHECK(report.coco.min.geo_mean == doctest::Approx(0.5));
  }

  TEST_CASE("geometric statistics") {
    const std::vector<double> values{0.5, 2.0, 4.0, 0.25};
    const auto g = geometric_stats(values);
    CHECK(g.geo_mean == doctest::Approx(1.0));
    const double l = std::log(2.0);
    CHECK(g.geo_std == doctest::Approx(std::exp(std::sqrt((l * l + l * l + 4 * l * l + 4 * l * l) / 4))));
    CHECK(g.count == 4);
  }

  TEST_CASE("report formats") {
    const std::vector<RunRecord> runs{run("a", 10, 5), run("b", 10, 20)};
    const auto report = aggregate(runs);
    const auto j = nlohmann::json::parse(report_to_json(report));
    CHECK(j["instances"].size() == 2);
    CHECK(j["geometric"].contains("qCo"));
    CHECK(j["excluded"].empty());
    const std::string csv = report_to_csv(report);
    CHECK(csv.rfind("metric,gm_min,gm_mean,gm_max,gsd_min,gsd_mean,gsd_max,instances\n", 0) == 0);
    CHECK(csv.find("\nCo,") != std::string::npos);
  }
}
