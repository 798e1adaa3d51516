// Copyright 2026 The Vicinal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <limits>
#include <sstream>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "vicinal/errors.hpp"
#include "vicinal/json_io.hpp"

using namespace vicinal;

namespace {

AdmissibleCap s2_cap() { return AdmissibleCap(SpherePoint::basis(3, 0), 0.6); }

}  // namespace

TEST(format_double, seventeen_significant_digits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(0.6), "0.59999999999999998");
  EXPECT_EQ(format_double(1e-10), "1e-10");
  for (const double v : {0.1, 1.0 / 3.0, 3.14159265358979, -2.5e-300, 1e300}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

TEST(canonical_dump, sorts_keys_and_nulls_non_finite) {
  Json j;
  j["b"] = 1;
  j["a"] = {{"z", 0.5}, {"y", std::numeric_limits<double>::infinity()}};
  j["c"] = Json::array({true, "s", std::nan("")});
  EXPECT_EQ(canonical_dump(j), R"({"a":{"y":null,"z":0.5},"b":1,"c":[true,"s",null]})");
}

TEST(json_points, round_trip_and_validation) {
  const SpherePoint p = oracle::at_distance(SpherePoint::basis(3, 0), oracle::unit(3, 1), 0.37);
  const Json j = point_to_json(p);
  EXPECT_EQ(point_from_json(Json::parse(canonical_dump(j))), p);
  EXPECT_THROW(point_from_json(Json::array({1.0, 1.0, 0.0})), ConfigError);
  EXPECT_THROW(point_from_json(Json("x")), ConfigError);
}

TEST(json_functionals, catalog_round_trips) {
  const AdmissibleCap cap = s2_cap();
  for (const auto& entry : oracle::catalog(cap)) {
    const Json j = functional_to_json(entry.f);
    const ConvexFunctional back = functional_from_json(Json::parse(canonical_dump(j)));
    EXPECT_EQ(canonical_dump(functional_to_json(back)), canonical_dump(j)) << entry.name;
    for (const auto& y : sample_points(cap, 20, 1)) {
      const ExtendedReal a = evaluate(entry.f, y);
      const ExtendedReal b = evaluate(back, y);
      ASSERT_EQ(a.is_finite(), b.is_finite());
      if (a.is_finite()) EXPECT_EQ(a.value(), b.value());
    }
  }
  EXPECT_THROW(functional_from_json(Json{{"kind", "nope"}}), ConfigError);
}

TEST(json_mappings, round_trip_and_agree_pointwise) {
  const AdmissibleCap cap = s2_cap();
  std::vector<MappingHandle> maps = {
      MappingHandle::identity(cap),
      MappingHandle::projection_onto(Ball(cap.center(), 0.3), cap),
      MappingHandle::resolvent_of(oracle::catalog(cap)[2].f, cap),
      make_example_3_2(cap.center(), 0.6, 0.5)};
  maps.push_back(MappingHandle::composition({maps[1], maps[2]}));
  for (const auto& T : maps) {
    const Json j = mapping_to_json(T);
    const MappingHandle back = mapping_from_json(Json::parse(canonical_dump(j)), cap);
    EXPECT_EQ(canonical_dump(mapping_to_json(back)), canonical_dump(j));
    for (const auto& x : sample_points(cap, 10, 2)) EXPECT_EQ(apply(back, x), apply(T, x));
  }
}

TEST(trace_csv, header_and_rows) {
  const AdmissibleCap cap = s2_cap();
  const MappingHandle T = MappingHandle::projection_onto(Ball(cap.center(), 0.2), cap);
  const SpherePoint x0 = oracle::at_distance(cap.center(), oracle::unit(3, 1), 0.5);
  const IterationTrace trace = picard_trace(T, x0, 10, 1e-10, cap.center());
  std::ostringstream out;
  write_trace_csv(out, trace);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "n,step_dist,dist_to_ref,x0,x1,x2");
  std::getline(lines, line);
  EXPECT_EQ(line.substr(0, 3), "0,,");
  std::getline(lines, line);
  EXPECT_EQ(line.substr(0, 2), "1,");
  int rows = 2;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 3);
}

TEST(samples_csv, header_and_quoted_points) {
  const AdmissibleCap cap = s2_cap();
  const MappingHandle T = MappingHandle::identity(cap);
  std::vector<ResidualSample> samples;
  CheckOptions options;
  options.samples = 3;
  check_property(T, Property::kVicinal, options, &samples);
  std::ostringstream out;
  write_samples_csv(out, samples);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "x,y,lhs,rhs,residual");
  std::getline(lines, line);
  EXPECT_EQ(line.front(), '"');
  EXPECT_EQ(Json::parse(line.substr(1, line.find('"', 1) - 1)).size(), 3u);
}

TEST(report_json, carries_every_field) {
  const AdmissibleCap cap = s2_cap();
  CheckOptions options;
  options.samples = 5;
  options.seed = 9;
  const PropertyReport r =
      check_property(MappingHandle::identity(cap), Property::kSphericallyNonspreading, options);
  const Json j = report_to_json(r);
  EXPECT_EQ(j["property"], "spherically-nonspreading");
  EXPECT_EQ(j["samples"], 5u);
  EXPECT_EQ(j["seed"], 9u);
  EXPECT_EQ(j["violations"], 0u);
  EXPECT_TRUE(j["worst_pair"].is_object());
}
