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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vicinal/iteration.hpp"
#include "vicinal/json_io.hpp"
#include "vicinal/properties.hpp"
#include "vicinal/resolvent.hpp"
#include "vicinal/sphere.hpp"

namespace vicinal {

/// Process exit statuses of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIoError = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitSolverError = 3;
inline constexpr int kExitStrictViolation = 4;

/// Fully resolved description of one run. Mapping and functional
/// descriptors are stored in their expanded JSON form, so emitting and
/// re-parsing a config is the identity.
struct ExperimentConfig {
  int schema_version = kSchemaVersion;
  std::string command;
  AdmissibleCap cap = default_cap();
  /// Anchor and radius used to expand shorthand descriptors.
  std::optional<SpherePoint> anchor;
  std::optional<double> radius;
  std::optional<Json> mapping;
  std::optional<Json> functional;
  std::optional<SpherePoint> point;
  std::optional<SpherePoint> x0;
  std::optional<SpherePoint> reference;
  std::optional<SpherePoint> fixed_point;
  std::vector<std::string> properties;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  double tol = kDefaultResolventTol;
  double stop_tol = kDefaultStopTol;
  double residual_tol = kDefaultResidualTolerance;
  int max_iter = kDefaultMaxIter;
  double kappa = 1.0;
  std::vector<SpherePoint> points;
  std::optional<std::size_t> tail_start;
  double example_r = 0.6;
  double example_delta = 0.5;
  std::string format = "json";
  std::optional<std::string> out_path;
  std::optional<std::string> emit_samples;
  bool strict = false;

  /// The cap centred at e_0 in R^3 with radius 0.6.
  static AdmissibleCap default_cap();
};

Json config_to_json(const ExperimentConfig& config);

/// Missing fields take their defaults. Points may be unit arrays, "center"
/// or comma-separated coordinates (normalized). "mapping" and "functional"
/// may be a bare kind name, expanded from anchor, radius, example and tol.
/// "points" may be an array or the path of a JSON file holding an array, a
/// trace or a run output with a trace. Throws ConfigError on invalid input.
ExperimentConfig config_from_json(const Json& j);

/// Executes one command and writes its JSON (or CSV) artifact to `out` or
/// to the configured path. Failures are reported on `err` as a JSON error
/// record and mapped to the kExit* statuses.
int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (command, --config, and per-field flags overriding config
/// file fields), then calls run. "--config -" reads the config from `in`.
int main_with_args(int argc, const char* const* argv, std::istream& in, std::ostream& out,
                   std::ostream& err);

}  // namespace vicinal
