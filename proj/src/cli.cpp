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

#include "vicinal/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "vicinal/asymptotic_center.hpp"
#include "vicinal/errors.hpp"
#include "vicinal/functional.hpp"
#include "vicinal/mapping.hpp"

namespace vicinal {

namespace {

const std::vector<std::string> kCommands = {"resolve", "check",  "iterate",
                                            "ppa",     "center", "example-3-2"};

/// Distance from the anchor to the outer witness point, past the jump at pi/8.
constexpr double kWitnessGap = 1e-6;

class IoError : public Error {
 public:
  using Error::Error;
};

template <typename F>
auto as_config_error(F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
}

// ---------------------------------------------------------------------------
// Field readers.

const Json* field(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return nullptr;
  return &j.at(key);
}

const Json& section(const Json& j, const char* key) {
  static const Json kEmpty = Json::object();
  const Json* s = field(j, key);
  if (s == nullptr) return kEmpty;
  if (!s->is_object()) throw ConfigError(std::string(key) + " must be an object");
  return *s;
}

double read_double(const Json& j, const char* key, double fallback) {
  const Json* v = field(j, key);
  if (v == nullptr) return fallback;
  if (!v->is_number()) throw ConfigError(std::string(key) + " must be a number");
  return v->get<double>();
}

std::uint64_t read_unsigned(const Json& j, const char* key, std::uint64_t fallback) {
  const Json* v = field(j, key);
  if (v == nullptr) return fallback;
  if (!v->is_number_unsigned() && !(v->is_number_integer() && v->get<std::int64_t>() >= 0)) {
    throw ConfigError(std::string(key) + " must be a nonnegative integer");
  }
  return v->get<std::uint64_t>();
}

std::string read_string(const Json& j, const char* key, const std::string& fallback) {
  const Json* v = field(j, key);
  if (v == nullptr) return fallback;
  if (!v->is_string()) throw ConfigError(std::string(key) + " must be a string");
  return v->get<std::string>();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream stream(text);
  while (std::getline(stream, current, sep)) {
    const auto first = current.find_first_not_of(" \t");
    const auto last = current.find_last_not_of(" \t");
    parts.push_back(first == std::string::npos ? "" : current.substr(first, last - first + 1));
  }
  return parts;
}

double parse_double(const std::string& text) {
  double value = 0.0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
    throw ConfigError("not a number: '" + text + "'");
  }
  return value;
}

/// "center", "a,b,c" (normalized) or a unit-norm JSON array.
SpherePoint read_point_spec(const Json& j, const AdmissibleCap& cap) {
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    if (text == "center") return cap.center();
    const std::vector<std::string> parts = split(text, ',');
    Eigen::VectorXd v(static_cast<Eigen::Index>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      v(static_cast<Eigen::Index>(i)) = parse_double(parts[i]);
    }
    if (!(v.norm() > 0.0) || !v.allFinite()) {
      throw ConfigError("point '" + text + "' has no direction");
    }
    return SpherePoint::normalized(v);
  }
  return point_from_json(j);
}

std::optional<SpherePoint> read_point(const Json& j, const char* key, const AdmissibleCap& cap) {
  const Json* v = field(j, key);
  if (v == nullptr) return std::nullopt;
  return read_point_spec(*v, cap);
}

Json optional_point_json(const std::optional<SpherePoint>& p) {
  return p ? point_to_json(*p) : Json();
}

Json read_json_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ConfigError("cannot open " + path);
  try {
    return Json::parse(file);
  } catch (const Json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

/// Accepts an array of points, a trace object or a run output with a trace.
std::vector<SpherePoint> read_points(const Json& j, const AdmissibleCap& cap) {
  const Json* source = &j;
  Json loaded;
  if (j.is_string()) {
    loaded = read_json_file(j.get<std::string>());
    source = &loaded;
  }
  if (source->is_object() && source->contains("trace")) source = &source->at("trace");
  if (source->is_object() && source->contains("iterates")) source = &source->at("iterates");
  if (!source->is_array()) throw ConfigError("points must be an array of points");
  std::vector<SpherePoint> points;
  points.reserve(source->size());
  for (const auto& p : *source) points.push_back(read_point_spec(p, cap));
  return points;
}

// ---------------------------------------------------------------------------
// Descriptor expansion.

/// Rewrites point shorthands ("center", "a,b,c") inside a descriptor as
/// coordinate arrays.
void resolve_point_fields(Json& j, const AdmissibleCap& cap) {
  if (j.is_array()) {
    for (auto& item : j) resolve_point_fields(item, cap);
    return;
  }
  if (!j.is_object()) return;
  for (auto& [key, value] : j.items()) {
    if ((key == "anchor" || key == "center") && value.is_string()) {
      value = point_to_json(read_point_spec(value, cap));
    } else if (key == "anchors" && value.is_array()) {
      for (auto& p : value) {
        if (p.is_string()) p = point_to_json(read_point_spec(p, cap));
      }
    } else {
      resolve_point_fields(value, cap);
    }
  }
}

Json expand_functional(const Json& j, const ExperimentConfig& c) {
  Json descriptor = j;
  if (j.is_string()) {
    std::string kind = j.get<std::string>();
    for (char& ch : kind) {
      if (ch == '_') ch = '-';
    }
    const SpherePoint anchor = c.anchor.value_or(c.cap.center());
    if (kind == "indicator-ball") {
      if (!c.radius) throw ConfigError("indicator-ball needs a radius");
      descriptor = Json{{"kind", kind},
                        {"anchors", Json::array({point_to_json(anchor)})},
                        {"radii", Json::array({*c.radius})}};
    } else if (kind == "pull-to-point" || kind == "neg-cos-dist") {
      descriptor = Json{{"kind", kind}, {"anchors", Json::array({point_to_json(anchor)})}};
    } else {
      throw ConfigError("functional '" + kind + "' needs a full JSON descriptor");
    }
  }
  resolve_point_fields(descriptor, c.cap);
  const ConvexFunctional f = functional_from_json(descriptor);
  as_config_error([&] {
    validate_on(f, c.cap);
    return 0;
  });
  return functional_to_json(f);
}

Json expand_mapping(const Json& j, const ExperimentConfig& c) {
  Json descriptor = j;
  if (j.is_string()) {
    std::string kind = j.get<std::string>();
    for (char& ch : kind) {
      if (ch == '_') ch = '-';
    }
    const SpherePoint anchor = c.anchor.value_or(c.cap.center());
    if (kind == "identity") {
      descriptor = Json{{"kind", kind}};
    } else if (kind == "example-3-2") {
      descriptor = Json{{"kind", kind},
                        {"anchor", point_to_json(anchor)},
                        {"r", c.example_r},
                        {"delta", c.example_delta}};
    } else if (kind == "resolvent") {
      if (!c.functional) throw ConfigError("resolvent mapping needs a functional");
      descriptor = Json{{"kind", kind}, {"functional", *c.functional}, {"tol", c.tol}};
    } else if (kind == "projection") {
      if (!c.radius) throw ConfigError("projection mapping needs a radius");
      descriptor = Json{{"kind", kind},
                        {"ball", {{"center", point_to_json(anchor)}, {"radius", *c.radius}}}};
    } else {
      throw ConfigError("mapping '" + kind + "' needs a full JSON descriptor");
    }
  }
  resolve_point_fields(descriptor, c.cap);
  return mapping_to_json(mapping_from_json(descriptor, c.cap));
}

// ---------------------------------------------------------------------------
// Output.

void emit_text(const std::string& text, const ExperimentConfig& c, std::ostream& out) {
  if (!c.out_path) {
    out << text;
    return;
  }
  std::ofstream file(*c.out_path, std::ios::binary);
  if (!file) throw IoError("cannot write " + *c.out_path);
  file << text;
  if (!file) throw IoError("write failed: " + *c.out_path);
}

void emit_json(const Json& doc, const ExperimentConfig& c, std::ostream& out) {
  emit_text(canonical_dump(doc) + "\n", c, out);
}

Json envelope(const ExperimentConfig& c) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", c.command},
              {"config", config_to_json(c)}};
}

void write_error(std::ostream& err, int code, const std::string& type,
                 const std::string& message) {
  const Json record{{"schema_version", kSchemaVersion},
                    {"error", {{"code", code}, {"type", type}, {"message", message}}}};
  err << canonical_dump(record) << "\n";
}

void write_samples_file(const std::string& path, std::span<const ResidualSample> samples) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write " + path);
  write_samples_csv(file, samples);
}

std::string samples_path(const std::string& base, const std::string& property,
                         std::size_t count) {
  if (count == 1) return base;
  const auto dot = base.rfind('.');
  const auto slash = base.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return base + "." + property;
  }
  return base.substr(0, dot) + "." + property + base.substr(dot);
}

// ---------------------------------------------------------------------------
// Commands. Each returns the number of strict-mode violations.

template <typename T>
const T& require(const std::optional<T>& value, const char* what) {
  if (!value) throw ConfigError(std::string("missing ") + what);
  return *value;
}

std::size_t run_resolve(const ExperimentConfig& c, std::ostream& out) {
  const ConvexFunctional f = functional_from_json(require(c.functional, "functional"));
  const SpherePoint& x = require(c.point, "point");
  if (c.format != "json") throw ConfigError("resolve writes JSON only");
  Json doc = envelope(c);
  doc["result"] = resolvent_result_to_json(resolve(f, c.cap, x, c.tol, c.max_iter));
  emit_json(doc, c, out);
  return 0;
}

std::vector<PropertyReport> check_and_emit_samples(
    const MappingHandle& T, const std::vector<Property>& properties, const ExperimentConfig& c,
    std::vector<std::vector<ResidualSample>>& samples) {
  CheckOptions options;
  options.samples = c.samples;
  options.seed = c.seed;
  options.tolerance = c.residual_tol;
  options.kappa = c.kappa;
  options.fixed_point = c.fixed_point;
  std::vector<PropertyReport> reports = check_properties(T, properties, options, &samples);
  if (c.emit_samples) {
    for (std::size_t i = 0; i < properties.size(); ++i) {
      write_samples_file(samples_path(*c.emit_samples,
                                      std::string(property_name(properties[i])),
                                      properties.size()),
                         samples[i]);
    }
  }
  return reports;
}

std::size_t run_check(const ExperimentConfig& c, std::ostream& out) {
  const MappingHandle T = mapping_from_json(require(c.mapping, "mapping"), c.cap);
  if (c.properties.empty()) throw ConfigError("missing property");
  std::vector<Property> properties;
  for (const auto& name : c.properties) properties.push_back(parse_property(name));
  if (c.format == "csv" && properties.size() != 1) {
    throw ConfigError("csv output takes exactly one property");
  }
  std::vector<std::vector<ResidualSample>> samples;
  const std::vector<PropertyReport> reports = check_and_emit_samples(T, properties, c, samples);
  std::size_t violations = 0;
  Json report_json = Json::array();
  for (const auto& r : reports) {
    violations += r.violations;
    report_json.push_back(report_to_json(r));
  }
  if (c.format == "csv") {
    std::ostringstream text;
    write_samples_csv(text, samples.front());
    emit_text(text.str(), c, out);
  } else {
    Json doc = envelope(c);
    doc["reports"] = report_json;
    emit_json(doc, c, out);
  }
  return violations;
}

void emit_trace(Json doc, const IterationTrace& trace, const ExperimentConfig& c,
                std::ostream& out) {
  if (c.format == "csv") {
    std::ostringstream text;
    write_trace_csv(text, trace);
    emit_text(text.str(), c, out);
    return;
  }
  doc["trace"] = trace_to_json(trace);
  emit_json(doc, c, out);
}

std::size_t run_iterate(const ExperimentConfig& c, std::ostream& out) {
  const MappingHandle T = mapping_from_json(require(c.mapping, "mapping"), c.cap);
  const SpherePoint x0 = c.x0.value_or(sample_point(T.domain(), c.seed));
  const IterationTrace trace = picard_trace(T, x0, c.max_iter, c.stop_tol, c.reference);
  Json doc = envelope(c);
  doc["x0"] = point_to_json(x0);
  emit_trace(std::move(doc), trace, c, out);
  return 0;
}

std::size_t run_ppa(const ExperimentConfig& c, std::ostream& out) {
  const ConvexFunctional f = functional_from_json(require(c.functional, "functional"));
  const SpherePoint x0 = c.x0.value_or(sample_point(c.cap, c.seed));
  const PpaResult result = ppa_run(f, c.cap, x0, c.max_iter, c.stop_tol, c.tol, c.reference);
  Json doc = envelope(c);
  doc["x0"] = point_to_json(x0);
  doc["minimizer"] = point_to_json(result.minimizer);
  doc["objective_value"] = extended_real_to_json(evaluate(f, result.minimizer));
  emit_trace(std::move(doc), result.trace, c, out);
  return 0;
}

std::size_t run_center(const ExperimentConfig& c, std::ostream& out) {
  if (c.points.empty()) throw ConfigError("missing points");
  if (c.format != "json") throw ConfigError("center writes JSON only");
  const std::size_t m = c.tail_start.value_or(c.points.size() / 2);
  const AsymptoticCenterEstimate est = asymptotic_center(c.points, m, c.cap, c.tol);
  Json doc = envelope(c);
  doc["estimate"] = center_to_json(est);
  emit_json(doc, c, out);
  return 0;
}

std::size_t run_example(const ExperimentConfig& c, std::ostream& out) {
  if (c.format != "json") throw ConfigError("example-3-2 writes JSON only");
  const Example32Feasibility feasibility = example_3_2_feasibility(c.example_r, c.example_delta);
  Json doc = envelope(c);
  doc["feasibility"] = feasibility_to_json(feasibility);
  if (!feasibility.feasible) {
    emit_json(doc, c, out);
    throw ConfigError("example parameters are infeasible");
  }
  const SpherePoint anchor = c.anchor.value_or(c.cap.center());
  const MappingHandle T = make_example_3_2(anchor, c.example_r, c.example_delta);
  const std::vector<Property> properties = {Property::kSphericallyNonspreading};
  std::vector<std::vector<ResidualSample>> samples;
  const std::vector<PropertyReport> reports = check_and_emit_samples(T, properties, c, samples);
  const auto [inside, outside] = example_3_2_boundary_pair(T, kWitnessGap);
  const SpherePoint t_inside = apply(T, inside);
  const SpherePoint t_outside = apply(T, outside);
  doc["report"] = report_to_json(reports.front());
  doc["witness"] = Json{{"gap", kWitnessGap},
                        {"x_inside", point_to_json(inside)},
                        {"x_outside", point_to_json(outside)},
                        {"t_inside", point_to_json(t_inside)},
                        {"t_outside", point_to_json(t_outside)},
                        {"input_distance", dist(inside, outside)},
                        {"image_distance", dist(t_inside, t_outside)},
                        {"expected_jump", c.example_delta * kPi / 8}};
  emit_json(doc, c, out);
  return reports.front().violations;
}

std::size_t dispatch(const ExperimentConfig& c, std::ostream& out) {
  if (c.command == "resolve") return run_resolve(c, out);
  if (c.command == "check") return run_check(c, out);
  if (c.command == "iterate") return run_iterate(c, out);
  if (c.command == "ppa") return run_ppa(c, out);
  if (c.command == "center") return run_center(c, out);
  if (c.command == "example-3-2") return run_example(c, out);
  throw ConfigError(c.command.empty() ? "missing command" : "unknown command: " + c.command);
}

}  // namespace

AdmissibleCap ExperimentConfig::default_cap() {
  return AdmissibleCap(SpherePoint::basis(3, 0), 0.6);
}

Json config_to_json(const ExperimentConfig& c) {
  Json points = Json::array();
  for (const auto& p : c.points) points.push_back(point_to_json(p));
  return Json{
      {"schema_version", c.schema_version},
      {"command", c.command},
      {"cap", cap_to_json(c.cap)},
      {"anchor", optional_point_json(c.anchor)},
      {"radius", c.radius ? Json(*c.radius) : Json()},
      {"mapping", c.mapping ? *c.mapping : Json()},
      {"functional", c.functional ? *c.functional : Json()},
      {"point", optional_point_json(c.point)},
      {"x0", optional_point_json(c.x0)},
      {"reference", optional_point_json(c.reference)},
      {"fixed_point", optional_point_json(c.fixed_point)},
      {"property", c.properties},
      {"sampling", {{"count", c.samples}, {"seed", c.seed}}},
      {"tolerances", {{"tol", c.tol}, {"stop_tol", c.stop_tol}, {"residual", c.residual_tol}}},
      {"max_iter", c.max_iter},
      {"kappa", c.kappa},
      {"points", points},
      {"tail_start", c.tail_start ? Json(*c.tail_start) : Json()},
      {"example", {{"r", c.example_r}, {"delta", c.example_delta}}},
      {"output",
       {{"format", c.format},
        {"path", c.out_path ? Json(*c.out_path) : Json()},
        {"emit_samples", c.emit_samples ? Json(*c.emit_samples) : Json()}}},
      {"strict", c.strict},
  };
}

ExperimentConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  ExperimentConfig c;
  const std::uint64_t version = read_unsigned(j, "schema_version", kSchemaVersion);
  if (version != static_cast<std::uint64_t>(kSchemaVersion)) {
    throw ConfigError("unsupported schema_version " + std::to_string(version));
  }
  c.command = read_string(j, "command", "");
  if (!c.command.empty() &&
      std::find(kCommands.begin(), kCommands.end(), c.command) == kCommands.end()) {
    throw ConfigError("unknown command: " + c.command);
  }
  if (const Json* cap = field(j, "cap")) {
    const AdmissibleCap fallback = ExperimentConfig::default_cap();
    const SpherePoint center =
        cap->contains("center") ? read_point_spec(cap->at("center"), fallback) : fallback.center();
    const double radius = read_double(*cap, "radius", fallback.radius());
    c.cap = as_config_error([&] { return AdmissibleCap(center, radius); });
  }
  c.anchor = read_point(j, "anchor", c.cap);
  if (const Json* radius = field(j, "radius")) {
    if (!radius->is_number()) throw ConfigError("radius must be a number");
    c.radius = radius->get<double>();
  }
  c.point = read_point(j, "point", c.cap);
  c.x0 = read_point(j, "x0", c.cap);
  c.reference = read_point(j, "reference", c.cap);
  c.fixed_point = read_point(j, "fixed_point", c.cap);

  if (const Json* property = field(j, "property")) {
    if (property->is_string()) {
      c.properties = split(property->get<std::string>(), ',');
    } else if (property->is_array()) {
      for (const auto& p : *property) {
        if (!p.is_string()) throw ConfigError("property names must be strings");
        c.properties.push_back(p.get<std::string>());
      }
    } else {
      throw ConfigError("property must be a string or an array of strings");
    }
    for (const auto& name : c.properties) parse_property(name);
  }

  const Json& sampling = section(j, "sampling");
  c.samples = read_unsigned(sampling, "count", c.samples);
  c.seed = read_unsigned(sampling, "seed", c.seed);

  const Json& tolerances = section(j, "tolerances");
  c.tol = read_double(tolerances, "tol", c.tol);
  c.stop_tol = read_double(tolerances, "stop_tol", c.stop_tol);
  c.residual_tol = read_double(tolerances, "residual", c.residual_tol);
  if (!(c.tol > 0.0)) throw ConfigError("tol must be positive");
  if (!(c.stop_tol >= 0.0)) throw ConfigError("stop_tol must be nonnegative");
  if (!(c.residual_tol >= 0.0)) throw ConfigError("residual tolerance must be nonnegative");

  const std::uint64_t max_iter = read_unsigned(j, "max_iter", kDefaultMaxIter);
  if (max_iter < 1 || max_iter > 100000000) throw ConfigError("max_iter out of range");
  c.max_iter = static_cast<int>(max_iter);
  c.kappa = read_double(j, "kappa", c.kappa);
  if (!(c.kappa > 0.0)) throw ConfigError("kappa must be positive");

  if (const Json* points = field(j, "points")) c.points = read_points(*points, c.cap);
  if (field(j, "tail_start") != nullptr) c.tail_start = read_unsigned(j, "tail_start", 0);

  const Json& example = section(j, "example");
  c.example_r = read_double(example, "r", c.example_r);
  c.example_delta = read_double(example, "delta", c.example_delta);

  const Json& output = section(j, "output");
  c.format = read_string(output, "format", c.format);
  if (c.format != "json" && c.format != "csv") throw ConfigError("format must be json or csv");
  if (field(output, "path") != nullptr) c.out_path = read_string(output, "path", "");
  if (field(output, "emit_samples") != nullptr) {
    c.emit_samples = read_string(output, "emit_samples", "");
  }
  if (const Json* strict = field(j, "strict")) {
    if (!strict->is_boolean()) throw ConfigError("strict must be a boolean");
    c.strict = strict->get<bool>();
  }

  if (const Json* functional = field(j, "functional")) {
    c.functional = expand_functional(*functional, c);
  }
  if (const Json* mapping = field(j, "mapping")) c.mapping = expand_mapping(*mapping, c);
  return c;
}

int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  std::size_t violations = 0;
  try {
    violations = dispatch(config, out);
  } catch (const SolverError& e) {
    write_error(err, kExitSolverError, "solver_error", e.what());
    return kExitSolverError;
  } catch (const IoError& e) {
    write_error(err, kExitIoError, "io_error", e.what());
    return kExitIoError;
  } catch (const Error& e) {
    write_error(err, kExitConfigError, "config_error", e.what());
    return kExitConfigError;
  }
  if (config.strict && violations > 0) {
    write_error(err, kExitStrictViolation, "strict_violation",
                std::to_string(violations) + " samples violate the inequality beyond tolerance");
    return kExitStrictViolation;
  }
  return kExitOk;
}

int main_with_args(int argc, const char* const* argv, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Vicinal and firmly vicinal mappings on admissible spherical caps"};
  std::string command;
  app.add_option("command", command, "resolve | check | iterate | ppa | center | example-3-2")
      ->check(CLI::IsMember(kCommands));

  std::string config_path;
  app.add_option("--config", config_path, "JSON config file ('-' reads standard input)");

  std::map<std::string, std::string> strings;
  for (const char* name : {"mapping", "functional", "property", "anchor", "point", "x0",
                           "reference", "fixed-point", "cap-center", "points", "format", "out",
                           "emit-samples"}) {
    app.add_option(std::string("--") + name, strings[name]);
  }
  std::map<std::string, double> numbers;
  for (const char* name :
       {"tol", "stop-tol", "residual-tol", "radius", "cap-radius", "kappa", "r", "delta"}) {
    app.add_option(std::string("--") + name, numbers[name]);
  }
  std::map<std::string, std::uint64_t> counts;
  for (const char* name : {"seed", "samples", "max-iter", "tail-start"}) {
    app.add_option(std::string("--") + name, counts[name]);
  }
  bool strict = false;
  app.add_flag("--strict", strict, "exit 4 when any sample violates the inequality");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    write_error(err, kExitConfigError, "config_error", e.what());
    return kExitConfigError;
  }
  auto given = [&app](const std::string& name) { return app.count("--" + name) > 0; };

  ExperimentConfig config;
  try {
    Json doc = Json::object();
    if (!config_path.empty()) {
      if (config_path == "-") {
        try {
          doc = Json::parse(in);
        } catch (const Json::exception& e) {
          throw ConfigError(std::string("standard input: ") + e.what());
        }
      } else {
        doc = read_json_file(config_path);
      }
      if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    }
    if (!command.empty()) doc["command"] = command;

    auto descriptor = [](const std::string& text) -> Json {
      if (text.empty() || text.front() != '{') return text;
      try {
        return Json::parse(text);
      } catch (const Json::exception& e) {
        throw ConfigError(e.what());
      }
    };
    if (given("mapping")) doc["mapping"] = descriptor(strings["mapping"]);
    if (given("functional")) doc["functional"] = descriptor(strings["functional"]);
    if (given("property")) doc["property"] = strings["property"];
    for (const auto& [flag, key] : std::vector<std::pair<std::string, std::string>>{
             {"anchor", "anchor"},
             {"point", "point"},
             {"x0", "x0"},
             {"reference", "reference"},
             {"fixed-point", "fixed_point"},
             {"points", "points"}}) {
      if (given(flag)) doc[key] = strings[flag];
    }
    if (given("cap-center")) doc["cap"]["center"] = strings["cap-center"];
    if (given("cap-radius")) doc["cap"]["radius"] = numbers["cap-radius"];
    if (given("radius")) doc["radius"] = numbers["radius"];
    if (given("kappa")) doc["kappa"] = numbers["kappa"];
    if (given("tol")) doc["tolerances"]["tol"] = numbers["tol"];
    if (given("stop-tol")) doc["tolerances"]["stop_tol"] = numbers["stop-tol"];
    if (given("residual-tol")) doc["tolerances"]["residual"] = numbers["residual-tol"];
    if (given("r")) doc["example"]["r"] = numbers["r"];
    if (given("delta")) doc["example"]["delta"] = numbers["delta"];
    if (given("seed")) doc["sampling"]["seed"] = counts["seed"];
    if (given("samples")) doc["sampling"]["count"] = counts["samples"];
    if (given("max-iter")) doc["max_iter"] = counts["max-iter"];
    if (given("tail-start")) doc["tail_start"] = counts["tail-start"];
    if (given("format")) doc["output"]["format"] = strings["format"];
    if (given("out")) doc["output"]["path"] = strings["out"];
    if (given("emit-samples")) doc["output"]["emit_samples"] = strings["emit-samples"];
    if (strict) doc["strict"] = true;

    config = config_from_json(doc);
  } catch (const Error& e) {
    write_error(err, kExitConfigError, "config_error", e.what());
    return kExitConfigError;
  }
  return run(config, out, err);
}

}  // namespace vicinal
