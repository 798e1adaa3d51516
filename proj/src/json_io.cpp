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

#include "vicinal/json_io.hpp"

#include <charconv>
#include <cmath>
#include <string_view>

#include "vicinal/errors.hpp"

namespace vicinal {

namespace {

void dump_into(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::null:
    case Json::value_t::discarded:
      out += "null";
      return;
    case Json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case Json::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      return;
    case Json::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      return;
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_double(v) : "null";
      return;
    }
    case Json::value_t::string:
    case Json::value_t::binary:
      out += j.dump();
      return;
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ',';
        first = false;
        dump_into(item, out);
      }
      out += ']';
      return;
    }
    case Json::value_t::object: {
      // nlohmann::json objects are std::map-backed, so iteration is sorted.
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        dump_into(value, out);
      }
      out += '}';
      return;
    }
  }
}

const Json& require(const Json& j, std::string_view key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ConfigError("missing field: " + std::string(key));
  }
  return j.at(std::string(key));
}

double number(const Json& j, std::string_view what) {
  if (!j.is_number()) throw ConfigError(std::string(what) + " must be a number");
  return j.get<double>();
}

std::string normalized_kind(const Json& j) {
  const Json& kind = require(j, "kind");
  if (!kind.is_string()) throw ConfigError("kind must be a string");
  std::string k = kind.get<std::string>();
  for (char& c : k) {
    if (c == '_') c = '-';
  }
  return k;
}

std::string_view functional_kind_name(FunctionalKind kind) {
  switch (kind) {
    case FunctionalKind::kIndicatorBall:
      return "indicator-ball";
    case FunctionalKind::kPullToPoint:
      return "pull-to-point";
    case FunctionalKind::kNegCosDist:
      return "neg-cos-dist";
    case FunctionalKind::kWeightedSum:
      return "weighted-sum";
  }
  return "unknown";
}

// Wraps library validation errors raised while building objects from JSON.
template <typename F>
auto as_config_error(F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  } catch (const Json::exception& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

std::string format_double(double value) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 17);
  return std::string(buffer, result.ptr);
}

std::string canonical_dump(const Json& j) {
  std::string out;
  dump_into(j, out);
  return out;
}

Json point_to_json(const SpherePoint& p) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < p.ambient_dim(); ++i) arr.push_back(p.coords()(i));
  return arr;
}

SpherePoint point_from_json(const Json& j) {
  if (!j.is_array()) throw ConfigError("point must be an array of coordinates");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = number(j[i], "point coordinate");
  }
  return as_config_error([&] { return SpherePoint::from_coords(std::move(v)); });
}

Json ball_to_json(const Ball& b) {
  return Json{{"center", point_to_json(b.center)}, {"radius", b.radius}};
}

Ball ball_from_json(const Json& j) {
  SpherePoint center = point_from_json(require(j, "center"));
  const double radius = number(require(j, "radius"), "radius");
  return as_config_error([&] { return Ball(std::move(center), radius); });
}

Json cap_to_json(const AdmissibleCap& cap) { return ball_to_json(cap.ball()); }

AdmissibleCap cap_from_json(const Json& j) {
  SpherePoint center = point_from_json(require(j, "center"));
  const double radius = number(require(j, "radius"), "radius");
  return as_config_error([&] { return AdmissibleCap(std::move(center), radius); });
}

Json functional_to_json(const ConvexFunctional& f) {
  Json anchors = Json::array();
  Json radii = Json::array();
  Json weights = Json::array();
  Json terms = Json::array();
  switch (f.kind()) {
    case FunctionalKind::kIndicatorBall:
      anchors.push_back(point_to_json(f.anchor()));
      radii.push_back(f.radius());
      break;
    case FunctionalKind::kPullToPoint:
    case FunctionalKind::kNegCosDist:
      anchors.push_back(point_to_json(f.anchor()));
      break;
    case FunctionalKind::kWeightedSum:
      for (const auto& term : f.terms()) {
        weights.push_back(term.weight);
        terms.push_back(functional_to_json(term.functional));
      }
      break;
  }
  return Json{{"kind", functional_kind_name(f.kind())},
              {"anchors", anchors},
              {"radii", radii},
              {"weights", weights},
              {"terms", terms}};
}

ConvexFunctional functional_from_json(const Json& j) {
  const std::string kind = normalized_kind(j);
  auto single_anchor = [&] {
    const Json& anchors = require(j, "anchors");
    if (!anchors.is_array() || anchors.size() != 1) {
      throw ConfigError(kind + " needs exactly one anchor");
    }
    return point_from_json(anchors[0]);
  };
  if (kind == "indicator-ball") {
    SpherePoint center = single_anchor();
    const Json& radii = require(j, "radii");
    if (!radii.is_array() || radii.size() != 1) {
      throw ConfigError("indicator-ball needs exactly one radius");
    }
    const double radius = number(radii[0], "radius");
    return as_config_error(
        [&] { return ConvexFunctional::indicator_ball(std::move(center), radius); });
  }
  if (kind == "pull-to-point") return ConvexFunctional::pull_to_point(single_anchor());
  if (kind == "neg-cos-dist") return ConvexFunctional::neg_cos_dist(single_anchor());
  if (kind == "weighted-sum") {
    const Json& terms = require(j, "terms");
    const Json& weights = require(j, "weights");
    if (!terms.is_array() || !weights.is_array() || terms.size() != weights.size()) {
      throw ConfigError("weighted-sum needs matching terms and weights arrays");
    }
    std::vector<WeightedTerm> parsed;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      parsed.push_back({number(weights[i], "weight"), functional_from_json(terms[i])});
    }
    return as_config_error([&] { return ConvexFunctional::weighted_sum(std::move(parsed)); });
  }
  throw ConfigError("unknown functional kind: " + kind);
}

Json mapping_to_json(const MappingHandle& T) {
  switch (T.kind()) {
    case MappingKind::kIdentity:
      return Json{{"kind", "identity"}};
    case MappingKind::kResolvent:
      return Json{{"kind", "resolvent"},
                  {"functional", functional_to_json(T.functional())},
                  {"tol", T.resolvent_tol()}};
    case MappingKind::kProjection:
      return Json{{"kind", "projection"}, {"ball", ball_to_json(T.ball())}};
    case MappingKind::kExample32: {
      const auto& ex = T.example();
      return Json{{"kind", "example-3-2"},
                  {"anchor", point_to_json(ex.anchor)},
                  {"r", ex.r},
                  {"delta", ex.delta}};
    }
    case MappingKind::kComposition: {
      Json maps = Json::array();
      for (const auto& part : T.parts()) maps.push_back(mapping_to_json(part));
      return Json{{"kind", "composition"}, {"maps", maps}};
    }
  }
  return Json();
}

MappingHandle mapping_from_json(const Json& j, const AdmissibleCap& domain) {
  const std::string kind = normalized_kind(j);
  if (kind == "identity") return MappingHandle::identity(domain);
  if (kind == "resolvent") {
    ConvexFunctional f = functional_from_json(require(j, "functional"));
    const double tol = j.contains("tol") ? number(j.at("tol"), "tol") : kDefaultResolventTol;
    return as_config_error(
        [&] { return MappingHandle::resolvent_of(std::move(f), domain, tol); });
  }
  if (kind == "projection") {
    Ball ball = ball_from_json(require(j, "ball"));
    return as_config_error(
        [&] { return MappingHandle::projection_onto(std::move(ball), domain); });
  }
  if (kind == "example-3-2") {
    SpherePoint anchor = point_from_json(require(j, "anchor"));
    const double r = number(require(j, "r"), "r");
    const double delta = number(require(j, "delta"), "delta");
    return as_config_error([&] { return make_example_3_2(std::move(anchor), r, delta); });
  }
  if (kind == "composition") {
    const Json& maps = require(j, "maps");
    if (!maps.is_array()) throw ConfigError("composition maps must be an array");
    std::vector<MappingHandle> parts;
    for (const auto& m : maps) parts.push_back(mapping_from_json(m, domain));
    return as_config_error([&] { return MappingHandle::composition(std::move(parts)); });
  }
  throw ConfigError("unknown mapping kind: " + kind);
}

Json extended_real_to_json(ExtendedReal v) {
  return v.is_finite() ? Json(v.value()) : Json("inf");
}

Json resolvent_result_to_json(const ResolventResult& r) {
  return Json{{"point", point_to_json(r.point)},
              {"objective_value", r.objective_value},
              {"iterations", r.iterations},
              {"gradient_norm_at_exit", r.gradient_norm_at_exit}};
}

Json report_to_json(const PropertyReport& r) {
  Json worst = nullptr;
  if (r.worst_pair) {
    worst = Json{{"x", point_to_json(r.worst_pair->first)},
                 {"y", point_to_json(r.worst_pair->second)}};
  }
  return Json{{"property", r.property},     {"samples", r.samples},
              {"min_residual", r.min_residual}, {"violations", r.violations},
              {"tolerance", r.tolerance},   {"seed", r.seed},
              {"kappa", r.kappa},           {"worst_pair", worst}};
}

Json trace_to_json(const IterationTrace& trace) {
  Json iterates = Json::array();
  for (const auto& x : trace.iterates) iterates.push_back(point_to_json(x));
  return Json{{"iterates", iterates},
              {"step_distances", trace.step_distances},
              {"reference", trace.reference ? point_to_json(*trace.reference) : Json()},
              {"reference_distances",
               trace.reference ? Json(trace.reference_distances) : Json()},
              {"stop_reason", stop_reason_name(trace.stop_reason)},
              {"length", trace.iterates.size()}};
}

Json center_to_json(const AsymptoticCenterEstimate& est) {
  return Json{{"center", point_to_json(est.center)},
              {"radius", est.radius},
              {"tail_start", est.tail_start},
              {"window", est.window},
              {"margin", kPi / 2 - est.radius}};
}

Json feasibility_to_json(const Example32Feasibility& f) {
  return Json{{"cos_pi_over_8", f.cos_pi_over_8},
              {"cos_sq_delta_pi_over_8", f.cos_sq_delta_pi_over_8},
              {"radius_in_range", f.radius_in_range},
              {"delta_in_range", f.delta_in_range},
              {"feasible", f.feasible}};
}

void write_trace_csv(std::ostream& out, const IterationTrace& trace) {
  const Eigen::Index dim = trace.iterates.front().ambient_dim();
  out << "n,step_dist,dist_to_ref";
  for (Eigen::Index i = 0; i < dim; ++i) out << ",x" << i;
  out << '\n';
  for (std::size_t n = 0; n < trace.iterates.size(); ++n) {
    out << n << ',';
    if (n > 0) out << format_double(trace.step_distances[n - 1]);
    out << ',';
    if (trace.reference) out << format_double(trace.reference_distances[n]);
    for (Eigen::Index i = 0; i < dim; ++i) {
      out << ',' << format_double(trace.iterates[n].coords()(i));
    }
    out << '\n';
  }
}

void write_samples_csv(std::ostream& out, std::span<const ResidualSample> samples) {
  out << "x,y,lhs,rhs,residual\n";
  for (const auto& s : samples) {
    out << '"' << canonical_dump(point_to_json(s.x)) << "\",\""
        << canonical_dump(point_to_json(s.y)) << "\"," << format_double(s.lhs) << ','
        << format_double(s.rhs) << ',' << format_double(s.residual) << '\n';
  }
}

}  // namespace vicinal
