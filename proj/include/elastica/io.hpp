#pragma once

// JSON schemas for curves and networks.
//
// Curve file:   {"closed": bool, "points": [[x, y], ...]}
// Network file: {"curves": [<curve>, ...],
//                "junctions": [{"position": [x, y],
//                               "incident": [[curve_index, "start"|"end"], ...],
//                               "target_angles": [deg, ...]   (optional)}, ...]}
//
// A network curve entry with a single point, e.g. {"closed": false,
// "points": [[0, 0]]}, denotes an explicit zero-length curve anchored there.
// Closed polylines must repeat their first point.  Coordinates are in
// abstract length units, angles in degrees.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "elastica/curve.hpp"
#include "elastica/error.hpp"
#include "elastica/network.hpp"
#include "elastica/vec2.hpp"

namespace elastica {

struct RawCurve {
  std::vector<Vec2> points;
  bool closed = false;
};

struct LoadOptions {
  std::size_t resample_nodes = 512;  // nodes per curve after arclength resampling
  double junction_tol = 1e-6;        // endpoint-to-junction coincidence tolerance
  double closure_tol = 1e-6;         // first/last coincidence tolerance for closed file curves
  double angle_tol_deg = 0.5;        // classification tolerance
};

namespace detail {

inline nlohmann::json parse_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw SchemaError("document is not valid JSON");
  return doc;
}

inline Vec2 parse_point(const nlohmann::json& node) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number())
    throw SchemaError("point must be a [x, y] pair of numbers");
  return {node[0].get<double>(), node[1].get<double>()};
}

inline RawCurve parse_raw_curve(const nlohmann::json& node) {
  if (!node.is_object() || !node.contains("points") || !node["points"].is_array())
    throw SchemaError("curve must be an object with a \"points\" array");
  RawCurve raw;
  raw.closed = node.value("closed", false);
  for (const auto& p : node["points"]) raw.points.push_back(parse_point(p));
  if (raw.points.empty()) throw SchemaError("curve has no points");
  return raw;
}

}  // namespace detail

inline RawCurve parse_curve_document(const std::string& json_text) {
  return detail::parse_raw_curve(detail::parse_json(json_text));
}

inline SampledCurve load_curve(const std::string& json_text, const LoadOptions& opts = {}) {
  const RawCurve raw = parse_curve_document(json_text);
  if (raw.points.size() < 4) throw DegenerateCurve("curve document: need at least 4 points");
  return resample_arclength(raw.points, opts.resample_nodes, raw.closed, opts.closure_tol);
}

// Parse, resample, validate and classify a network document.
inline Network load_network(const std::string& json_text, const LoadOptions& opts = {}) {
  const nlohmann::json doc = detail::parse_json(json_text);
  if (!doc.is_object() || !doc.contains("curves") || !doc["curves"].is_array())
    throw SchemaError("network must be an object with a \"curves\" array");

  Network net;
  for (const auto& cnode : doc["curves"]) {
    const RawCurve raw = detail::parse_raw_curve(cnode);
    if (raw.points.size() == 1) {
      net.curves.push_back(make_zero_length_curve(raw.points.front()));
      continue;
    }
    if (raw.points.size() < 4)
      throw SchemaError("network curve: need at least 4 points (or exactly 1 for zero length)");
    net.curves.push_back(make_network_curve(
        resample_arclength(raw.points, opts.resample_nodes, raw.closed, opts.closure_tol)));
  }

  if (doc.contains("junctions")) {
    if (!doc["junctions"].is_array()) throw SchemaError("\"junctions\" must be an array");
    for (const auto& jnode : doc["junctions"]) {
      if (!jnode.is_object() || !jnode.contains("position") || !jnode.contains("incident"))
        throw SchemaError("junction must have \"position\" and \"incident\"");
      Junction j;
      j.position = detail::parse_point(jnode["position"]);
      for (const auto& inode : jnode["incident"]) {
        if (!inode.is_array() || inode.size() != 2 || !inode[0].is_number_integer() ||
            !inode[1].is_string())
          throw SchemaError("incidence must be [curve_index, \"start\"|\"end\"]");
        Incidence inc;
        inc.curve = inode[0].get<int>();
        const std::string which = inode[1].get<std::string>();
        if (which == "start")
          inc.end = CurveEnd::start;
        else if (which == "end")
          inc.end = CurveEnd::end;
        else
          throw SchemaError("incidence end must be \"start\" or \"end\"");
        j.incident.push_back(inc);
      }
      if (jnode.contains("target_angles")) {
        std::vector<double> angles;
        for (const auto& a : jnode["target_angles"]) {
          if (!a.is_number()) throw SchemaError("target angle must be a number");
          angles.push_back(a.get<double>());
        }
        j.target_angles_deg = std::move(angles);
      }
      net.junctions.push_back(std::move(j));
    }
  }

  validate_network(net, opts.junction_tol);
  net.classification = classify(net, opts.angle_tol_deg);
  return net;
}

inline Network load_network_file(const std::string& path, const LoadOptions& opts = {}) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open network file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_network(buf.str(), opts);
}

inline SampledCurve load_curve_file(const std::string& path, const LoadOptions& opts = {}) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open curve file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_curve(buf.str(), opts);
}

// Serialize a network back to the document schema; sampled nodes become the
// polyline points.
inline std::string network_to_json(const Network& net) {
  nlohmann::json doc;
  doc["curves"] = nlohmann::json::array();
  for (const NetworkCurve& nc : net.curves) {
    nlohmann::json cnode;
    if (nc.zero_length()) {
      cnode["closed"] = false;
      cnode["points"] = nlohmann::json::array({{nc.anchor.x, nc.anchor.y}});
    } else {
      cnode["closed"] = nc.curve().closed;
      auto pts = nlohmann::json::array();
      for (const Vec2& p : nc.curve().points) pts.push_back({p.x, p.y});
      cnode["points"] = std::move(pts);
    }
    doc["curves"].push_back(std::move(cnode));
  }
  doc["junctions"] = nlohmann::json::array();
  for (const Junction& j : net.junctions) {
    nlohmann::json jnode;
    jnode["position"] = {j.position.x, j.position.y};
    auto inc = nlohmann::json::array();
    for (const Incidence& i : j.incident)
      inc.push_back({i.curve, i.end == CurveEnd::start ? "start" : "end"});
    jnode["incident"] = std::move(inc);
    if (j.target_angles_deg) jnode["target_angles"] = *j.target_angles_deg;
    doc["junctions"].push_back(std::move(jnode));
  }
  return doc.dump(2);
}

}  // namespace elastica
