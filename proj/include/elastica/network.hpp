#pragma once

// Planar networks: a connected union of curves whose endpoints meet at
// junctions.  The model keeps the geometry (sampled curves), the incidence
// structure (which curve ends meet where) and optional target angles per
// junction.  Classification follows the relaxed functional: a Theta-network
// is three positive-length curves meeting at two triple junctions with all
// angles 120 degrees; a degenerate Theta-network is two curves at a single
// 4-valent point with angles 120/60 in pairs (plus, optionally, an explicit
// zero-length curve); everything else is Other.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "elastica/curve.hpp"
#include "elastica/error.hpp"
#include "elastica/vec2.hpp"

namespace elastica {

enum class CurveEnd { start, end };

struct Incidence {
  int curve = 0;
  CurveEnd end = CurveEnd::start;
};

struct Junction {
  Vec2 position;
  std::vector<Incidence> incident;
  // Angles in degrees between consecutive tangents, when prescribed; they
  // must sum to 360.
  std::optional<std::vector<double>> target_angles_deg;
};

// A network edge: either a sampled curve or an explicit zero-length curve
// pinned to a point.  Zero-length curves carry no geometry and contribute
// nothing to any energy; they make the degenerate Theta-network a
// first-class value.
struct NetworkCurve {
  std::optional<SampledCurve> geometry;
  Vec2 anchor;  // location of a zero-length curve

  bool zero_length() const { return !geometry.has_value(); }
  const SampledCurve& curve() const { return *geometry; }

  Vec2 endpoint(CurveEnd e) const {
    if (zero_length()) return anchor;
    return e == CurveEnd::start ? geometry->points.front() : geometry->points.back();
  }
};

inline NetworkCurve make_network_curve(SampledCurve c) {
  NetworkCurve nc;
  nc.geometry = std::move(c);
  return nc;
}

inline NetworkCurve make_zero_length_curve(Vec2 at) {
  NetworkCurve nc;
  nc.anchor = at;
  return nc;
}

enum class NetworkClass { theta, degenerate_theta, other };

inline const char* to_string(NetworkClass c) {
  switch (c) {
    case NetworkClass::theta: return "theta";
    case NetworkClass::degenerate_theta: return "degenerate-theta";
    default: return "other";
  }
}

struct Network {
  std::vector<NetworkCurve> curves;
  std::vector<Junction> junctions;
  NetworkClass classification = NetworkClass::other;
};

namespace detail {

// Outward unit tangent of an incident curve end: the direction in which the
// curve leaves the junction.
inline Vec2 outward_tangent(const Network& net, const Incidence& inc) {
  const SampledCurve& c = net.curves[inc.curve].curve();
  return inc.end == CurveEnd::start ? c.tangent.front() : -c.tangent.back();
}

// Angles in degrees between consecutive outward tangents at a junction,
// sorted ascending; they sum to 360.  Zero-length incidences carry no
// tangent and are skipped.
inline std::vector<double> junction_gaps_deg(const Network& net, const Junction& j) {
  std::vector<double> dirs;
  for (const Incidence& inc : j.incident) {
    if (net.curves[inc.curve].zero_length()) continue;
    const Vec2 t = outward_tangent(net, inc);
    dirs.push_back(std::atan2(t.y, t.x));
  }
  std::sort(dirs.begin(), dirs.end());
  std::vector<double> gaps;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const double next = (i + 1 < dirs.size()) ? dirs[i + 1] : dirs[0] + 2.0 * std::numbers::pi;
    gaps.push_back((next - dirs[i]) * 180.0 / std::numbers::pi);
  }
  std::sort(gaps.begin(), gaps.end());
  return gaps;
}

inline bool gaps_match(const std::vector<double>& gaps, const std::vector<double>& target,
                       double tol_deg) {
  if (gaps.size() != target.size()) return false;
  for (std::size_t i = 0; i < gaps.size(); ++i)
    if (std::fabs(gaps[i] - target[i]) > tol_deg) return false;
  return true;
}

}  // namespace detail

// Structural validation: every junction has at least two incident endpoints
// all coinciding with its position, every endpoint of every open curve lies
// at exactly one junction, the incidence graph is connected, and prescribed
// target angles sum to 360.
inline void validate_network(const Network& net, double junction_tol = 1e-6) {
  const std::size_t ncurves = net.curves.size();
  if (ncurves == 0) throw SchemaError("network: no curves");

  std::vector<int> open_end_uses(2 * ncurves, 0);
  for (std::size_t ji = 0; ji < net.junctions.size(); ++ji) {
    const Junction& j = net.junctions[ji];
    if (j.incident.size() < 2)
      throw SchemaError("network: junction " + std::to_string(ji) + " has fewer than 2 incidences");
    for (const Incidence& inc : j.incident) {
      if (inc.curve < 0 || static_cast<std::size_t>(inc.curve) >= ncurves)
        throw SchemaError("network: incidence references a missing curve");
      const NetworkCurve& nc = net.curves[inc.curve];
      if (!nc.zero_length() && nc.curve().closed)
        throw SchemaError("network: closed curves cannot be incident to junctions");
      if (distance(nc.endpoint(inc.end), j.position) > junction_tol)
        throw JunctionMismatch("network: endpoint of curve " + std::to_string(inc.curve) +
                               " does not lie at junction " + std::to_string(ji));
      if (!nc.zero_length())
        ++open_end_uses[2 * inc.curve + (inc.end == CurveEnd::start ? 0 : 1)];
    }
    if (j.target_angles_deg) {
      double sum = 0.0;
      for (double a : *j.target_angles_deg) sum += a;
      if (std::fabs(sum - 360.0) > 1e-6)
        throw SchemaError("network: target angles at a junction must sum to 360 degrees");
    }
  }
  for (std::size_t ci = 0; ci < ncurves; ++ci) {
    if (net.curves[ci].zero_length() || net.curves[ci].curve().closed) continue;
    if (open_end_uses[2 * ci] != 1 || open_end_uses[2 * ci + 1] != 1)
      throw SchemaError("network: every endpoint of an open curve must meet exactly one junction");
  }

  // Connectivity over the curve/junction incidence graph.  A single closed
  // curve is connected on its own; anything detached from the rest fails.
  if (ncurves > 1 || !net.junctions.empty()) {
    std::vector<int> comp(ncurves, -1);
    std::vector<std::size_t> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
      const std::size_t c = stack.back();
      stack.pop_back();
      for (const Junction& j : net.junctions) {
        bool here = false;
        for (const Incidence& inc : j.incident)
          if (static_cast<std::size_t>(inc.curve) == c) here = true;
        if (!here) continue;
        for (const Incidence& inc : j.incident) {
          if (comp[inc.curve] < 0) {
            comp[inc.curve] = 0;
            stack.push_back(inc.curve);
          }
        }
      }
    }
    for (int c : comp)
      if (c < 0) throw DisconnectedNetwork("network: not connected");
  }
}

// Classification under the relaxed functional.  `angle_tol_deg` absorbs the
// discretization error of sampled tangents; 0.5 degrees by default.
inline NetworkClass classify(const Network& net, double angle_tol_deg = 0.5) {
  std::vector<std::size_t> positive;
  for (std::size_t i = 0; i < net.curves.size(); ++i)
    if (!net.curves[i].zero_length()) positive.push_back(i);

  const bool any_closed = std::any_of(positive.begin(), positive.end(), [&](std::size_t i) {
    return net.curves[i].curve().closed;
  });
  if (any_closed) return NetworkClass::other;

  if (positive.size() == 3 && net.junctions.size() == 2) {
    bool ok = true;
    for (const Junction& j : net.junctions) {
      const auto gaps = detail::junction_gaps_deg(net, j);
      if (!detail::gaps_match(gaps, {120.0, 120.0, 120.0}, angle_tol_deg)) ok = false;
    }
    if (ok) return NetworkClass::theta;
  }
  if (positive.size() == 2 && net.junctions.size() == 1) {
    const auto gaps = detail::junction_gaps_deg(net, net.junctions.front());
    if (detail::gaps_match(gaps, {60.0, 60.0, 120.0, 120.0}, angle_tol_deg))
      return NetworkClass::degenerate_theta;
  }
  return NetworkClass::other;
}

enum class EnergySemantics {
  raw,      // F as a sum over the curves, whatever the class
  relaxed,  // the extended functional: infinite outside Theta/degenerate
};

// Total energy of the network: per-curve bending and length summed, total =
// bending + delta * length.  Zero-length curves contribute nothing.
inline EnergyReport network_energy(const Network& net, double delta,
                                   EnergySemantics semantics = EnergySemantics::raw) {
  if (semantics == EnergySemantics::relaxed && classify(net) == NetworkClass::other)
    throw InfiniteEnergy("network_energy: relaxed functional is +infinity outside Theta classes");

  double bending = 0.0, length = 0.0, tac = 0.0;
  for (const NetworkCurve& nc : net.curves) {
    if (nc.zero_length()) continue;
    const EnergyReport r = energy_report(nc.curve(), delta);
    bending += r.bending;
    length += r.length;
    tac += r.total_abs_curvature;
  }
  return make_energy_report(bending, length, delta, tac);
}

struct JunctionResidual {
  double scalar_sum = 0.0;  // sum of signed curvatures at the junction
  Vec2 vector_sum;          // sum of 2 k_s nu + k^2 tau
  Vec2 tangent_sum;         // sum of outward unit tangents
};

namespace detail {

// One-sided curvature derivative at a curve end, in the curve's own
// orientation.
inline double end_curvature_slope(const SampledCurve& c, CurveEnd e) {
  const std::size_t n = c.size();
  if (e == CurveEnd::start)
    return lagrange3_derivative(c.s[0], c.s[1], c.s[2], c.curvature[0], c.curvature[1],
                                c.curvature[2], c.s[0]);
  return lagrange3_derivative(c.s[n - 3], c.s[n - 2], c.s[n - 1], c.curvature[n - 3],
                              c.curvature[n - 2], c.curvature[n - 1], c.s[n - 1]);
}

}  // namespace detail

// Junction conditions of the stationarity system evaluated as residuals.
// All incident curves are re-oriented to leave the junction before summing;
// under that orientation a curve stored as ending there flips the signs of
// its tangent, normal and curvature while keeping the curvature slope.
// For a critical network with equal angles both sums vanish; for competitors
// they are diagnostics.
inline std::vector<JunctionResidual> junction_residuals(const Network& net) {
  std::vector<JunctionResidual> out;
  out.reserve(net.junctions.size());
  for (const Junction& j : net.junctions) {
    std::size_t arity = 0;
    for (const Incidence& inc : j.incident)
      if (!net.curves[inc.curve].zero_length()) ++arity;
    if (arity != 3)
      throw NotTripleJunction("junction_residuals: junction is not a triple junction");

    JunctionResidual r;
    for (const Incidence& inc : j.incident) {
      const NetworkCurve& nc = net.curves[inc.curve];
      if (nc.zero_length()) continue;
      const SampledCurve& c = nc.curve();
      const bool at_start = inc.end == CurveEnd::start;
      const std::size_t node = at_start ? 0 : c.size() - 1;
      const double sign = at_start ? 1.0 : -1.0;

      const double k = sign * c.curvature[node];
      const double ks = detail::end_curvature_slope(c, inc.end);  // sign-invariant
      const Vec2 tau = sign * c.tangent[node];
      const Vec2 nu = sign * c.normal[node];
      r.scalar_sum += k;
      r.vector_sum += 2.0 * ks * nu + k * k * tau;
      r.tangent_sum += tau;
    }
    out.push_back(r);
  }
  return out;
}

// Gauss-Bonnet bound for one closed loop of an embedded 3-network with
// exterior angles theta1, theta2: int |k| ds >= 2 pi - theta1 - theta2.
inline double gauss_bonnet_bound(double theta1, double theta2) {
  if (std::fabs(theta1) > std::numbers::pi || std::fabs(theta2) > std::numbers::pi)
    throw AngleOutOfRange("gauss_bonnet_bound: exterior angles must lie in [-pi, pi]");
  return 2.0 * std::numbers::pi - theta1 - theta2;
}

// F >= 4 pi for every Theta-network (delta = 1).
inline bool theta_lower_bound_check(const Network& net, double delta = 1.0) {
  if (delta != 1.0)
    throw std::invalid_argument("theta_lower_bound_check: stated for delta = 1 only");
  if (classify(net) != NetworkClass::theta)
    throw NotTheta("theta_lower_bound_check: network is not a Theta-network");
  return network_energy(net, delta).total >= 4.0 * std::numbers::pi - 1e-6;
}

}  // namespace elastica
