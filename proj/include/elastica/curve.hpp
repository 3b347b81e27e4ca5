#pragma once

// Discrete model of a planar curve sampled by arclength: positions, Frenet
// frame and signed scalar curvature at every node.  The normal is the
// counter-clockwise rotation of the tangent by pi/2 and the curvature is the
// component of d(tangent)/ds along that normal, so circles traversed
// counter-clockwise have positive curvature.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "elastica/error.hpp"
#include "elastica/numerics.hpp"
#include "elastica/vec2.hpp"

namespace elastica {

struct SampledCurve {
  std::vector<Vec2> points;
  std::vector<double> s;         // arclength values, strictly increasing from 0
  std::vector<Vec2> tangent;     // unit tangents
  std::vector<Vec2> normal;      // unit normals, ccw rotation of tangent
  std::vector<double> curvature; // signed scalar curvature
  bool closed = false;           // closed curves duplicate the seam node

  std::size_t size() const { return points.size(); }
  double length() const { return s.back() - s.front(); }
  double step() const { return s[1] - s[0]; }
};

// Bending energy, length and the penalized total F_delta = E + delta*L of one
// curve, together with the total absolute curvature used by the Gauss-Bonnet
// diagnostics.
struct EnergyReport {
  double bending = 0.0;              // E = int k^2 ds
  double length = 0.0;               // L
  double delta = 1.0;                // penalty weight
  double total = 0.0;                // F = E + delta * L
  double total_abs_curvature = 0.0;  // int |k| ds
};

inline EnergyReport make_energy_report(double bending, double length, double delta,
                                       double total_abs_curvature) {
  EnergyReport r;
  r.bending = bending;
  r.length = length;
  r.delta = delta;
  r.total = bending + delta * length;
  r.total_abs_curvature = total_abs_curvature;
  return r;
}

struct GaussBonnetReport {
  double total_abs_curvature = 0.0;  // int |k| ds
  double lower_bound = 2.0 * std::numbers::pi;
  bool satisfies_lower_bound = false;  // int |k| ds >= 2 pi - tol
  bool holder_consistent = false;      // E * L >= (int |k| ds)^2 - tol
};

namespace detail {

// Derivative at `at` of the parabola through (s0,f0), (s1,f1), (s2,f2).
// Exact for quadratics on arbitrary spacing; used for interior and one-sided
// difference stencils alike.
inline double lagrange3_derivative(double s0, double s1, double s2, double f0, double f1, double f2,
                                   double at) {
  const double d01 = s0 - s1, d02 = s0 - s2, d12 = s1 - s2;
  return f0 * (2.0 * at - s1 - s2) / (d01 * d02) + f1 * (2.0 * at - s0 - s2) / (-d01 * d12) +
         f2 * (2.0 * at - s0 - s1) / (d02 * d12);
}

template <class Get>
double sample_derivative(const SampledCurve& c, std::size_t i, Get get) {
  const std::size_t n = c.size();
  if (c.closed) {
    // Node n-1 duplicates node 0; work on the cycle of n-1 distinct nodes.
    const std::size_t cyc = n - 1;
    const std::size_t j = (i == n - 1) ? 0 : i;
    const std::size_t prev = (j + cyc - 1) % cyc;
    const std::size_t next = (j + 1) % cyc;
    // Unwrap the arclength coordinates around the seam.
    const double total = c.s[n - 1] - c.s[0];
    double sp = c.s[prev], sn = c.s[next];
    if (prev > j) sp -= total;
    if (next < j) sn += total;
    return lagrange3_derivative(sp, c.s[j], sn, get(prev), get(j), get(next), c.s[j]);
  }
  std::size_t base = (i == 0) ? 0 : (i == n - 1 ? n - 3 : i - 1);
  return lagrange3_derivative(c.s[base], c.s[base + 1], c.s[base + 2], get(base), get(base + 1),
                              get(base + 2), c.s[i]);
}

// Fill tangents, normals and curvature from positions and arclength by
// finite differences.  Closed curves difference around the seam.
inline void fill_frames_by_differences(SampledCurve& c) {
  const std::size_t n = c.size();
  c.tangent.resize(n);
  c.normal.resize(n);
  c.curvature.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 d{sample_derivative(c, i, [&](std::size_t j) { return c.points[j].x; }),
                 sample_derivative(c, i, [&](std::size_t j) { return c.points[j].y; })};
    c.tangent[i] = normalized(d);
    c.normal[i] = perp_ccw(c.tangent[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 dt{sample_derivative(c, i, [&](std::size_t j) { return c.tangent[j].x; }),
                  sample_derivative(c, i, [&](std::size_t j) { return c.tangent[j].y; })};
    c.curvature[i] = dot(dt, c.normal[i]);
  }
  if (c.closed) {
    c.tangent[n - 1] = c.tangent[0];
    c.normal[n - 1] = c.normal[0];
    c.curvature[n - 1] = c.curvature[0];
  }
}

inline double polyline_scale(const std::vector<Vec2>& pts) {
  double lo_x = pts[0].x, hi_x = pts[0].x, lo_y = pts[0].y, hi_y = pts[0].y;
  for (const Vec2& p : pts) {
    lo_x = std::fmin(lo_x, p.x);
    hi_x = std::fmax(hi_x, p.x);
    lo_y = std::fmin(lo_y, p.y);
    hi_y = std::fmax(hi_y, p.y);
  }
  return std::fmax(1.0, std::fmax(hi_x - lo_x, hi_y - lo_y));
}

}  // namespace detail

// Resample a polyline to n nodes equally spaced in cumulative chord length
// and derive the Frenet data by finite differences in s.  A closed curve is
// stored with its seam node duplicated (last node == first node).
//
// `closure_tol` is the relative gap allowed between first and last input
// point of a curve declared closed; analytic inputs close to machine noise,
// file-loaded data may need the looser 1e-6.
inline SampledCurve resample_arclength(const std::vector<Vec2>& raw_points, std::size_t n,
                                       bool closed, double closure_tol = 1e-10) {
  if (raw_points.size() < 4)
    throw DegenerateCurve("resample_arclength: need at least 4 points");
  if (n < 4) throw std::invalid_argument("resample_arclength: need at least 4 output nodes");

  const double scale = detail::polyline_scale(raw_points);
  std::vector<Vec2> pts = raw_points;
  if (closed) {
    const double gap = distance(pts.front(), pts.back());
    if (gap > closure_tol * scale && gap > closure_tol)
      throw NotClosed(
          "resample_arclength: endpoints of a closed curve do not coincide; "
          "a closed polyline must repeat its first point");
    pts.back() = pts.front();
  }

  std::vector<double> chord(pts.size(), 0.0);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double seg = distance(pts[i - 1], pts[i]);
    if (seg == 0.0)
      throw DegenerateCurve("resample_arclength: consecutive duplicate points");
    chord[i] = chord[i - 1] + seg;
  }
  const double total = chord.back();
  if (total == 0.0) throw DegenerateCurve("resample_arclength: zero-length polyline");

  SampledCurve out;
  out.closed = closed;
  out.points.resize(n);
  out.s.resize(n);
  std::size_t seg = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const double target = total * static_cast<double>(j) / static_cast<double>(n - 1);
    while (seg + 2 < chord.size() && chord[seg + 1] < target) ++seg;
    const double w = (target - chord[seg]) / (chord[seg + 1] - chord[seg]);
    out.points[j] = pts[seg] + w * (pts[seg + 1] - pts[seg]);
    out.s[j] = target;
  }
  if (closed) out.points[n - 1] = out.points[0];
  detail::fill_frames_by_differences(out);
  return out;
}

// Assemble a curve from analytically known data (positions, arclength, unit
// tangents, curvature).  Normals are derived from the tangents.
inline SampledCurve make_sampled_curve(std::vector<Vec2> points, std::vector<double> s,
                                       std::vector<Vec2> tangents, std::vector<double> curvature,
                                       bool closed) {
  const std::size_t n = points.size();
  if (n < 4 || s.size() != n || tangents.size() != n || curvature.size() != n)
    throw std::invalid_argument("make_sampled_curve: inconsistent array sizes");
  for (std::size_t i = 1; i < n; ++i)
    if (!(s[i] > s[i - 1])) throw std::invalid_argument("make_sampled_curve: s must increase");
  for (const Vec2& t : tangents)
    if (std::fabs(norm(t) - 1.0) > 1e-10)
      throw std::invalid_argument("make_sampled_curve: tangents must be unit vectors");
  if (closed && distance(points.front(), points.back()) > 1e-10 * detail::polyline_scale(points))
    throw NotClosed("make_sampled_curve: closed curve endpoints do not coincide");

  SampledCurve out;
  out.points = std::move(points);
  out.s = std::move(s);
  out.tangent = std::move(tangents);
  out.curvature = std::move(curvature);
  out.closed = closed;
  out.normal.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.normal[i] = perp_ccw(out.tangent[i]);
  return out;
}

namespace detail {

template <class Get>
double trapezoid(const SampledCurve& c, Get get) {
  double acc = 0.0;
  for (std::size_t i = 1; i < c.size(); ++i)
    acc += 0.5 * (get(i - 1) + get(i)) * (c.s[i] - c.s[i - 1]);
  return acc;
}

}  // namespace detail

// Bending energy, length and penalized total of a sampled curve by composite
// trapezoid over the arclength grid.
inline EnergyReport energy_report(const SampledCurve& curve, double delta) {
  if (!(delta >= 0.0)) throw std::invalid_argument("energy_report: delta must be >= 0");
  const double bending =
      detail::trapezoid(curve, [&](std::size_t i) { return curve.curvature[i] * curve.curvature[i]; });
  const double tac =
      detail::trapezoid(curve, [&](std::size_t i) { return std::fabs(curve.curvature[i]); });
  return make_energy_report(bending, curve.length(), delta, tac);
}

// Total absolute curvature of a closed curve and the two bounds it feeds:
// int |k| ds >= 2 pi for any closed curve (with or without
// self-intersections) and the Holder consequence E * L >= (int |k| ds)^2.
// The default tolerance absorbs the discretization error of finite-
// difference curvature on resampled polylines.
inline GaussBonnetReport gauss_bonnet_check(const SampledCurve& curve, double tol = 1e-3) {
  if (!curve.closed) throw NotClosed("gauss_bonnet_check: curve is not closed");
  const EnergyReport r = energy_report(curve, 0.0);
  GaussBonnetReport g;
  g.total_abs_curvature = r.total_abs_curvature;
  g.satisfies_lower_bound = r.total_abs_curvature >= g.lower_bound - tol;
  g.holder_consistent =
      r.bending * r.length >= r.total_abs_curvature * r.total_abs_curvature - tol;
  return g;
}

// Rescaled copy: positions and arclength scale by `factor`, curvature by
// 1/factor, the frame is unchanged.
inline SampledCurve scaled(const SampledCurve& curve, double factor) {
  if (!(factor > 0.0)) throw std::invalid_argument("scaled: factor must be positive");
  SampledCurve out = curve;
  for (Vec2& p : out.points) p = p * factor;
  for (double& v : out.s) v *= factor;
  for (double& k : out.curvature) k /= factor;
  return out;
}

}  // namespace elastica
