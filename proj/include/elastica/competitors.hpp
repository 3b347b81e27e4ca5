#pragma once

// Closed-form competitor networks and their energies at delta = 1: the
// circle minimizer, the standard double bubble, the generalized
// angle-triple network {A1, A2, S} (two circular arcs joined by a straight
// segment) and the collapsing sequence that witnesses ill-posedness without
// an angle condition.  Every constructor returns both the exact energy
// table and a sampled Network so the closed forms can be checked against
// quadrature on the emitted geometry.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "elastica/curve.hpp"
#include "elastica/error.hpp"
#include "elastica/network.hpp"
#include "elastica/rescale.hpp"
#include "elastica/vec2.hpp"

namespace elastica {

// Angle triple at the junctions of a generalized 3-network; sorted ascending
// on construction, each angle in (0, 2 pi), summing to 2 pi.
class AngleTriple {
 public:
  AngleTriple(double a1, double a2, double a3) {
    if (!(a1 > 0.0 && a2 > 0.0 && a3 > 0.0) ||
        !(a1 < 2.0 * std::numbers::pi && a2 < 2.0 * std::numbers::pi &&
          a3 < 2.0 * std::numbers::pi))
      throw DegenerateAngle("angle triple: each angle must lie in (0, 2 pi)");
    if (std::fabs(a1 + a2 + a3 - 2.0 * std::numbers::pi) > 1e-9)
      throw DegenerateAngle("angle triple: angles must sum to 2 pi");
    if (a1 > a2) std::swap(a1, a2);
    if (a2 > a3) std::swap(a2, a3);
    if (a1 > a2) std::swap(a1, a2);
    alpha1_ = a1;
    alpha2_ = a2;
    alpha3_ = a3;
  }

  double alpha1() const { return alpha1_; }
  double alpha2() const { return alpha2_; }
  double alpha3() const { return alpha3_; }

 private:
  double alpha1_, alpha2_, alpha3_;
};

struct CompetitorGeometry {
  Network network;
  double radius = 0.0;       // radius of the defining circle (arc A1 / circle)
  EnergyReport closed_form;  // exact energies at delta = 1 unless stated
};

namespace detail {

inline std::vector<Vec2> arc_points(Vec2 center, double radius, double t0, double t1,
                                    bool flip_y, std::size_t n) {
  std::vector<Vec2> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(n - 1);
    const double cy = flip_y ? -std::cos(t) : std::cos(t);
    pts[i] = center + radius * Vec2{std::sin(t), cy};
  }
  return pts;
}

inline std::vector<Vec2> segment_points(Vec2 a, Vec2 b, std::size_t n) {
  std::vector<Vec2> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = static_cast<double>(i) / static_cast<double>(n - 1);
    pts[i] = a + w * (b - a);
  }
  return pts;
}

}  // namespace detail

// The minimizer among closed curves: the circle of radius delta^(-1/2), the
// optimal rescaling of the unit circle, with F = 4 pi sqrt(delta).
inline CompetitorGeometry circle_minimizer(double delta = 1.0, std::size_t nodes = 2048) {
  if (!(delta > 0.0)) throw std::invalid_argument("circle_minimizer: delta must be positive");
  const double radius = reduce_to_unit({2.0 * std::numbers::pi, 2.0 * std::numbers::pi, delta},
                                       {1.0, 1.0})
                            .scale;  // delta^(-1/2)

  std::vector<Vec2> raw(nodes + 1);
  for (std::size_t i = 0; i <= nodes; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(nodes);
    raw[i] = {radius * std::cos(t), radius * std::sin(t)};
  }
  raw.back() = raw.front();

  CompetitorGeometry g;
  g.radius = radius;
  g.network.curves.push_back(make_network_curve(resample_arclength(raw, nodes + 1, true)));
  g.network.classification = classify(g.network);
  const double L = 2.0 * std::numbers::pi * radius;
  g.closed_form = make_energy_report(L / (radius * radius), L, delta, 2.0 * std::numbers::pi);
  return g;
}

// Generalized 3-network with angles (alpha1, alpha2, alpha3): a segment S of
// length 2 sin(alpha1) R on the x-axis, the arc A1 of radius R meeting S at
// angle alpha1 at both endpoints (above), and the arc A2 of radius
// R sin(alpha1)/sin(alpha2) meeting S at angle alpha2 (below).  The exact
// table at delta = 1:
//
//   L(A1) = 2 alpha1 R            E(A1) = 2 alpha1 / R
//   L(A2) = 2 alpha2 sin(alpha1)/sin(alpha2) R
//                                 E(A2) = 2 alpha2 sin(alpha2)/(sin(alpha1) R)
//   L(S)  = 2 sin(alpha1) R       E(S)  = 0
inline CompetitorGeometry generalized_network(const AngleTriple& angles, double R,
                                              std::size_t nodes_per_curve = 2048) {
  if (!(R > 0.0)) throw NonpositiveRadius("generalized_network: radius must be positive");
  const double a1 = angles.alpha1(), a2 = angles.alpha2();
  const double s1 = std::sin(a1), s2 = std::sin(a2);
  if (s1 <= 1e-12 || s2 <= 1e-12)
    throw DegenerateAngle("generalized_network: sin(alpha1) and sin(alpha2) must be nonzero");

  const double w = R * s1;          // half chord
  const double R2 = R * s1 / s2;    // radius of the second arc
  const std::size_t n = nodes_per_curve;
  const Vec2 j1{-w, 0.0}, j2{w, 0.0};

  // Arc A1 spans central angle 2*alpha1 above the chord, A2 spans 2*alpha2
  // below it; the tangent-chord angle then equals alpha1 resp. alpha2.
  const auto raw_a1 = detail::arc_points({0.0, -R * std::cos(a1)}, R, -a1, a1, false, n);
  const auto raw_a2 = detail::arc_points({0.0, R2 * std::cos(a2)}, R2, -a2, a2, true, n);
  const auto raw_s = detail::segment_points(j1, j2, n);

  Network net;
  net.curves.push_back(make_network_curve(resample_arclength(raw_a1, n, false)));
  net.curves.push_back(make_network_curve(resample_arclength(raw_a2, n, false)));
  net.curves.push_back(make_network_curve(resample_arclength(raw_s, n, false)));

  const double deg = 180.0 / std::numbers::pi;
  for (const Vec2& pos : {j1, j2}) {
    Junction j;
    j.position = pos;
    const CurveEnd e = (pos.x < 0.0) ? CurveEnd::start : CurveEnd::end;
    j.incident = {{0, e}, {1, e}, {2, e}};
    j.target_angles_deg = std::vector<double>{angles.alpha1() * deg, angles.alpha2() * deg,
                                              angles.alpha3() * deg};
    net.junctions.push_back(j);
  }
  validate_network(net);
  net.classification = classify(net);

  CompetitorGeometry g;
  g.network = std::move(net);
  g.radius = R;
  const double bending = 2.0 * a1 / R + 2.0 * a2 * s2 / (s1 * R);
  const double length = 2.0 * a1 * R + 2.0 * a2 * (s1 / s2) * R + 2.0 * s1 * R;
  g.closed_form = make_energy_report(bending, length, 1.0, 2.0 * a1 + 2.0 * a2);
  return g;
}

// The standard double bubble: the generalized network with all angles
// 2 pi / 3.  At the optimal radius F = (2/3) sqrt(8 pi (8 pi + 3 sqrt(3))).
inline CompetitorGeometry double_bubble(double R, std::size_t nodes_per_curve = 2048) {
  if (!(R > 0.0)) throw NonpositiveRadius("double_bubble: radius must be positive");
  const double third = 2.0 * std::numbers::pi / 3.0;
  return generalized_network({third, third, third}, R, nodes_per_curve);
}

// Optimal radius of the generalized network, obtained from the homogeneity
// calculus on the unit-radius energy table (alpha = beta = 1).
inline double optimal_generalized_radius(const AngleTriple& angles) {
  const double a1 = angles.alpha1(), a2 = angles.alpha2();
  const double s1 = std::sin(a1), s2 = std::sin(a2);
  if (s1 <= 1e-12 || s2 <= 1e-12)
    throw DegenerateAngle("optimal_generalized_radius: degenerate angles");
  const double bending_at_unit = 2.0 * (a1 + a2 * s2 / s1);
  const double length_at_unit = 2.0 * (a1 + a2 * s1 / s2 + s1);
  return optimal_scale({bending_at_unit, length_at_unit, 1.0}, {1.0, 1.0});
}

inline double optimal_double_bubble_radius() {
  const double third = 2.0 * std::numbers::pi / 3.0;
  return optimal_generalized_radius({third, third, third});
}

// Energy of the optimal rescaling of the generalized network,
// F = 4 sqrt(alpha1 + alpha2 sin(alpha2)/sin(alpha1))
//       * sqrt(alpha1 + alpha2 sin(alpha1)/sin(alpha2) + sin(alpha1)).
inline double optimal_generalized_energy(const AngleTriple& angles) {
  const double a1 = angles.alpha1(), a2 = angles.alpha2();
  const double s1 = std::sin(a1), s2 = std::sin(a2);
  if (s1 <= 1e-12 || s2 <= 1e-12)
    throw DegenerateAngle("optimal_generalized_energy: degenerate angles");
  return 4.0 * std::sqrt(a1 + a2 * s2 / s1) * std::sqrt(a1 + a2 * s1 / s2 + s1);
}

// Collapsing 3-network: two unit-radius arcs of length eps joined to the
// chord segment, meeting it at angles eps/2.  Its energy
// F = 4 eps + sqrt(2) sqrt(1 - cos eps) tends to zero with eps, which is why
// the junction angles have to be fixed for a well-posed problem.
inline CompetitorGeometry collapsing_network(double eps, std::size_t nodes_per_curve = 512) {
  if (!(eps > 0.0 && eps < std::numbers::pi))
    throw std::invalid_argument("collapsing_network: eps must lie in (0, pi)");
  const double w = std::sin(0.5 * eps);  // half chord of a unit arc of length eps
  const std::size_t n = nodes_per_curve;
  const Vec2 j1{-w, 0.0}, j2{w, 0.0};

  const auto raw_a1 =
      detail::arc_points({0.0, -std::cos(0.5 * eps)}, 1.0, -0.5 * eps, 0.5 * eps, false, n);
  const auto raw_a2 =
      detail::arc_points({0.0, std::cos(0.5 * eps)}, 1.0, -0.5 * eps, 0.5 * eps, true, n);
  const auto raw_s = detail::segment_points(j1, j2, n);

  Network net;
  net.curves.push_back(make_network_curve(resample_arclength(raw_a1, n, false)));
  net.curves.push_back(make_network_curve(resample_arclength(raw_a2, n, false)));
  net.curves.push_back(make_network_curve(resample_arclength(raw_s, n, false)));
  const double deg = 180.0 / std::numbers::pi;
  for (const Vec2& pos : {j1, j2}) {
    Junction j;
    j.position = pos;
    const CurveEnd e = (pos.x < 0.0) ? CurveEnd::start : CurveEnd::end;
    j.incident = {{0, e}, {1, e}, {2, e}};
    j.target_angles_deg =
        std::vector<double>{0.5 * eps * deg, 0.5 * eps * deg, (2.0 * std::numbers::pi - eps) * deg};
    net.junctions.push_back(j);
  }
  validate_network(net);
  net.classification = classify(net);

  CompetitorGeometry g;
  g.network = std::move(net);
  g.radius = 1.0;
  const double chord = std::sqrt(2.0) * std::sqrt(1.0 - std::cos(eps));
  g.closed_form = make_energy_report(2.0 * eps, 2.0 * eps + chord, 1.0, 2.0 * eps);
  return g;
}

}  // namespace elastica
