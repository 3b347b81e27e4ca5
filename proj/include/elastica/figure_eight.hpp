#pragma once

// The Figure Eight: the unique closed planar elastica with a
// self-intersection (up to multiple covers).  Everything here is driven by
// its closed-form parametrization through Jacobi elliptic functions,
//
//   y(s) = a cn(sqrt(lambda) s, m),
//   x(s) = (2/sqrt(lambda)) E(am(sqrt(lambda) s, m), m) - s,
//   k(s) = -lambda y(s),
//
// where the parameter m is pinned by the closure condition 2E(m) = K(m) and
// the remaining constants follow from the penalty weight delta.  The curve
// closes after one full cn period, s in [0, 4 s_bar] with
// s_bar = K(m)/sqrt(lambda), crossing itself at the origin at s_bar and
// 3 s_bar.
//
// The module also provides residual validators for the stationarity
// equation 2 k'' + k^3 - delta k = 0 and for the first-order system
// x'' = lambda y y', y'' = -lambda y x' satisfied by the coordinates of any
// arclength-parametrized elastica.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "elastica/curve.hpp"
#include "elastica/elliptic.hpp"
#include "elastica/error.hpp"
#include "elastica/numerics.hpp"
#include "elastica/vec2.hpp"

namespace elastica {

// Parameter bundle of the wavelike elastica that closes into the Figure
// Eight.  The constants are tied together by
//   m = (1 - mu)/2,  a^2 = 2(1 - mu)/lambda,  delta = -2 lambda mu,
//   s_bar = K(m)/sqrt(lambda),  lambda^2 = b + delta^2/4.
struct ElasticaParams {
  double m = 0.0;       // elliptic parameter of the closure root
  double mu = 0.0;      // x' at the self-intersection; negative for the eight
  double lambda = 0.0;  // curvature scale, k = -lambda y
  double a = 0.0;       // amplitude, y(0) = a is the maximal height
  double sbar = 0.0;    // quarter arclength K(m)/sqrt(lambda)
  double delta = 1.0;   // penalty weight of F_delta = E + delta L
  double b = 0.0;       // first-integral constant, lambda^2 = b + delta^2/4

  EllipticParameter parameter() const { return EllipticParameter{m}; }
};

// Closure gap g(m) = 2E(m) - K(m); the Figure Eight closes at its unique
// root.  g decreases from pi/2 at m=0 (E decreasing, K increasing).
inline double closure_gap(double m) {
  const EllipticParameter p{m};
  return 2.0 * complete_E(p) - complete_K(p);
}

// Root m_bar of the closure gap on (0,1); approximately 0.826115.
inline EllipticParameter solve_closure(Tolerance tol = {}) {
  const double root = find_root([](double m) { return closure_gap(m); }, {0.01, 0.99}, tol);
  return EllipticParameter{root};
}

// All Figure-Eight constants for a given penalty weight.
inline ElasticaParams figure_eight_params(double delta = 1.0) {
  if (!(delta > 0.0)) throw std::invalid_argument("figure_eight_params: delta must be positive");
  ElasticaParams p;
  p.delta = delta;
  p.m = solve_closure().value();
  p.mu = 1.0 - 2.0 * p.m;
  p.lambda = -delta / (2.0 * p.mu);
  p.a = std::sqrt(2.0 * (1.0 - p.mu) / p.lambda);
  p.sbar = complete_K(p.parameter()) / std::sqrt(p.lambda);
  p.b = p.lambda * p.lambda - 0.25 * delta * delta;
  return p;
}

struct EightPoint {
  Vec2 position;
  Vec2 tangent;  // (x', y'), unit speed
  double curvature = 0.0;
};

// Evaluate the closed-form parametrization at arclength s.  The tangent uses
// the analytic derivatives x' = (lambda/2) y^2 + mu and y' = -a sqrt(lambda)
// sn dn, never finite differences, so the branch sign at y = 0 is exact.
inline EightPoint eight_point(const ElasticaParams& p, double s) {
  const EllipticParameter m = p.parameter();
  const double rt = std::sqrt(p.lambda);
  const double u = rt * s;
  const JacobiTriple j = jacobi_sncndn(u, m);

  EightPoint out;
  out.position.y = p.a * j.cn;
  out.position.x = (2.0 / rt) * incomplete_E(jacobi_am(u, m), m) - s;
  out.curvature = -p.lambda * out.position.y;
  out.tangent.x = 0.5 * p.lambda * out.position.y * out.position.y + p.mu;
  out.tangent.y = -p.a * rt * j.sn * j.dn;
  return out;
}

// Sample the full eight over s in [0, 4 s_bar] with analytically stored
// tangents and curvature.  The seam node is snapped onto the start point
// after verifying that the parametrization closes to within 1e-8 * L.
inline SampledCurve sample_eight(const ElasticaParams& p, std::size_t n = 4096) {
  if (n < 64) throw std::invalid_argument("sample_eight: need at least 64 nodes");
  const double total = 4.0 * p.sbar;

  std::vector<Vec2> pts(n), tans(n);
  std::vector<double> s(n), k(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = total * static_cast<double>(i) / static_cast<double>(n - 1);
    const EightPoint q = eight_point(p, s[i]);
    pts[i] = q.position;
    tans[i] = q.tangent;
    k[i] = q.curvature;
  }
  if (distance(pts.front(), pts.back()) > 1e-8 * total)
    throw Error("sample_eight: parametrization failed to close");
  pts.back() = pts.front();
  tans.back() = tans.front();
  k.back() = k.front();
  return make_sampled_curve(std::move(pts), std::move(s), std::move(tans), std::move(k), true);
}

// Penalized energy of the full eight.  E is evaluated by adaptive quadrature
// of 4 int_0^{s_bar} lambda^2 a^2 cn^2 ds; L = 4 s_bar is exact.
inline EnergyReport eight_report(const ElasticaParams& p) {
  const EllipticParameter m = p.parameter();
  const double rt = std::sqrt(p.lambda);
  const auto k2 = [&](double s) {
    const double k = -p.lambda * p.a * jacobi_cn(rt * s, m);
    return k * k;
  };
  const Tolerance quad_tol{1e-12, 1e-12, 200};
  const double bending = 4.0 * integrate(k2, 0.0, p.sbar, quad_tol);
  // cn >= 0 on the first quarter period, so |k| integrates the same factors.
  const double tac =
      4.0 * integrate([&](double s) { return std::sqrt(k2(s)); }, 0.0, p.sbar, quad_tol);
  return make_energy_report(bending, 4.0 * p.sbar, p.delta, tac);
}

// Closed-form value of the bending energy via int_0^K cn^2 = (E - (1-m)K)/m,
// used as an independent cross-check of the quadrature.
inline double eight_bending_closed_form(const ElasticaParams& p) {
  const EllipticParameter m = p.parameter();
  const double K = complete_K(m), E = complete_E(m);
  return 4.0 * std::pow(p.lambda, 1.5) * p.a * p.a * (E - (1.0 - p.m) * K) / p.m;
}

// Energy of the optimal drop: one lobe of the eight through the crossing
// point, s in [s_bar, 3 s_bar].  By symmetry E and L are exactly half the
// full-eight values, and the endpoints meet at the origin with k = 0 and
// opposite curvature slopes.
inline EnergyReport drop_report(const ElasticaParams& p) {
  const EnergyReport full = eight_report(p);
  return make_energy_report(0.5 * full.bending, 0.5 * full.length, p.delta,
                            0.5 * full.total_abs_curvature);
}

// Sample of the drop lobe, open curve from the crossing point back to itself.
inline SampledCurve sample_drop(const ElasticaParams& p, std::size_t n = 2048) {
  if (n < 64) throw std::invalid_argument("sample_drop: need at least 64 nodes");
  std::vector<Vec2> pts(n), tans(n);
  std::vector<double> s(n), k(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double si = p.sbar + 2.0 * p.sbar * static_cast<double>(i) / static_cast<double>(n - 1);
    const EightPoint q = eight_point(p, si);
    s[i] = si - p.sbar;
    pts[i] = q.position;
    tans[i] = q.tangent;
    k[i] = q.curvature;
  }
  return make_sampled_curve(std::move(pts), std::move(s), std::move(tans), std::move(k), false);
}

struct JunctionAngles {
  double small_deg = 0.0;
  double large_deg = 0.0;
};

// Angles between the two tangents at the self-intersection.  The crossing
// tangents are (mu, -sqrt(1-mu^2)) and (mu, +sqrt(1-mu^2)), so the angle
// between them is arccos(2 mu^2 - 1); reported in degrees with its
// supplement, small + large = 180.
inline JunctionAngles junction_angles(const ElasticaParams& p) {
  const double big = std::acos(2.0 * p.mu * p.mu - 1.0) * 180.0 / std::numbers::pi;
  JunctionAngles a;
  a.large_deg = std::fmax(big, 180.0 - big);
  a.small_deg = 180.0 - a.large_deg;
  return a;
}

namespace detail {

inline double uniform_step_checked(const SampledCurve& c, const char* who) {
  const double h = c.step();
  for (std::size_t i = 1; i < c.size(); ++i)
    if (std::fabs(c.s[i] - c.s[i - 1] - h) > 1e-9 * h)
      throw std::invalid_argument(std::string(who) + ": requires a uniform arclength grid");
  return h;
}

// Strip the duplicated seam node of a closed curve.
template <class T>
std::vector<T> drop_seam(const std::vector<T>& v) {
  return std::vector<T>(v.begin(), v.end() - 1);
}

}  // namespace detail

// Max-norm residual of the Euler-Lagrange equation 2 k'' + k^3 - delta k = 0
// over the curve's nodes, with k'' by second differences on the arclength
// grid.  Closed curves difference around the seam; open curves report the
// interior nodes only.
inline double el_residual(const SampledCurve& curve, double delta) {
  if (curve.size() < 16) throw TooFewSamples("el_residual: need at least 16 nodes");
  const double h = detail::uniform_step_checked(curve, "el_residual");

  std::vector<double> k = curve.closed ? detail::drop_seam(curve.curvature) : curve.curvature;
  const std::vector<double> kss =
      curve.closed ? second_derivative_periodic(k, h) : second_derivative(k, h);
  double worst = 0.0;
  const std::size_t begin = curve.closed ? 0 : 1;
  const std::size_t end = curve.closed ? k.size() : k.size() - 1;
  for (std::size_t i = begin; i < end; ++i)
    worst = std::fmax(worst, std::fabs(2.0 * kss[i] + k[i] * k[i] * k[i] - delta * k[i]));
  return worst;
}

// Max-norm residual of the coordinate system x'' = lambda y y',
// y'' = -lambda y x' with all derivatives by finite differences in s.
inline double system_residual(const SampledCurve& curve, double lambda) {
  if (curve.size() < 16) throw TooFewSamples("system_residual: need at least 16 nodes");
  const double h = detail::uniform_step_checked(curve, "system_residual");

  std::vector<double> x(curve.size()), y(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) {
    x[i] = curve.points[i].x;
    y[i] = curve.points[i].y;
  }
  if (curve.closed) {
    x = detail::drop_seam(x);
    y = detail::drop_seam(y);
  }
  const auto d1 = curve.closed ? first_derivative_periodic : first_derivative;
  const auto d2 = curve.closed ? second_derivative_periodic : second_derivative;
  const std::vector<double> xp = d1(x, h), yp = d1(y, h);
  const std::vector<double> xpp = d2(x, h), ypp = d2(y, h);

  double worst = 0.0;
  const std::size_t begin = curve.closed ? 0 : 1;
  const std::size_t end = curve.closed ? x.size() : x.size() - 1;
  for (std::size_t i = begin; i < end; ++i) {
    const double r = std::fabs(xpp[i] - lambda * y[i] * yp[i]) +
                     std::fabs(ypp[i] + lambda * y[i] * xp[i]);
    worst = std::fmax(worst, r);
  }
  return worst;
}

}  // namespace elastica
