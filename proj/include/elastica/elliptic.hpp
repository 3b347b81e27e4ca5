#pragma once

// Jacobi elliptic functions and elliptic integrals in the parameter
// convention: every routine takes the parameter m (the quantity multiplying
// sin^2 in the integrands), not the modulus k = sqrt(m).
//
//   K(m)      = int_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt
//   E(m)      = int_0^{pi/2} (1 - m sin^2 t)^{+1/2} dt
//   E(phi,m)  = int_0^{phi}  (1 - m sin^2 t)^{+1/2} dt
//   am(u,m)   = inverse of u(phi) = int_0^phi (1 - m sin^2 t)^{-1/2} dt
//   cn(u,m)   = cos am(u,m),  sn = sin am,  dn = (1 - m sn^2)^{1/2}
//
// K and E use the arithmetic-geometric mean, the amplitude uses a descending
// Landen transformation with phase doubling after reduction to the
// fundamental period.  The amplitude is returned unreduced: am is globally
// increasing in u and satisfies am(u + 2K, m) = am(u, m) + pi.

#include <cmath>
#include <numbers>

#include "elastica/error.hpp"
#include "elastica/numerics.hpp"

namespace elastica {

// Elliptic parameter m in [0,1].  Routines that need K(m) finite reject m=1.
class EllipticParameter {
 public:
  explicit EllipticParameter(double m) : m_(m) {
    if (!(m >= 0.0 && m <= 1.0))
      throw ParameterOutOfRange("elliptic parameter m must lie in [0,1]");
  }
  double value() const { return m_; }

 private:
  double m_;
};

struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

namespace detail {

inline constexpr double kAgmEps = 1e-16;
inline constexpr int kAgmMaxLevels = 32;

struct AgmScale {
  // a_i and the ratios c_i/a_i of the AGM sequence for 1, sqrt(1-m).
  double a[kAgmMaxLevels + 1];
  double c_over_a[kAgmMaxLevels + 1];
  int levels;  // last index N with c_N negligible
};

inline AgmScale agm_sequence(double m) {
  AgmScale seq{};
  double a = 1.0, b = std::sqrt(1.0 - m);
  seq.a[0] = a;
  seq.c_over_a[0] = std::sqrt(m);
  int i = 0;
  while (i < kAgmMaxLevels) {
    const double c = 0.5 * (a - b);
    if (c <= kAgmEps * a) break;
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    ++i;
    seq.a[i] = a;
    seq.c_over_a[i] = c / a;
  }
  seq.levels = i;
  return seq;
}

inline void require_K_finite(double m) {
  if (m >= 1.0)
    throw ParameterOutOfRange("elliptic: operation requires m < 1 (K(1) diverges)");
}

}  // namespace detail

// Complete elliptic integral of the first kind, K(m), strictly increasing in m.
inline double complete_K(EllipticParameter param) {
  const double m = param.value();
  detail::require_K_finite(m);
  if (m == 0.0) return std::numbers::pi / 2.0;
  const auto seq = detail::agm_sequence(m);
  return std::numbers::pi / (2.0 * seq.a[seq.levels]);
}

// Complete elliptic integral of the second kind, E(m), strictly decreasing in
// m, with E(0) = pi/2 and E(1) = 1.
inline double complete_E(EllipticParameter param) {
  const double m = param.value();
  if (m == 0.0) return std::numbers::pi / 2.0;
  if (m == 1.0) return 1.0;

  // Companion AGM sum: E = K * (1 - sum_{i>=0} 2^{i-1} c_i^2).
  double a = 1.0, b = std::sqrt(1.0 - m);
  double sum = 0.5 * m;  // i = 0 term, c_0^2 = m
  double pow2 = 0.5;
  for (int i = 1; i <= detail::kAgmMaxLevels; ++i) {
    const double c = 0.5 * (a - b);
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    pow2 *= 2.0;
    sum += pow2 * c * c;
    if (c <= detail::kAgmEps * a) break;
  }
  const double K = std::numbers::pi / (2.0 * a);
  return K * (1.0 - sum);
}

// Jacobi amplitude am(u,m), globally increasing and unreduced:
// am(u + 2K(m), m) = am(u, m) + pi.
inline double jacobi_am(double u, EllipticParameter param) {
  const double m = param.value();
  detail::require_K_finite(m);
  if (m == 0.0) return u;

  // Reduce to r in [-K, K]; the removed half periods contribute n*pi exactly.
  const double K = complete_K(param);
  const double n = std::round(u / (2.0 * K));
  const double r = u - 2.0 * K * n;

  // Descending Landen with phase doubling on the reduced argument.
  const auto seq = detail::agm_sequence(m);
  double phi = std::ldexp(seq.a[seq.levels] * r, seq.levels);
  for (int i = seq.levels; i >= 1; --i) {
    double t = seq.c_over_a[i] * std::sin(phi);
    t = std::fmax(-1.0, std::fmin(1.0, t));
    phi = 0.5 * (phi + std::asin(t));
  }
  return phi + n * std::numbers::pi;
}

// sn, cn, dn evaluated together from the amplitude.
inline JacobiTriple jacobi_sncndn(double u, EllipticParameter param) {
  const double phi = jacobi_am(u, param);
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  const double dn = std::sqrt(1.0 - param.value() * sn * sn);
  return {sn, cn, dn};
}

inline double jacobi_cn(double u, EllipticParameter param) {
  return jacobi_sncndn(u, param).cn;
}

// Incomplete elliptic integral of the second kind E(phi,m), odd in phi, with
// the exact accumulation rule E(phi + pi, m) = E(phi, m) + 2 E(m).  The
// residual integral over [-pi/2, pi/2] is evaluated by adaptive quadrature of
// the defining integrand.
inline double incomplete_E(double phi, EllipticParameter param) {
  const double m = param.value();
  if (m == 0.0) return phi;

  const double n = std::round(phi / std::numbers::pi);
  const double psi = phi - n * std::numbers::pi;
  double value = (n != 0.0) ? 2.0 * n * complete_E(param) : 0.0;
  if (psi != 0.0) {
    const auto integrand = [m](double t) {
      const double st = std::sin(t);
      return std::sqrt(1.0 - m * st * st);
    };
    const Tolerance quad_tol{1e-13, 1e-13, 200};
    const double seg = integrate(integrand, 0.0, std::fabs(psi), quad_tol);
    value += (psi > 0.0) ? seg : -seg;
  }
  return value;
}

}  // namespace elastica
