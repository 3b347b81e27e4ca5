#pragma once

// Scaling calculus for penalized functionals F_delta = A + delta*B where A
// and B are homogeneous under dilation:
//
//   A(lambda G) = lambda^(-alpha) A(G),   B(lambda G) = lambda^(beta) B(G).
//
// For the curve energies of this library alpha = beta = 1 (bending energy
// and length); beta = 2 covers enclosed area.  The operations work on the
// functional VALUES only; geometry modules supply them.

#include <cmath>
#include <stdexcept>

#include "elastica/error.hpp"

namespace elastica {

struct HomogeneityPair {
  double alpha = 1.0;  // degree of the decaying term A
  double beta = 1.0;   // degree of the growing term B
};

struct FunctionalValues {
  double A = 0.0;      // bending-type value, >= 0
  double B = 0.0;      // length/area-type value, > 0
  double delta = 1.0;  // penalty weight, > 0
};

namespace detail {

inline void check_degrees(const HomogeneityPair& d) {
  if (!(d.alpha > 0.0) || !(d.beta > 0.0))
    throw std::invalid_argument("homogeneity degrees must be positive");
}

inline void check_values(const FunctionalValues& v) {
  if (!(v.A >= 0.0)) throw std::invalid_argument("functional value A must be >= 0");
  if (!(v.B > 0.0)) throw std::invalid_argument("functional value B must be > 0");
  if (!(v.delta > 0.0)) throw std::invalid_argument("penalty weight delta must be > 0");
}

}  // namespace detail

// F_delta evaluated on the rescaling by `factor` of the geometry behind the
// values: factor^(-alpha) A + delta * factor^(beta) B.
inline double penalized_value(const FunctionalValues& v, const HomogeneityPair& d, double factor) {
  detail::check_degrees(d);
  detail::check_values(v);
  if (!(factor > 0.0)) throw std::invalid_argument("rescaling factor must be positive");
  return std::pow(factor, -d.alpha) * v.A + v.delta * std::pow(factor, d.beta) * v.B;
}

struct UnitReduction {
  double scale = 1.0;          // delta^(-1/(alpha+beta)); G -> scale*G turns F_delta into F_1
  double energy_factor = 1.0;  // delta^(alpha/(alpha+beta)); F_delta(scale*G) = factor * F_1(G)
};

// Reduction of the penalized problem to delta = 1:
// F_1(G) = energy_factor^(-1) * F_delta(scale * G).
inline UnitReduction reduce_to_unit(const FunctionalValues& v, const HomogeneityPair& d) {
  detail::check_degrees(d);
  detail::check_values(v);
  const double p = 1.0 / (d.alpha + d.beta);
  return {std::pow(v.delta, -p), std::pow(v.delta, d.alpha * p)};
}

// Dilation factor minimizing F over all rescalings:
// lambda_opt = (alpha A / (beta delta B))^(1/(alpha+beta)).
inline double optimal_scale(const FunctionalValues& v, const HomogeneityPair& d) {
  detail::check_degrees(d);
  detail::check_values(v);
  if (v.A == 0.0)
    throw ZeroBending("optimal_scale: A = 0 has no optimal rescaling (infimum at scale -> 0)");
  return std::pow(d.alpha * v.A / (d.beta * v.delta * v.B), 1.0 / (d.alpha + d.beta));
}

// Value of F at the optimal rescaling,
// (1 + alpha/beta) (beta/alpha)^(alpha/(alpha+beta)) A^(beta/(alpha+beta)) (delta B)^(alpha/(alpha+beta)).
// When alpha = beta the two terms of F are equal there (equipartition).
inline double energy_at_optimal(const FunctionalValues& v, const HomogeneityPair& d) {
  detail::check_degrees(d);
  detail::check_values(v);
  if (v.A == 0.0) throw ZeroBending("energy_at_optimal: undefined for A = 0");
  const double p = 1.0 / (d.alpha + d.beta);
  return (1.0 + d.alpha / d.beta) * std::pow(d.beta / d.alpha, d.alpha * p) *
         std::pow(v.A, d.beta * p) * std::pow(v.delta * v.B, d.alpha * p);
}

// Factor mapping a penalized minimizer with B = B_current onto a competitor
// for the constrained problem B = B0: (B_current/B0)^(-1/beta).
inline double constrained_scale_factor(double B_current, double B0, const HomogeneityPair& d) {
  detail::check_degrees(d);
  if (!(B_current > 0.0) || !(B0 > 0.0))
    throw NonpositiveConstraint("constrained_scale_factor: B values must be positive");
  return std::pow(B_current / B0, -1.0 / d.beta);
}

}  // namespace elastica
