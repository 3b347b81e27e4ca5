#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "elastica/error.hpp"

namespace elastica {

struct Bracket {
  double lo;
  double hi;
};

struct Tolerance {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_iter = 200;
};

namespace detail {

inline void check_tolerance(const Tolerance& tol) {
  if (!(tol.abs_tol > 0.0) || !(tol.rel_tol >= 0.0) || tol.max_iter < 1)
    throw std::invalid_argument("tolerance: need abs_tol > 0, rel_tol >= 0, max_iter >= 1");
}

}  // namespace detail

// Bracketed scalar root finding.  Bisection provides the convergence
// guarantee; a secant candidate is taken instead whenever it falls strictly
// inside the current bracket, which gives superlinear convergence on the
// smooth monotone functions this library feeds it.
template <class F>
double find_root(F&& f, Bracket bracket, Tolerance tol = {}) {
  detail::check_tolerance(tol);
  if (!(bracket.lo < bracket.hi))
    throw std::invalid_argument("find_root: bracket requires lo < hi");

  double a = bracket.lo, b = bracket.hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0))
    throw NoSignChange("find_root: f(lo) and f(hi) have the same sign");

  // Secant memory: the two most recent evaluations.
  double x0 = a, f0 = fa;
  double x1 = b, f1 = fb;
  for (int iter = 0; iter < tol.max_iter; ++iter) {
    const double mid = 0.5 * (a + b);
    const double width_tol = tol.abs_tol + tol.rel_tol * std::fabs(mid);
    if (b - a <= width_tol) return mid;

    double c = mid;
    if (f1 != f0) {
      const double secant = x1 - f1 * (x1 - x0) / (f1 - f0);
      // Accept the secant step only when it makes real progress into the
      // bracket interior; otherwise bisect.
      const double guard = 0.01 * (b - a);
      if (std::isfinite(secant) && secant > a + guard && secant < b - guard) c = secant;
    }

    const double fc = f(c);
    if (std::fabs(fc) <= tol.abs_tol) return c;
    if ((fc > 0.0) == (fa > 0.0)) {
      a = c;
      fa = fc;
    } else {
      b = c;
      fb = fc;
    }
    x0 = x1;
    f0 = f1;
    x1 = c;
    f1 = fc;
  }
  throw MaxIterExceeded("find_root: no convergence within max_iter");
}

namespace detail {

// One Simpson panel over [a,b] given the three function values.
inline double simpson_panel(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adaptive_simpson(F& f, double a, double b, double fa, double fm, double fb, double whole,
                        double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson_panel(a, m, fa, flm, fm);
  const double right = simpson_panel(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * eps)
    return left + right + delta / 15.0;
  if (depth <= 0)
    throw MaxIterExceeded("integrate: subdivision limit reached before tolerance");
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

}  // namespace detail

// Adaptive Simpson quadrature of f over [a,b].  The returned value has an
// estimated error below max(abs_tol, rel_tol*|I|).
template <class F>
double integrate(F&& f, double a, double b, Tolerance tol = {}) {
  detail::check_tolerance(tol);
  if (!(a <= b)) throw std::invalid_argument("integrate: requires a <= b");
  if (a == b) return 0.0;

  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double coarse = detail::simpson_panel(a, b, fa, fm, fb);
  const double eps = std::fmax(tol.abs_tol, tol.rel_tol * std::fabs(coarse));
  const int max_depth = std::min(tol.max_iter, 48);
  return detail::adaptive_simpson(f, a, b, fa, fm, fb, coarse, eps, max_depth);
}

// Second derivative of uniformly spaced samples.  Central three-point stencil
// in the interior, one-sided four-point stencils at the boundary; both are
// exact on quadratics.  Output length equals input length.
inline std::vector<double> second_derivative(const std::vector<double>& samples, double step) {
  const std::size_t n = samples.size();
  if (n < 3) throw TooFewSamples("second_derivative: need at least 3 samples");
  if (!(step > 0.0)) throw std::invalid_argument("second_derivative: step must be positive");

  const double h2 = step * step;
  std::vector<double> out(n);
  for (std::size_t i = 1; i + 1 < n; ++i)
    out[i] = (samples[i - 1] - 2.0 * samples[i] + samples[i + 1]) / h2;
  if (n >= 4) {
    out[0] = (2.0 * samples[0] - 5.0 * samples[1] + 4.0 * samples[2] - samples[3]) / h2;
    out[n - 1] =
        (2.0 * samples[n - 1] - 5.0 * samples[n - 2] + 4.0 * samples[n - 3] - samples[n - 4]) / h2;
  } else {
    // With exactly 3 samples the parabola through them has constant second
    // derivative; reuse the interior value at both ends.
    out[0] = out[1];
    out[2] = out[1];
  }
  return out;
}

// First derivative of uniformly spaced samples, second order throughout.
inline std::vector<double> first_derivative(const std::vector<double>& samples, double step) {
  const std::size_t n = samples.size();
  if (n < 3) throw TooFewSamples("first_derivative: need at least 3 samples");
  if (!(step > 0.0)) throw std::invalid_argument("first_derivative: step must be positive");

  std::vector<double> out(n);
  for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (samples[i + 1] - samples[i - 1]) / (2.0 * step);
  out[0] = (-3.0 * samples[0] + 4.0 * samples[1] - samples[2]) / (2.0 * step);
  out[n - 1] = (3.0 * samples[n - 1] - 4.0 * samples[n - 2] + samples[n - 3]) / (2.0 * step);
  return out;
}

// Periodic variants used for closed curves.  `samples` holds one full period
// without a duplicated seam value; neighbours wrap around.
inline std::vector<double> second_derivative_periodic(const std::vector<double>& samples,
                                                      double step) {
  const std::size_t n = samples.size();
  if (n < 3) throw TooFewSamples("second_derivative_periodic: need at least 3 samples");
  if (!(step > 0.0)) throw std::invalid_argument("second_derivative_periodic: step must be positive");

  const double h2 = step * step;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double prev = samples[(i + n - 1) % n];
    const double next = samples[(i + 1) % n];
    out[i] = (prev - 2.0 * samples[i] + next) / h2;
  }
  return out;
}

inline std::vector<double> first_derivative_periodic(const std::vector<double>& samples,
                                                     double step) {
  const std::size_t n = samples.size();
  if (n < 3) throw TooFewSamples("first_derivative_periodic: need at least 3 samples");
  if (!(step > 0.0)) throw std::invalid_argument("first_derivative_periodic: step must be positive");

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double prev = samples[(i + n - 1) % n];
    const double next = samples[(i + 1) % n];
    out[i] = (next - prev) / (2.0 * step);
  }
  return out;
}

}  // namespace elastica
