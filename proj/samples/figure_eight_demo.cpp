// Minimal tour of the Figure-Eight pipeline: solve the closure equation,
// assemble the parameters, print the energy report and write an SVG.

#include <cstdio>

#include "elastica/elastica.hpp"

int main() {
  using namespace elastica;

  const ElasticaParams p = figure_eight_params(1.0);
  std::printf("closure parameter m  = %.9f\n", p.m);
  std::printf("mu                   = %.9f\n", p.mu);
  std::printf("lambda               = %.9f\n", p.lambda);
  std::printf("amplitude a          = %.9f\n", p.a);
  std::printf("quarter length s_bar = %.9f\n", p.sbar);

  const EnergyReport r = eight_report(p);
  std::printf("bending energy E     = %.9f\n", r.bending);
  std::printf("length L             = %.9f\n", r.length);
  std::printf("penalized total F    = %.9f\n", r.total);

  const JunctionAngles angles = junction_angles(p);
  std::printf("crossing angles      = %.3f / %.3f degrees\n", angles.small_deg, angles.large_deg);

  const SampledCurve curve = sample_eight(p, 2049);
  std::printf("EL residual          = %.3e\n", el_residual(curve, 1.0));

  SvgFigure fig;
  fig.add_curve(curve);
  fig.add_marker({0.0, 0.0});
  fig.write("figure_eight.svg");
  std::printf("wrote figure_eight.svg\n");
  return 0;
}
