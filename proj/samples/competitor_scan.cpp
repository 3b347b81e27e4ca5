// Scan the optimal energies of generalized angle-triple networks over the
// admissible range and compare against the Figure Eight and the standard
// double bubble.

#include <cstdio>
#include <numbers>

#include "elastica/elastica.hpp"

int main() {
  using namespace elastica;
  const double cap = 0.75 * std::numbers::pi;
  const double eight_total = eight_report(figure_eight_params(1.0)).total;
  const double bubble_total =
      double_bubble(optimal_double_bubble_radius(), 256).closed_form.total;

  std::printf("figure eight F = %.6f,  standard double bubble F = %.6f\n\n", eight_total,
              bubble_total);
  std::printf("%10s %10s %12s\n", "alpha1", "alpha2", "F(N_opt)");
  for (int i = 2; i <= 10; ++i) {
    for (int j = i; j <= 10; ++j) {
      const double a1 = cap * i / 10.0;
      const double a2 = cap * j / 10.0;
      const double value = optimal_generalized_energy({a1, a2, 2.0 * std::numbers::pi - a1 - a2});
      std::printf("%10.4f %10.4f %12.6f%s\n", a1, a2, value,
                  value < eight_total ? "" : "  (!)");
    }
  }
  return 0;
}
