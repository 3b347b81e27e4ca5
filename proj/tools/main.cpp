// Command-line front end: JSON reports, CSV sample dumps and static SVG
// figures for the curve, network and competitor computations.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "elastica/elastica.hpp"
#include "report.hpp"

namespace {

using namespace elastica;

cli::Report energy_object(const EnergyReport& r) {
  cli::Report o;
  o.field("bending", r.bending)
      .field("length", r.length)
      .field("delta", r.delta)
      .field("total", r.total)
      .field("total_abs_curvature", r.total_abs_curvature);
  return o;
}

std::string curve_csv(const SampledCurve& c) {
  std::string out = "s,x,y,k\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    out += cli::format_number(c.s[i]) + "," + cli::format_number(c.points[i].x) + "," +
           cli::format_number(c.points[i].y) + "," + cli::format_number(c.curvature[i]) + "\n";
  }
  return out;
}

std::string network_csv(const Network& net) {
  std::string out = "s,x,y,k\n";
  for (const NetworkCurve& nc : net.curves) {
    if (nc.zero_length()) continue;
    const SampledCurve& c = nc.curve();
    for (std::size_t i = 0; i < c.size(); ++i) {
      out += cli::format_number(c.s[i]) + "," + cli::format_number(c.points[i].x) + "," +
             cli::format_number(c.points[i].y) + "," + cli::format_number(c.curvature[i]) + "\n";
    }
  }
  return out;
}

// CSV to file, or to stdout for "-"; returns true when stdout was used (the
// JSON report is suppressed then).
bool emit_csv(const std::string& path, const std::string& payload) {
  if (path == "-") {
    std::fputs(payload.c_str(), stdout);
    return true;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot open CSV output file: " + path);
  out << payload;
  return false;
}

void emit_report(const cli::Report& report, bool suppressed) {
  if (!suppressed) std::printf("%s\n", report.str().c_str());
}

struct CommonOutputs {
  std::string csv_path;
  std::string svg_path;
};

void add_output_flags(CLI::App* cmd, CommonOutputs& out) {
  cmd->add_option("--csv", out.csv_path, "write node samples as CSV (use '-' for stdout)");
  cmd->add_option("--svg", out.svg_path, "write a static SVG figure to this path");
}

int run_eight(double delta, std::size_t nodes, const CommonOutputs& out) {
  const ElasticaParams p = figure_eight_params(delta);
  const SampledCurve curve = sample_eight(p, nodes);
  const EnergyReport energy = eight_report(p);
  const EnergyReport drop = drop_report(p);
  const JunctionAngles angles = junction_angles(p);
  const GaussBonnetReport gb = gauss_bonnet_check(curve);

  cli::Report params;
  params.field("m", p.m)
      .field("mu", p.mu)
      .field("lambda", p.lambda)
      .field("amplitude", p.a)
      .field("s_bar", p.sbar)
      .field("first_integral_b", p.b);

  cli::Report residuals;
  residuals.field("nodes", static_cast<int>(nodes))
      .field("euler_lagrange", el_residual(curve, delta))
      .field("dynamical_system", system_residual(curve, p.lambda));

  cli::Report gauss;
  gauss.field("total_abs_curvature", gb.total_abs_curvature)
      .field("lower_bound", gb.lower_bound)
      .field("satisfied", gb.satisfies_lower_bound);

  cli::Report angles_obj;
  angles_obj.field("small", angles.small_deg).field("large", angles.large_deg);

  cli::Report report;
  report.field("command", "eight")
      .field("delta", delta)
      .field("closure_root_m", p.m)
      .object("params", params)
      .object("energy", energy_object(energy))
      .field("bending_closed_form", eight_bending_closed_form(p))
      .field("equipartition_gap", std::fabs(energy.bending - delta * energy.length) / energy.total)
      .object("junction_angles_deg", angles_obj)
      .object("drop", energy_object(drop))
      .object("residuals", residuals)
      .object("gauss_bonnet", gauss);

  bool suppress = false;
  if (!out.csv_path.empty()) suppress = emit_csv(out.csv_path, curve_csv(curve));
  if (!out.svg_path.empty()) {
    SvgFigure fig;
    fig.add_curve(curve);
    fig.add_marker({0.0, 0.0});
    fig.write(out.svg_path);
  }
  emit_report(report, suppress);
  return 0;
}

int run_drop(double delta, std::size_t nodes, const CommonOutputs& out) {
  const ElasticaParams p = figure_eight_params(delta);
  const SampledCurve curve = sample_drop(p, nodes);
  const EnergyReport energy = drop_report(p);
  const JunctionAngles angles = junction_angles(p);

  cli::Report endpoints;
  endpoints.field("curvature_start", curve.curvature.front())
      .field("curvature_end", curve.curvature.back())
      .field("curvature_slope_start", -p.lambda * curve.tangent.front().y)
      .field("curvature_slope_end", -p.lambda * curve.tangent.back().y);

  cli::Report report;
  report.field("command", "drop")
      .field("delta", delta)
      .object("energy", energy_object(energy))
      .field("junction_angle_small_deg", angles.small_deg)
      .field("junction_angle_large_deg", angles.large_deg)
      .object("endpoints", endpoints);

  bool suppress = false;
  if (!out.csv_path.empty()) suppress = emit_csv(out.csv_path, curve_csv(curve));
  if (!out.svg_path.empty()) {
    SvgFigure fig;
    fig.add_curve(curve);
    fig.add_marker(curve.points.front());
    fig.write(out.svg_path);
  }
  emit_report(report, suppress);
  return 0;
}

int run_curve(const std::string& file, double delta, std::size_t nodes, bool loose_closure,
              const CommonOutputs& out) {
  LoadOptions opts;
  opts.resample_nodes = nodes;
  opts.closure_tol = loose_closure ? 1e-6 : 1e-10;
  const SampledCurve curve = load_curve_file(file, opts);
  const EnergyReport energy = energy_report(curve, delta);

  cli::Report report;
  report.field("command", "curve")
      .field("file", file)
      .field("delta", delta)
      .field("nodes", static_cast<int>(curve.size()))
      .field("closed", curve.closed)
      .object("energy", energy_object(energy))
      .field("euler_lagrange_residual", el_residual(curve, delta));
  if (curve.closed) {
    const GaussBonnetReport gb = gauss_bonnet_check(curve);
    cli::Report gauss;
    gauss.field("total_abs_curvature", gb.total_abs_curvature)
        .field("lower_bound", gb.lower_bound)
        .field("satisfied", gb.satisfies_lower_bound)
        .field("holder_consistent", gb.holder_consistent);
    report.object("gauss_bonnet", gauss);
  }

  bool suppress = false;
  if (!out.csv_path.empty()) suppress = emit_csv(out.csv_path, curve_csv(curve));
  if (!out.svg_path.empty()) {
    SvgFigure fig;
    fig.add_curve(curve);
    fig.write(out.svg_path);
  }
  emit_report(report, suppress);
  return 0;
}

cli::Report junction_report(const Network& net) {
  cli::Report junctions;
  int idx = 0;
  for (const Junction& j : net.junctions) {
    cli::Report one;
    one.field("position", std::vector<double>{j.position.x, j.position.y});
    one.field("angles_deg", detail::junction_gaps_deg(net, j));
    junctions.object("junction_" + std::to_string(idx++), one);
  }
  return junctions;
}

int run_network(const std::string& file, double delta, std::size_t nodes, bool relaxed,
                double angle_tol, const CommonOutputs& out) {
  LoadOptions opts;
  opts.resample_nodes = nodes;
  opts.angle_tol_deg = angle_tol;
  const Network net = load_network_file(file, opts);
  const EnergyReport energy = network_energy(
      net, delta, relaxed ? EnergySemantics::relaxed : EnergySemantics::raw);

  cli::Report report;
  report.field("command", "network")
      .field("file", file)
      .field("delta", delta)
      .field("classification", to_string(net.classification))
      .object("energy", energy_object(energy));

  // Per-curve Gauss-Bonnet diagnostics.
  std::vector<double> per_curve_tac;
  for (const NetworkCurve& nc : net.curves)
    per_curve_tac.push_back(nc.zero_length() ? 0.0
                                             : energy_report(nc.curve(), 0.0).total_abs_curvature);
  report.field("per_curve_total_abs_curvature", per_curve_tac);

  report.object("junction_angles", junction_report(net));
  try {
    const auto residuals = junction_residuals(net);
    cli::Report res;
    int idx = 0;
    for (const JunctionResidual& r : residuals) {
      cli::Report one;
      one.field("scalar_sum", r.scalar_sum)
          .field("vector_sum", std::vector<double>{r.vector_sum.x, r.vector_sum.y})
          .field("tangent_sum", std::vector<double>{r.tangent_sum.x, r.tangent_sum.y});
      res.object("junction_" + std::to_string(idx++), one);
    }
    report.object("junction_residuals", res);
  } catch (const NotTripleJunction&) {
    report.field("junction_residuals", "not applicable: network has non-triple junctions");
  }

  bool suppress = false;
  if (!out.csv_path.empty()) suppress = emit_csv(out.csv_path, network_csv(net));
  if (!out.svg_path.empty()) {
    SvgFigure fig;
    fig.add_network(net);
    fig.write(out.svg_path);
  }
  emit_report(report, suppress);
  return 0;
}

int emit_competitor(const char* kind, const CompetitorGeometry& g, double delta,
                    std::optional<double> optimal_energy, const std::string& emit_network_path,
                    const CommonOutputs& out) {
  const EnergyReport sampled = network_energy(g.network, delta);

  cli::Report report;
  report.field("command", "competitor")
      .field("kind", kind)
      .field("delta", delta)
      .field("radius", g.radius)
      .field("classification", to_string(g.network.classification))
      .object("closed_form", energy_object(g.closed_form))
      .object("sampled", energy_object(sampled))
      .field("closed_form_vs_sampled", std::fabs(sampled.total - g.closed_form.total));
  if (optimal_energy) report.field("optimal_rescaling_total", *optimal_energy);

  if (!emit_network_path.empty()) {
    std::ofstream file(emit_network_path);
    if (!file) throw Error("cannot open network output file: " + emit_network_path);
    file << network_to_json(g.network);
  }
  bool suppress = false;
  if (!out.csv_path.empty()) suppress = emit_csv(out.csv_path, network_csv(g.network));
  if (!out.svg_path.empty()) {
    SvgFigure fig;
    fig.add_network(g.network);
    fig.write(out.svg_path);
  }
  emit_report(report, suppress);
  return 0;
}

int run_rescale(double A, double B, double alpha, double beta, double delta,
                std::optional<double> B0, const CommonOutputs& out) {
  const FunctionalValues values{A, B, delta};
  const HomogeneityPair degrees{alpha, beta};
  const UnitReduction red = reduce_to_unit(values, degrees);

  cli::Report report;
  report.field("command", "rescale")
      .field("A", A)
      .field("B", B)
      .field("alpha", alpha)
      .field("beta", beta)
      .field("delta", delta)
      .field("reduction_scale", red.scale)
      .field("reduction_energy_factor", red.energy_factor);

  double lambda_opt = 0.0;
  if (A > 0.0) {
    lambda_opt = optimal_scale(values, degrees);
    report.field("optimal_scale", lambda_opt)
        .field("energy_at_optimal", energy_at_optimal(values, degrees))
        .field("A_at_optimal", std::pow(lambda_opt, -alpha) * A)
        .field("B_at_optimal", delta * std::pow(lambda_opt, beta) * B);
  } else {
    report.field("optimal_scale", "undefined: A = 0");
  }
  if (B0) report.field("constrained_scale_factor", constrained_scale_factor(B, *B0, degrees));

  bool suppress = false;
  if (!out.csv_path.empty()) {
    // Sample F over a log grid of rescaling factors around the optimum.
    std::string csv = "lambda,F\n";
    const double center = (A > 0.0) ? lambda_opt : 1.0;
    for (int i = -50; i <= 50; ++i) {
      const double lam = center * std::pow(10.0, i / 25.0);
      csv += cli::format_number(lam) + "," +
             cli::format_number(penalized_value(values, degrees, lam)) + "\n";
    }
    suppress = emit_csv(out.csv_path, csv);
  }
  emit_report(report, suppress);
  return 0;
}

int run_elliptic(const std::string& function, double m, std::optional<double> phi,
                 std::optional<double> u, const CommonOutputs& out) {
  const EllipticParameter param{m};
  cli::Report report;
  report.field("command", "elliptic").field("function", function).field("m", m);

  if (function == "K") {
    report.field("value", complete_K(param));
  } else if (function == "E") {
    if (phi) {
      report.field("phi", *phi).field("value", incomplete_E(*phi, param));
    } else {
      report.field("value", complete_E(param));
    }
  } else if (function == "am") {
    if (!u) throw CLI::ValidationError("elliptic am requires --u");
    report.field("u", *u).field("value", jacobi_am(*u, param));
  } else if (function == "cn") {
    if (!u) throw CLI::ValidationError("elliptic cn requires --u");
    const JacobiTriple j = jacobi_sncndn(*u, param);
    report.field("u", *u).field("value", j.cn).field("sn", j.sn).field("dn", j.dn);
  }

  bool suppress = false;
  if (!out.csv_path.empty()) {
    // Sample the requested function over one grid sweep.
    std::string csv;
    if (function == "K" || (function == "E" && !phi)) {
      csv = "m,value\n";
      for (int i = 0; i <= 99; ++i) {
        const double mm = i / 100.0;
        const EllipticParameter pm{mm};
        csv += cli::format_number(mm) + "," +
               cli::format_number(function == "K" ? complete_K(pm) : complete_E(pm)) + "\n";
      }
    } else if (function == "E") {
      csv = "phi,value\n";
      for (int i = 0; i <= 100; ++i) {
        const double ph = *phi * i / 100.0;
        csv += cli::format_number(ph) + "," + cli::format_number(incomplete_E(ph, param)) + "\n";
      }
    } else {
      csv = "u,value\n";
      for (int i = 0; i <= 100; ++i) {
        const double uu = *u * i / 100.0;
        const double v = (function == "am") ? jacobi_am(uu, param) : jacobi_cn(uu, param);
        csv += cli::format_number(uu) + "," + cli::format_number(v) + "\n";
      }
    }
    suppress = emit_csv(out.csv_path, csv);
  }
  emit_report(report, suppress);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"energies of planar elastic curves and 3-networks"};
  app.require_subcommand(1);

  // --- eight ---
  double eight_delta = 1.0;
  std::size_t eight_nodes = 4096;
  CommonOutputs eight_out;
  auto* eight = app.add_subcommand("eight", "the closed Figure-Eight elastica");
  eight->add_option("--delta", eight_delta, "length penalty weight")->check(CLI::PositiveNumber);
  eight->add_option("--nodes", eight_nodes, "sample nodes")->check(CLI::Range(std::size_t{64}, std::size_t{1 << 22}));
  add_output_flags(eight, eight_out);

  // --- drop ---
  double drop_delta = 1.0;
  std::size_t drop_nodes = 2048;
  CommonOutputs drop_out;
  auto* drop = app.add_subcommand("drop", "the optimal drop (half Figure-Eight)");
  drop->add_option("--delta", drop_delta, "length penalty weight")->check(CLI::PositiveNumber);
  drop->add_option("--nodes", drop_nodes, "sample nodes")->check(CLI::Range(std::size_t{64}, std::size_t{1 << 22}));
  add_output_flags(drop, drop_out);

  // --- curve ---
  std::string curve_file;
  double curve_delta = 1.0;
  std::size_t curve_nodes = 1024;
  bool curve_loose = false;
  CommonOutputs curve_out;
  auto* curve = app.add_subcommand("curve", "energy report of a curve file");
  curve->add_option("file", curve_file, "curve JSON file")->required();
  curve->add_option("--delta", curve_delta, "length penalty weight")->check(CLI::NonNegativeNumber);
  curve->add_option("--nodes", curve_nodes, "resampled nodes")->check(CLI::Range(std::size_t{16}, std::size_t{1 << 22}));
  curve->add_flag("--loose-closure", curve_loose, "accept closed curves with endpoint gap up to 1e-6");
  add_output_flags(curve, curve_out);

  // --- network ---
  std::string net_file;
  double net_delta = 1.0;
  std::size_t net_nodes = 512;
  double net_angle_tol = 0.5;
  bool net_relaxed = false;
  CommonOutputs net_out;
  auto* network = app.add_subcommand("network", "classify and report a network file");
  network->add_option("file", net_file, "network JSON file")->required();
  network->add_option("--delta", net_delta, "length penalty weight")->check(CLI::NonNegativeNumber);
  network->add_option("--nodes", net_nodes, "resampled nodes per curve")->check(CLI::Range(std::size_t{16}, std::size_t{1 << 22}));
  network->add_option("--angle-tol", net_angle_tol, "classification angle tolerance in degrees")->check(CLI::PositiveNumber);
  network->add_flag("--fbar", net_relaxed, "use the relaxed functional (error outside Theta classes)");
  add_output_flags(network, net_out);

  // --- competitor ---
  auto* competitor = app.add_subcommand("competitor", "closed-form competitor networks");
  competitor->require_subcommand(1);
  std::string emit_network_path;

  double comp_delta = 1.0;
  std::size_t comp_nodes = 2048;
  CommonOutputs circle_out;
  auto* comp_circle = competitor->add_subcommand("circle", "the optimal circle");
  comp_circle->add_option("--delta", comp_delta, "length penalty weight")->check(CLI::PositiveNumber);
  comp_circle->add_option("--nodes", comp_nodes, "sample nodes")->check(CLI::Range(std::size_t{16}, std::size_t{1 << 22}));
  comp_circle->add_option("--emit-network", emit_network_path, "write the network JSON to this path");
  add_output_flags(comp_circle, circle_out);

  double bubble_radius = 0.0;  // 0 = optimal
  std::size_t bubble_nodes = 2048;
  CommonOutputs bubble_out;
  auto* comp_bubble = competitor->add_subcommand("double-bubble", "the standard double bubble");
  comp_bubble->add_option("--radius", bubble_radius, "arc radius (default: optimal)")->check(CLI::PositiveNumber);
  comp_bubble->add_option("--nodes", bubble_nodes, "nodes per curve")->check(CLI::Range(std::size_t{16}, std::size_t{1 << 22}));
  comp_bubble->add_option("--emit-network", emit_network_path, "write the network JSON to this path");
  add_output_flags(comp_bubble, bubble_out);

  std::vector<double> angle_args;
  double angles_radius = 0.0;  // 0 = optimal
  std::size_t angles_nodes = 2048;
  bool angles_degrees = false;
  CommonOutputs angles_out;
  auto* comp_angles = competitor->add_subcommand("angles", "generalized angle-triple network");
  comp_angles->add_option("angles", angle_args, "three junction angles in radians")
      ->expected(3)
      ->required();
  comp_angles->add_flag("--degrees", angles_degrees, "interpret the angles in degrees");
  comp_angles->add_option("--radius", angles_radius, "arc radius (default: optimal)")->check(CLI::PositiveNumber);
  comp_angles->add_option("--nodes", angles_nodes, "nodes per curve")->check(CLI::Range(std::size_t{16}, std::size_t{1 << 22}));
  comp_angles->add_option("--emit-network", emit_network_path, "write the network JSON to this path");
  add_output_flags(comp_angles, angles_out);

  double gamma_eps = 0.5;
  std::size_t gamma_nodes = 512;
  CommonOutputs gamma_out;
  auto* comp_gamma = competitor->add_subcommand("collapsing", "the collapsing 3-network");
  comp_gamma->add_option("--eps", gamma_eps, "arc length parameter")->check(CLI::PositiveNumber);
  comp_gamma->add_option("--nodes", gamma_nodes, "nodes per curve")->check(CLI::Range(std::size_t{16}, std::size_t{1 << 22}));
  comp_gamma->add_option("--emit-network", emit_network_path, "write the network JSON to this path");
  add_output_flags(comp_gamma, gamma_out);

  // --- rescale ---
  double rs_A = 0.0, rs_B = 0.0, rs_alpha = 1.0, rs_beta = 1.0, rs_delta = 1.0;
  std::optional<double> rs_B0;
  CommonOutputs rescale_out;
  auto* rescale = app.add_subcommand("rescale", "homogeneity calculus of penalized functionals");
  rescale->add_option("--A", rs_A, "bending-type value")->required()->check(CLI::NonNegativeNumber);
  rescale->add_option("--B", rs_B, "length/area-type value")->required()->check(CLI::PositiveNumber);
  rescale->add_option("--alpha", rs_alpha, "homogeneity degree of A")->check(CLI::PositiveNumber);
  rescale->add_option("--beta", rs_beta, "homogeneity degree of B")->check(CLI::PositiveNumber);
  rescale->add_option("--delta", rs_delta, "penalty weight")->check(CLI::PositiveNumber);
  rescale->add_option("--B0", rs_B0, "constraint value for the constrained-problem factor")->check(CLI::PositiveNumber);
  add_output_flags(rescale, rescale_out);

  // --- elliptic ---
  std::string ell_function;
  double ell_m = 0.0;
  std::optional<double> ell_phi, ell_u;
  CommonOutputs elliptic_out;
  auto* elliptic = app.add_subcommand("elliptic", "elliptic integrals and Jacobi functions");
  elliptic->add_option("function", ell_function, "one of K, E, am, cn")
      ->required()
      ->check(CLI::IsMember({"K", "E", "am", "cn"}));
  elliptic->add_option("--m", ell_m, "elliptic parameter in [0,1]")->required();
  elliptic->add_option("--phi", ell_phi, "amplitude for incomplete E");
  elliptic->add_option("--u", ell_u, "argument for am/cn");
  add_output_flags(elliptic, elliptic_out);

  try {
    app.parse(argc, argv);

    if (*eight) return run_eight(eight_delta, eight_nodes, eight_out);
    if (*drop) return run_drop(drop_delta, drop_nodes, drop_out);
    if (*curve) return run_curve(curve_file, curve_delta, curve_nodes, curve_loose, curve_out);
    if (*network)
      return run_network(net_file, net_delta, net_nodes, net_relaxed, net_angle_tol, net_out);
    if (*comp_circle)
      return emit_competitor("circle", circle_minimizer(comp_delta, comp_nodes), comp_delta,
                             std::nullopt, emit_network_path, circle_out);
    if (*comp_bubble) {
      const double R = bubble_radius > 0.0 ? bubble_radius : optimal_double_bubble_radius();
      const double third = 2.0 * std::numbers::pi / 3.0;
      return emit_competitor("double-bubble", double_bubble(R, bubble_nodes), 1.0,
                             optimal_generalized_energy({third, third, third}), emit_network_path,
                             bubble_out);
    }
    if (*comp_angles) {
      const double f = angles_degrees ? std::numbers::pi / 180.0 : 1.0;
      const AngleTriple triple{angle_args[0] * f, angle_args[1] * f, angle_args[2] * f};
      if (triple.alpha2() > 0.75 * std::numbers::pi)
        std::fprintf(stderr,
                     "note: alpha2 > 3*pi/4; the optimal energy is not guaranteed to stay below "
                     "the Figure-Eight value\n");
      const double R = angles_radius > 0.0 ? angles_radius : optimal_generalized_radius(triple);
      return emit_competitor("angles", generalized_network(triple, R, angles_nodes), 1.0,
                             optimal_generalized_energy(triple), emit_network_path, angles_out);
    }
    if (*comp_gamma)
      return emit_competitor("collapsing", collapsing_network(gamma_eps, gamma_nodes), 1.0,
                             std::nullopt, emit_network_path, gamma_out);
    if (*rescale)
      return run_rescale(rs_A, rs_B, rs_alpha, rs_beta, rs_delta, rs_B0, rescale_out);
    if (*elliptic) return run_elliptic(ell_function, ell_m, ell_phi, ell_u, elliptic_out);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
