#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "elastica/curve.hpp"

using namespace elastica;

namespace {

// Raw polyline on a circle of radius R, seam point repeated.
std::vector<Vec2> circle_polyline(double R, std::size_t n, Vec2 center = {0.0, 0.0}) {
  std::vector<Vec2> pts(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    pts[i] = center + Vec2{R * std::cos(t), R * std::sin(t)};
  }
  pts.back() = pts.front();
  return pts;
}

std::vector<Vec2> segment_polyline(Vec2 a, Vec2 b, std::size_t n) {
  std::vector<Vec2> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = static_cast<double>(i) / static_cast<double>(n - 1);
    pts[i] = a + w * (b - a);
  }
  return pts;
}

}  // namespace

TEST_CASE("resampled unit circle has curvature one everywhere") {
  const auto curve = resample_arclength(circle_polyline(1.0, 1024), 1025, true);
  REQUIRE(curve.closed);
  for (const double k : curve.curvature) CHECK(std::fabs(k - 1.0) <= 1e-3);
  for (const Vec2& t : curve.tangent) CHECK(std::fabs(norm(t) - 1.0) <= 1e-10);
  // Normal is the ccw rotation of the tangent.
  for (std::size_t i = 0; i < curve.size(); ++i) {
    CHECK(curve.normal[i].x == Catch::Approx(-curve.tangent[i].y).margin(1e-15));
    CHECK(curve.normal[i].y == Catch::Approx(curve.tangent[i].x).margin(1e-15));
  }
  // Total arclength within 0.1% of the polyline length (here: of 2 pi).
  CHECK(curve.length() == Catch::Approx(2.0 * std::numbers::pi).epsilon(1e-3));
}

TEST_CASE("resampled circle of radius two has curvature one half") {
  const auto curve = resample_arclength(circle_polyline(2.0, 1024), 1025, true);
  for (const double k : curve.curvature) CHECK(std::fabs(k - 0.5) <= 1e-3);
}

TEST_CASE("straight segment has zero curvature and constant tangent") {
  const auto curve = resample_arclength(segment_polyline({0, 0}, {1, 0}, 64), 256, false);
  for (const double k : curve.curvature) CHECK(std::fabs(k) <= 1e-12);
  for (const Vec2& t : curve.tangent) {
    CHECK(t.x == Catch::Approx(1.0).margin(1e-12));
    CHECK(t.y == Catch::Approx(0.0).margin(1e-12));
  }
  CHECK(curve.length() == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("degenerate inputs are rejected") {
  CHECK_THROWS_AS(resample_arclength({{0, 0}, {1, 0}, {2, 0}}, 16, false), DegenerateCurve);
  CHECK_THROWS_AS(resample_arclength({{0, 0}, {1, 0}, {1, 0}, {2, 0}}, 16, false),
                  DegenerateCurve);
  CHECK_THROWS_AS(resample_arclength(segment_polyline({0, 0}, {1, 0}, 16), 16, true), NotClosed);
}

TEST_CASE("energy report of the unit circle") {
  const auto curve = resample_arclength(circle_polyline(1.0, 2048), 2049, true);
  const EnergyReport r = energy_report(curve, 1.0);
  const double two_pi = 2.0 * std::numbers::pi;
  CHECK(r.bending == Catch::Approx(two_pi).margin(1e-4));
  CHECK(r.length == Catch::Approx(two_pi).margin(1e-4));
  CHECK(r.total == Catch::Approx(4.0 * std::numbers::pi).margin(2e-4));
  CHECK(r.total == r.bending + r.delta * r.length);  // exact by construction
  CHECK(r.total_abs_curvature == Catch::Approx(two_pi).margin(1e-4));
}

TEST_CASE("energy report scales as 2 pi / R for circles") {
  for (const double R : {0.5, 2.0, 5.0}) {
    const auto curve = resample_arclength(circle_polyline(R, 2048), 2049, true);
    const EnergyReport r = energy_report(curve, 0.0);
    CHECK(r.bending == Catch::Approx(2.0 * std::numbers::pi / R).epsilon(1e-5));
    CHECK(r.total == r.bending);
  }
}

TEST_CASE("energy report of a unit segment") {
  const auto curve = resample_arclength(segment_polyline({0, 0}, {1, 0}, 32), 128, false);
  const EnergyReport r = energy_report(curve, 1.0);
  CHECK(r.bending == Catch::Approx(0.0).margin(1e-12));
  CHECK(r.total == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("gauss-bonnet check on circles") {
  for (const double R : {1.0, 5.0}) {
    const auto curve = resample_arclength(circle_polyline(R, 2048), 2049, true);
    const GaussBonnetReport g = gauss_bonnet_check(curve);
    CHECK(g.total_abs_curvature == Catch::Approx(2.0 * std::numbers::pi).margin(1e-4));
    CHECK(g.satisfies_lower_bound);
    CHECK(g.holder_consistent);
  }
  const auto open = resample_arclength(segment_polyline({0, 0}, {1, 0}, 16), 64, false);
  CHECK_THROWS_AS(gauss_bonnet_check(open), NotClosed);
}

TEST_CASE("discrete Holder inequality holds on assorted fixtures") {
  // F >= E >= (int |k| ds)^2 / L, with 1e-6 slack.
  std::vector<SampledCurve> fixtures;
  fixtures.push_back(resample_arclength(circle_polyline(1.0, 512), 513, true));
  fixtures.push_back(resample_arclength(circle_polyline(3.0, 512), 513, true));
  // A wavy closed curve.
  std::vector<Vec2> wavy(513);
  for (std::size_t i = 0; i <= 512; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) / 512.0;
    const double r = 2.0 + 0.3 * std::cos(5.0 * t);
    wavy[i] = {r * std::cos(t), r * std::sin(t)};
  }
  wavy.back() = wavy.front();
  fixtures.push_back(resample_arclength(wavy, 513, true));

  for (const SampledCurve& c : fixtures) {
    const EnergyReport r = energy_report(c, 1.0);
    CHECK(r.total >= r.bending);
    CHECK(r.bending * r.length >= r.total_abs_curvature * r.total_abs_curvature - 1e-6);
  }
}

TEST_CASE("rescaling multiplies length and divides bending energy") {
  const auto base = resample_arclength(circle_polyline(1.0, 1024), 1025, true);
  const EnergyReport r0 = energy_report(base, 1.0);
  for (const double factor : {0.5, 2.0, 7.0}) {
    const SampledCurve big = scaled(base, factor);
    const EnergyReport r1 = energy_report(big, 1.0);
    CHECK(r1.length == Catch::Approx(factor * r0.length).epsilon(1e-12));
    CHECK(r1.bending == Catch::Approx(r0.bending / factor).epsilon(1e-12));
  }
}

TEST_CASE("discrete curvature converges at order two") {
  auto worst_curvature_error = [](std::size_t n) {
    const auto curve = resample_arclength(circle_polyline(1.0, n), n + 1, true);
    double worst = 0.0;
    for (const double k : curve.curvature) worst = std::fmax(worst, std::fabs(k - 1.0));
    return worst;
  };
  const double coarse = worst_curvature_error(256);
  const double fine = worst_curvature_error(512);
  CHECK(coarse / fine >= 3.5);
}

TEST_CASE("analytic construction validates its inputs") {
  std::vector<Vec2> pts{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  std::vector<double> s{0, 1, 2, 3};
  std::vector<Vec2> tan{{1, 0}, {1, 0}, {1, 0}, {1, 0}};
  std::vector<double> k{0, 0, 0, 0};
  CHECK_NOTHROW(make_sampled_curve(pts, s, tan, k, false));

  auto bad_tan = tan;
  bad_tan[1] = {2.0, 0.0};
  CHECK_THROWS_AS(make_sampled_curve(pts, s, bad_tan, k, false), std::invalid_argument);
  auto bad_s = s;
  bad_s[2] = 0.5;
  CHECK_THROWS_AS(make_sampled_curve(pts, bad_s, tan, k, false), std::invalid_argument);
}
