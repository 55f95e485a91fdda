#include <cmath>

#include "doctest.h"
#include "msl/error.hpp"
#include "msl/metric_ops.hpp"
#include "msl/model_metrics.hpp"
#include "msl/surgery.hpp"

using namespace msl;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("volume: euclidean ball and cusp closed forms") {
  double R = 2.3;
  Metric1D flat(SphericallySymmetric{make_linear_warp({0.0, R}, 1.0)},
                {0.0, R}, "flat");
  QuadResult v = volume(GluedMetric(flat));
  CHECK(v.value ==
        doctest::Approx(4.0 * kPi / 3.0 * R * R * R).epsilon(1e-10));
  CHECK(v.error < 1e-8 * v.value);

  // Cusp with both circle periods 2 pi and the determinant factor
  // sqrt(1 - a^2): V[t0, inf) = (2 pi)^2 sqrt(1-a^2) d1 d2 e^{-2 t0} / 2.
  for (double a : {0.0, 0.5}) {
    CuspSpec cs{1.0, 1.0, a, 0.0, 45.0};
    Metric1D cusp = cusp_metric(cs);
    double vc = volume(GluedMetric(cusp), Interval{0.0, INFINITY}).value;
    double formula = 0.5 * 4.0 * kPi * kPi * std::sqrt(1.0 - a * a);
    CHECK(vc == doctest::Approx(formula).epsilon(1e-10));
  }
}

TEST_CASE("volume error estimate honesty under tolerance halving") {
  Metric1D cusp = cusp_metric(CuspSpec{1.0, 2.0, 0.3, 0.5, 20.0});
  QuadOptions loose;
  loose.rel_tol = 1e-8;
  QuadOptions tight;
  tight.rel_tol = 5e-9;
  QuadResult a = volume(GluedMetric(cusp), loose);
  QuadResult b = volume(GluedMetric(cusp), tight);
  CHECK(std::abs(a.value - b.value) <= a.error + b.error + 1e-15);
}

TEST_CASE("solid-torus glue volume: below .464 with tight error") {
  QuadOptions opts;
  opts.rel_tol = 1e-12;
  QuadResult r = integrate(
      [](double t) { return std::exp(-std::cos(t)) * std::tan(0.5 * t); }, 0.0,
      0.5 * kPi, opts);
  CHECK(r.value < 0.464);
  CHECK(r.error < 1e-10);
  // Frozen regression value of the quadrature oracle.
  CHECK(r.value == doctest::Approx(0.46342199266310458).epsilon(1e-12));
}

TEST_CASE("curvature radius: flat metric saturates the domain") {
  Metric1D flat(SphericallySymmetric{make_linear_warp({0.0, 5.0}, 1.0)},
                {0.0, 5.0}, "flat");
  RadiusEstimate rho = curvature_radius(GluedMetric(flat), 0.0);
  CHECK(rho.capped_by_domain);
  CHECK(rho.radius == doctest::Approx(5.0).epsilon(1e-9));
  RadiusEstimate nu = volume_radius(GluedMetric(flat), 0.0);
  CHECK(nu.capped_by_domain);  // ratio 4 pi/3 >> mu at every scale
}

TEST_CASE("curvature radius: schwarzschild horizon value of order m") {
  SchwarzschildSpec spec;
  spec.mass = 1.0;
  spec.r_out = 200.0;
  GluedMetric doubled = doubled_schwarzschild(spec);
  RadiusEstimate rho = curvature_radius(doubled, 0.0);
  CHECK(!rho.capped_by_domain);
  CHECK(rho.radius > 0.2);
  CHECK(rho.radius < 0.5);
  // Frozen value of the bisection-against-quadrature oracle.
  CHECK(rho.radius == doctest::Approx(0.3224118351).epsilon(1e-6));
}

TEST_CASE("radii scale linearly under lambda^2 rescaling") {
  double lambda = 3.0;
  SchwarzschildSpec spec;
  spec.mass = 1.0;
  spec.r_out = 150.0;
  GluedMetric doubled = doubled_schwarzschild(spec);
  GluedMetric scaled = doubled.rescaled(lambda);
  RadiusEstimate r1 = curvature_radius(doubled, 0.0);
  RadiusEstimate r2 = curvature_radius(scaled, 0.0);
  CHECK(r2.radius == doctest::Approx(lambda * r1.radius).epsilon(1e-6));

  CollapseSpec cs{1.0, 1.0, 0.0, 1.0};
  GluedMetric thin(collapse_family(cs, 0.01));
  RadiusEstimate n1 = volume_radius(thin, 0.0);
  RadiusEstimate n2 = volume_radius(thin.rescaled(lambda), 0.0);
  CHECK(n2.radius == doctest::Approx(lambda * n1.radius).epsilon(1e-6));
}

TEST_CASE("volume radius of the collapse family matches the slab formula") {
  // Centered slab balls have vol = area * s, so the ratio crosses mu at
  // s = sqrt(area/mu).
  for (double eps : {0.04, 0.01}) {
    CollapseSpec cs{1.0, 1.0, 0.0, 1.0};
    Metric1D me = collapse_family(cs, eps);
    double area = 4.0 * kPi * kPi * eps * eps;
    double expected = std::min(1.0, std::sqrt(area / 0.1));
    RadiusEstimate nu = volume_radius(GluedMetric(me), 0.0);
    CHECK(nu.radius == doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("no-center error") {
  Metric1D flat(SphericallySymmetric{make_linear_warp({1.0, 4.0}, 1.0)},
                {1.0, 4.0}, "annulus");
  CHECK_THROWS_AS((void)curvature_radius(GluedMetric(flat), 0.2), Error);
}

TEST_CASE("integration interval must stay in the domain") {
  Metric1D flat(SphericallySymmetric{make_linear_warp({0.0, 2.0}, 1.0)},
                {0.0, 2.0}, "flat");
  CHECK_THROWS_AS((void)volume(GluedMetric(flat), Interval{-1.0, 1.0}), Error);
}
