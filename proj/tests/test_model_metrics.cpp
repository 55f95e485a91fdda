#include <cmath>

#include "doctest.h"
#include "msl/curvature.hpp"
#include "msl/error.hpp"
#include "msl/glued_ops.hpp"
#include "msl/model_metrics.hpp"

using namespace msl;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("schwarzschild constructors and horizon geometry") {
  double m = 1.4;
  SchwarzschildSpec spec;
  spec.mass = m;
  spec.r_out = 80.0;
  Metric1D g = schwarzschild_metric(spec);
  CHECK(level_surface_gauss_curvature(g, 0.0) ==
        doctest::Approx(1.0 / (4.0 * m * m)).epsilon(1e-10));

  GluedMetric doubled = doubled_schwarzschild(spec);
  CHECK(doubled.pieces().size() == 2);
  SeamMeasurement seam = measure_seam(doubled, 0);
  CHECK(std::abs(seam.value_jumps[0]) < 1e-12);
  CHECK(std::abs(seam.slope_jumps[0]) < 1e-12);
  auto A_l = shape_operator(doubled.pieces()[0], 0.0, Orientation::outward);
  auto A_r = shape_operator(doubled.pieces()[1], 0.0, Orientation::outward);
  CHECK(std::abs(A_l[0].value) < 1e-12);
  CHECK(std::abs(A_r[0].value) < 1e-12);

  // Conformally flat form cannot be doubled (no minimal sphere).
  SchwarzschildSpec cf = spec;
  cf.form = SchwarzschildForm::conformally_flat;
  CHECK_THROWS_AS((void)doubled_schwarzschild(cf), Error);

  // m -> 0 flat limit at fixed r.
  SchwarzschildSpec tiny;
  tiny.mass = 1e-9;
  tiny.r_out = 20.0;
  Metric1D gt = schwarzschild_metric(tiny);
  double t5 = schwarzschild_t_of_r(tiny, 5.0);
  CHECK(gt.spherical().f.value(t5) == doctest::Approx(5.0).epsilon(1e-8));
  CHECK(std::abs(curvature_at(gt, t5).s) < 1e-9);
}

TEST_CASE("cusp constructor") {
  Metric1D cusp = cusp_metric(CuspSpec{2.0, 2.0, 0.0, 1.5, 10.0});
  const auto& dw = cusp.doubly_warped();
  for (double t : {2.0, 5.0}) {
    CHECK(dw.f1.value(t) == doctest::Approx(2.0 * std::exp(-t)).epsilon(1e-14));
    CHECK(dw.f1.value(t) == doctest::Approx(dw.f2.value(t)).epsilon(1e-14));
  }
  CHECK(curvature_at(cusp, 3.0).s == doctest::Approx(-6.0).epsilon(1e-12));
}

TEST_CASE("sphere caps: boundary data and flat limit") {
  double delta = 0.2, D = 3.0;
  Metric1D comp =
      sphere_cap_metric(SphereCapSpec{delta, D, CapSide::complement});
  CHECK(comp.domain().lo == doctest::Approx(D));
  CHECK(comp.domain().hi == doctest::Approx(kPi / delta));
  CHECK(comp.spherical().f.value(D) ==
        doctest::Approx(std::sin(delta * D) / delta).epsilon(1e-14));
  auto A = shape_operator(comp, D, Orientation::outward);
  CHECK(A[0].value ==
        doctest::Approx(delta * std::cos(delta * D) / std::sin(delta * D))
            .epsilon(1e-13));

  // Flat limit delta -> 0: boundary radius -> D, shape operator -> 1/D.
  double d2 = 1e-5;
  Metric1D c2 = sphere_cap_metric(SphereCapSpec{d2, D, CapSide::cap});
  CHECK(c2.spherical().f.value(D) == doctest::Approx(D).epsilon(1e-9));
  auto A2 = shape_operator(c2, D, Orientation::outward);
  CHECK(A2[0].value == doctest::Approx(1.0 / D).epsilon(1e-9));

  CHECK_THROWS_AS(
      (void)sphere_cap_metric(SphereCapSpec{1.0, 4.0, CapSide::cap}), Error);
}

TEST_CASE("cap matching: c1 variant closed-form oracle") {
  double R = 100.0, m = 0.5;
  CapMatchResult res = solve_cap_matching(R, CapMatchVariant::c1, 1.75, m);
  CHECK(std::abs(res.residual_sin) < 1e-12);
  CHECK(std::abs(res.residual_cos) < 1e-12);

  // Independent closed-form solution: dD = arccos(rhs), then delta from
  // the sine equation.
  double phi = 1.0 + 2.0 * m / R;
  double rhs = 1.0 - (m / R) / phi;
  double dD = std::acos(rhs);
  double delta_oracle = std::sin(dD) / (R * std::sqrt(phi));
  CHECK(res.delta == doctest::Approx(delta_oracle).epsilon(1e-12));
  CHECK(res.cap_radius == doctest::Approx(dD / delta_oracle).epsilon(1e-12));

  // Identical boundary sphere: radius and shape operator.
  CHECK(res.boundary_radius ==
        doctest::Approx(R * std::sqrt(phi)).epsilon(1e-12));
  CHECK(res.cap_shape_operator ==
        doctest::Approx(res.target_shape_operator).epsilon(1e-12));
  CHECK(res.delta_sq_R3 > 0.5);
  CHECK(res.delta_sq_R3 < 50.0);
}

TEST_CASE("cap matching: mismatch variant analytic difference") {
  double R = 100.0, m = 0.5, lambda = 1.75;
  CapMatchResult res =
      solve_cap_matching(R, CapMatchVariant::mismatch, lambda, m);
  double diff = res.target_shape_operator - res.cap_shape_operator;
  CHECK(diff > 0.0);
  // Exactly R^{-lambda} / (R sqrt(1+2m/R)) by construction of the system.
  double expected =
      std::pow(R, -lambda) / (R * std::sqrt(1.0 + 2.0 * m / R));
  CHECK(diff == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("cap matching: no root below the solvable range") {
  // The mismatch perturbation R^{-lambda} pushes the cosine equation out
  // of [-1, 1] at small R.
  CHECK_THROWS_AS(
      (void)solve_cap_matching(0.4, CapMatchVariant::mismatch, 1.75, 0.5),
      Error);
  try {
    (void)solve_cap_matching(0.4, CapMatchVariant::mismatch, 1.75, 0.5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::no_root);
  }
}

TEST_CASE("end asymptotics: exact mass for the conformally flat end") {
  SchwarzschildSpec cf;
  cf.mass = 1.0;
  cf.form = SchwarzschildForm::conformally_flat;
  cf.r_lo = 1.0;
  cf.r_out = 2000.0;
  Metric1D g = schwarzschild_metric(cf);
  EndAsymptotics fit = fit_end_asymptotics(g, FitWindow{10.0, 1000.0, 64});
  CHECK(fit.mass == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(fit.h_below_floor);  // residual h vanishes identically
}

TEST_CASE("end asymptotics: flat end has zero mass") {
  Metric1D flat(SphericallySymmetric{make_linear_warp({0.1, 3000.0}, 1.0)},
                {0.1, 3000.0}, "flat");
  EndAsymptotics fit = fit_end_asymptotics(flat, FitWindow{10.0, 1000.0, 64});
  CHECK(std::abs(fit.mass) < 1e-9);
}

TEST_CASE("end asymptotics: area-radius form decays like r^-2") {
  SchwarzschildSpec ar;
  ar.mass = 1.0;
  ar.r_out = 2500.0;
  Metric1D g = schwarzschild_metric(ar);
  EndAsymptotics fit = fit_end_asymptotics(g, FitWindow{10.0, 1000.0, 64});
  CHECK(fit.mass == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(!fit.h_below_floor);
  CHECK(fit.h_decay_exp == doctest::Approx(-2.0).epsilon(0.08));
}

TEST_CASE("end asymptotics: z-decay slope for m = 1/2") {
  SchwarzschildSpec cf;
  cf.mass = 0.5;
  cf.form = SchwarzschildForm::conformally_flat;
  cf.r_lo = 1.0;
  cf.r_out = 2100.0;
  Metric1D g = schwarzschild_metric(cf);
  EndAsymptotics fit = fit_end_asymptotics(g, FitWindow{10.0, 2000.0, 64});
  CHECK(fit.z_decay_exp == doctest::Approx(-3.0).epsilon(0.017));
}

TEST_CASE("end asymptotics: scale equivariance of the fitted mass") {
  SchwarzschildSpec cf;
  cf.mass = 1.0;
  cf.form = SchwarzschildForm::conformally_flat;
  cf.r_lo = 1.0;
  cf.r_out = 2000.0;
  Metric1D g = schwarzschild_metric(cf);
  double lambda = 2.0;
  Metric1D scaled = g.rescaled(lambda);
  EndAsymptotics f1 = fit_end_asymptotics(g, FitWindow{10.0, 1000.0, 48});
  EndAsymptotics f2 =
      fit_end_asymptotics(scaled, FitWindow{20.0, 2000.0, 48});
  CHECK(f2.mass == doctest::Approx(lambda * f1.mass).epsilon(1e-6));
}

TEST_CASE("end asymptotics: window must span a decade") {
  Metric1D flat(SphericallySymmetric{make_linear_warp({0.1, 100.0}, 1.0)},
                {0.1, 100.0}, "flat");
  CHECK_THROWS_AS(
      (void)fit_end_asymptotics(flat, FitWindow{10.0, 50.0, 32}), Error);
}

TEST_CASE("flat torus records") {
  FlatTorusRecord a0 = flat_torus(1.0, 1.0, 0.0);
  CHECK(a0.area == doctest::Approx(4.0 * kPi * kPi).epsilon(1e-14));
  FlatTorusRecord ah = flat_torus(1.0, 1.0, 0.5);
  CHECK(ah.area ==
        doctest::Approx(4.0 * kPi * kPi * std::sqrt(0.75)).epsilon(1e-14));
  FlatTorusRecord nearly = flat_torus(1.0, 1.0, 0.999999);
  CHECK(nearly.area < 0.01 * a0.area);
  CHECK_THROWS_AS((void)flat_torus(1.0, 1.0, 1.0), Error);
}

TEST_CASE("isotropic chart round trip") {
  SchwarzschildSpec cf;
  cf.mass = 0.5;
  cf.form = SchwarzschildForm::conformally_flat;
  cf.r_lo = 2.0;
  cf.r_out = 500.0;
  Metric1D g = schwarzschild_metric(cf);
  IsotropicChart chart(g);
  for (double rho : {5.0, 20.0, 100.0, 400.0}) {
    double t = chart.t_of_rho(rho);
    CHECK(chart.rho(t) == doctest::Approx(rho).epsilon(1e-11));
  }
}
