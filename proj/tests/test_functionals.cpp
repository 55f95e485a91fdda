#include <cmath>

#include "doctest.h"
#include "msl/curvature.hpp"
#include "msl/error.hpp"
#include "msl/functionals.hpp"
#include "msl/metric_ops.hpp"
#include "msl/model_metrics.hpp"
#include "msl/surgery.hpp"

using namespace msl;

namespace {
constexpr double kPi = 3.14159265358979323846;

Metric1D flat_ball(double R) {
  return Metric1D(SphericallySymmetric{make_linear_warp({0.0, R}, 1.0)},
                  {0.0, R}, "flat");
}
}  // namespace

TEST_CASE("cusp functionals: s = -6 everywhere") {
  // int (s^-)^2 dV over [t0, inf) = 36 V_C = 18 d1 d2 e^{-2 t0} (2 pi)^2
  // (unit torus cosine a = 0).
  double d1 = 1.0, d2 = 1.0, t0 = 1.0;
  Metric1D cusp = cusp_metric(CuspSpec{d1, d2, 0.0, t0, 45.0});
  QuadOptions opts;
  opts.rel_tol = 1e-12;
  double smsq = integrate_curvature(
                    GluedMetric(cusp), Interval{t0, INFINITY},
                    [](const CurvatureSample& c, double) {
                      double sm = std::min(c.s, 0.0);
                      return sm * sm;
                    },
                    opts)
                    .value;
  double oracle = 18.0 * d1 * d2 * std::exp(-2.0 * t0) * 4.0 * kPi * kPi;
  CHECK(smsq == doctest::Approx(oracle).epsilon(1e-10));
}

TEST_CASE("functional report: identities and equality cases") {
  double eps = 1e-3;

  // Flat: everything vanishes, I_eps = S_minus = 0.
  FunctionalReport fr = evaluate_functionals(GluedMetric(flat_ball(2.0)), eps);
  CHECK(fr.s_l2 < 1e-10);
  CHECK(fr.s_minus_l2 < 1e-10);
  CHECK(fr.i_eps_minus < 1e-10);
  CHECK(!fr.sigma_normalization.has_value());

  // Schwarzschild area-radius annulus: scalar-flat, z != 0.
  SchwarzschildSpec ss;
  ss.mass = 1.0;
  ss.r_lo = 2.5;
  ss.r_out = 30.0;
  FunctionalReport rs =
      evaluate_functionals(GluedMetric(schwarzschild_metric(ss)), eps);
  CHECK(rs.s_minus_sq_integral < 1e-10);
  CHECK(rs.z_sq_integral > 0.1);
  CHECK(rs.i_eps_minus > rs.s_minus_l2);  // strict: z != 0
  CHECK(!rs.sigma_normalization.has_value());

  // Cusp: s = -6 < 0, z = 0: S^2_- = S^2 and I_eps = S^2_-.
  FunctionalReport rc = evaluate_functionals(
      GluedMetric(cusp_metric(CuspSpec{1.0, 1.0, 0.0, 1.0, 25.0})), eps);
  CHECK(rc.s_minus_l2 == doctest::Approx(rc.s_l2).epsilon(1e-10));
  CHECK(rc.i_eps_minus ==
        doctest::Approx(rc.s_minus_l2).epsilon(1e-8));
  CHECK(rc.sigma_normalization.has_value());
  CHECK(*rc.sigma_normalization == doctest::Approx(rc.s_minus_l2));

  // The defining identity, as evaluated.
  for (const FunctionalReport* r : {&fr, &rs, &rc}) {
    double gap = std::abs(r->i_eps_minus - r->s_minus_l2 -
                          eps * std::cbrt(r->volume) * r->z_sq_integral);
    CHECK(gap <= 1e-12 + 10.0 * r->quadrature_error);
    CHECK(r->s_minus_l2 <= r->s_l2 + 1e-12);
  }
}

TEST_CASE("scale invariance of the functionals; Z^2 scales as 1/lambda") {
  double eps = 1e-3;
  SchwarzschildSpec ss;
  ss.mass = 1.0;
  ss.r_lo = 2.5;
  ss.r_out = 25.0;
  GluedMetric g(schwarzschild_metric(ss));
  for (double lambda : {2.0, 0.5}) {
    ScaleInvarianceCheck chk = scale_invariance_check(g, lambda, eps);
    CHECK(chk.s_l2_invariant);
    CHECK(chk.s_minus_l2_invariant);
    CHECK(chk.i_eps_invariant);
    CHECK(chk.max_relative_deviation <= 1e-10);
    CHECK(chk.z_sq_scaling_deviation <= 1e-9);
  }
  // lambda = 1 is exact equality.
  ScaleInvarianceCheck t = scale_invariance_check(g, 1.0, eps);
  CHECK(t.max_relative_deviation <= 1e-14);
}

TEST_CASE("l_star: flat, cusp, and the schwarzschild potential") {
  auto grid_of = [](double lo, double hi, int n) {
    return uniform_grid({lo, hi}, n);
  };

  Metric1D flat = flat_ball(4.0);
  TensorField l0 = l_star(flat, make_const_fn(1.0), grid_of(0.5, 3.5, 33));
  CHECK(l0.sup_norm() < 1e-13);

  Metric1D cusp = cusp_metric(CuspSpec{1.0, 1.0, 0.0, 0.0, 9.0});
  TensorField lc = l_star(cusp, make_const_fn(1.0), grid_of(1.0, 8.0, 33));
  for (const auto& comps : lc.comps)
    for (double v : comps) CHECK(v == doctest::Approx(2.0).epsilon(1e-9));

  SchwarzschildSpec ss;
  ss.mass = 1.0;
  ss.r_out = 150.0;
  Metric1D schw = schwarzschild_metric(ss);
  std::vector<double> grid;
  for (double r : log_grid(2.5, 100.0, 120))
    grid.push_back(schwarzschild_t_of_r(ss, r));
  RadialFnPtr u = make_schwarzschild_potential_fn(1.0, 2.0);
  TensorField lu = l_star(schw, u, grid);
  CHECK(lu.sup_norm() < 1e-6);   // the classical static-vacuum solution
  CHECK(lu.sup_norm() < 1e-11);  // exact derivatives do much better

  // Linearity.
  RadialFnPtr w = make_linear_fn(0.2, 1.0);
  TensorField lw = l_star(schw, w, grid);
  TensorField lsum = l_star(schw, make_sum_fn(u, w, 3.0, -2.0), grid);
  double dev = 0.0;
  for (size_t i = 0; i < grid.size(); ++i)
    for (int k = 0; k < 3; ++k)
      dev = std::max(dev, std::abs(lsum.comps[i][k] - 3.0 * lu.comps[i][k] +
                                   2.0 * lw.comps[i][k]));
  CHECK(dev < 1e-12);
}

TEST_CASE("static vacuum residuals") {
  // Flat torus bundle with an affine potential: Hessian and Laplacian both
  // vanish (constant warpings), so the residual is exactly zero.
  Metric1D torus = collapse_family(CollapseSpec{1.0, 1.0, 0.0, 1.0}, 1.0);
  ResidualReport r =
      static_vacuum_residual(torus, make_linear_fn(0.7, 0.1),
                             uniform_grid({0.1, 0.9}, 17));
  CHECK(r.sup_primary < 1e-14);
  CHECK(r.sup_scalar < 1e-14);

  // Cusp with u = 1: honest nonzero residual |L*u| = |Ric| = 2 sqrt(3).
  Metric1D cusp = cusp_metric(CuspSpec{1.0, 1.0, 0.0, 0.0, 9.0});
  ResidualReport rc = static_vacuum_residual(cusp, make_const_fn(1.0),
                                             uniform_grid({1.0, 8.0}, 33));
  CHECK(rc.sup_primary == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-9));
}

TEST_CASE("zc2 residuals: flat, alpha -> 0, and the round sphere") {
  Metric1D flat = flat_ball(4.0);
  auto gridf = uniform_grid({0.5, 3.5}, 33);
  ResidualReport rf = zc2_residual(flat, make_const_fn(0.3), 1.0, gridf);
  CHECK(rf.sup_primary < 1e-13);
  CHECK(rf.sup_scalar < 1e-13);

  SchwarzschildSpec ss;
  ss.mass = 1.0;
  ss.r_out = 150.0;
  Metric1D schw = schwarzschild_metric(ss);
  std::vector<double> grid;
  for (double r : log_grid(2.5, 100.0, 100))
    grid.push_back(schwarzschild_t_of_r(ss, r));
  RadialFnPtr tau = make_affine_of_fn(
      make_schwarzschild_potential_fn(1.0, 2.0), -1.0, 0.0);
  double prev = 1e300;
  for (double alpha : {1e-1, 1e-3, 0.0}) {
    ResidualReport rz = zc2_residual(schw, tau, alpha, grid);
    double level = std::max(rz.sup_primary, rz.sup_scalar);
    CHECK(level <= prev + 1e-12);
    prev = level;
    if (alpha == 0.0) {
      CHECK(level < 1e-10);
      ResidualReport sv = static_vacuum_residual(schw, tau, grid);
      CHECK(std::abs(rz.sup_primary - sv.sup_primary) < 1e-15);
      CHECK(std::abs(rz.sup_scalar - sv.sup_scalar) < 1e-15);
    }
  }

  // Round S^3: constant tau, z = 0; the tensor residual is |tau| |Ric|.
  double delta = 0.5, tau0 = 2.0;
  Metric1D cap = sphere_cap_metric(SphereCapSpec{delta, 4.0, CapSide::cap});
  ResidualReport rs = zc2_residual(cap, make_const_fn(tau0), 1.0,
                                   uniform_grid({0.2, 3.5}, 33));
  CHECK(rs.sup_primary ==
        doctest::Approx(tau0 * 2.0 * std::sqrt(3.0) * delta * delta)
            .epsilon(1e-9));
  CHECK(rs.sup_scalar < 1e-12);

  // Sampled warpings cannot supply fourth derivatives.
  std::vector<double> vals;
  for (int i = 0; i <= 200; ++i) vals.push_back(1.0 + 0.001 * i);
  Metric1D sampled(
      SphericallySymmetric{make_sampled_warp({0.0, 2.0}, vals)}, {0.0, 2.0},
      "sampled");
  CHECK_THROWS_AS(
      (void)zc2_residual(sampled, make_const_fn(1.0), 1.0, gridf), Error);
}

TEST_CASE("grad Z^2 is the L2 gradient: directional-derivative oracle") {
  // Perturb f -> f (1 + s b) with a compactly supported C^2 bump b; then
  // d/ds Z^2 at s = 0 must equal int <grad Z^2, h> dV with
  // h = diag(0, 2b, 2b) in the orthonormal frame.
  SchwarzschildSpec cf;
  cf.mass = 1.0;
  cf.form = SchwarzschildForm::conformally_flat;
  cf.r_lo = 1.0;
  cf.r_out = 40.0;
  Metric1D base = schwarzschild_metric(cf);
  Interval dom = base.domain();

  // Bump supported on [a, b], vanishing to second order at both ends:
  // x^3 (W-x)^3 scaled to peak 0.01.
  double a = 8.0, bsup = 20.0;
  auto bump_coeffs = [&]() {
    double W = bsup - a;
    double c = 0.01 / std::pow(0.5 * W, 6.0);
    return std::vector<double>{0, 0, 0, c * W * W * W, -3.0 * c * W * W,
                               3.0 * c * W, -c};
  }();
  RadialFnPtr bump = make_polynomial_fn(bump_coeffs, a);

  // Z^2 restricted to the support; the rest is s-independent and drops out
  // of the derivative.
  auto z2_at = [&](double s) {
    RadialFnPtr us = make_affine_of_fn(bump, s, 1.0);
    WarpFn fs = product_warp(base.spherical().f, us, dom);
    Metric1D ms(SphericallySymmetric{fs}, dom, "perturbed");
    QuadOptions opts;
    opts.rel_tol = 1e-12;
    return integrate_curvature(
               GluedMetric(ms), {a, bsup},
               [](const CurvatureSample& c, double) { return c.z2; }, opts)
        .value;
  };

  double s0 = 1e-5;
  double dz_fd = (z2_at(s0) - z2_at(-s0)) / (2.0 * s0);

  // Pairing side.
  QuadOptions opts;
  opts.rel_tol = 1e-11;
  GluedMetric gb(base);
  double paired =
      integrate(
          [&](double t) {
            auto comps = grad_z2_field(base, {t}).comps[0];
            double bv = (t > a && t < bsup) ? bump->value(t) : 0.0;
            double integrand = (comps[1] + comps[2]) * 2.0 * bv;
            return integrand * area_density(base, t);
          },
          a, bsup, opts)
          .value;
  CHECK(dz_fd == doctest::Approx(paired).epsilon(1e-5));
  CHECK(std::abs(paired) > 1e-8);  // the test has teeth
}

TEST_CASE("grad Z^2 oracle on the doubly warped shape") {
  // Same directional-derivative check for the two-warping branch, on a
  // genuinely non-Einstein metric. Perturbing f1 -> f1 (1 + s b) gives
  // h = diag(0, 2b, 0) in the orthonormal frame.
  Interval dom{0.4, 1.3};
  Metric1D base(DoublyWarped{make_tan_half_warp(dom, 0.7),
                             make_exp_neg_cos_warp(dom, 0.9), 0.25},
                dom, "warped");

  double a = 0.6, bsup = 1.1;
  auto bump_coeffs = [&]() {
    double W = bsup - a;
    double c = 0.02 / std::pow(0.5 * W, 6.0);
    return std::vector<double>{0, 0, 0, c * W * W * W, -3.0 * c * W * W,
                               3.0 * c * W, -c};
  }();
  RadialFnPtr bump = make_polynomial_fn(bump_coeffs, a);

  auto z2_at = [&](double s) {
    RadialFnPtr us = make_affine_of_fn(bump, s, 1.0);
    Metric1D ms(DoublyWarped{product_warp(base.doubly_warped().f1, us, dom),
                             base.doubly_warped().f2, 0.25},
                dom, "perturbed");
    QuadOptions opts;
    opts.rel_tol = 1e-12;
    return integrate_curvature(
               GluedMetric(ms), {a, bsup},
               [](const CurvatureSample& c, double) { return c.z2; }, opts)
        .value;
  };
  double s0 = 1e-5;
  double dz_fd = (z2_at(s0) - z2_at(-s0)) / (2.0 * s0);

  QuadOptions opts;
  opts.rel_tol = 1e-11;
  double paired = integrate(
                      [&](double t) {
                        auto comps = grad_z2_field(base, {t}).comps[0];
                        double bv =
                            (t > a && t < bsup) ? bump->value(t) : 0.0;
                        return comps[1] * 2.0 * bv * area_density(base, t);
                      },
                      a, bsup, opts)
                      .value;
  CHECK(dz_fd == doctest::Approx(paired).epsilon(1e-5));
  CHECK(std::abs(paired) > 1e-6);
}

TEST_CASE("zc2 on the cusp: Einstein, so the gradient term vanishes") {
  Metric1D cusp = cusp_metric(CuspSpec{1.0, 1.0, 0.0, 0.0, 9.0});
  auto grid = uniform_grid({1.0, 8.0}, 33);
  // z = 0 and s constant: the alpha-term drops out entirely, leaving
  // |L*tau| = |tau| |Ric| = 2 sqrt(3); the scalar equation is exact.
  ResidualReport r = zc2_residual(cusp, make_const_fn(1.0), 1.0, grid);
  CHECK(r.sup_primary == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-9));
  CHECK(r.sup_scalar < 1e-12);
}

TEST_CASE("grad Z^2 trace identity") {
  SchwarzschildSpec ss;
  ss.mass = 1.0;
  ss.r_out = 60.0;
  Metric1D schw = schwarzschild_metric(ss);
  std::vector<double> grid;
  for (double r : log_grid(2.5, 50.0, 60))
    grid.push_back(schwarzschild_t_of_r(ss, r));
  TensorField gz = grad_z2_field(schw, grid);
  for (size_t i = 0; i < grid.size(); ++i) {
    ScalarCurvatureJets sj = scalar_curvature_jets(schw, grid[i]);
    double tr = gz.comps[i][0] + gz.comps[i][1] + gz.comps[i][2];
    CHECK(std::abs(tr + 0.5 * sj.z2 + sj.lap_s / 6.0) < 1e-10);
  }
}

TEST_CASE("conformal ricci: exact law and two constructions") {
  Metric1D flat = flat_ball(8.0);
  auto grid = uniform_grid({1.0, 7.0}, 33);

  // Constant factor: Ricci unchanged.
  ConformalRicciCheck c0 = conformal_ricci(flat, make_const_fn(3.0), grid);
  CHECK(c0.max_deviation < 1e-13);

  // u = 1 + delta/t: the transformation law is exact at any delta.
  ConformalRicciCheck c1 = conformal_ricci(
      flat, make_affine_of_fn(make_inverse_fn(1.0), 0.05, 1.0), grid);
  CHECK(c1.max_deviation < 1e-11);

  // Linearization gap decays at second order in delta.
  std::vector<double> deltas = {1e-2, 1e-3, 1e-4}, gaps;
  for (double d : deltas) {
    ConformalRicciCheck c = conformal_ricci(
        flat, make_affine_of_fn(make_inverse_fn(1.0), d, 1.0), grid);
    gaps.push_back(c.max_linearization_gap);
  }
  CHECK(std::log10(gaps[0] / gaps[1]) > 1.9);
  CHECK(std::log10(gaps[1] / gaps[2]) > 1.9);

  // Isotropic factor over the flat metric against the area-radius profile:
  // two independent constructions of the same metric.
  double m = 1.0;
  RadialFnPtr w = make_affine_of_fn(make_inverse_fn(0.5 * m), 1.0, 1.0);
  RadialFnPtr u_iso = make_product_fn(w, w);
  SchwarzschildSpec ar;
  ar.mass = m;
  ar.r_out = 300.0;
  Metric1D schw = schwarzschild_metric(ar);
  Metric1D flat_big(SphericallySymmetric{make_linear_warp({0.5, 200.0}, 1.0)},
                    {0.5, 200.0}, "flat");
  double dev = 0.0;
  for (double rho : log_grid(2.0, 80.0, 25)) {
    auto exact = conformal_ricci_eigs(flat_big, u_iso, rho);
    double r_area = rho * std::pow(1.0 + 0.5 * m / rho, 2.0);
    CurvatureSample c =
        curvature_at(schw, schwarzschild_t_of_r(ar, r_area));
    for (int k = 0; k < 3; ++k)
      dev = std::max(dev, std::abs(exact[k] - c.ricci[k]));
  }
  CHECK(dev < 1e-8);
}
