#include <cmath>

#include "doctest.h"
#include "msl/curvature.hpp"
#include "msl/error.hpp"
#include "msl/functionals.hpp"
#include "msl/glued_ops.hpp"
#include "msl/metric_ops.hpp"
#include "msl/model_metrics.hpp"
#include "msl/surgery.hpp"

using namespace msl;

namespace {
constexpr double kPi = 3.14159265358979323846;

GluedMetric make_dehn(double t0, double a) {
  DehnFillSpec spec;
  spec.cusp = CuspSpec{1.0, 1.0, a, t0, 0.0};
  return dehn_fill(spec);
}
}  // namespace

TEST_CASE("dehn fill: exact C1 seam and cone data") {
  double t0 = std::log(100.0);  // c1 = 0.01
  GluedMetric g = make_dehn(t0, 0.0);
  SeamMeasurement seam = measure_seam(g, 0);
  for (double j : seam.value_jumps) CHECK(std::abs(j) < 1e-12);
  for (double j : seam.slope_jumps) CHECK(std::abs(j) < 1e-12);

  // Cone angle pi c1 sqrt(1-a^2); c1 = 0.01 gives 0.01 pi.
  CHECK(g.cone_points()[0].angle == doctest::Approx(0.01 * kPi).epsilon(1e-12));

  // f2(0) = c2 / e > 0 with flat slope.
  const auto& dw = g.pieces()[0].doubly_warped();
  CHECK(dw.f2.value(0.0) == doctest::Approx(0.01 / std::exp(1.0)).epsilon(1e-13));
  CHECK(std::abs(dw.f2.deriv(0.0, 1)) < 1e-15);

  // Torus cosine changes the cone angle by sqrt(1-a^2).
  GluedMetric gh = make_dehn(t0, 0.5);
  CHECK(gh.cone_points()[0].angle ==
        doctest::Approx(0.01 * kPi * std::sqrt(0.75)).epsilon(1e-12));

  // Gluing too близко to the thick part: cone angle out of the smooth regime.
  DehnFillSpec bad;
  bad.cusp = CuspSpec{1.0, 1.0, 0.0, -1.0, 0.0};
  CHECK_THROWS_AS((void)dehn_fill(bad), Error);
}

TEST_CASE("bend_core: concavity, smooth core, tiny volume change") {
  double t0 = 5.0;
  double c1 = std::exp(-t0);
  GluedMetric g = make_dehn(t0, 0.0);
  BendResult bent = bend_core(g, c1 / 10.0);

  CHECK(bent.cone_angle == doctest::Approx(2.0 * kPi));
  CHECK(bent.concavity_max <= 0.0);
  CHECK(bent.f2_perturbation_rel < 1e-2);

  // Volume change well below 1e-3 of the solid torus volume.
  double vd = volume(GluedMetric(g.pieces()[0])).value;
  CHECK(bent.volume_change < 1e-3 * vd);

  // s > 0 through the bend region (pre-smoothing, away from the seam).
  const Metric1D& bend_piece = bent.metric.pieces()[0];
  double r0 = c1 / 10.0;
  double min_s = 1e300;
  for (double t : interior_grid({0.5 * r0, 0.98 * r0}, 256))
    min_s = std::min(min_s, curvature_at(bend_piece, t).s);
  CHECK(min_s > 0.0);

  // New core slope closes the cone: f1'(r0/2) sqrt(1-a^2) = 1.
  CHECK(bend_piece.doubly_warped().f1.deriv(0.5 * r0, 1) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(bend_piece.doubly_warped().f1.value(0.5 * r0) ==
        doctest::Approx(0.0).epsilon(1e-15));

  // C1 data at r0 matches the trial pair.
  SeamMeasurement seam = measure_seam(bent.metric, 0);
  CHECK(std::abs(seam.value_jumps[0]) < 1e-12 * c1);
  CHECK(std::abs(seam.slope_jumps[0]) < 1e-10);

  // A bend radius out of regime is rejected.
  CHECK_THROWS_AS((void)bend_core(g, 0.7), Error);
}

TEST_CASE("smooth_seams: identity on C2-matched seams") {
  SchwarzschildSpec spec;
  spec.mass = 1.0;
  spec.r_out = 30.0;
  GluedMetric doubled = doubled_schwarzschild(spec);
  GluedMetric sm = smooth_seams(doubled, std::nullopt);
  CHECK(sm.pieces().size() == doubled.pieces().size());
  CHECK(!sm.seams()[0].smoothing_band.has_value());
  // Warp values untouched.
  for (double t : {-5.0, -1.0, 1.0, 5.0})
    CHECK(sm.piece_at(t).spherical().f.value(t) ==
          doctest::Approx(doubled.piece_at(t).spherical().f.value(t))
              .epsilon(1e-15));
}

TEST_CASE("smooth_seams: dehn pipeline holds the -6 floor") {
  for (double a : {0.0, 0.5}) {
    double t0 = 5.0;
    double c1 = std::exp(-t0);
    GluedMetric g = make_dehn(t0, a);
    BendResult bent = bend_core(g, c1 / 10.0);
    SmoothOptions sopts;
    sopts.band_half_width = c1 / 80.0;
    GluedMetric sm = smooth_seams(bent.metric, -6.0, sopts);
    MinScan scan = min_scalar_curvature(sm);
    CHECK(scan.min_s >= -6.0 - 1e-9);
    // The floor is approached only near the seam r = pi/2.
    CHECK(std::abs(scan.argmin - 0.5 * kPi) < 0.01);

    // Assembled warpings are C^2 across the former seam band edges.
    for (const auto& seam : sm.seams()) {
      if (!seam.smoothing_band) continue;
      for (double edge : {seam.smoothing_band->lo, seam.smoothing_band->hi}) {
        size_t i = sm.piece_index_at(edge - 1e-13);
        size_t j = sm.piece_index_at(edge + 1e-13);
        if (i == j) continue;
        const auto& l = sm.pieces()[i].doubly_warped();
        const auto& r = sm.pieces()[j].doubly_warped();
        CHECK(std::abs(l.f1.value(edge) - r.f1.value(edge)) < 1e-12);
        CHECK(std::abs(l.f1.deriv(edge, 1) - r.f1.deriv(edge, 1)) < 1e-10);
        CHECK(std::abs(l.f1.deriv(edge, 2) - r.f1.deriv(edge, 2)) < 1e-7);
      }
    }
  }
}

TEST_CASE("smooth_seams: unachievable floor fails loudly after retries") {
  // Raw Case-I-style C0 seam: the band curvature is O(m/R^2), so a floor
  // of +1 exhausts every retry.
  double m = 1.0, R = 50.0;
  SchwarzschildSpec ar;
  ar.mass = m;
  ar.r_out = 200.0;
  Metric1D schw = schwarzschild_metric(ar);
  double t_R = schwarzschild_areal_arclength(m, 2.0 * m, R);
  double shift = R - t_R;
  Metric1D flat(SphericallySymmetric{make_linear_warp({0.0, R}, 1.0)},
                {0.0, R}, "flat");
  Metric1D outer(
      SphericallySymmetric{shift_warp(schw.spherical().f, shift)},
      Interval{R, schw.domain().hi + shift}, "outer");
  Seam seam;
  seam.location = R;
  seam.target_order = Seam::Order::c0;
  GluedMetric raw({flat, outer}, {seam});
  CHECK_THROWS_AS((void)smooth_seams(raw, 1.0), Error);
  try {
    (void)smooth_seams(raw, 1.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::floor_unachievable);
  }
  // The same seam smooths fine with the honest floor.
  GluedMetric ok = smooth_seams(raw, 0.0);
  CHECK(ok.pieces().size() == 3);
  CHECK(ok.seams()[0].smoothing_band.has_value());
}

TEST_CASE("sphere surgery case I: shape jump, volumes, verdict") {
  double m = 1.0, R = 100.0;
  SchwarzschildSpec ar;
  ar.mass = m;
  ar.r_out = 1000.0;
  GluedMetric original = doubled_schwarzschild(ar);
  SphereSurgerySpec sspec;
  sspec.end = original;
  sspec.t_R = schwarzschild_areal_arclength(m, 2.0 * m, R);
  sspec.chart_radius = R;
  sspec.side = SurgerySide::inside_flat_ball;
  sspec.epsilon = 1e-3;
  SphereSurgeryResult res = sphere_surgery(sspec);

  CHECK(res.fitted_mass == doctest::Approx(m).epsilon(1e-4));
  CHECK(res.seam_radius == doctest::Approx(R));  // area radius
  CHECK(res.shape_jump > 0.0);
  CHECK(res.shape_jump == doctest::Approx(m / (R * R)).epsilon(0.2));
  CHECK(res.band_z_sq < 5.1 / (R * R));
  CHECK(res.band_z_sq * R * R == doctest::Approx(4.8321099).epsilon(1e-4));

  const ComparisonVerdict& v = res.verdict;
  CHECK(v.volume_decreased);
  CHECK(v.s_floor_preserved);
  CHECK(v.z_decreased);
  CHECK(v.i_eps_decreased);
  CHECK(v.glued_min_s >= -1e-9);
  CHECK(v.i_eps_margin > 1e-6);

  // The glued metric starts with a genuine flat ball.
  const Metric1D& first = res.glued.pieces().front();
  CHECK(first.spherical().f.value(first.domain().lo) ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK(curvature_at(first, 0.3 * R).s == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("sphere surgery rejects a non-convexifying seam") {
  // A hyperbolic end: f' = cosh > 1 at the seam, so the flat fill is less
  // convex and the surgery is invalid.
  Metric1D hyp(SphericallySymmetric{make_sinh_warp({0.1, 10.0}, 1.0)},
               {0.1, 10.0}, "hyperbolic");
  SphereSurgerySpec sspec;
  sspec.end = GluedMetric(hyp);
  sspec.t_R = 5.0;
  sspec.chart_radius = 5.0;
  sspec.side = SurgerySide::inside_flat_ball;
  sspec.skip_end_fit = true;
  CHECK_THROWS_AS((void)sphere_surgery(sspec), Error);
  try {
    (void)sphere_surgery(sspec);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::seam_not_convexifying);
  }
}

TEST_CASE("sphere surgery case II: cap closure and verdict") {
  double m = 0.5, R = 100.0;
  SchwarzschildSpec cf;
  cf.mass = m;
  cf.form = SchwarzschildForm::conformally_flat;
  cf.r_lo = std::max(10.0 * m, R / 10.0);
  cf.r_out = 20.0 * std::pow(R, 1.5);
  Metric1D end = schwarzschild_metric(cf);
  SphereSurgerySpec sspec;
  sspec.end = GluedMetric(end);
  sspec.t_R = schwarzschild_t_of_r(cf, R);
  sspec.chart_radius = R;
  sspec.side = SurgerySide::outside_sphere_cap;
  sspec.lambda = 1.75;
  SphereSurgeryResult res = sphere_surgery(sspec);

  REQUIRE(res.cap.has_value());
  // The glued metric closes at the antipodal pole.
  const Metric1D& cap = res.glued.pieces().back();
  CHECK(cap.spherical().f.value(cap.domain().hi) ==
        doctest::Approx(0.0).epsilon(1e-9));
  double dD = res.cap->delta * res.cap->cap_radius;
  CHECK(res.glued.domain().hi ==
        doctest::Approx(sspec.t_R + (kPi - dD) / res.cap->delta)
            .epsilon(1e-10));

  CHECK(res.shape_jump > 0.0);
  // A_end - A_cap = R^-lambda / boundary_radius by construction.
  CHECK(res.shape_jump ==
        doctest::Approx(std::pow(R, -1.75) / res.seam_radius).epsilon(1e-8));

  const ComparisonVerdict& v = res.verdict;
  CHECK(v.volume_decreased);
  CHECK(v.s_floor_preserved);
  CHECK(v.z_decreased);
  CHECK(v.i_eps_decreased);
  CHECK(v.glued_min_s >= -1e-9);
}

TEST_CASE("sphere surgery verdicts hold at R = 1000 too") {
  // Case I, m = 1.
  {
    double m = 1.0, R = 1000.0;
    SchwarzschildSpec ar;
    ar.mass = m;
    ar.r_out = 10.0 * R;
    SphereSurgerySpec sspec;
    sspec.end = doubled_schwarzschild(ar);
    sspec.t_R = schwarzschild_areal_arclength(m, 2.0 * m, R);
    sspec.chart_radius = R;
    sspec.side = SurgerySide::inside_flat_ball;
    SphereSurgeryResult res = sphere_surgery(sspec);
    const ComparisonVerdict& v = res.verdict;
    CHECK(v.volume_decreased);
    CHECK(v.s_floor_preserved);
    CHECK(v.z_decreased);
    CHECK(v.i_eps_decreased);
  }
  // Case II, m = 1/2, lambda = 7/4.
  {
    double m = 0.5, R = 1000.0;
    SchwarzschildSpec cf;
    cf.mass = m;
    cf.form = SchwarzschildForm::conformally_flat;
    cf.r_lo = std::max(10.0 * m, R / 10.0);
    cf.r_out = 20.0 * std::pow(R, 1.5);
    Metric1D end = schwarzschild_metric(cf);
    SphereSurgerySpec sspec;
    sspec.end = GluedMetric(end);
    sspec.t_R = schwarzschild_t_of_r(cf, R);
    sspec.chart_radius = R;
    sspec.side = SurgerySide::outside_sphere_cap;
    sspec.lambda = 1.75;
    SphereSurgeryResult res = sphere_surgery(sspec);
    const ComparisonVerdict& v = res.verdict;
    CHECK(v.volume_decreased);
    CHECK(v.s_floor_preserved);
    CHECK(v.z_decreased);
    CHECK(v.i_eps_decreased);
    CHECK(v.glued_min_s >= -1e-9);
  }
}

TEST_CASE("dehn pipeline holds the floor across asymmetric cusp data") {
  DehnFillSpec spec;
  spec.cusp = CuspSpec{2.0, 0.7, 0.3, 6.0, 0.0};
  GluedMetric raw = dehn_fill(spec);
  double c1 = 2.0 * std::exp(-6.0);
  BendResult bent = bend_core(raw, c1 / 10.0);
  SmoothOptions sopts;
  sopts.band_half_width = c1 / 80.0;
  GluedMetric sm = smooth_seams(bent.metric, -6.0, sopts);
  CHECK(min_scalar_curvature(sm).min_s >= -6.0 - 1e-9);
}

TEST_CASE("collapse family") {
  CollapseSpec spec{1.0, 1.0, 0.0, 1.0};
  double v1 = volume(GluedMetric(collapse_family(spec, 1.0))).value;
  CHECK(v1 == doctest::Approx(4.0 * kPi * kPi).epsilon(1e-10));
  for (double eps : {0.5, 0.1, 0.02}) {
    Metric1D me = collapse_family(spec, eps);
    double ve = volume(GluedMetric(me)).value;
    CHECK(ve / v1 == doctest::Approx(eps * eps).epsilon(1e-10));
    for (double t : {0.2, 0.8}) {
      CurvatureSample c = curvature_at(me, t);
      for (double k : c.sectional) CHECK(std::abs(k) < 1e-15);
    }
    FunctionalReport fr = evaluate_functionals(GluedMetric(me), 1e-3);
    CHECK(fr.s_minus_l2 < 1e-12);
  }
  CHECK_THROWS_AS((void)collapse_family(spec, 0.0), Error);
}

TEST_CASE("conformal shape delta: first-order law") {
  Metric1D flat(SphericallySymmetric{make_linear_warp({0.5, 8.0}, 1.0)},
                {0.5, 8.0}, "flat");
  double m = 1.0, r = 2.0;

  // nu = m/t reproduces the m/R^2 leading term of the Case I computation.
  ConformalShapeDelta cs =
      conformal_shape_delta(flat, make_inverse_fn(m), 1e-4, r);
  CHECK(cs.predicted == doctest::Approx(1e-4 * m / (r * r)).epsilon(1e-12));
  CHECK(cs.exact == doctest::Approx(1e-4 * m / (r * r)).epsilon(1e-3));

  // Richardson oracle: halving delta divides the gap by ~4.
  ConformalShapeDelta g1 =
      conformal_shape_delta(flat, make_inverse_fn(m), 2e-3, r);
  ConformalShapeDelta g2 =
      conformal_shape_delta(flat, make_inverse_fn(m), 1e-3, r);
  CHECK(g1.gap / g2.gap == doctest::Approx(4.0).epsilon(0.1));

  // Constant nu: pure dilation, no transverse difference at any order.
  ConformalShapeDelta c0 =
      conformal_shape_delta(flat, make_const_fn(0.4), 1e-3, r);
  CHECK(std::abs(c0.predicted) < 1e-15);
  CHECK(std::abs(c0.exact) < 1e-13);
}

TEST_CASE("glued metric plumbing") {
  SchwarzschildSpec spec;
  spec.mass = 1.0;
  spec.r_out = 20.0;
  GluedMetric doubled = doubled_schwarzschild(spec);
  Interval dom = doubled.domain();
  CHECK(dom.lo == doctest::Approx(-dom.hi));

  GluedMetric scaled = doubled.rescaled(2.0);
  CHECK(scaled.domain().hi == doctest::Approx(2.0 * dom.hi));
  CHECK(scaled.seams()[0].location == doctest::Approx(0.0));

  // Non-contiguous pieces are rejected.
  Metric1D p1(SphericallySymmetric{make_linear_warp({0.0, 1.0}, 1.0)},
              {0.0, 1.0}, "a");
  Metric1D p2(SphericallySymmetric{make_linear_warp({2.0, 3.0}, 1.0)},
              {2.0, 3.0}, "b");
  CHECK_THROWS_AS((void)GluedMetric({p1, p2}, {}), Error);
}
