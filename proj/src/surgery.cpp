#include "msl/surgery.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "msl/curvature.hpp"
#include "msl/error.hpp"
#include "msl/functionals.hpp"
#include "msl/metric_ops.hpp"

namespace msl {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

double pow1mu(double u, double k) {
  if (u >= 1.0) return 0.0;
  return std::exp(k * std::log1p(-u));
}

// Concave bend profile p on [x0, x0 + h]:
//   p(x0) = 0, p'(x0) = s_core, p''(x0) = 0 (smooth core),
//   p(x0+h) = F_t, p'(x0+h) = s_t (C^1 match to the trial warping),
//   p'' <= 0 throughout, strictly negative at the right edge.
// p'(x) = s_t + (s_core - s_t) * sigma((x-x0)/h) with sigma a convex
// combination of (1-u)^k [1+ku], 1-3u^2+2u^3 and 1-u^2.
class BendProfileFn final : public RadialFn {
 public:
  BendProfileFn(double x0, double h, double s_t, double s_core, double th1,
                double th2, double k)
      : x0_(x0), h_(h), s_t_(s_t), s_c_(s_core), th1_(th1), th2_(th2), k_(k) {
    wk_ = 1.0 - th1_ - th2_;
  }

  double sigma(double u) const {
    double sk = pow1mu(u, k_) * (1.0 + k_ * u);
    double sc = 1.0 - 3.0 * u * u + 2.0 * u * u * u;
    double sq = 1.0 - u * u;
    return wk_ * sk + th1_ * sc + th2_ * sq;
  }
  double sigma_d1(double u) const {
    double sk = -k_ * (k_ + 1.0) * u * pow1mu(u, k_ - 1.0);
    double sc = -6.0 * u * (1.0 - u);
    double sq = -2.0 * u;
    return wk_ * sk + th1_ * sc + th2_ * sq;
  }
  double sigma_d2(double u) const {
    double sk = -k_ * (k_ + 1.0) * pow1mu(u, k_ - 2.0) * (1.0 - k_ * u);
    double sc = -6.0 + 12.0 * u;
    double sq = -2.0;
    return wk_ * sk + th1_ * sc + th2_ * sq;
  }
  double sigma_d3(double u) const {
    double sk = k_ * (k_ + 1.0) * (k_ - 1.0) * pow1mu(u, k_ - 3.0) *
                (2.0 - k_ * u);
    double sc = 12.0;
    return wk_ * sk + th1_ * sc;
  }
  double sigma_integral(double u) const {
    // int_0^u of sigma.
    double ik = (1.0 - pow1mu(u, k_ + 1.0)) -
                k_ * (1.0 - pow1mu(u, k_ + 2.0)) / (k_ + 2.0);
    double ic = u - u * u * u + 0.5 * u * u * u * u;
    double iq = u - u * u * u / 3.0;
    return wk_ * ik + th1_ * ic + th2_ * iq;
  }

  double value(double t) const override {
    double u = (t - x0_) / h_;
    return s_t_ * (t - x0_) + (s_c_ - s_t_) * h_ * sigma_integral(u);
  }
  double deriv(double t, int order) const override {
    double u = (t - x0_) / h_;
    double amp = s_c_ - s_t_;
    switch (order) {
      case 1: return s_t_ + amp * sigma(u);
      case 2: return amp * sigma_d1(u) / h_;
      case 3: return amp * sigma_d2(u) / (h_ * h_);
      case 4: return amp * sigma_d3(u) / (h_ * h_ * h_);
      default: return 0.0;
    }
  }
  int max_exact_order() const override { return 4; }
  std::string id() const override {
    return "bend_profile(x0=" + fmt(x0_) + ",h=" + fmt(h_) + ",k=" + fmt(k_) +
           ")";
  }

 private:
  double x0_, h_, s_t_, s_c_, th1_, th2_, k_, wk_;
};

}  // namespace

GluedMetric dehn_fill(const DehnFillSpec& spec) {
  const CuspSpec& cusp = spec.cusp;
  if (cusp.d1 <= 0.0 || cusp.d2 <= 0.0 || cusp.torus_cos * cusp.torus_cos >= 1.0)
    fail(ErrorCode::invalid_argument, "bad cusp parameters");
  const double a = cusp.torus_cos;
  const double root = std::sqrt(1.0 - a * a);
  const double c1 = cusp.d1 * std::exp(-cusp.t0);
  const double c2 = cusp.d2 * std::exp(-cusp.t0);
  if (0.5 * c1 * root >= 1.0)
    fail(ErrorCode::cone_angle_exceeds_smooth,
         "c1 sqrt(1-a^2)/2 >= 1: glue the torus further down the cusp");

  const double seam = 0.5 * kPi;
  Interval torus_dom{0.0, seam};
  WarpFn f1 = spec.f1_override ? spec.f1_override->with_domain(torus_dom)
                               : make_tan_half_warp(torus_dom, c1);
  WarpFn f2 = spec.f2_override ? spec.f2_override->with_domain(torus_dom)
                               : make_exp_neg_cos_warp(torus_dom, c2);
  Metric1D torus(DoublyWarped{f1, f2, a}, torus_dom, "glued solid torus");

  // Hyperbolic collar past the seam; walking outward in the glued
  // coordinate moves toward the thick part of the cusp, so the warpings
  // grow like e^{+(t - pi/2)} from their seam values.
  Interval collar_dom{seam, seam + spec.glue_tail};
  Metric1D collar(
      DoublyWarped{make_exp_warp(collar_dom, c1, 1.0, seam),
                   make_exp_warp(collar_dom, c2, 1.0, seam), a},
      collar_dom, "hyperbolic collar");

  // Boundary conditions at the seam, checked rather than assumed.
  Jet2 j1 = f1.jet2(seam), j2 = f2.jet2(seam);
  double tol = 1e-10 * (1.0 + c1 + c2);
  if (std::abs(j1.f - c1) > tol || std::abs(j1.d1 - c1) > tol ||
      std::abs(j2.f - c2) > tol || std::abs(j2.d1 - c2) > tol)
    fail(ErrorCode::invalid_argument,
         "trial warpings violate the C1 seam conditions at r = pi/2");

  Seam s;
  s.location = seam;
  s.target_order = Seam::Order::c1;
  s.value_jumps = {c1 - j1.f, c2 - j2.f};
  s.slope_jumps = {c1 - j1.d1, c2 - j2.d1};

  GluedMetric g({torus, collar}, {s});
  g.cone_points().push_back(
      ConePointRecord{0.0, 2.0 * kPi * root * f1.deriv(0.0, 1)});
  return g;
}

BendResult bend_core(const GluedMetric& g, double r0) {
  if (g.pieces().empty() || !g.pieces()[0].is_doubly_warped())
    fail(ErrorCode::invalid_argument, "bend_core expects a Dehn-filled metric");
  const Metric1D& torus = g.pieces()[0];
  const auto& dw = torus.doubly_warped();
  const double a = dw.torus_cos;
  const double root = std::sqrt(1.0 - a * a);
  const double s_core = 1.0 / root;

  if (r0 <= 0.0) {
    // Default regime: r0 = c1/10 with c1 read off the trial slope at 0.
    r0 = 0.2 * dw.f1.deriv(0.0, 1);
  }
  if (r0 <= 0.0 || r0 >= 0.5 * torus.domain().hi)
    fail(ErrorCode::invalid_argument, "bend radius out of range");

  const double h = 0.5 * r0;
  Jet2 trial = dw.f1.jet2(r0);
  const double F_t = trial.f, s_t = trial.d1;
  if (s_t * root >= 1.0)
    fail(ErrorCode::cone_angle_exceeds_smooth,
         "trial slope at r0 already exceeds the smooth-core slope");

  const double beta = (F_t / h - s_t) / (s_core - s_t);
  if (!(beta > 0.0 && beta < 1.0))
    fail(ErrorCode::concave_interpolant_infeasible,
         "no concave profile matches the C1 data (chord slope outside the "
         "end slopes); r0 or c1 out of regime");

  // Interior curvature targets: rho_mid keeps -p''/p above ~3 through the
  // bend, rho_edge sets -p''(r0^-)/p(r0) = 2.5 so s stays positive up to
  // the seam.
  const double rho_mid = 3.0, rho_edge = 2.5;
  const double th1 = rho_mid * F_t * h / (0.2304 * (s_core - s_t));
  const double th2 = 0.5 * rho_edge * F_t * h / (s_core - s_t);
  const double denom = beta - 0.5 * th1 - (2.0 / 3.0) * th2;
  if (denom <= 0.0 || th1 + th2 >= 0.5)
    fail(ErrorCode::concave_interpolant_infeasible,
         "bend weights infeasible; r0 too large relative to c1");
  const double k = 2.0 * (1.0 - th1 - th2) / denom - 2.0;
  if (k < 4.0)
    fail(ErrorCode::concave_interpolant_infeasible,
         "bend profile too shallow (k < 4); shrink r0");

  auto bend_fn =
      std::make_shared<BendProfileFn>(0.5 * r0, h, s_t, s_core, th1, th2, k);
  Interval bend_dom{0.5 * r0, r0};
  WarpFn f1_bend(bend_fn, bend_dom);

  // Concavity check on the grid (second derivative of the new f1).
  BendResult out{GluedMetric(torus), 0.5 * r0, 2.0 * kPi, 0, 0, 0, 0};
  double conc_max = -std::numeric_limits<double>::infinity();
  for (double t : interior_grid(bend_dom, 2048))
    conc_max = std::max(conc_max, f1_bend.deriv(t, 2));
  if (conc_max > 1e-12 * s_core / h)
    fail(ErrorCode::concave_interpolant_infeasible,
         "bend profile failed the concavity check");
  out.concavity_max = conc_max;

  // C^2 bump flattening f2' at the new core, supported past the seam so
  // its second derivative stays small against f2 itself.
  const double core = 0.5 * r0;
  double support_hi = std::min(10.0 * r0, 0.5 * torus.domain().hi);
  Interval support{core, support_hi};
  double g0 = dw.f2.deriv(core, 1);
  auto coeffs = quintic_hermite_coeffs(core, support_hi, Jet2{0.0, -g0, 0.0},
                                       Jet2{0.0, 0.0, 0.0});
  WarpFn f2_patched = add_windowed_polynomial(dw.f2, support, coeffs, core);

  // Perturbation size and induced curvature change, reported.
  double max_q = 0.0, min_f2 = std::numeric_limits<double>::infinity();
  double max_scurv_change = 0.0;
  for (double t : interior_grid(support, 512)) {
    double q = f2_patched.value(t) - dw.f2.value(t);
    max_q = std::max(max_q, std::abs(q));
    min_f2 = std::min(min_f2, dw.f2.value(t));
    Jet2 a2 = dw.f2.jet2(t), b2 = f2_patched.jet2(t);
    double ds = -2.0 * (b2.d2 / b2.f - a2.d2 / a2.f);
    max_scurv_change = std::max(max_scurv_change, std::abs(ds));
  }
  out.f2_perturbation_rel = max_q / min_f2;
  out.f2_curvature_change_rel = max_scurv_change / 6.0;
  if (out.f2_perturbation_rel > 1e-2)
    fail(ErrorCode::concave_interpolant_infeasible,
         "f2 core perturbation exceeds the 1% budget");

  // Assemble: bend + remaining trial + everything past the torus piece.
  Metric1D bend_piece(DoublyWarped{f1_bend, f2_patched, a}, bend_dom,
                      "core bend");
  Metric1D trial_piece(DoublyWarped{dw.f1, f2_patched, a},
                       Interval{r0, torus.domain().hi}, torus.label());
  std::vector<Metric1D> pieces = {bend_piece, trial_piece};
  for (size_t i = 1; i < g.pieces().size(); ++i) pieces.push_back(g.pieces()[i]);

  std::vector<Seam> seams;
  Seam bend_seam;
  bend_seam.location = r0;
  bend_seam.target_order = Seam::Order::c1;
  bend_seam.value_jumps = {dw.f1.value(r0) - f1_bend.value(r0), 0.0};
  bend_seam.slope_jumps = {dw.f1.deriv(r0, 1) - f1_bend.deriv(r0, 1), 0.0};
  seams.push_back(bend_seam);
  for (const auto& s : g.seams()) seams.push_back(s);

  GluedMetric bent(pieces, seams);
  bent.cone_points().push_back(ConePointRecord{core, 2.0 * kPi});
  out.metric = bent;

  QuadOptions vopts;
  double v_trial = volume(GluedMetric(torus), torus.domain(), vopts).value;
  double v_bent =
      volume(bent, Interval{core, torus.domain().hi}, vopts).value;
  out.volume_change = std::abs(v_bent - v_trial);
  return out;
}

ComparisonVerdict compare_metrics(const GluedMetric& original,
                                  const GluedMetric& glued, double epsilon,
                                  double s_floor, double floor_abs_tol) {
  ComparisonVerdict v;
  v.epsilon = epsilon;
  FunctionalReport fo = evaluate_functionals(original, epsilon);
  FunctionalReport fg = evaluate_functionals(glued, epsilon);
  v.vol_original = fo.volume;
  v.vol_glued = fg.volume;
  v.s_minus_sq_original = fo.s_minus_sq_integral;
  v.s_minus_sq_glued = fg.s_minus_sq_integral;
  v.z_sq_original = fo.z_sq_integral;
  v.z_sq_glued = fg.z_sq_integral;
  v.i_eps_original = fo.i_eps_minus;
  v.i_eps_glued = fg.i_eps_minus;

  const double strict = 1e-6;  // relative margin demanded of a strict pass
  auto rel_margin = [](double orig, double glued_val) {
    double denom = std::max(std::abs(orig), 1e-300);
    return (orig - glued_val) / denom;
  };
  v.volume_margin = rel_margin(v.vol_original, v.vol_glued);
  v.volume_decreased = v.volume_margin >= strict;
  v.z_margin = rel_margin(v.z_sq_original, v.z_sq_glued);
  v.z_decreased = v.z_sq_original > 0.0 && v.z_margin >= strict;
  v.i_eps_margin = rel_margin(v.i_eps_original, v.i_eps_glued);
  v.i_eps_decreased = v.i_eps_original > 0.0 && v.i_eps_margin >= strict;

  v.s_floor = s_floor;
  v.glued_min_s = min_scalar_curvature(glued).min_s;
  v.s_floor_preserved = v.glued_min_s >= s_floor - floor_abs_tol;
  return v;
}

SphereSurgeryResult sphere_surgery(const SphereSurgerySpec& spec) {
  const GluedMetric& end = spec.end;
  if (end.pieces().front().is_doubly_warped())
    fail(ErrorCode::invalid_argument,
         "sphere surgery expects spherically symmetric metrics");
  Interval dom = end.domain();
  if (!(spec.t_R > dom.lo && spec.t_R < dom.hi))
    fail(ErrorCode::grid_out_of_domain, "surgery radius outside the domain");

  SphereSurgeryResult out;

  // Decay pre-check on the outermost piece.
  const Metric1D& outer = end.pieces().back();
  if (!spec.skip_end_fit) {
    double rho_hi = outer.spherical().f.value(outer.domain().hi);
    double rho_lo = outer.spherical().f.value(outer.domain().lo);
    FitWindow win;
    win.r_min = std::max(spec.chart_radius / 10.0, 1.05 * rho_lo);
    win.r_max = std::min(10.0 * spec.chart_radius, 0.98 * rho_hi);
    EndAsymptotics fit = fit_end_asymptotics(outer, win);
    out.fitted_mass = fit.mass;
    if (fit.mass <= 0.0)
      fail(ErrorCode::invalid_argument, "end has nonpositive fitted mass");
    if (!fit.h_below_floor && fit.h_decay_exp > -1.9)
      fail(ErrorCode::invalid_argument,
           "end decay too slow: fitted h exponent " +
               std::to_string(fit.h_decay_exp));
  }

  const Metric1D& host = end.piece_at(spec.t_R);
  Jet2 jr = host.spherical().f.jet2(spec.t_R);
  const double R_bar = jr.f;          // induced radius of the seam sphere
  const double A_out = jr.d1 / jr.f;  // outward shape operator, original
  out.seam_radius = R_bar;

  std::vector<Metric1D> pieces;
  std::vector<Seam> seams;
  std::vector<ConePointRecord> cones;
  double s_floor = 0.0;

  if (spec.side == SurgerySide::inside_flat_ball) {
    // Excise everything inside the seam sphere; glue the flat ball of the
    // matching boundary radius.
    double A_in = 1.0 / R_bar;
    out.shape_jump = A_in - A_out;
    if (out.shape_jump <= 0.0)
      fail(ErrorCode::seam_not_convexifying,
           "flat ball is not more convex than the end at this radius");
    pieces.push_back(Metric1D(
        SphericallySymmetric{make_linear_warp({0.0, R_bar}, 1.0)},
        Interval{0.0, R_bar}, "flat ball"));
    cones.push_back(ConePointRecord{0.0, 2.0 * kPi});
    double shift = R_bar - spec.t_R;
    size_t idx = end.piece_index_at(spec.t_R);
    for (size_t i = idx; i < end.pieces().size(); ++i) {
      const Metric1D& p = end.pieces()[i];
      double lo = std::max(p.domain().lo, spec.t_R);
      Metric1D shifted(
          SphericallySymmetric{shift_warp(p.spherical().f, shift)},
          Interval{lo + shift, p.domain().hi + shift}, p.label());
      pieces.push_back(shifted);
      if (i > idx) {
        Seam s;
        s.location = p.domain().lo + shift;
        s.target_order = Seam::Order::c1;
        seams.push_back(s);
      }
    }
    Seam s;
    s.location = R_bar;
    s.target_order = Seam::Order::c0;
    seams.insert(seams.begin(), s);
  } else {
    // Excise the end beyond the seam sphere; glue the complementary cap of
    // a round 3-sphere solving the mismatch system.
    double cos_rhs = R_bar * A_out - std::pow(spec.chart_radius, -spec.lambda);
    CapMatchResult cap =
        solve_cap_system(R_bar, cos_rhs, std::pow(spec.chart_radius, -1.5),
                         spec.chart_radius);
    cap.delta_sq_R3 = cap.delta * cap.delta * std::pow(spec.chart_radius, 3);
    cap.target_shape_operator = A_out;
    out.cap = cap;
    out.shape_jump = A_out - cap.cap_shape_operator;
    if (out.shape_jump <= 0.0)
      fail(ErrorCode::seam_not_convexifying,
           "cap is not less convex than the end at this radius");

    size_t idx = end.piece_index_at(spec.t_R);
    for (size_t i = 0; i <= idx; ++i) {
      const Metric1D& p = end.pieces()[i];
      double hi = std::min(p.domain().hi, spec.t_R);
      pieces.push_back(p.with_domain({p.domain().lo, hi}));
      if (i > 0) seams.push_back(end.seams()[i - 1]);
    }
    double dD = cap.delta * cap.cap_radius;
    double cap_len = (kPi - dD) / cap.delta;
    Interval cap_dom{spec.t_R, spec.t_R + cap_len};
    WarpFn cap_warp = shift_warp(
        make_sin_warp({cap.cap_radius, kPi / cap.delta}, cap.delta),
        spec.t_R - cap.cap_radius);
    pieces.push_back(Metric1D(SphericallySymmetric{cap_warp}, cap_dom,
                              "sphere cap complement"));
    cones.push_back(ConePointRecord{cap_dom.hi, 2.0 * kPi});
    Seam s;
    s.location = spec.t_R;
    s.target_order = Seam::Order::c0;
    seams.push_back(s);
  }

  GluedMetric raw(pieces, seams);
  raw.cone_points() = cones;

  SmoothOptions sopts;
  sopts.band_half_width = spec.band_half_width;
  GluedMetric smoothed = smooth_seams(raw, s_floor, sopts);

  // Band curvature bookkeeping.
  for (const auto& s : smoothed.seams()) {
    if (s.smoothing_band) {
      out.band_z_sq += integrate_curvature(
                           smoothed, *s.smoothing_band,
                           [](const CurvatureSample& c, double) { return c.z2; })
                           .value;
    }
  }

  out.verdict = compare_metrics(end, smoothed, spec.epsilon, s_floor);
  out.glued = smoothed;
  return out;
}

Metric1D collapse_family(const CollapseSpec& spec, double eps) {
  if (eps <= 0.0 || eps > 1.0)
    fail(ErrorCode::invalid_argument, "collapse parameter must be in (0, 1]");
  Interval dom{0.0, spec.interval_length};
  return Metric1D(DoublyWarped{make_const_warp(dom, eps * spec.d1),
                               make_const_warp(dom, eps * spec.d2),
                               spec.torus_cos},
                  dom, "collapsed torus bundle");
}

ConformalShapeDelta conformal_shape_delta(const Metric1D& m,
                                          const RadialFnPtr& nu, double delta,
                                          double r) {
  if (m.is_doubly_warped())
    fail(ErrorCode::invalid_argument,
         "conformal shape comparison needs the spherical shape");
  ConformalShapeDelta out;
  out.predicted = -nu->deriv(r, 1) * delta;
  RadialFnPtr u = make_sqrt_conformal_fn(nu, delta);
  double a_fill = 1.0 / conformal_level_radius(m, u, r);
  double a_conf = conformal_shape_operator(m, u, r);
  out.exact = a_fill - a_conf;
  out.gap = std::abs(out.exact - out.predicted);
  return out;
}

}  // namespace msl
