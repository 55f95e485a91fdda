#include "msl/model_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "msl/curvature.hpp"
#include "msl/error.hpp"
#include "msl/fitting.hpp"
#include "msl/metric_ops.hpp"
#include "msl/quadrature.hpp"
#include "msl/rootfind.hpp"

namespace msl {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Metric1D schwarzschild_metric(const SchwarzschildSpec& spec) {
  if (spec.mass <= 0.0)
    fail(ErrorCode::invalid_argument, "Schwarzschild mass must be positive");
  if (spec.form == SchwarzschildForm::area_radius) {
    double r_lo = spec.r_lo < 0.0 ? 2.0 * spec.mass : spec.r_lo;
    if (spec.r_out <= r_lo)
      fail(ErrorCode::invalid_argument, "r_out must exceed r_lo");
    WarpFn f = make_schwarzschild_areal_warp(spec.mass, r_lo, spec.r_out);
    return Metric1D(SphericallySymmetric{f}, f.domain(),
                    "schwarzschild_areal(m=" + std::to_string(spec.mass) + ")");
  }
  double r_lo = spec.r_lo < 0.0 ? spec.mass : spec.r_lo;
  if (spec.r_out <= r_lo)
    fail(ErrorCode::invalid_argument, "r_out must exceed r_lo");
  WarpFn f = make_schwarzschild_isotropic_warp(spec.mass, r_lo, spec.r_out);
  return Metric1D(SphericallySymmetric{f}, f.domain(),
                  "schwarzschild_conformal(m=" + std::to_string(spec.mass) + ")");
}

GluedMetric doubled_schwarzschild(const SchwarzschildSpec& spec) {
  if (spec.form != SchwarzschildForm::area_radius)
    fail(ErrorCode::invalid_argument,
         "only the area-radius form doubles across a horizon (the "
         "conformally flat form has no minimal sphere)");
  SchwarzschildSpec one_sided = spec;
  one_sided.r_lo = 2.0 * spec.mass;
  one_sided.doubled = false;
  Metric1D right = schwarzschild_metric(one_sided);
  Metric1D left = right.mirrored(0.0);

  Seam seam;
  seam.location = 0.0;
  seam.target_order = Seam::Order::c1;
  const WarpFn& f = right.spherical().f;
  seam.value_jumps = {0.0};
  seam.slope_jumps = {f.deriv(0.0, 1) - (-f.deriv(0.0, 1))};
  GluedMetric g({left, right}, {seam});
  return g;
}

double schwarzschild_t_of_r(const SchwarzschildSpec& spec, double r) {
  if (spec.form == SchwarzschildForm::area_radius) {
    double r_lo = spec.r_lo < 0.0 ? 2.0 * spec.mass : spec.r_lo;
    return schwarzschild_areal_arclength(spec.mass, r_lo, r);
  }
  double r_lo = spec.r_lo < 0.0 ? spec.mass : spec.r_lo;
  return schwarzschild_isotropic_arclength(spec.mass, r_lo, r);
}

Metric1D cusp_metric(const CuspSpec& spec) {
  if (spec.d1 <= 0.0 || spec.d2 <= 0.0)
    fail(ErrorCode::invalid_argument, "cusp diameters must be positive");
  if (spec.torus_cos * spec.torus_cos >= 1.0)
    fail(ErrorCode::invalid_argument, "cusp torus cosine must satisfy a^2 < 1");
  double t_max = spec.t_max > spec.t0 ? spec.t_max : spec.t0 + 40.0;
  Interval dom{spec.t0, t_max};
  WarpFn f1 = make_exp_warp(dom, spec.d1 * std::exp(-spec.t0), -1.0, spec.t0);
  WarpFn f2 = make_exp_warp(dom, spec.d2 * std::exp(-spec.t0), -1.0, spec.t0);
  return Metric1D(DoublyWarped{f1, f2, spec.torus_cos}, dom, "hyperbolic_cusp");
}

FlatTorusRecord flat_torus(double d1, double d2, double torus_cos) {
  if (d1 <= 0.0 || d2 <= 0.0)
    fail(ErrorCode::invalid_argument, "torus diameters must be positive");
  if (torus_cos * torus_cos >= 1.0)
    fail(ErrorCode::invalid_argument, "torus cosine must satisfy a^2 < 1");
  FlatTorusRecord rec;
  rec.d1 = d1;
  rec.d2 = d2;
  rec.torus_cos = torus_cos;
  rec.area = 4.0 * kPi * kPi * d1 * d2 *
             std::sqrt(1.0 - torus_cos * torus_cos);
  return rec;
}

Metric1D sphere_cap_metric(const SphereCapSpec& spec) {
  if (spec.delta <= 0.0)
    fail(ErrorCode::invalid_argument, "sphere scale delta must be positive");
  double dD = spec.delta * spec.cap_radius;
  if (dD <= 0.0 || dD >= kPi)
    fail(ErrorCode::cap_exceeds_sphere,
         "geodesic cap radius must satisfy 0 < delta*D < pi");
  double pole = kPi / spec.delta;
  Interval dom = spec.side == CapSide::cap
                     ? Interval{0.0, spec.cap_radius}
                     : Interval{spec.cap_radius, pole};
  WarpFn f = make_sin_warp(dom, spec.delta);
  return Metric1D(SphericallySymmetric{f}, dom,
                  spec.side == CapSide::cap ? "sphere_cap" : "sphere_cap_complement");
}

CapMatchResult solve_cap_system(double boundary_radius, double cos_rhs,
                                double delta0, double D0) {
  if (cos_rhs <= -1.0 || cos_rhs >= 1.0)
    fail(ErrorCode::no_root,
         "cap system has no solution (cos equation RHS = " +
             std::to_string(cos_rhs) +
             " outside (-1,1)); bracketing attempt abandoned");

  auto residual = [&](const std::array<double, 2>& x) -> std::array<double, 2> {
    double d = x[0], D = x[1];
    return {std::sin(d * D) - d * boundary_radius, std::cos(d * D) - cos_rhs};
  };
  auto jacobian =
      [&](const std::array<double, 2>& x) -> std::array<std::array<double, 2>, 2> {
    double d = x[0], D = x[1];
    double c = std::cos(d * D), s = std::sin(d * D);
    return {{{D * c - boundary_radius, d * c}, {-D * s, -d * s}}};
  };

  Root2Result root = newton_2x2(residual, jacobian, {delta0, D0}, 5e-14, 400);
  double dD = root.x[0] * root.x[1];
  if (!root.converged || !(dD > 0.0 && dD < 0.5 * kPi))
    fail(ErrorCode::no_root,
         "cap matching Newton failed (iterations " +
             std::to_string(root.iterations) +
             ", delta*D = " + std::to_string(dD) + ")");

  CapMatchResult res;
  res.delta = root.x[0];
  res.cap_radius = root.x[1];
  res.residual_sin = root.residual[0];
  res.residual_cos = root.residual[1];
  res.iterations = root.iterations;
  res.boundary_radius = std::sin(dD) / res.delta;
  res.cap_shape_operator = res.delta * std::cos(dD) / std::sin(dD);
  return res;
}

CapMatchResult solve_cap_matching(double R, CapMatchVariant variant,
                                  double lambda, double m_normalized) {
  const double m = m_normalized;
  if (m <= 0.0) fail(ErrorCode::invalid_argument, "mass must be positive");
  if (variant == CapMatchVariant::mismatch && (lambda <= 1.5 || lambda >= 2.0))
    fail(ErrorCode::invalid_argument, "mismatch exponent must lie in (3/2, 2)");

  const double phi = 1.0 + 2.0 * m / R;
  double cos_rhs = 1.0 - (m / R) / phi;
  if (variant == CapMatchVariant::mismatch) cos_rhs -= std::pow(R, -lambda);

  // delta ~ R^{-3/2}, D ~ R in the matching regime.
  CapMatchResult res =
      solve_cap_system(R * std::sqrt(phi), cos_rhs, std::pow(R, -1.5), R);
  res.delta_sq_R3 = res.delta * res.delta * R * R * R;
  res.target_shape_operator = (1.0 + m / R) / (R * std::pow(phi, 1.5));
  return res;
}

IsotropicChart::IsotropicChart(const Metric1D& m, int panels) : m_(&m) {
  const Interval dom = m.domain();
  ts_ = uniform_grid(dom, panels + 1);
  logrho_.assign(ts_.size(), 0.0);
  QuadOptions opts;
  opts.rel_tol = 1e-13;
  opts.abs_tol = 1e-15;
  const WarpFn& f = m.spherical().f;
  for (size_t i = 1; i < ts_.size(); ++i) {
    QuadResult r = integrate([&f](double t) { return 1.0 / f.value(t); },
                             ts_[i - 1], ts_[i], opts);
    logrho_[i] = logrho_[i - 1] + r.value;
  }
  // Normalize f / rho = 1 at the outer edge.
  double f_hi = f.value(dom.hi);
  offset_ = std::log(f_hi) - logrho_.back();
}

double IsotropicChart::log_rho(double t) const {
  size_t i = std::upper_bound(ts_.begin(), ts_.end(), t) - ts_.begin();
  i = std::clamp<size_t>(i, 1, ts_.size() - 1) - 1;
  const WarpFn& f = m_->spherical().f;
  QuadOptions opts;
  opts.rel_tol = 1e-13;
  opts.abs_tol = 1e-15;
  QuadResult r = integrate([&f](double s) { return 1.0 / f.value(s); },
                           ts_[i], t, opts);
  return logrho_[i] + r.value + offset_;
}

double IsotropicChart::rho(double t) const { return std::exp(log_rho(t)); }

double IsotropicChart::t_of_rho(double target) const {
  double lt = std::log(target) - offset_;
  size_t i = std::upper_bound(logrho_.begin(), logrho_.end(), lt) -
             logrho_.begin();
  if (i == 0 || i >= logrho_.size())
    fail(ErrorCode::grid_out_of_domain,
         "fit window outside the metric domain");
  double lo = ts_[i - 1], hi = ts_[i];
  const WarpFn& f = m_->spherical().f;
  double t = 0.5 * (lo + hi);
  for (int k = 0; k < 100; ++k) {
    double g = log_rho(t) - std::log(target);
    if (g > 0.0)
      hi = t;
    else
      lo = t;
    if (std::abs(g) < 1e-14) break;
    double tn = t - g * f.value(t);
    if (!(tn > lo && tn < hi)) tn = 0.5 * (lo + hi);
    if (std::abs(tn - t) < 1e-16 * (1.0 + std::abs(t))) {
      t = tn;
      break;
    }
    t = tn;
  }
  return t;
}

EndAsymptotics fit_end_asymptotics(const Metric1D& m, const FitWindow& window) {
  if (m.is_doubly_warped())
    fail(ErrorCode::invalid_argument,
         "end asymptotics apply to spherically symmetric metrics");
  if (window.r_min <= 0.0 || window.r_max < 10.0 * window.r_min)
    fail(ErrorCode::window_too_narrow,
         "fit window must span at least one decade");

  IsotropicChart chart(m);
  EndAsymptotics out;
  out.window = window;

  const int n = std::max(window.samples, 8);
  std::vector<double> rhos = log_grid(window.r_min, window.r_max, n);
  std::vector<double> a_vals(n);
  const WarpFn& f = m.spherical().f;
  // Basis in the scaled variable x = r_min / rho for conditioning; the
  // higher-order columns absorb the h-tail so a0, a1 estimate the exact
  // flat limit and mass coefficient.
  std::vector<std::vector<double>> cols(4, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    double t = chart.t_of_rho(rhos[i]);
    double ratio = f.value(t) / rhos[i];
    a_vals[i] = ratio * ratio;  // g_rr in the isotropic chart
    double x = window.r_min / rhos[i];
    cols[0][i] = 1.0;
    cols[1][i] = x;
    cols[2][i] = x * x;
    cols[3][i] = x * x * x;
  }

  auto coeff = least_squares(rhos, a_vals, cols);
  double a0 = coeff[0];
  double a1 = coeff[1] * window.r_min;
  if (a0 <= 0.0)
    fail(ErrorCode::invalid_argument, "end fit produced nonpositive g_rr limit");
  out.mass = 0.5 * a1 / std::sqrt(a0);

  // Residual h = g_rr - (a0 + a1/rho): decay exponent by log-log fit.
  std::vector<double> habs, hrho;
  double floor = 1e-9 * a0;
  for (int i = 0; i < n; ++i) {
    double h = std::abs(a_vals[i] - (a0 + a1 / rhos[i]));
    if (h > floor) {
      habs.push_back(h);
      hrho.push_back(rhos[i]);
    }
  }
  if (habs.size() < static_cast<size_t>(n) / 2) {
    out.h_below_floor = true;
    out.h_decay_exp = 0.0;
  } else {
    LineFit lf = loglog_slope(hrho, habs);
    out.h_decay_exp = lf.slope;
    out.h_fit_residual = lf.max_residual;
  }

  // z-decay: int over annuli A(R, 2R) in the chart radius.
  {
    const int nq = 25;
    std::vector<double> Rs = log_grid(window.r_min, window.r_max / 2.0, nq);
    std::vector<double> zints(nq);
    QuadOptions opts;
    opts.rel_tol = 1e-9;
    opts.abs_tol = 1e-30;
    GluedMetric g(m);
    bool all_floor = true;
    for (int i = 0; i < nq; ++i) {
      double t1 = chart.t_of_rho(Rs[i]);
      double t2 = chart.t_of_rho(2.0 * Rs[i]);
      zints[i] = integrate_curvature(
                     g, {t1, t2},
                     [](const CurvatureSample& c, double) { return c.z2; },
                     opts)
                     .value;
      if (zints[i] > 1e-26) all_floor = false;
    }
    if (all_floor) {
      out.z_decay_exp = 0.0;  // flat to the working precision
    } else {
      LineFit lf = loglog_slope(Rs, zints);
      out.z_decay_exp = lf.slope;
      out.fit_residual = lf.max_residual;
    }
  }
  return out;
}

}  // namespace msl
