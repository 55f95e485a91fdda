#include "msl/metric_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "msl/error.hpp"
#include "msl/rootfind.hpp"

namespace msl {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Sum of piecewise integrals of fn(t) dt over sub_interval.
QuadResult piecewise_integral(const GluedMetric& g, Interval sub,
                              const std::function<double(double)>& fn,
                              const QuadOptions& opts) {
  Interval dom = g.domain();
  bool to_infinity = std::isinf(sub.hi);
  if (sub.lo < dom.lo - 1e-9 * (1.0 + std::abs(dom.lo)))
    fail(ErrorCode::grid_out_of_domain, "integration interval outside domain");
  if (!to_infinity && sub.hi > dom.hi + 1e-9 * (1.0 + std::abs(dom.hi)))
    fail(ErrorCode::grid_out_of_domain, "integration interval outside domain");

  QuadResult total;
  total.converged = true;
  for (size_t i = 0; i < g.pieces().size(); ++i) {
    const Interval& pd = g.pieces()[i].domain();
    bool last = i + 1 == g.pieces().size();
    double lo = std::max(sub.lo, pd.lo);
    double hi = to_infinity && last ? sub.hi : std::min(sub.hi, pd.hi);
    if (hi <= lo) continue;
    QuadResult r = (std::isinf(hi)) ? integrate_to_infinity(fn, lo, opts)
                                    : integrate(fn, lo, hi, opts);
    total.value += r.value;
    total.error += r.error;
    total.evaluations += r.evaluations;
    total.converged = total.converged && r.converged;
  }
  return total;
}

double center_of(const GluedMetric& g, CenterMode mode) {
  // Both modes resolve to the left domain edge: a cone point if a warping
  // vanishes there, otherwise the inner boundary.
  (void)mode;
  return g.domain().lo;
}

// Largest symmetric scale around the center that stays inside the domain.
double available_extent(const GluedMetric& g, double center) {
  Interval dom = g.domain();
  double tol = 1e-12 * (1.0 + std::abs(center));
  if (!dom.contains(center, tol))
    fail(ErrorCode::no_center, "center lies outside the metric domain");
  double left = center - dom.lo;
  double right = dom.hi - center;
  if (left <= tol) return right;
  if (right <= tol) return left;
  return std::min(left, right);
}

// Ball of radius s about the center, clipped to the domain on the side
// where the center sits on the boundary.
Interval centered_ball(const GluedMetric& g, double center, double s) {
  Interval dom = g.domain();
  return Interval{std::max(center - s, dom.lo), std::min(center + s, dom.hi)};
}

RadiusEstimate radius_scan(double center,
                           const std::function<double(double)>& violation,
                           double hard_max) {
  RadiusEstimate est;
  est.center = center;
  est.available = hard_max;
  double lo = hard_max * 1e-4;
  double r = first_crossing(violation, lo, hard_max, 256,
                            1e-12 * (1.0 + hard_max));
  // first_crossing returns lo if already violated there; probe smaller
  // scales before giving up.
  if (r == lo && violation(lo) > 0.0) {
    double lo2 = hard_max * 1e-8;
    r = first_crossing(violation, lo2, lo, 64, 1e-14 * (1.0 + hard_max));
  }
  est.radius = r;
  est.capped_by_domain = (r >= hard_max * (1.0 - 1e-9));
  return est;
}

}  // namespace

double area_density(const Metric1D& m, double t) {
  if (m.is_doubly_warped()) {
    const auto& dw = m.doubly_warped();
    double root = std::sqrt(1.0 - dw.torus_cos * dw.torus_cos);
    return 4.0 * kPi * kPi * root * dw.f1.value(t) * dw.f2.value(t);
  }
  double f = m.spherical().f.value(t);
  return 4.0 * kPi * f * f;
}

QuadResult volume(const GluedMetric& g, Interval sub_interval,
                  const QuadOptions& opts) {
  auto fn = [&g](double t) { return area_density(g.piece_at(t), t); };
  return piecewise_integral(g, sub_interval, fn, opts);
}

QuadResult volume(const GluedMetric& g, const QuadOptions& opts) {
  return volume(g, g.domain(), opts);
}

QuadResult integrate_curvature(
    const GluedMetric& g, Interval sub_interval,
    const std::function<double(const CurvatureSample&, double)>& pointwise_fn,
    const QuadOptions& opts) {
  auto fn = [&](double t) {
    const Metric1D& piece = g.piece_at(t);
    // Quadrature nodes are strictly interior to panels; skip the domain
    // check so that infinite tails (analytic warpings past the stored
    // domain) integrate cleanly.
    WarpJets jets = metric_jets(piece, t);
    if (jets.j1.f < 0.0 || (jets.doubly_warped && jets.j2.f < 0.0))
      fail(ErrorCode::warping_nonpositive_on_grid,
           "warping negative at quadrature node t = " + std::to_string(t));
    // Exponential tails underflow to zero far out; the weighted integrand
    // vanishes there.
    if (jets.j1.f == 0.0 || (jets.doubly_warped && jets.j2.f == 0.0))
      return 0.0;
    CurvatureSample c = curvature_from_jets(jets);
    return pointwise_fn(c, t) * area_density(piece, t);
  };
  return piecewise_integral(g, sub_interval, fn, opts);
}

RadiusEstimate curvature_radius(const GluedMetric& g, double center,
                                double c0) {
  double hard_max = available_extent(g, center);
  QuadOptions opts;
  opts.rel_tol = 1e-8;
  auto ricci2 = [](const CurvatureSample& c, double) {
    return c.ricci[0] * c.ricci[0] + c.ricci[1] * c.ricci[1] +
           c.ricci[2] * c.ricci[2];
  };
  auto violation = [&](double s) {
    Interval ball = centered_ball(g, center, s);
    double vol = volume(g, ball, opts).value;
    if (vol <= 0.0) return -1.0;
    double curv = integrate_curvature(g, ball, ricci2, opts).value;
    return s * s * s * s / vol * curv - c0;
  };
  return radius_scan(center, violation, hard_max);
}

RadiusEstimate curvature_radius(const GluedMetric& g, CenterMode mode,
                                double c0) {
  return curvature_radius(g, center_of(g, mode), c0);
}

RadiusEstimate volume_radius(const GluedMetric& g, double center, double mu) {
  double hard_max = available_extent(g, center);
  QuadOptions opts;
  opts.rel_tol = 1e-8;
  auto violation = [&](double s) {
    Interval ball = centered_ball(g, center, s);
    double vol = volume(g, ball, opts).value;
    return mu - vol / (s * s * s);
  };
  return radius_scan(center, violation, hard_max);
}

RadiusEstimate volume_radius(const GluedMetric& g, CenterMode mode, double mu) {
  return volume_radius(g, center_of(g, mode), mu);
}

}  // namespace msl
