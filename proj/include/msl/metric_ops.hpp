#ifndef MSL_METRIC_OPS_HPP
#define MSL_METRIC_OPS_HPP

#include <functional>

#include "msl/curvature.hpp"
#include "msl/metric1d.hpp"
#include "msl/quadrature.hpp"

namespace msl {

// Area density of the level surface at t: dV = area_density(t) dt.
// Doubly warped: (2 pi)^2 sqrt(1 - a^2) f1 f2; spherical: 4 pi f^2.
double area_density(const Metric1D& m, double t);

// Volume of the sub-interval; adaptive quadrature with error estimate.
// The interval may extend to +infinity for exponentially decaying warpings.
QuadResult volume(const GluedMetric& g, Interval sub_interval,
                  const QuadOptions& opts = {});
QuadResult volume(const GluedMetric& g, const QuadOptions& opts = {});

// Integral over the sub-interval of pointwise_fn(curvature, t) dV.
QuadResult integrate_curvature(
    const GluedMetric& g, Interval sub_interval,
    const std::function<double(const CurvatureSample&, double)>& pointwise_fn,
    const QuadOptions& opts = {});

enum class CenterMode { cone_point, inner_boundary };

struct RadiusEstimate {
  double radius = 0.0;        // centered-ball estimate
  double available = 0.0;     // largest scale testable inside the domain
  bool capped_by_domain = false;
  double center = 0.0;
};

// L^2 curvature radius at the distinguished center (paper units, c0 fixed):
// largest rho <= available such that for all s <= rho
//   s^4 / vol(B(s)) * int_{B(s)} |Ric|^2 dV <= c0.
// Only centered balls are tested; see the README note on this restriction.
RadiusEstimate curvature_radius(const GluedMetric& g, double center,
                                double c0 = 1e-3);
RadiusEstimate curvature_radius(const GluedMetric& g, CenterMode mode,
                                double c0 = 1e-3);

// Volume radius: largest r <= available with vol(B(s))/s^3 >= mu for s <= r.
RadiusEstimate volume_radius(const GluedMetric& g, double center,
                             double mu = 1e-1);
RadiusEstimate volume_radius(const GluedMetric& g, CenterMode mode,
                             double mu = 1e-1);

}  // namespace msl

#endif  // MSL_METRIC_OPS_HPP
