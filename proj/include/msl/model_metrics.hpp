#ifndef MSL_MODEL_METRICS_HPP
#define MSL_MODEL_METRICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "msl/metric1d.hpp"

namespace msl {

enum class SchwarzschildForm { area_radius, conformally_flat };

struct SchwarzschildSpec {
  double mass = 1.0;
  SchwarzschildForm form = SchwarzschildForm::area_radius;
  bool doubled = false;
  // Radial chart window. area_radius defaults to [2m, r_out];
  // conformally_flat needs an explicit positive r_lo.
  double r_lo = -1.0;  // negative: use the form's natural default
  double r_out = 0.0;  // required, > r_lo
};

// Arclength-parameterized spherically symmetric metric. The doubled variant
// mirrors across the horizon (area_radius form only).
Metric1D schwarzschild_metric(const SchwarzschildSpec& spec);
GluedMetric doubled_schwarzschild(const SchwarzschildSpec& spec);

// Arclength t of the coordinate sphere r, measured from the inner edge.
double schwarzschild_t_of_r(const SchwarzschildSpec& spec, double r);

struct CuspSpec {
  double d1 = 1.0;
  double d2 = 1.0;
  double torus_cos = 0.0;  // a
  double t0 = 0.0;         // truncation parameter; domain starts here
  double t_max = 0.0;      // 0: t0 + 40
};

// dt^2 + e^{-2t} (flat torus): constant curvature -1, s = -6.
Metric1D cusp_metric(const CuspSpec& spec);

struct FlatTorusRecord {
  double d1 = 0.0, d2 = 0.0, torus_cos = 0.0;
  double area = 0.0;  // (2 pi)^2 d1 d2 sqrt(1 - a^2)
};
FlatTorusRecord flat_torus(double d1, double d2, double torus_cos);

enum class CapSide { cap, complement };

struct SphereCapSpec {
  double delta = 0.0;  // inverse radius of S^3(1/delta)
  double cap_radius = 0.0;  // D, geodesic radius of the removed cap
  CapSide side = CapSide::complement;
};

// Geodesic ball (or its antipodal complement, radius pi/delta - D) in the
// round 3-sphere of radius 1/delta, as a spherically symmetric metric.
// The complement is parameterized from the matching boundary outward.
Metric1D sphere_cap_metric(const SphereCapSpec& spec);

enum class CapMatchVariant { c1, mismatch };

struct CapMatchResult {
  double delta = 0.0;
  double cap_radius = 0.0;  // D
  double residual_sin = 0.0;
  double residual_cos = 0.0;
  int iterations = 0;
  double delta_sq_R3 = 0.0;  // delta^2 R^3, order-one by construction
  double boundary_radius = 0.0;       // delta^{-1} sin(delta D)
  double cap_shape_operator = 0.0;    // delta cos(delta D)/sin(delta D)
  double target_shape_operator = 0.0; // shape operator of S^2(R) in g_S
};

// Solves sin(dD) = d R sqrt(1+2m/R) together with
//   c1 variant:      cos(dD) = 1 - (m/R)(1+2m/R)^{-1}
//   mismatch(lam):   cos(dD) = 1 - (m/R)(1+2m/R)^{-1} - R^{-lam}
// by damped Newton from (delta, D) = (R^{-3/2}, R). The c1 variant matches
// the boundary sphere of the conformally flat end of mass m isometrically
// and with identical shape operator.
CapMatchResult solve_cap_matching(double R, CapMatchVariant variant,
                                  double lambda = 1.75,
                                  double m_normalized = 0.5);

// Core Newton solve of sin(dD) = d * boundary_radius, cos(dD) = cos_rhs
// from the supplied initial point.
CapMatchResult solve_cap_system(double boundary_radius, double cos_rhs,
                                double delta0, double D0);

struct FitWindow {
  double r_min = 0.0;
  double r_max = 0.0;  // must span at least one decade
  int samples = 64;
};

struct EndAsymptotics {
  double mass = 0.0;           // fitted m
  double h_decay_exp = 0.0;    // p: log-log slope of the residual h
  bool h_below_floor = false;  // residual at machine floor; p meaningless
  double z_decay_exp = 0.0;    // q: log-log slope of int_{A(R,2R)} |z|^2
  FitWindow window;
  double fit_residual = 0.0;   // max log-log deviation of the z fit
  double h_fit_residual = 0.0;
};

// Isotropic chart for a spherically symmetric end: log rho(t) is the
// cumulative integral of 1/f, normalized so f/rho = 1 at the outer edge.
class IsotropicChart {
 public:
  explicit IsotropicChart(const Metric1D& m, int panels = 4096);
  double log_rho(double t) const;
  double rho(double t) const;
  double t_of_rho(double target) const;

 private:
  const Metric1D* m_;
  std::vector<double> ts_;
  std::vector<double> logrho_;
  double offset_ = 0.0;
};

// Asymptotics of a spherically symmetric end. The isotropic chart radius
// rho solves d(log rho) = dt / f, normalized so f/rho -> 1; the metric is
// (f/rho)^2 (d rho^2 + rho^2 ds^2), and g_rr - 1 is fitted against 2m/rho.
EndAsymptotics fit_end_asymptotics(const Metric1D& m, const FitWindow& window);

}  // namespace msl

#endif  // MSL_MODEL_METRICS_HPP
