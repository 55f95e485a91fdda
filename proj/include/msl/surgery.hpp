#ifndef MSL_SURGERY_HPP
#define MSL_SURGERY_HPP

#include <optional>
#include <utility>

#include "msl/glued_ops.hpp"
#include "msl/metric1d.hpp"
#include "msl/model_metrics.hpp"

namespace msl {

// ---- Dehn filling of a hyperbolic cusp ----

struct DehnFillSpec {
  CuspSpec cusp;
  // Core bend radius; 0 picks c1/10 with c1 = d1 e^{-t0}.
  double r0 = 0.0;
  // Length of hyperbolic collar retained past the seam.
  double glue_tail = 1.0;
  // Trial warpings; defaults are c1 tan(r/2) and c2 e^{-cos r}.
  std::optional<WarpFn> f1_override;
  std::optional<WarpFn> f2_override;
};

// Solid torus capping the cusp end, C^1-matched at the seam r = pi/2,
// cone-singular along the core r = 0 (cone angle pi c1 sqrt(1-a^2)).
GluedMetric dehn_fill(const DehnFillSpec& spec);

struct BendResult {
  GluedMetric metric;
  double core_location = 0.0;      // r0/2, the rebuilt smooth core
  double cone_angle = 0.0;         // 2*pi after the bend
  double f2_perturbation_rel = 0.0;
  double f2_curvature_change_rel = 0.0;
  double volume_change = 0.0;      // |vol(bent) - vol(trial)| on the torus
  double concavity_max = 0.0;      // max of f1'' over the bend grid (<= 0)
};

// Rebuilds the core: concave profile for f1 on [r0/2, r0] meeting
// f1(r0/2) = 0, f1'(r0/2) = (1-a^2)^{-1/2} and matching the trial pair C^1
// at r0; f2 receives a C^2 bump to flatten its slope at the new core.
BendResult bend_core(const GluedMetric& g, double r0);

// ---- Sphere surgery in an asymptotically flat end ----

enum class SurgerySide { inside_flat_ball, outside_sphere_cap };

struct SphereSurgerySpec {
  GluedMetric end;          // asymptotically flat original
  double t_R = 0.0;         // surgery location, arclength coordinate
  double chart_radius = 0.0;  // R in the end's asymptotic chart (labels/decay)
  SurgerySide side = SurgerySide::inside_flat_ball;
  double band_half_width = 1.0;
  double lambda = 1.75;     // cap mismatch exponent, Case II
  double epsilon = 1e-3;    // for the I_eps^- entries of the verdict
  bool skip_end_fit = false;  // trusted catalog input
};

struct ComparisonVerdict {
  double vol_original = 0.0, vol_glued = 0.0;
  double s_minus_sq_original = 0.0, s_minus_sq_glued = 0.0;
  double z_sq_original = 0.0, z_sq_glued = 0.0;
  double i_eps_original = 0.0, i_eps_glued = 0.0;
  double epsilon = 0.0;
  bool volume_decreased = false;
  bool s_floor_preserved = false;
  bool z_decreased = false;
  bool i_eps_decreased = false;
  // Relative margins of the strict inequalities; margins below 1e-6
  // relative are treated as failures, not passes.
  double volume_margin = 0.0;
  double z_margin = 0.0;
  double i_eps_margin = 0.0;
  double s_floor = 0.0;       // floor used for the glued metric
  double glued_min_s = 0.0;
};

ComparisonVerdict compare_metrics(const GluedMetric& original,
                                  const GluedMetric& glued, double epsilon,
                                  double s_floor, double floor_abs_tol = 1e-9);

struct SphereSurgeryResult {
  GluedMetric glued;
  ComparisonVerdict verdict;
  double seam_radius = 0.0;       // induced radius of the matching sphere
  double shape_jump = 0.0;        // A_inside - A_outside at the seam (> 0)
  double band_z_sq = 0.0;         // int over the smoothing band of |z|^2
  std::optional<CapMatchResult> cap;  // Case II
  double fitted_mass = 0.0;
};

SphereSurgeryResult sphere_surgery(const SphereSurgerySpec& spec);

// ---- Bounded-curvature collapse family ----

struct CollapseSpec {
  double d1 = 1.0;
  double d2 = 1.0;
  double torus_cos = 0.0;
  double interval_length = 1.0;
};

// Flat torus bundle with fibers scaled by eps: |R| = 0, volume ~ eps^2.
Metric1D collapse_family(const CollapseSpec& spec, double eps);

// ---- Conformal first-order shape comparison ----

struct ConformalShapeDelta {
  double predicted = 0.0;  // -<grad nu, X> delta
  double exact = 0.0;      // flat-fill shape operator minus conformal one
  double gap = 0.0;
};

// Compares the first-order prediction for the shape-operator change under
// g -> (1 + 2 nu delta) g against the exact difference between the shape
// operator of the isometric flat fill and the conformal metric's own.
ConformalShapeDelta conformal_shape_delta(const Metric1D& m,
                                          const RadialFnPtr& nu, double delta,
                                          double r);

}  // namespace msl

#endif  // MSL_SURGERY_HPP
