#ifndef MSL_GLUED_OPS_HPP
#define MSL_GLUED_OPS_HPP

#include <optional>
#include <vector>

#include "msl/metric1d.hpp"

namespace msl {

struct SeamMeasurement {
  double location = 0.0;
  std::vector<double> value_jumps;   // per warping
  std::vector<double> slope_jumps;
  std::vector<double> second_jumps;
  bool c0(double tol) const;
  bool c1(double tol) const;
  bool c2(double tol) const;
};

SeamMeasurement measure_seam(const GluedMetric& g, size_t seam_index);

// Re-measures every seam and refreshes the recorded jumps.
void refresh_seam_records(GluedMetric& g);

struct SmoothOptions {
  double band_half_width = 1.0;
  int max_retries = 8;
  // Absolute slack on the curvature floor check.
  double floor_abs_tol = 1e-9;
  // Jump sizes below tol * scale leave a seam untouched (already C^2).
  double c2_match_tol = 1e-9;
  int band_grid_points = 0;  // 0: 4x default grid density
};

// Replaces each non-C^2 seam by a quintic band matching value and two
// derivatives at the band edges. With a scalar-curvature floor, verifies
// s >= floor on the band grid and retries with shrunken / biased
// interpolants; without one, C^0 seams with a convexifying slope jump are
// verified to keep the smoothed s above the smaller one-sided value.
GluedMetric smooth_seams(const GluedMetric& g, std::optional<double> floor,
                         const SmoothOptions& opts = {});

// Minimum scalar curvature over per-piece interior grids.
struct MinScan {
  double min_s = 0.0;
  double argmin = 0.0;
};
MinScan min_scalar_curvature(const GluedMetric& g, int points_per_piece = 0);

}  // namespace msl

#endif  // MSL_GLUED_OPS_HPP
