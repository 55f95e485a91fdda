#include "msl/glued_ops.hpp"

#include <algorithm>
#include <cmath>

#include "msl/curvature.hpp"
#include "msl/error.hpp"

namespace msl {

namespace {

std::vector<Jet2> warp_jets_of(const Metric1D& m, double t) {
  if (m.is_doubly_warped()) {
    const auto& dw = m.doubly_warped();
    return {dw.f1.jet2(t), dw.f2.jet2(t)};
  }
  return {m.spherical().f.jet2(t)};
}

double warp_scale(const std::vector<Jet2>& jets) {
  double s = 0.0;
  for (const auto& j : jets) s = std::max(s, std::abs(j.f));
  return std::max(s, 1e-300);
}

Metric1D band_piece(const Metric1D& left, const Metric1D& right, Interval band,
                    const std::vector<std::vector<double>>& extra_bias) {
  auto quintic = [&](const WarpFn& fl, const WarpFn& fr,
                     const std::vector<double>& bias) {
    Jet2 jl = fl.jet2(band.lo);
    Jet2 jr = fr.jet2(band.hi);
    auto coeffs = quintic_hermite_coeffs(band.lo, band.hi, jl, jr);
    if (bias.size() > coeffs.size()) coeffs.resize(bias.size(), 0.0);
    for (size_t i = 0; i < bias.size(); ++i) coeffs[i] += bias[i];
    return make_polynomial_warp(band, coeffs, band.lo);
  };
  if (left.is_doubly_warped()) {
    const auto& l = left.doubly_warped();
    const auto& r = right.doubly_warped();
    if (std::abs(l.torus_cos - r.torus_cos) > 1e-14)
      fail(ErrorCode::invalid_argument,
           "cannot smooth across pieces with different torus angles");
    return Metric1D(
        DoublyWarped{quintic(l.f1, r.f1, extra_bias[0]),
                     quintic(l.f2, r.f2, extra_bias.size() > 1 ? extra_bias[1]
                                                               : std::vector<double>{}),
                     l.torus_cos},
        band, "smoothing band");
  }
  return Metric1D(
      SphericallySymmetric{quintic(left.spherical().f, right.spherical().f,
                                   extra_bias[0])},
      band, "smoothing band");
}

double min_s_on_band(const Metric1D& band, int n) {
  double mn = std::numeric_limits<double>::infinity();
  for (double t : interior_grid(band.domain(), n))
    mn = std::min(mn, curvature_at(band, t).s);
  return mn;
}

}  // namespace

bool SeamMeasurement::c0(double tol) const {
  for (double v : value_jumps)
    if (std::abs(v) > tol) return false;
  return true;
}
bool SeamMeasurement::c1(double tol) const {
  if (!c0(tol)) return false;
  for (double v : slope_jumps)
    if (std::abs(v) > tol) return false;
  return true;
}
bool SeamMeasurement::c2(double tol) const {
  if (!c1(tol)) return false;
  for (double v : second_jumps)
    if (std::abs(v) > tol) return false;
  return true;
}

SeamMeasurement measure_seam(const GluedMetric& g, size_t seam_index) {
  if (seam_index >= g.seams().size())
    fail(ErrorCode::invalid_argument, "seam index out of range");
  const Seam& seam = g.seams()[seam_index];
  SeamMeasurement out;
  out.location = seam.location;
  // Find the adjacent pieces.
  size_t right_idx = 0;
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < g.pieces().size(); ++i) {
    double d = std::abs(g.pieces()[i].domain().lo - seam.location);
    if (d < best) {
      best = d;
      right_idx = i;
    }
  }
  if (right_idx == 0)
    fail(ErrorCode::invalid_argument, "seam has no piece on its left");
  auto jl = warp_jets_of(g.pieces()[right_idx - 1], seam.location);
  auto jr = warp_jets_of(g.pieces()[right_idx], seam.location);
  for (size_t k = 0; k < jl.size(); ++k) {
    out.value_jumps.push_back(jr[k].f - jl[k].f);
    out.slope_jumps.push_back(jr[k].d1 - jl[k].d1);
    out.second_jumps.push_back(jr[k].d2 - jl[k].d2);
  }
  return out;
}

void refresh_seam_records(GluedMetric& g) {
  for (size_t i = 0; i < g.seams().size(); ++i) {
    SeamMeasurement m = measure_seam(g, i);
    g.seams()[i].value_jumps = m.value_jumps;
    g.seams()[i].slope_jumps = m.slope_jumps;
  }
}

GluedMetric smooth_seams(const GluedMetric& g, std::optional<double> floor,
                         const SmoothOptions& opts) {
  std::vector<Metric1D> pieces = g.pieces();
  std::vector<Seam> seams = g.seams();
  int band_n = opts.band_grid_points > 0 ? opts.band_grid_points
                                         : default_grid_points() / 2;

  for (auto& seam : seams) {
    // Locate the piece pair around this seam in the current list.
    size_t ri = 0;
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < pieces.size(); ++i) {
      double d = std::abs(pieces[i].domain().lo - seam.location);
      if (d < best) {
        best = d;
        ri = i;
      }
    }
    if (ri == 0)
      fail(ErrorCode::invalid_argument, "seam has no piece on its left");
    const Metric1D& left = pieces[ri - 1];
    const Metric1D& right = pieces[ri];

    auto jl = warp_jets_of(left, seam.location);
    auto jr = warp_jets_of(right, seam.location);
    double scale = std::max(warp_scale(jl), warp_scale(jr));
    double tol = opts.c2_match_tol * scale;

    SeamMeasurement meas;
    meas.location = seam.location;
    for (size_t k = 0; k < jl.size(); ++k) {
      meas.value_jumps.push_back(jr[k].f - jl[k].f);
      meas.slope_jumps.push_back(jr[k].d1 - jl[k].d1);
      meas.second_jumps.push_back(jr[k].d2 - jl[k].d2);
    }
    seam.value_jumps = meas.value_jumps;
    seam.slope_jumps = meas.slope_jumps;

    if (!meas.c0(tol))
      fail(ErrorCode::invalid_argument,
           "seam is not C0 matched; smoothing undefined");
    if (meas.c2(tol)) {
      // Already C^2: the smoothing is the identity here.
      seam.smoothing_band.reset();
      continue;
    }

    // One-sided curvature reference for the convexifying-seam check.
    double s_left = curvature_at_endpoint(left, seam.location).s;
    double s_right = curvature_at_endpoint(right, seam.location).s;
    double one_sided_min = std::min(s_left, s_right);
    bool c0_seam = !meas.c1(tol);
    bool convexifying = true;
    for (double dj : meas.slope_jumps)
      if (dj > tol) convexifying = false;  // f' must not jump up outward

    double w_max = std::min(seam.location - left.domain().lo,
                            right.domain().hi - seam.location) *
                   0.45;
    double w = std::min(opts.band_half_width, w_max);
    if (w <= 0.0)
      fail(ErrorCode::invalid_argument, "no room for a smoothing band");

    bool accepted = false;
    std::string worst_report;
    size_t n_warps = jl.size();
    for (int attempt = 0; attempt < opts.max_retries && !accepted; ++attempt) {
      bool bias_attempt = (attempt % 2 == 1);
      Interval band{seam.location - w, seam.location + w};
      std::vector<std::vector<double>> bias(n_warps);
      Metric1D candidate = band_piece(left, right, band, bias);

      double check_floor;
      if (floor)
        check_floor = *floor;
      else if (c0_seam && convexifying)
        check_floor = one_sided_min;
      else
        check_floor = -std::numeric_limits<double>::infinity();

      double mn = min_s_on_band(candidate, band_n);
      if (bias_attempt && mn < check_floor - opts.floor_abs_tol) {
        // Bias the first warping with a degree-6 bump vanishing to second
        // order at both band edges: b(x) = c x^3 (W - x)^3, W = 2w, with
        // b''(center) = -6 c w^4. Raises s near the band center by
        // -2 b''/f; c sized to cover the observed violation.
        double viol = check_floor - mn;
        double f_mid = candidate.is_doubly_warped()
                           ? candidate.doubly_warped().f1.value(seam.location)
                           : candidate.spherical().f.value(seam.location);
        double c = viol * f_mid / (12.0 * std::pow(w, 4));
        double W = 2.0 * w;
        bias[0] = {0, 0, 0, c * W * W * W, -3.0 * c * W * W, 3.0 * c * W, -c};
        candidate = band_piece(left, right, band, bias);
        mn = min_s_on_band(candidate, band_n);
      }

      if (mn >= check_floor - opts.floor_abs_tol) {
        // Accept: split pieces and insert the band.
        Metric1D new_left = left.with_domain({left.domain().lo, band.lo});
        Metric1D new_right = right.with_domain({band.hi, right.domain().hi});
        std::vector<Metric1D> next;
        for (size_t i = 0; i + 1 < ri; ++i) next.push_back(pieces[i]);
        next.push_back(new_left);
        next.push_back(candidate);
        next.push_back(new_right);
        for (size_t i = ri + 1; i < pieces.size(); ++i) next.push_back(pieces[i]);
        pieces = std::move(next);
        seam.smoothing_band = band;
        accepted = true;
      } else {
        worst_report = "min s = " + std::to_string(mn) + " vs floor " +
                       std::to_string(check_floor) + " at half-width " +
                       std::to_string(w);
        if (bias_attempt) w *= 0.5;
      }
    }
    if (!accepted)
      fail(ErrorCode::floor_unachievable,
           "seam smoothing at t = " + std::to_string(seam.location) +
               " could not hold the curvature floor (" + worst_report + ")");
  }

  GluedMetric out(pieces, seams);
  out.cone_points() = g.cone_points();
  return out;
}

MinScan min_scalar_curvature(const GluedMetric& g, int points_per_piece) {
  int n = points_per_piece > 0 ? points_per_piece : default_grid_points();
  MinScan scan;
  scan.min_s = std::numeric_limits<double>::infinity();
  for (const auto& piece : g.pieces()) {
    for (double t : interior_grid(piece.domain(), n)) {
      double s = curvature_at(piece, t).s;
      if (s < scan.min_s) {
        scan.min_s = s;
        scan.argmin = t;
      }
    }
  }
  return scan;
}

}  // namespace msl
