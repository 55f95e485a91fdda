#include "msl/curvature.hpp"

#include <algorithm>
#include <cmath>

#include "msl/error.hpp"

namespace msl {

namespace {

double orient_sign(Orientation o) {
  return o == Orientation::outward ? 1.0 : -1.0;
}

}  // namespace

CurvatureSample curvature_from_jets(const WarpJets& jets,
                                    Orientation orientation) {
  CurvatureSample out;
  const double sgn = orient_sign(orientation);
  if (jets.doubly_warped) {
    const auto& a = jets.j1;
    const auto& b = jets.j2;
    double k01 = -a.d2 / a.f;                    // K(radial, th1)
    double k02 = -b.d2 / b.f;                    // K(radial, th2)
    double k12 = -(a.d1 * b.d1) / (a.f * b.f);   // K(th1, th2)
    out.sectional = {k01, k02, k12};
    out.ricci = {k01 + k02, k01 + k12, k02 + k12};
    out.s = 2.0 * (k01 + k02 + k12);
    out.shape = {EigenPair{sgn * a.d1 / a.f, 1}, EigenPair{sgn * b.d1 / b.f, 1}};
    out.n_shape = 2;
  } else {
    const auto& a = jets.j1;
    double k_rad = -a.d2 / a.f;                          // mixed planes
    double k_tan = (1.0 - a.d1 * a.d1) / (a.f * a.f);    // tangential plane
    out.sectional = {k_rad, k_rad, k_tan};
    out.ricci = {2.0 * k_rad, k_rad + k_tan, k_rad + k_tan};
    out.s = 2.0 * (2.0 * k_rad + k_tan);
    out.shape = {EigenPair{sgn * a.d1 / a.f, 2}, EigenPair{}};
    out.n_shape = 1;
  }
  double third = out.s / 3.0;
  out.z2 = 0.0;
  for (double lam : out.ricci) out.z2 += (lam - third) * (lam - third);
  return out;
}

WarpJets metric_jets(const Metric1D& m, double t) {
  WarpJets j;
  if (m.is_doubly_warped()) {
    const auto& dw = m.doubly_warped();
    j.doubly_warped = true;
    j.j1 = dw.f1.jet2(t);
    j.j2 = dw.f2.jet2(t);
  } else {
    j.j1 = m.spherical().f.jet2(t);
  }
  return j;
}

CurvatureSample curvature_at(const Metric1D& m, double t,
                             Orientation orientation) {
  double tol = 1e-12 * (1.0 + std::abs(t));
  if (!m.domain().contains(t, tol))
    fail(ErrorCode::grid_out_of_domain,
         "t = " + std::to_string(t) + " outside metric domain");
  WarpJets j = metric_jets(m, t);
  bool interior = t > m.domain().lo + tol && t < m.domain().hi - tol;
  auto check_positive = [&](double f) {
    if (f <= 0.0) {
      if (interior)
        fail(ErrorCode::warping_nonpositive_on_grid,
             "warping nonpositive at interior t = " + std::to_string(t));
      fail(ErrorCode::cone_point,
           "warping vanishes at t = " + std::to_string(t) +
               "; use curvature_at_endpoint for one-sided limits");
    }
  };
  check_positive(j.j1.f);
  if (j.doubly_warped) check_positive(j.j2.f);
  return curvature_from_jets(j, orientation);
}

CurvatureSample curvature_at_endpoint(const Metric1D& m, double t_end,
                                      Orientation orientation) {
  const Interval& d = m.domain();
  double tol = 1e-12 * (1.0 + std::abs(t_end));
  bool left = std::abs(t_end - d.lo) <= tol;
  bool right = std::abs(t_end - d.hi) <= tol;
  if (!left && !right) return curvature_at(m, t_end, orientation);

  // Richardson extrapolation of interior samples at distances h, h/2, h/4:
  // (8 s(h/4) - 6 s(h/2) + s(h)) / 3 removes both O(h) and O(h^2) terms.
  double h = d.length() * 1e-3;
  double sgn = left ? 1.0 : -1.0;
  auto sample = [&](double dist) {
    return curvature_at(m, t_end + sgn * dist, orientation);
  };
  CurvatureSample s1 = sample(h);
  CurvatureSample s2 = sample(0.5 * h);
  CurvatureSample s3 = sample(0.25 * h);
  auto rich = [](double a, double b, double c) {
    return (8.0 * c - 6.0 * b + a) / 3.0;
  };
  CurvatureSample out = s3;
  out.s = rich(s1.s, s2.s, s3.s);
  for (int i = 0; i < 3; ++i) {
    out.ricci[i] = rich(s1.ricci[i], s2.ricci[i], s3.ricci[i]);
    out.sectional[i] = rich(s1.sectional[i], s2.sectional[i], s3.sectional[i]);
  }
  double third = out.s / 3.0;
  out.z2 = 0.0;
  for (double lam : out.ricci) out.z2 += (lam - third) * (lam - third);
  for (int i = 0; i < out.n_shape; ++i)
    out.shape[i].value = rich(s1.shape[i].value, s2.shape[i].value,
                              s3.shape[i].value);
  return out;
}

std::vector<double> scalar_curvature(const Metric1D& m,
                                     const std::vector<double>& grid) {
  std::vector<double> out;
  out.reserve(grid.size());
  for (double t : grid) out.push_back(curvature_at_endpoint(m, t).s);
  return out;
}

CurvatureProfile ricci_profile(const Metric1D& m,
                               const std::vector<double>& grid,
                               Orientation orientation) {
  CurvatureProfile p;
  p.grid = grid;
  p.orientation = orientation;
  p.s.reserve(grid.size());
  p.ricci_eigs.reserve(grid.size());
  p.z_norm_sq.reserve(grid.size());
  p.shape.reserve(grid.size());
  for (double t : grid) {
    CurvatureSample c = curvature_at_endpoint(m, t, orientation);
    p.s.push_back(c.s);
    p.ricci_eigs.push_back(c.ricci);
    p.z_norm_sq.push_back(c.z2);
    p.shape.push_back(c.shape);
    p.n_shape = c.n_shape;
  }
  return p;
}

std::vector<EigenPair> shape_operator(const Metric1D& m, double t,
                                      Orientation orientation) {
  double tol = 1e-12 * (1.0 + std::abs(t));
  if (!m.domain().contains(t, tol))
    fail(ErrorCode::grid_out_of_domain, "shape_operator: t outside domain");
  double sgn = orient_sign(orientation);
  if (m.is_doubly_warped()) {
    const auto& dw = m.doubly_warped();
    Jet2 a = dw.f1.jet2(t);
    Jet2 b = dw.f2.jet2(t);
    if (a.f <= 0.0 || b.f <= 0.0)
      fail(ErrorCode::cone_point, "shape operator undefined at a cone point");
    return {EigenPair{sgn * a.d1 / a.f, 1}, EigenPair{sgn * b.d1 / b.f, 1}};
  }
  Jet2 a = m.spherical().f.jet2(t);
  if (a.f <= 0.0)
    fail(ErrorCode::cone_point, "shape operator undefined at a cone point");
  return {EigenPair{sgn * a.d1 / a.f, 2}};
}

double level_surface_gauss_curvature(const Metric1D& m, double t) {
  if (m.is_doubly_warped())
    fail(ErrorCode::invalid_argument,
         "level surfaces of the doubly warped form are flat tori");
  double f = m.spherical().f.value(t);
  if (f <= 0.0) fail(ErrorCode::cone_point, "level surface degenerates");
  return 1.0 / (f * f);
}

}  // namespace msl
