#include "msl/functionals.hpp"

#include <algorithm>
#include <cmath>

#include "msl/curvature.hpp"
#include "msl/error.hpp"
#include "msl/taylor.hpp"

namespace msl {

namespace {

Taylor5 taylor_derivative(const Taylor5& x) {
  Taylor5 r;
  for (int i = 0; i + 1 < 5; ++i) r.a[i] = x.a[i + 1] * (i + 1);
  r.a[4] = 0.0;
  return r;
}

Taylor5 warp_taylor(const WarpFn& f, double t) {
  return Taylor5::from_derivs(
      {f.value(t), f.deriv(t, 1), f.deriv(t, 2), f.deriv(t, 3), f.deriv(t, 4)});
}


// Pointwise geometric data with enough radial derivatives for the
// fourth-order operators. Components ordered radial, tan1, tan2; for the
// spherical shape tan1 = tan2.
struct PointGeometry {
  bool doubly = false;
  double H1 = 0.0, H2 = 0.0;        // f_i'/f_i
  double K01 = 0.0, K02 = 0.0, K12 = 0.0;
  std::array<double, 3> ricci{};
  Taylor5 z0, z1, z2;  // trace-free Ricci eigenvalues with derivatives
  Taylor5 s;           // scalar curvature with derivatives
  Taylor5 z2norm;      // |z|^2
};

PointGeometry point_geometry(const Metric1D& m, double t) {
  PointGeometry g;
  if (m.is_doubly_warped()) {
    const auto& dw = m.doubly_warped();
    g.doubly = true;
    Taylor5 f1 = warp_taylor(dw.f1, t), f2 = warp_taylor(dw.f2, t);
    Taylor5 d1 = taylor_derivative(f1), d2 = taylor_derivative(f2);
    Taylor5 dd1 = taylor_derivative(d1), dd2 = taylor_derivative(d2);
    Taylor5 k01 = (dd1 * inverse(f1)) * -1.0;
    Taylor5 k02 = (dd2 * inverse(f2)) * -1.0;
    Taylor5 k12 = (d1 * d2 * inverse(f1 * f2)) * -1.0;
    Taylor5 r0 = k01 + k02, r1 = k01 + k12, r2 = k02 + k12;
    g.s = (r0 + r1 + r2);
    Taylor5 third = g.s * (1.0 / 3.0);
    g.z0 = r0 - third;
    g.z1 = r1 - third;
    g.z2 = r2 - third;
    g.z2norm = g.z0 * g.z0 + g.z1 * g.z1 + g.z2 * g.z2;
    g.H1 = d1.a[0] / f1.a[0];
    g.H2 = d2.a[0] / f2.a[0];
    g.K01 = k01.a[0];
    g.K02 = k02.a[0];
    g.K12 = k12.a[0];
    g.ricci = {r0.a[0], r1.a[0], r2.a[0]};
  } else {
    Taylor5 f = warp_taylor(m.spherical().f, t);
    Taylor5 d1 = taylor_derivative(f);
    Taylor5 dd = taylor_derivative(d1);
    Taylor5 inv_f = inverse(f);
    Taylor5 k_rad = (dd * inv_f) * -1.0;
    Taylor5 k_tan = (Taylor5::constant(1.0) - d1 * d1) * (inv_f * inv_f);
    Taylor5 r0 = k_rad * 2.0, rt = k_rad + k_tan;
    g.s = r0 + rt * 2.0;
    Taylor5 third = g.s * (1.0 / 3.0);
    g.z0 = r0 - third;
    g.z1 = rt - third;
    g.z2 = g.z1;
    g.z2norm = g.z0 * g.z0 + g.z1 * g.z1 * 2.0;
    g.H1 = g.H2 = d1.a[0] / f.a[0];
    g.K01 = g.K02 = k_rad.a[0];
    g.K12 = k_tan.a[0];
    g.ricci = {r0.a[0], rt.a[0], rt.a[0]};
  }
  return g;
}

// grad Z^2 = D*D z + (1/3) D^2 s - 2 Rcirc z + (1/2)(|z|^2 - Lap s / 3) g
std::array<double, 3> grad_z2_at(const PointGeometry& g) {
  double Hsum = g.H1 + g.H2;
  double z0 = g.z0.a[0], z1 = g.z1.a[0], z2 = g.z2.a[0];
  double z0p = g.z0.deriv(1), z1p = g.z1.deriv(1), z2p = g.z2.deriv(1);
  double z0pp = g.z0.deriv(2), z1pp = g.z1.deriv(2), z2pp = g.z2.deriv(2);
  double sp = g.s.deriv(1), spp = g.s.deriv(2);

  std::array<double, 3> ddz{};  // rough Laplacian D*D z = -tr grad^2 z
  ddz[0] = -(z0pp + Hsum * z0p - 2.0 * g.H1 * g.H1 * (z0 - z1) -
             2.0 * g.H2 * g.H2 * (z0 - z2));
  ddz[1] = -(z1pp + Hsum * z1p + 2.0 * g.H1 * g.H1 * (z0 - z1));
  ddz[2] = -(z2pp + Hsum * z2p + 2.0 * g.H2 * g.H2 * (z0 - z2));

  std::array<double, 3> hess_s = {spp, g.H1 * sp, g.H2 * sp};
  double lap_s = spp + Hsum * sp;

  std::array<double, 3> rc{};  // Rcirc z
  rc[0] = g.K01 * z1 + g.K02 * z2;
  rc[1] = g.K01 * z0 + g.K12 * z2;
  rc[2] = g.K02 * z0 + g.K12 * z1;

  double trace_part = 0.5 * (g.z2norm.a[0] - lap_s / 3.0);
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i)
    out[i] = ddz[i] + hess_s[i] / 3.0 - 2.0 * rc[i] + trace_part;
  return out;
}

void require_fourth_order(const Metric1D& m) {
  if (m.kind() == WarpKind::sampled)
    fail(ErrorCode::insufficient_smoothness,
         "sampled warpings cannot supply the fourth derivatives needed by "
         "the Z^2 gradient; use closed-form warpings");
}

double frobenius_of(const std::array<double, 3>& comps, bool doubly) {
  if (doubly)
    return std::sqrt(comps[0] * comps[0] + comps[1] * comps[1] +
                     comps[2] * comps[2]);
  return std::sqrt(comps[0] * comps[0] + 2.0 * comps[1] * comps[1]);
}

struct GridNorms {
  double sup = 0.0;
  double l2 = 0.0;
};

GridNorms grid_norms(const Metric1D& m, const std::vector<double>& grid,
                     const std::vector<double>& pointwise) {
  GridNorms n;
  double acc = 0.0;
  for (size_t i = 0; i < grid.size(); ++i) {
    n.sup = std::max(n.sup, std::abs(pointwise[i]));
    double w = 0.0;
    if (i > 0) w += 0.5 * (grid[i] - grid[i - 1]);
    if (i + 1 < grid.size()) w += 0.5 * (grid[i + 1] - grid[i]);
    acc += pointwise[i] * pointwise[i] * area_density(m, grid[i]) * w;
  }
  n.l2 = std::sqrt(std::max(0.0, acc));
  return n;
}

}  // namespace

FunctionalReport evaluate_functionals(const GluedMetric& g, double epsilon,
                                      const QuadOptions& opts) {
  FunctionalReport rep;
  rep.epsilon = epsilon;
  Interval dom = g.domain();

  QuadResult v = volume(g, dom, opts);
  QuadResult s2 = integrate_curvature(
      g, dom, [](const CurvatureSample& c, double) { return c.s * c.s; }, opts);
  QuadResult sm2 = integrate_curvature(
      g, dom,
      [](const CurvatureSample& c, double) {
        double sm = std::min(c.s, 0.0);
        return sm * sm;
      },
      opts);
  QuadResult z2 = integrate_curvature(
      g, dom, [](const CurvatureSample& c, double) { return c.z2; }, opts);

  rep.volume = v.value;
  rep.s_sq_integral = s2.value;
  rep.s_minus_sq_integral = sm2.value;
  rep.z_sq_integral = z2.value;
  rep.quadrature_error = v.error + s2.error + sm2.error + z2.error;

  double v13 = std::cbrt(rep.volume);
  rep.s_l2 = std::sqrt(std::max(0.0, v13 * rep.s_sq_integral));
  rep.s_minus_l2 = std::sqrt(std::max(0.0, v13 * rep.s_minus_sq_integral));
  rep.i_eps_minus = epsilon * v13 * rep.z_sq_integral + rep.s_minus_l2;
  if (rep.s_minus_l2 > 1e-13 * (1.0 + rep.s_l2))
    rep.sigma_normalization = rep.s_minus_l2;
  return rep;
}

ScaleInvarianceCheck scale_invariance_check(const GluedMetric& g, double lambda,
                                            double epsilon, double rel_tol) {
  FunctionalReport base = evaluate_functionals(g, epsilon);
  FunctionalReport scaled = evaluate_functionals(g.rescaled(lambda), epsilon);

  auto rel = [](double a, double b) {
    double denom = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / denom;
  };
  ScaleInvarianceCheck chk;
  double ds = rel(base.s_l2, scaled.s_l2);
  double dsm = rel(base.s_minus_l2, scaled.s_minus_l2);
  double di = rel(base.i_eps_minus, scaled.i_eps_minus);
  chk.s_l2_invariant = ds <= rel_tol;
  chk.s_minus_l2_invariant = dsm <= rel_tol;
  chk.i_eps_invariant = di <= rel_tol;
  chk.max_relative_deviation = std::max({ds, dsm, di});
  chk.z_sq_scaling_deviation =
      rel(scaled.z_sq_integral, base.z_sq_integral / lambda);
  return chk;
}

double TensorField::frobenius(size_t i) const {
  return std::sqrt(comps[i][0] * comps[i][0] + comps[i][1] * comps[i][1] +
                   comps[i][2] * comps[i][2]);
}

double TensorField::sup_norm() const {
  double m = 0.0;
  for (size_t i = 0; i < comps.size(); ++i) m = std::max(m, frobenius(i));
  return m;
}

TensorField l_star(const Metric1D& m, const RadialFnPtr& u,
                   const std::vector<double>& grid) {
  TensorField out;
  out.grid = grid;
  out.comps.reserve(grid.size());
  for (double t : grid) {
    CurvatureSample c = curvature_at(m, t);
    WarpJets j = metric_jets(m, t);
    double H1 = j.j1.d1 / j.j1.f;
    double H2 = j.doubly_warped ? j.j2.d1 / j.j2.f : H1;
    double uv = u->value(t), up = u->deriv(t, 1), upp = u->deriv(t, 2);
    double lap = upp + (H1 + H2) * up;
    std::array<double, 3> hess = {upp, H1 * up, H2 * up};
    out.comps.push_back({hess[0] - lap - uv * c.ricci[0],
                         hess[1] - lap - uv * c.ricci[1],
                         hess[2] - lap - uv * c.ricci[2]});
  }
  return out;
}

ResidualReport static_vacuum_residual(const Metric1D& m, const RadialFnPtr& u,
                                      const std::vector<double>& grid) {
  ResidualReport rep;
  rep.equation = "static_vacuum";
  rep.grid_points = grid.size();
  rep.reduced_accuracy = !m.closed_form();

  TensorField ls = l_star(m, u, grid);
  std::vector<double> tensor_norm(grid.size()), lap(grid.size());
  bool doubly = m.is_doubly_warped();
  for (size_t i = 0; i < grid.size(); ++i) {
    tensor_norm[i] = frobenius_of(ls.comps[i], doubly);
    double t = grid[i];
    WarpJets j = metric_jets(m, t);
    double H1 = j.j1.d1 / j.j1.f;
    double H2 = j.doubly_warped ? j.j2.d1 / j.j2.f : H1;
    lap[i] = u->deriv(t, 2) + (H1 + H2) * u->deriv(t, 1);
  }
  GridNorms tn = grid_norms(m, grid, tensor_norm);
  GridNorms sn = grid_norms(m, grid, lap);
  rep.sup_primary = tn.sup;
  rep.l2_primary = tn.l2;
  rep.sup_scalar = sn.sup;
  rep.l2_scalar = sn.l2;
  return rep;
}

TensorField grad_z2_field(const Metric1D& m, const std::vector<double>& grid) {
  require_fourth_order(m);
  TensorField out;
  out.grid = grid;
  out.comps.reserve(grid.size());
  for (double t : grid) out.comps.push_back(grad_z2_at(point_geometry(m, t)));
  return out;
}

ScalarCurvatureJets scalar_curvature_jets(const Metric1D& m, double t) {
  require_fourth_order(m);
  PointGeometry g = point_geometry(m, t);
  ScalarCurvatureJets out;
  out.s = g.s.a[0];
  out.s1 = g.s.deriv(1);
  out.s2 = g.s.deriv(2);
  out.z2 = g.z2norm.a[0];
  out.lap_s = out.s2 + (g.H1 + g.H2) * out.s1;
  return out;
}

ResidualReport zc2_residual(const Metric1D& m, const RadialFnPtr& tau,
                            double alpha, const std::vector<double>& grid) {
  require_fourth_order(m);
  ResidualReport rep;
  rep.equation = "zc2";
  rep.grid_points = grid.size();
  rep.reduced_accuracy = !m.closed_form();

  std::vector<double> tensor_norm(grid.size()), scalar_res(grid.size());
  bool doubly = m.is_doubly_warped();
  for (size_t i = 0; i < grid.size(); ++i) {
    double t = grid[i];
    PointGeometry g = point_geometry(m, t);
    auto gz = grad_z2_at(g);
    double Hsum = g.H1 + g.H2;
    double tv = tau->value(t), tp = tau->deriv(t, 1), tpp = tau->deriv(t, 2);
    double lap_tau = tpp + Hsum * tp;
    std::array<double, 3> hess_tau = {tpp, g.H1 * tp, g.H2 * tp};
    std::array<double, 3> comps{};
    for (int k = 0; k < 3; ++k)
      comps[k] = alpha * gz[k] +
                 (hess_tau[k] - lap_tau - tv * g.ricci[k]);
    tensor_norm[i] = frobenius_of(comps, doubly);

    double lap_s = g.s.deriv(2) + Hsum * g.s.deriv(1);
    scalar_res[i] =
        lap_tau + (alpha / 12.0) * lap_s + (alpha / 4.0) * g.z2norm.a[0];
  }
  GridNorms tn = grid_norms(m, grid, tensor_norm);
  GridNorms sn = grid_norms(m, grid, scalar_res);
  rep.sup_primary = tn.sup;
  rep.l2_primary = tn.l2;
  rep.sup_scalar = sn.sup;
  rep.l2_scalar = sn.l2;
  return rep;
}

namespace {

// Jets of the warpings of u^2 g in its own arclength, at the point with
// g-coordinate t. d/dt~ = (1/u) d/dt.
Jet2 conformal_jet(const WarpFn& f, const RadialFnPtr& u, double t) {
  double fv = f.value(t), f1 = f.deriv(t, 1), f2 = f.deriv(t, 2);
  double uv = u->value(t), u1 = u->deriv(t, 1), u2 = u->deriv(t, 2);
  Jet2 out;
  out.f = uv * fv;
  out.d1 = f1 + (u1 / uv) * fv;
  out.d2 = (f2 + (u2 / uv - (u1 / uv) * (u1 / uv)) * fv + (u1 / uv) * f1) / uv;
  return out;
}

WarpJets conformal_warp_jets(const Metric1D& m, const RadialFnPtr& u,
                             double t) {
  WarpJets j;
  if (m.is_doubly_warped()) {
    const auto& dw = m.doubly_warped();
    j.doubly_warped = true;
    j.j1 = conformal_jet(dw.f1, u, t);
    j.j2 = conformal_jet(dw.f2, u, t);
  } else {
    j.j1 = conformal_jet(m.spherical().f, u, t);
  }
  return j;
}

}  // namespace

std::array<double, 3> conformal_ricci_eigs(const Metric1D& m,
                                           const RadialFnPtr& u, double t) {
  return curvature_from_jets(conformal_warp_jets(m, u, t)).ricci;
}

double conformal_shape_operator(const Metric1D& m, const RadialFnPtr& u,
                                double t) {
  WarpJets j = conformal_warp_jets(m, u, t);
  return j.j1.d1 / j.j1.f;
}

double conformal_level_radius(const Metric1D& m, const RadialFnPtr& u,
                              double t) {
  if (m.is_doubly_warped())
    fail(ErrorCode::invalid_argument, "level radius needs the spherical shape");
  return u->value(t) * m.spherical().f.value(t);
}

double conformal_scalar_curvature(const Metric1D& m, const RadialFnPtr& u,
                                  double t) {
  return curvature_from_jets(conformal_warp_jets(m, u, t)).s;
}

ConformalRicciCheck conformal_ricci(const Metric1D& m, const RadialFnPtr& u,
                                    const std::vector<double>& grid) {
  ConformalRicciCheck chk;
  for (double t : grid) {
    CurvatureSample base = curvature_at(m, t);
    WarpJets j = metric_jets(m, t);
    double H1 = j.j1.d1 / j.j1.f;
    double H2 = j.doubly_warped ? j.j2.d1 / j.j2.f : H1;
    double uv = u->value(t), u1 = u->deriv(t, 1), u2 = u->deriv(t, 2);
    double lap_u = u2 + (H1 + H2) * u1;
    double dlog2 = (u1 / uv) * (u1 / uv);

    // Ric(u^2 g) = Ric - u^{-1} Hess u + 2 (d log u)^2 - u^{-1} (Lap u) g,
    // components in the g-orthonormal frame.
    std::array<double, 3> pred = {
        base.ricci[0] - u2 / uv + 2.0 * dlog2 - lap_u / uv,
        base.ricci[1] - (H1 * u1) / uv - lap_u / uv,
        base.ricci[2] - (H2 * u1) / uv - lap_u / uv};

    std::array<double, 3> exact = conformal_ricci_eigs(m, u, t);
    // Exact eigenvalues are in the u^2 g frame; compare in the g frame.
    for (int k = 0; k < 3; ++k) {
      double dev = std::abs(exact[k] * uv * uv - pred[k]);
      chk.max_deviation = std::max(chk.max_deviation, dev);
    }

    // Linearization in w = u - 1: Ric - Hess w - (Lap w) g.
    double w1 = u1, w2 = u2;
    double lap_w = w2 + (H1 + H2) * w1;
    std::array<double, 3> lin = {base.ricci[0] - w2 - lap_w,
                                 base.ricci[1] - H1 * w1 - lap_w,
                                 base.ricci[2] - H2 * w1 - lap_w};
    for (int k = 0; k < 3; ++k) {
      double gap = std::abs(exact[k] * uv * uv - lin[k]);
      chk.max_linearization_gap = std::max(chk.max_linearization_gap, gap);
    }
  }
  return chk;
}

}  // namespace msl
