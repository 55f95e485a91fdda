#include "msl/rootfind.hpp"

#include <cmath>

namespace msl {

RootResult newton_bracketed(const std::function<double(double)>& f,
                            const std::function<double(double)>& df,
                            double lo, double hi, double tol, int max_iter) {
  RootResult res;
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, 0, true};
  if (fhi == 0.0) return {hi, 0.0, 0, true};
  if (flo * fhi > 0.0) return res;  // not bracketed

  double x = 0.5 * (lo + hi);
  for (int it = 0; it < max_iter; ++it) {
    double fx = f(x);
    res.iterations = it + 1;
    if (fx == 0.0 || std::abs(fx) < tol) {
      res.x = x;
      res.residual = std::abs(fx);
      res.converged = true;
      return res;
    }
    if (fx * flo < 0.0)
      hi = x;
    else {
      lo = x;
      flo = fx;
    }
    double d = df(x);
    double step = (d != 0.0) ? fx / d : 0.0;
    double xn = x - step;
    if (d == 0.0 || xn <= lo || xn >= hi) xn = 0.5 * (lo + hi);
    if (std::abs(xn - x) < tol * (1.0 + std::abs(x))) {
      x = xn;
      res.x = x;
      res.residual = std::abs(f(x));
      res.converged = true;
      return res;
    }
    x = xn;
  }
  res.x = x;
  res.residual = std::abs(f(x));
  res.converged = res.residual < tol * 100;
  return res;
}

double first_crossing(const std::function<double(double)>& f, double lo,
                      double hi, int scan_points, double tol) {
  double prev_t = lo;
  double prev_f = f(lo);
  if (prev_f > 0.0) return lo;
  for (int i = 1; i <= scan_points; ++i) {
    double t = lo + (hi - lo) * static_cast<double>(i) / scan_points;
    double ft = f(t);
    if (ft > 0.0) {
      // refine by bisection in [prev_t, t]
      double a = prev_t, b = t;
      for (int k = 0; k < 200 && (b - a) > tol * (1.0 + std::abs(b)); ++k) {
        double m = 0.5 * (a + b);
        if (f(m) > 0.0)
          b = m;
        else
          a = m;
      }
      return a;
    }
    prev_t = t;
    prev_f = ft;
  }
  return hi;
}

Root2Result newton_2x2(
    const std::function<std::array<double, 2>(const std::array<double, 2>&)>& f,
    const std::function<std::array<std::array<double, 2>, 2>(
        const std::array<double, 2>&)>& jac,
    std::array<double, 2> x0, double tol, int max_iter) {
  Root2Result res;
  res.x = x0;
  for (int it = 0; it < max_iter; ++it) {
    auto r = f(res.x);
    res.residual = r;
    res.iterations = it;
    double rn = std::max(std::abs(r[0]), std::abs(r[1]));
    if (rn < tol) {
      res.converged = true;
      return res;
    }
    auto J = jac(res.x);
    double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    if (det == 0.0 || !std::isfinite(det)) return res;
    double dx0 = (r[0] * J[1][1] - r[1] * J[0][1]) / det;
    double dx1 = (r[1] * J[0][0] - r[0] * J[1][0]) / det;
    // Damp steps that would overshoot to nonpositive values of either
    // unknown; both are positive quantities in every use here.
    double lambda = 1.0;
    for (int k = 0; k < 60; ++k) {
      double n0 = res.x[0] - lambda * dx0;
      double n1 = res.x[1] - lambda * dx1;
      if (n0 > 0.0 && n1 > 0.0) break;
      lambda *= 0.5;
    }
    res.x[0] -= lambda * dx0;
    res.x[1] -= lambda * dx1;
  }
  auto r = f(res.x);
  res.residual = r;
  res.converged =
      std::max(std::abs(r[0]), std::abs(r[1])) < tol;
  return res;
}

}  // namespace msl
