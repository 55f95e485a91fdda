#include "msl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "msl/error.hpp"

namespace msl {

namespace {

// 15-point Kronrod abscissae/weights on [-1,1] with the embedded 7-point
// Gauss rule (even-index weights).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double integral;
  double err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a,
                     double b, long* evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fc = f(c);
  *evals += 15;

  double result_g = fc * kWg[3];
  double result_k = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    double x = h * kXgk[j];
    double f1 = f(c - x);
    double f2 = f(c + x);
    result_k += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) result_g += kWg[j / 2] * (f1 + f2);
  }
  result_g *= h;
  result_k *= h;

  // |K15 - G7| is a conservative bound for smooth integrands.
  return Panel{a, b, result_k, std::abs(result_k - result_g)};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, const QuadOptions& opts) {
  QuadResult res;
  if (a == b) {
    res.converged = true;
    return res;
  }
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }

  std::priority_queue<Panel> queue;
  queue.push(evaluate_panel(f, a, b, &res.evaluations));

  double total = queue.top().integral;
  double total_err = queue.top().err;
  int n_panels = 1;

  while (n_panels < opts.max_intervals) {
    double tol = std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
    if (total_err <= tol) {
      res.converged = true;
      break;
    }
    Panel worst = queue.top();
    queue.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval exhausted at machine precision; accept its estimate.
      queue.push(Panel{worst.a, worst.b, worst.integral, 0.0});
      total_err -= worst.err;
      continue;
    }
    Panel left = evaluate_panel(f, worst.a, mid, &res.evaluations);
    Panel right = evaluate_panel(f, mid, worst.b, &res.evaluations);
    total += left.integral + right.integral - worst.integral;
    total_err += left.err + right.err - worst.err;
    queue.push(left);
    queue.push(right);
    ++n_panels;
  }
  if (!res.converged) {
    double tol = std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
    if (total_err <= tol) res.converged = true;
  }
  if (!res.converged)
    fail(ErrorCode::quadrature_nonconvergent,
         "adaptive quadrature failed to reach tolerance; estimated error " +
             std::to_string(total_err));

  res.value = sign * total;
  res.error = total_err;
  return res;
}

QuadResult integrate_to_infinity(const std::function<double(double)>& f,
                                 double a, const QuadOptions& opts) {
  // Geometrically growing blocks; converges for exponential tails and for
  // integrable power-law tails alike, without the essential singularity a
  // rational map to [0, 1) would introduce.
  QuadResult total;
  double width = std::max(1.0, 0.5 * std::abs(a));
  double lo = a;
  for (int block = 0; block < 200; ++block) {
    QuadResult r = integrate(f, lo, lo + width, opts);
    total.value += r.value;
    total.error += r.error;
    total.evaluations += r.evaluations;
    double tol = std::max(opts.abs_tol, opts.rel_tol * std::abs(total.value));
    if (block > 2 && std::abs(r.value) < 0.05 * tol) {
      total.converged = true;
      return total;
    }
    lo += width;
    width *= 2.0;
  }
  fail(ErrorCode::quadrature_nonconvergent,
       "tail integral did not settle within the block budget");
}

}  // namespace msl
