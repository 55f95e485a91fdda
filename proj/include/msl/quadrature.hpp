#ifndef MSL_QUADRATURE_HPP
#define MSL_QUADRATURE_HPP

#include <functional>

#include "msl/interval.hpp"

namespace msl {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  long evaluations = 0;
  bool converged = false;
};

struct QuadOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_intervals = 20000;
};

// Adaptive Gauss-Kronrod (G7,K15) on a finite interval.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opts = {});

// Integral over [a, inf), mapped to a finite interval. The integrand must
// decay fast enough for the transformed integral to converge.
QuadResult integrate_to_infinity(const std::function<double(double)>& f,
                                 double a, const QuadOptions& opts = {});

}  // namespace msl

#endif  // MSL_QUADRATURE_HPP
