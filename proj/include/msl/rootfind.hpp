#ifndef MSL_ROOTFIND_HPP
#define MSL_ROOTFIND_HPP

#include <array>
#include <functional>

namespace msl {

struct RootResult {
  double x = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Newton with bisection fallback on a bracketing interval [lo, hi].
// f(lo) and f(hi) must have opposite signs.
RootResult newton_bracketed(const std::function<double(double)>& f,
                            const std::function<double(double)>& df,
                            double lo, double hi, double tol = 1e-14,
                            int max_iter = 100);

// Finds the first crossing of f over a monotone scan of [lo, hi]; returns
// hi if f keeps one sign. Used for radius-style sup definitions.
double first_crossing(const std::function<double(double)>& f, double lo,
                      double hi, int scan_points, double tol = 1e-12);

struct Root2Result {
  std::array<double, 2> x{};
  std::array<double, 2> residual{};
  int iterations = 0;
  bool converged = false;
};

// Damped Newton for a 2x2 system with analytic Jacobian.
Root2Result newton_2x2(
    const std::function<std::array<double, 2>(const std::array<double, 2>&)>& f,
    const std::function<std::array<std::array<double, 2>, 2>(
        const std::array<double, 2>&)>& jac,
    std::array<double, 2> x0, double tol = 1e-13, int max_iter = 200);

}  // namespace msl

#endif  // MSL_ROOTFIND_HPP
