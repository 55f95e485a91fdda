#ifndef MSL_FITTING_HPP
#define MSL_FITTING_HPP

#include <vector>

namespace msl {

// Ordinary least squares: columns(i) evaluated at xs against ys.
// Returns the coefficient vector; small dense system solved by Gaussian
// elimination with partial pivoting on the normal equations.
std::vector<double> least_squares(
    const std::vector<double>& xs, const std::vector<double>& ys,
    const std::vector<std::vector<double>>& basis_columns);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
};

LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys);

// Slope of log(y) against log(x); all y must be positive.
LineFit loglog_slope(const std::vector<double>& xs,
                     const std::vector<double>& ys);

}  // namespace msl

#endif  // MSL_FITTING_HPP
