#include "msl/fitting.hpp"

#include <cmath>
#include <cstddef>

#include "msl/error.hpp"

namespace msl {

std::vector<double> least_squares(
    const std::vector<double>& xs, const std::vector<double>& ys,
    const std::vector<std::vector<double>>& basis_columns) {
  const size_t n = xs.size();
  const size_t m = basis_columns.size();
  if (ys.size() != n || n < m)
    fail(ErrorCode::invalid_argument, "least_squares: bad dimensions");
  for (const auto& c : basis_columns)
    if (c.size() != n)
      fail(ErrorCode::invalid_argument, "least_squares: column size mismatch");

  // Normal equations A^T A x = A^T y.
  std::vector<std::vector<double>> M(m, std::vector<double>(m + 1, 0.0));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      double s = 0.0;
      for (size_t k = 0; k < n; ++k) s += basis_columns[i][k] * basis_columns[j][k];
      M[i][j] = s;
    }
    double s = 0.0;
    for (size_t k = 0; k < n; ++k) s += basis_columns[i][k] * ys[k];
    M[i][m] = s;
  }

  // Gaussian elimination with partial pivoting.
  for (size_t col = 0; col < m; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < m; ++r)
      if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
    std::swap(M[col], M[piv]);
    if (M[col][col] == 0.0)
      fail(ErrorCode::invalid_argument, "least_squares: singular system");
    for (size_t r = 0; r < m; ++r) {
      if (r == col) continue;
      double factor = M[r][col] / M[col][col];
      for (size_t c = col; c <= m; ++c) M[r][c] -= factor * M[col][c];
    }
  }
  std::vector<double> x(m);
  for (size_t i = 0; i < m; ++i) x[i] = M[i][m] / M[i][i];
  return x;
}

LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
  std::vector<std::vector<double>> cols(2);
  cols[0] = xs;
  cols[1].assign(xs.size(), 1.0);
  auto c = least_squares(xs, ys, cols);
  LineFit fit;
  fit.slope = c[0];
  fit.intercept = c[1];
  for (size_t i = 0; i < xs.size(); ++i) {
    double r = std::abs(ys[i] - (c[0] * xs[i] + c[1]));
    if (r > fit.max_residual) fit.max_residual = r;
  }
  return fit;
}

LineFit loglog_slope(const std::vector<double>& xs,
                     const std::vector<double>& ys) {
  std::vector<double> lx(xs.size()), ly(ys.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] <= 0.0 || ys[i] <= 0.0)
      fail(ErrorCode::invalid_argument, "loglog_slope: nonpositive data");
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
  }
  return fit_line(lx, ly);
}

}  // namespace msl
