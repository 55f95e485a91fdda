#ifndef MSL_INTERVAL_HPP
#define MSL_INTERVAL_HPP

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "msl/error.hpp"

namespace msl {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }

  bool contains(double t, double tol = 0.0) const {
    return t >= lo - tol && t <= hi + tol;
  }
  bool contains(const Interval& other, double tol = 0.0) const {
    return other.lo >= lo - tol && other.hi <= hi + tol;
  }

  Interval clipped_to(const Interval& outer) const {
    return {std::max(lo, outer.lo), std::min(hi, outer.hi)};
  }
  bool empty(double tol = 0.0) const { return hi - lo <= tol; }
};

// Default grid density; MSL_GRID_POINTS overrides it process-wide.
inline int default_grid_points() {
  if (const char* env = std::getenv("MSL_GRID_POINTS")) {
    int n = std::atoi(env);
    if (n >= 8) return n;
  }
  return 2048;
}

inline std::vector<double> uniform_grid(const Interval& iv, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i)
    g[i] = iv.lo + (iv.hi - iv.lo) * static_cast<double>(i) / (n - 1);
  g.back() = iv.hi;
  return g;
}

// Uniform in the interior, excluding both endpoints by half a step.
inline std::vector<double> interior_grid(const Interval& iv, int n) {
  std::vector<double> g(n);
  double h = (iv.hi - iv.lo) / n;
  for (int i = 0; i < n; ++i) g[i] = iv.lo + h * (i + 0.5);
  return g;
}

inline std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    g[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / (n - 1));
  g.back() = hi;
  return g;
}

}  // namespace msl

#endif  // MSL_INTERVAL_HPP
