#ifndef MSL_CURVATURE_HPP
#define MSL_CURVATURE_HPP

#include <array>
#include <vector>

#include "msl/metric1d.hpp"

namespace msl {

enum class Orientation { outward, inward };

struct EigenPair {
  double value = 0.0;
  int multiplicity = 0;
};

// Pointwise curvature data in the orthonormal frame (radial, tangential...).
struct CurvatureSample {
  double s = 0.0;                     // scalar curvature
  std::array<double, 3> ricci{};      // eigenvalues: radial, tan1, tan2
  double z2 = 0.0;                    // |z|^2, z = Ric - (s/3) g
  std::array<EigenPair, 2> shape{};   // level-surface shape operator
  int n_shape = 0;
  std::array<double, 3> sectional{};  // K(r,1), K(r,2), K(1,2)
};

struct CurvatureProfile {
  std::vector<double> grid;
  std::vector<double> s;
  std::vector<std::array<double, 3>> ricci_eigs;
  std::vector<double> z_norm_sq;
  std::vector<std::array<EigenPair, 2>> shape;
  int n_shape = 0;
  Orientation orientation = Orientation::outward;
};

// Jets of the warpings at one point, shape-tagged. The kernel below is the
// single code path for curvature; conformal-change routines feed it
// chain-rule jets.
struct WarpJets {
  bool doubly_warped = false;
  Jet2 j1;  // f1 (or f for the spherical case)
  Jet2 j2;  // f2 (unused for the spherical case)
};

CurvatureSample curvature_from_jets(const WarpJets& jets,
                                    Orientation orientation = Orientation::outward);

WarpJets metric_jets(const Metric1D& m, double t);

// Pointwise sample; t must be interior (positive warpings). Cone endpoints
// are handled by curvature_at_endpoint.
CurvatureSample curvature_at(const Metric1D& m, double t,
                             Orientation orientation = Orientation::outward);

// One-sided Richardson limit at a domain endpoint (cone points allowed).
CurvatureSample curvature_at_endpoint(const Metric1D& m, double t_end,
                                      Orientation orientation = Orientation::outward);

// Scalar curvature on a grid. Grid points must lie in the domain; warpings
// must be positive away from the endpoints.
std::vector<double> scalar_curvature(const Metric1D& m,
                                     const std::vector<double>& grid);

CurvatureProfile ricci_profile(const Metric1D& m,
                               const std::vector<double>& grid,
                               Orientation orientation = Orientation::outward);

// Shape operator of the level surface at t, as (eigenvalue, multiplicity).
std::vector<EigenPair> shape_operator(const Metric1D& m, double t,
                                      Orientation orientation);

// Gauss curvature of the level surface at t (spherical shape only).
double level_surface_gauss_curvature(const Metric1D& m, double t);

}  // namespace msl

#endif  // MSL_CURVATURE_HPP
