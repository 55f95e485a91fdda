#ifndef MSL_ERROR_HPP
#define MSL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace msl {

// Error codes cover every failure mode the library reports. The CLI maps
// any msl::Error to its "computational error" exit status and embeds the
// code name in the report.
enum class ErrorCode {
  grid_out_of_domain,
  warping_nonpositive_on_grid,
  cone_point,
  quadrature_nonconvergent,
  no_center,
  no_root,
  window_too_narrow,
  cap_exceeds_sphere,
  cone_angle_exceeds_smooth,
  concave_interpolant_infeasible,
  floor_unachievable,
  seam_not_convexifying,
  insufficient_smoothness,
  unknown_series,
  invalid_argument,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::grid_out_of_domain: return "GridOutOfDomain";
    case ErrorCode::warping_nonpositive_on_grid: return "WarpingNonpositiveOnGrid";
    case ErrorCode::cone_point: return "ConePoint";
    case ErrorCode::quadrature_nonconvergent: return "QuadratureNonconvergent";
    case ErrorCode::no_center: return "NoCenter";
    case ErrorCode::no_root: return "NoRoot";
    case ErrorCode::window_too_narrow: return "WindowTooNarrow";
    case ErrorCode::cap_exceeds_sphere: return "CapExceedsSphere";
    case ErrorCode::cone_angle_exceeds_smooth: return "ConeAngleExceedsSmooth";
    case ErrorCode::concave_interpolant_infeasible: return "ConcaveInterpolantInfeasible";
    case ErrorCode::floor_unachievable: return "FloorUnachievable";
    case ErrorCode::seam_not_convexifying: return "SeamNotConvexifying";
    case ErrorCode::insufficient_smoothness: return "InsufficientSmoothness";
    case ErrorCode::unknown_series: return "UnknownSeries";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace msl

#endif  // MSL_ERROR_HPP
