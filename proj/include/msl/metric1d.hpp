#ifndef MSL_METRIC1D_HPP
#define MSL_METRIC1D_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "msl/warp_fn.hpp"

namespace msl {

// dr^2 + f1^2 (1 - a^2) dth1^2 + f2^2 dth2^2, both circles of period 2*pi.
struct DoublyWarped {
  WarpFn f1;
  WarpFn f2;
  double torus_cos = 0.0;  // a, the cosine of the torus angle; a^2 < 1
};

// dt^2 + f^2(t) ds^2_{S^2}.
struct SphericallySymmetric {
  WarpFn f;
};

class Metric1D {
 public:
  Metric1D(DoublyWarped shape, Interval domain, std::string label = {})
      : shape_(std::move(shape)), domain_(domain), label_(std::move(label)) {
    validate();
  }
  Metric1D(SphericallySymmetric shape, Interval domain, std::string label = {})
      : shape_(std::move(shape)), domain_(domain), label_(std::move(label)) {
    validate();
  }

  bool is_doubly_warped() const {
    return std::holds_alternative<DoublyWarped>(shape_);
  }
  const DoublyWarped& doubly_warped() const {
    return std::get<DoublyWarped>(shape_);
  }
  const SphericallySymmetric& spherical() const {
    return std::get<SphericallySymmetric>(shape_);
  }

  const Interval& domain() const { return domain_; }
  const std::string& label() const { return label_; }

  // Highest derivative order available exactly across all warpings.
  int max_exact_order() const;
  bool closed_form() const;
  WarpKind kind() const;

  Metric1D with_domain(Interval d) const {
    Metric1D m = *this;
    m.domain_ = d;
    return m;
  }
  Metric1D with_label(std::string l) const {
    Metric1D m = *this;
    m.label_ = std::move(l);
    return m;
  }

  // lambda^2 * g, reparameterized to arclength.
  Metric1D rescaled(double lambda) const;
  // Reflection across t = center (used for isometric doubling).
  Metric1D mirrored(double center) const;

 private:
  void validate() const;

  std::variant<DoublyWarped, SphericallySymmetric> shape_;
  Interval domain_;
  std::string label_;
};

struct Seam {
  double location = 0.0;
  enum class Order { c0, c1 } target_order = Order::c1;
  // Measured jumps across the seam per warping (value, first derivative).
  std::vector<double> value_jumps;
  std::vector<double> slope_jumps;
  std::optional<Interval> smoothing_band;
};

struct ConePointRecord {
  double location = 0.0;
  double angle = 0.0;  // 2*pi for a smooth point
};

// An ordered, contiguous sequence of pieces sharing one transverse axis.
class GluedMetric {
 public:
  GluedMetric() = default;
  GluedMetric(std::vector<Metric1D> pieces, std::vector<Seam> seams);
  // A single piece is a trivial glued metric; implicit by design so that
  // every metric-consuming routine accepts a Metric1D directly.
  GluedMetric(Metric1D piece);  // NOLINT(google-explicit-constructor)

  const std::vector<Metric1D>& pieces() const { return pieces_; }
  std::vector<Seam>& seams() { return seams_; }
  const std::vector<Seam>& seams() const { return seams_; }
  std::vector<ConePointRecord>& cone_points() { return cones_; }
  const std::vector<ConePointRecord>& cone_points() const { return cones_; }

  Interval domain() const;
  const Metric1D& piece_at(double t) const;
  size_t piece_index_at(double t) const;

  GluedMetric rescaled(double lambda) const;

 private:
  std::vector<Metric1D> pieces_;
  std::vector<Seam> seams_;
  std::vector<ConePointRecord> cones_;
};

}  // namespace msl

#endif  // MSL_METRIC1D_HPP
