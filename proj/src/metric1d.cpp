#include "msl/metric1d.hpp"

#include <algorithm>
#include <cmath>

#include "msl/error.hpp"

namespace msl {

void Metric1D::validate() const {
  if (domain_.hi <= domain_.lo)
    fail(ErrorCode::invalid_argument, "metric domain is empty");
  if (is_doubly_warped()) {
    const auto& dw = doubly_warped();
    if (dw.torus_cos * dw.torus_cos >= 1.0)
      fail(ErrorCode::invalid_argument,
           "torus angle cosine must satisfy a^2 < 1");
  }
}

int Metric1D::max_exact_order() const {
  if (is_doubly_warped()) {
    const auto& dw = doubly_warped();
    return std::min(dw.f1.max_exact_order(), dw.f2.max_exact_order());
  }
  return spherical().f.max_exact_order();
}

bool Metric1D::closed_form() const { return kind() == WarpKind::closed_form; }

WarpKind Metric1D::kind() const {
  if (is_doubly_warped()) {
    const auto& dw = doubly_warped();
    if (dw.f1.kind() == WarpKind::sampled || dw.f2.kind() == WarpKind::sampled)
      return WarpKind::sampled;
    if (dw.f1.kind() == WarpKind::hermite || dw.f2.kind() == WarpKind::hermite)
      return WarpKind::hermite;
    return WarpKind::closed_form;
  }
  return spherical().f.kind();
}

Metric1D Metric1D::rescaled(double lambda) const {
  if (lambda <= 0.0)
    fail(ErrorCode::invalid_argument, "rescale factor must be positive");
  Interval d{domain_.lo * lambda, domain_.hi * lambda};
  if (is_doubly_warped()) {
    const auto& dw = doubly_warped();
    return Metric1D(
        DoublyWarped{scale_warp(dw.f1, lambda), scale_warp(dw.f2, lambda),
                     dw.torus_cos},
        d, label_);
  }
  return Metric1D(SphericallySymmetric{scale_warp(spherical().f, lambda)}, d,
                  label_);
}

Metric1D Metric1D::mirrored(double center) const {
  Interval d{2.0 * center - domain_.hi, 2.0 * center - domain_.lo};
  if (is_doubly_warped()) {
    const auto& dw = doubly_warped();
    return Metric1D(DoublyWarped{mirror_warp(dw.f1, center),
                                 mirror_warp(dw.f2, center), dw.torus_cos},
                    d, label_ + " (mirrored)");
  }
  return Metric1D(SphericallySymmetric{mirror_warp(spherical().f, center)}, d,
                  label_ + " (mirrored)");
}

GluedMetric::GluedMetric(std::vector<Metric1D> pieces, std::vector<Seam> seams)
    : pieces_(std::move(pieces)), seams_(std::move(seams)) {
  if (pieces_.empty())
    fail(ErrorCode::invalid_argument, "glued metric needs at least one piece");
  for (size_t i = 1; i < pieces_.size(); ++i) {
    double gap = pieces_[i].domain().lo - pieces_[i - 1].domain().hi;
    if (std::abs(gap) > 1e-9 * (1.0 + std::abs(pieces_[i].domain().lo)))
      fail(ErrorCode::invalid_argument, "glued pieces are not contiguous");
    if (pieces_[i].is_doubly_warped() != pieces_[0].is_doubly_warped())
      fail(ErrorCode::invalid_argument, "glued pieces must share shape class");
  }
}

GluedMetric::GluedMetric(Metric1D piece) { pieces_.push_back(std::move(piece)); }

Interval GluedMetric::domain() const {
  return {pieces_.front().domain().lo, pieces_.back().domain().hi};
}

size_t GluedMetric::piece_index_at(double t) const {
  for (size_t i = 0; i + 1 < pieces_.size(); ++i)
    if (t < pieces_[i].domain().hi) return i;
  return pieces_.size() - 1;
}

const Metric1D& GluedMetric::piece_at(double t) const {
  return pieces_[piece_index_at(t)];
}

GluedMetric GluedMetric::rescaled(double lambda) const {
  std::vector<Metric1D> ps;
  ps.reserve(pieces_.size());
  for (const auto& p : pieces_) ps.push_back(p.rescaled(lambda));
  std::vector<Seam> ss = seams_;
  for (auto& s : ss) {
    s.location *= lambda;
    for (auto& v : s.slope_jumps) v *= 1.0;  // f' is dimensionless
    for (auto& v : s.value_jumps) v *= lambda;
    if (s.smoothing_band)
      s.smoothing_band = Interval{s.smoothing_band->lo * lambda,
                                  s.smoothing_band->hi * lambda};
  }
  GluedMetric g(std::move(ps), std::move(ss));
  g.cones_ = cones_;
  for (auto& c : g.cones_) c.location *= lambda;
  return g;
}

}  // namespace msl
