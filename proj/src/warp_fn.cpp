#include "msl/warp_fn.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "msl/taylor.hpp"

namespace msl {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

class LinearFn final : public RadialFn {
 public:
  LinearFn(double c1, double c0) : c1_(c1), c0_(c0) {}
  double value(double t) const override { return c0_ + c1_ * t; }
  double deriv(double, int order) const override {
    return order == 1 ? c1_ : 0.0;
  }
  int max_exact_order() const override { return 4; }
  std::string id() const override {
    return "linear(c1=" + fmt(c1_) + ",c0=" + fmt(c0_) + ")";
  }

 private:
  double c1_, c0_;
};

class ConstFn final : public RadialFn {
 public:
  explicit ConstFn(double c) : c_(c) {}
  double value(double) const override { return c_; }
  double deriv(double, int) const override { return 0.0; }
  int max_exact_order() const override { return 4; }
  std::string id() const override { return "const(" + fmt(c_) + ")"; }

 private:
  double c_;
};

class ExpFn final : public RadialFn {
 public:
  ExpFn(double c, double k, double t_ref) : c_(c), k_(k), t_ref_(t_ref) {}
  double value(double t) const override { return c_ * std::exp(k_ * (t - t_ref_)); }
  double deriv(double t, int order) const override {
    return std::pow(k_, order) * value(t);
  }
  int max_exact_order() const override { return 4; }
  std::string id() const override {
    return "exp(c=" + fmt(c_) + ",k=" + fmt(k_) + ",t0=" + fmt(t_ref_) + ")";
  }

 private:
  double c_, k_, t_ref_;
};

class SinFn final : public RadialFn {
 public:
  explicit SinFn(double delta) : d_(delta) {}
  double value(double t) const override { return std::sin(d_ * t) / d_; }
  double deriv(double t, int order) const override {
    switch (order) {
      case 1: return std::cos(d_ * t);
      case 2: return -d_ * std::sin(d_ * t);
      case 3: return -d_ * d_ * std::cos(d_ * t);
      case 4: return d_ * d_ * d_ * std::sin(d_ * t);
      default: return 0.0;
    }
  }
  int max_exact_order() const override { return 4; }
  std::string id() const override { return "sin(delta=" + fmt(d_) + ")"; }

 private:
  double d_;
};

class SinhFn final : public RadialFn {
 public:
  explicit SinhFn(double k) : k_(k) {}
  double value(double t) const override { return std::sinh(k_ * t) / k_; }
  double deriv(double t, int order) const override {
    switch (order) {
      case 1: return std::cosh(k_ * t);
      case 2: return k_ * std::sinh(k_ * t);
      case 3: return k_ * k_ * std::cosh(k_ * t);
      case 4: return k_ * k_ * k_ * std::sinh(k_ * t);
      default: return 0.0;
    }
  }
  int max_exact_order() const override { return 4; }
  std::string id() const override { return "sinh(k=" + fmt(k_) + ")"; }

 private:
  double k_;
};

class TanHalfFn final : public RadialFn {
 public:
  explicit TanHalfFn(double c) : c_(c) {}
  double value(double t) const override { return c_ * std::tan(0.5 * t); }
  double deriv(double t, int order) const override {
    double u = 0.5 * t;
    double tn = std::tan(u);
    double s2 = 1.0 + tn * tn;  // sec^2 u
    switch (order) {
      case 1: return 0.5 * c_ * s2;
      case 2: return 0.5 * c_ * s2 * tn;
      case 3: return 0.25 * c_ * s2 * (2.0 * tn * tn + s2);
      case 4: return 0.5 * c_ * s2 * tn * (tn * tn + 2.0 * s2);
      default: return 0.0;
    }
  }
  int max_exact_order() const override { return 4; }
  std::string id() const override { return "tan_half(c=" + fmt(c_) + ")"; }

 private:
  double c_;
};

class ExpNegCosFn final : public RadialFn {
 public:
  explicit ExpNegCosFn(double c) : c_(c) {}
  double value(double t) const override { return c_ * std::exp(-std::cos(t)); }
  double deriv(double t, int order) const override {
    double f = value(t);
    double s = std::sin(t), co = std::cos(t);
    switch (order) {
      case 1: return f * s;
      case 2: return f * (s * s + co);
      case 3: return f * s * (s * s + 3.0 * co - 1.0);
      case 4:
        return f * (s * s * s * s + 6.0 * s * s * co - 4.0 * s * s +
                    3.0 * co * co - co);
      default: return 0.0;
    }
  }
  int max_exact_order() const override { return 4; }
  std::string id() const override { return "exp_neg_cos(c=" + fmt(c_) + ")"; }

 private:
  double c_;
};

class PolynomialFn final : public RadialFn {
 public:
  PolynomialFn(std::vector<double> coeffs, double t0)
      : c_(std::move(coeffs)), t0_(t0) {}
  double value(double t) const override {
    double x = t - t0_, acc = 0.0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  double deriv(double t, int order) const override {
    double x = t - t0_, acc = 0.0;
    for (size_t i = c_.size(); i-- > static_cast<size_t>(order);) {
      double fac = 1.0;
      for (int k = 0; k < order; ++k) fac *= static_cast<double>(i - k);
      acc = acc * x + fac * c_[i];
    }
    return acc;
  }
  int max_exact_order() const override { return 4; }
  std::string id() const override {
    std::string s = "poly(t0=" + fmt(t0_);
    for (double v : c_) s += "," + fmt(v);
    return s + ")";
  }

 private:
  std::vector<double> c_;
  double t0_;
};

// Inverse of a smooth increasing arclength map via bracketed Newton.
// dt/dr >= 1 in both Schwarzschild profiles, so r <= r_lo + t brackets.
template <typename ArclenFn, typename SpeedFn>
double invert_arclength(double t, double r_lo, ArclenFn&& arclen,
                        SpeedFn&& speed) {
  if (t <= 0.0) return r_lo;
  double lo = r_lo, hi = r_lo + t * (1.0 + 1e-12) + 1e-12;
  double r = std::min(hi, r_lo + t);
  for (int it = 0; it < 200; ++it) {
    double g = arclen(r) - t;
    if (g > 0.0)
      hi = r;
    else
      lo = r;
    double d = speed(r);
    double rn = r - g / d;
    if (!(rn > lo && rn < hi)) rn = 0.5 * (lo + hi);
    if (std::abs(rn - r) < 1e-15 * (1.0 + std::abs(r))) return rn;
    r = rn;
  }
  return r;
}

double areal_arclen(double m, double r) {
  double q = std::sqrt(r * (r - 2.0 * m));
  return q + 2.0 * m * std::log((std::sqrt(r) + std::sqrt(r - 2.0 * m)) /
                                std::sqrt(2.0 * m));
}

double iso_arclen(double m, double r) {
  double q = std::sqrt(r * (r + 2.0 * m));
  return q + 2.0 * m * std::log((std::sqrt(r) + std::sqrt(r + 2.0 * m)) /
                                std::sqrt(2.0 * m));
}

class SchwarzschildArealFn final : public RadialFn {
 public:
  SchwarzschildArealFn(double m, double r_lo) : m_(m), r_lo_(r_lo) {}
  double radius_at(double t) const {
    double base = areal_arclen(m_, r_lo_);
    return invert_arclength(
        t, r_lo_, [&](double r) { return areal_arclen(m_, r) - base; },
        [&](double r) { return 1.0 / std::sqrt(1.0 - 2.0 * m_ / r); });
  }
  double value(double t) const override { return radius_at(t); }
  double deriv(double t, int order) const override {
    double r = radius_at(t);
    double psi = std::sqrt(std::max(0.0, 1.0 - 2.0 * m_ / r));
    switch (order) {
      case 1: return psi;
      case 2: return m_ / (r * r);
      case 3: return -2.0 * m_ * psi / (r * r * r);
      case 4: {
        double r4 = r * r * r * r;
        return 6.0 * m_ / r4 - 14.0 * m_ * m_ / (r4 * r);
      }
      default: return 0.0;
    }
  }
  int max_exact_order() const override { return 4; }
  std::string id() const override {
    return "schwarzschild_areal(m=" + fmt(m_) + ",r_lo=" + fmt(r_lo_) + ")";
  }
  double mass() const { return m_; }

 private:
  double m_, r_lo_;
};

class SchwarzschildIsoFn final : public RadialFn {
 public:
  SchwarzschildIsoFn(double m, double r_lo) : m_(m), r_lo_(r_lo) {}
  double radius_at(double t) const {
    double base = iso_arclen(m_, r_lo_);
    return invert_arclength(
        t, r_lo_, [&](double r) { return iso_arclen(m_, r) - base; },
        [&](double r) { return std::sqrt(1.0 + 2.0 * m_ / r); });
  }
  double value(double t) const override {
    double r = radius_at(t);
    return std::sqrt(r * (r + 2.0 * m_));
  }
  double deriv(double t, int order) const override {
    double r = radius_at(t);
    double phi = 1.0 + 2.0 * m_ / r;
    switch (order) {
      case 1: return (1.0 + m_ / r) / phi;
      case 2: return m_ / (r * r) * std::pow(phi, -2.5);
      case 3: {
        double r3 = r * r * r;
        return -2.0 * m_ / (r3 * std::pow(phi, 3)) +
               5.0 * m_ * m_ / (r3 * r * std::pow(phi, 4));
      }
      case 4: {
        double r4 = r * r * r * r;
        return (6.0 * m_ / r4 / std::pow(phi, 3) -
                32.0 * m_ * m_ / (r4 * r) / std::pow(phi, 4) +
                40.0 * m_ * m_ * m_ / (r4 * r * r) / std::pow(phi, 5)) /
               std::sqrt(phi);
      }
      default: return 0.0;
    }
  }
  int max_exact_order() const override { return 4; }
  std::string id() const override {
    return "schwarzschild_isotropic(m=" + fmt(m_) + ",r_lo=" + fmt(r_lo_) + ")";
  }

 private:
  double m_, r_lo_;
};

class MirrorFn final : public RadialFn {
 public:
  MirrorFn(RadialFnPtr base, double center)
      : base_(std::move(base)), c_(center) {}
  double value(double t) const override { return base_->value(2.0 * c_ - t); }
  double deriv(double t, int order) const override {
    double sgn = (order % 2 == 0) ? 1.0 : -1.0;
    return sgn * base_->deriv(2.0 * c_ - t, order);
  }
  int max_exact_order() const override { return base_->max_exact_order(); }
  std::string id() const override {
    return "mirror(center=" + fmt(c_) + "," + base_->id() + ")";
  }

 private:
  RadialFnPtr base_;
  double c_;
};

class ShiftedFn final : public RadialFn {
 public:
  ShiftedFn(RadialFnPtr base, double offset)
      : base_(std::move(base)), o_(offset) {}
  double value(double t) const override { return base_->value(t - o_); }
  double deriv(double t, int order) const override {
    return base_->deriv(t - o_, order);
  }
  int max_exact_order() const override { return base_->max_exact_order(); }
  std::string id() const override {
    return "shifted(offset=" + fmt(o_) + "," + base_->id() + ")";
  }

 private:
  RadialFnPtr base_;
  double o_;
};

class ScaledFn final : public RadialFn {
 public:
  ScaledFn(RadialFnPtr base, double lambda)
      : base_(std::move(base)), l_(lambda) {}
  double value(double t) const override { return l_ * base_->value(t / l_); }
  double deriv(double t, int order) const override {
    return std::pow(l_, 1 - order) * base_->deriv(t / l_, order);
  }
  int max_exact_order() const override { return base_->max_exact_order(); }
  std::string id() const override {
    return "scaled(lambda=" + fmt(l_) + "," + base_->id() + ")";
  }

 private:
  RadialFnPtr base_;
  double l_;
};

class WindowedSumFn final : public RadialFn {
 public:
  WindowedSumFn(RadialFnPtr base, RadialFnPtr bump, Interval support)
      : base_(std::move(base)), bump_(std::move(bump)), support_(support) {}
  double value(double t) const override {
    double v = base_->value(t);
    if (support_.contains(t)) v += bump_->value(t);
    return v;
  }
  double deriv(double t, int order) const override {
    double v = base_->deriv(t, order);
    if (support_.contains(t)) v += bump_->deriv(t, order);
    return v;
  }
  int max_exact_order() const override {
    return std::min(base_->max_exact_order(), bump_->max_exact_order());
  }
  std::string id() const override {
    return "windowed_sum(" + base_->id() + "+" + bump_->id() + " on [" +
           fmt(support_.lo) + "," + fmt(support_.hi) + "])";
  }

 private:
  RadialFnPtr base_, bump_;
  Interval support_;
};

class ProductFn final : public RadialFn {
 public:
  ProductFn(RadialFnPtr a, RadialFnPtr b) : a_(std::move(a)), b_(std::move(b)) {}
  double value(double t) const override { return a_->value(t) * b_->value(t); }
  double deriv(double t, int order) const override {
    auto ja = Taylor5::from_derivs({a_->value(t), a_->deriv(t, 1),
                                    a_->deriv(t, 2), a_->deriv(t, 3),
                                    a_->deriv(t, 4)});
    auto jb = Taylor5::from_derivs({b_->value(t), b_->deriv(t, 1),
                                    b_->deriv(t, 2), b_->deriv(t, 3),
                                    b_->deriv(t, 4)});
    return (ja * jb).deriv(order);
  }
  int max_exact_order() const override {
    return std::min(a_->max_exact_order(), b_->max_exact_order());
  }
  std::string id() const override {
    return "product(" + a_->id() + "*" + b_->id() + ")";
  }

 private:
  RadialFnPtr a_, b_;
};

class InverseArgFn final : public RadialFn {
 public:
  explicit InverseArgFn(double c) : c_(c) {}
  double value(double t) const override { return c_ / t; }
  double deriv(double t, int order) const override {
    double v = c_ / t;
    for (int k = 1; k <= order; ++k) v *= -static_cast<double>(k) / t;
    return v;
  }
  int max_exact_order() const override { return 4; }
  std::string id() const override { return "inverse(" + fmt(c_) + ")"; }

 private:
  double c_;
};

class AffineOfFn final : public RadialFn {
 public:
  AffineOfFn(RadialFnPtr nu, double scale, double offset)
      : nu_(std::move(nu)), s_(scale), o_(offset) {}
  double value(double t) const override { return o_ + s_ * nu_->value(t); }
  double deriv(double t, int order) const override {
    return s_ * nu_->deriv(t, order);
  }
  int max_exact_order() const override { return nu_->max_exact_order(); }
  std::string id() const override {
    return "affine(" + fmt(o_) + "+" + fmt(s_) + "*" + nu_->id() + ")";
  }

 private:
  RadialFnPtr nu_;
  double s_, o_;
};

class SqrtConformalFn final : public RadialFn {
 public:
  SqrtConformalFn(RadialFnPtr nu, double delta)
      : nu_(std::move(nu)), d_(delta) {}
  Taylor5 jet(double t) const {
    auto jn = Taylor5::from_derivs({nu_->value(t), nu_->deriv(t, 1),
                                    nu_->deriv(t, 2), nu_->deriv(t, 3),
                                    nu_->deriv(t, 4)});
    return sqrt(jn * (2.0 * d_) + 1.0);
  }
  double value(double t) const override {
    return std::sqrt(1.0 + 2.0 * d_ * nu_->value(t));
  }
  double deriv(double t, int order) const override { return jet(t).deriv(order); }
  int max_exact_order() const override { return nu_->max_exact_order(); }
  std::string id() const override {
    return "sqrt_conformal(delta=" + fmt(d_) + "," + nu_->id() + ")";
  }

 private:
  RadialFnPtr nu_;
  double d_;
};

class SchwarzschildPotentialFn final : public RadialFn {
 public:
  SchwarzschildPotentialFn(double m, double r_lo)
      : profile_(std::make_shared<SchwarzschildArealFn>(m, r_lo)), m_(m) {}
  double value(double t) const override {
    double r = profile_->radius_at(t);
    return std::sqrt(1.0 - 2.0 * m_ / r);
  }
  double deriv(double t, int order) const override {
    double r = profile_->radius_at(t);
    double psi = std::sqrt(1.0 - 2.0 * m_ / r);
    switch (order) {
      case 1: return m_ / (r * r);
      case 2: return -2.0 * m_ * psi / (r * r * r);
      case 3: {
        double r4 = r * r * r * r;
        return 6.0 * m_ / r4 - 14.0 * m_ * m_ / (r4 * r);
      }
      case 4: {
        double r5 = r * r * r * r * r;
        return psi * (-24.0 * m_ / r5 + 70.0 * m_ * m_ / (r5 * r));
      }
      default: return 0.0;
    }
  }
  int max_exact_order() const override { return 4; }
  std::string id() const override { return "schwarzschild_potential(m=" + fmt(m_) + ")"; }

 private:
  std::shared_ptr<SchwarzschildArealFn> profile_;
  double m_;
};

class SampledFn final : public RadialFn {
 public:
  SampledFn(Interval domain, std::vector<double> values)
      : domain_(domain), v_(std::move(values)) {
    if (v_.size() < 4)
      fail(ErrorCode::invalid_argument, "sampled warping needs >= 4 samples");
    h_ = domain_.length() / static_cast<double>(v_.size() - 1);
  }
  // Local cubic through the 4 nearest samples: value O(h^4), f' and f''
  // O(h^2), matching the divided-difference contract.
  void local_cubic(double t, double out[4]) const {
    int n = static_cast<int>(v_.size());
    double x = (t - domain_.lo) / h_;
    int i = static_cast<int>(std::floor(x));
    i = std::clamp(i, 1, n - 3);
    double s = x - i;  // in [0,1] when interior
    double fm1 = v_[i - 1], f0 = v_[i], f1 = v_[i + 1], f2 = v_[i + 2];
    // Cubic in s through nodes at s = -1, 0, 1, 2.
    double a = f0;
    double b = (f1 - fm1) / 2.0;
    double c = (f1 - 2.0 * f0 + fm1) / 2.0;
    double d = (f2 - 3.0 * f1 + 3.0 * f0 - fm1) / 6.0;
    out[0] = a + b * s + c * s * s + d * s * s * s;
    out[1] = (b + 2.0 * c * s + 3.0 * d * s * s) / h_;
    out[2] = (2.0 * c + 6.0 * d * s) / (h_ * h_);
    out[3] = 6.0 * d / (h_ * h_ * h_);
  }
  double value(double t) const override {
    double o[4];
    local_cubic(t, o);
    return o[0];
  }
  double deriv(double t, int order) const override {
    if (order > 3)
      fail(ErrorCode::insufficient_smoothness,
           "sampled warping supports divided differences up to order 3");
    double o[4];
    local_cubic(t, o);
    return o[order];
  }
  int max_exact_order() const override { return 0; }
  std::string id() const override {
    return "sampled(n=" + std::to_string(v_.size()) + ")";
  }

 private:
  Interval domain_;
  std::vector<double> v_;
  double h_;
};

class HermiteFn final : public RadialFn {
 public:
  HermiteFn(std::vector<double> breaks, std::vector<double> values,
            std::vector<double> slopes)
      : x_(std::move(breaks)), f_(std::move(values)), m_(std::move(slopes)) {
    if (x_.size() < 2 || x_.size() != f_.size() || x_.size() != m_.size())
      fail(ErrorCode::invalid_argument, "hermite warping: bad breakpoint data");
    for (size_t i = 1; i < x_.size(); ++i)
      if (x_[i] <= x_[i - 1])
        fail(ErrorCode::invalid_argument, "hermite breakpoints not increasing");
  }
  double value(double t) const override { return eval(t, 0); }
  // Orders 3 and 4 are the interpolant's own (piecewise constant / zero);
  // callers needing genuine high-order data must supply ClosedForm warpings.
  double deriv(double t, int order) const override { return eval(t, order); }
  int max_exact_order() const override { return 0; }
  std::string id() const override {
    return "hermite(n=" + std::to_string(x_.size()) + ")";
  }

 private:
  double eval(double t, int order) const {
    size_t i =
        std::upper_bound(x_.begin(), x_.end(), t) - x_.begin();
    if (i == 0) i = 1;
    if (i >= x_.size()) i = x_.size() - 1;
    size_t k = i - 1;
    double h = x_[k + 1] - x_[k];
    double s = (t - x_[k]) / h;
    double f0 = f_[k], f1 = f_[k + 1], m0 = m_[k] * h, m1 = m_[k + 1] * h;
    // Hermite basis.
    double c0 = f0, c1 = m0, c2 = -3 * f0 + 3 * f1 - 2 * m0 - m1,
           c3 = 2 * f0 - 2 * f1 + m0 + m1;
    switch (order) {
      case 0: return c0 + s * (c1 + s * (c2 + s * c3));
      case 1: return (c1 + s * (2 * c2 + 3 * s * c3)) / h;
      case 2: return (2 * c2 + 6 * s * c3) / (h * h);
      case 3: return 6 * c3 / (h * h * h);
      default: return 0.0;
    }
  }
  std::vector<double> x_, f_, m_;
};

}  // namespace

WarpFn make_linear_warp(Interval domain, double c1, double c0) {
  return WarpFn(std::make_shared<LinearFn>(c1, c0), domain);
}
WarpFn make_const_warp(Interval domain, double c) {
  return WarpFn(std::make_shared<ConstFn>(c), domain);
}
WarpFn make_exp_warp(Interval domain, double c, double k, double t_ref) {
  return WarpFn(std::make_shared<ExpFn>(c, k, t_ref), domain);
}
WarpFn make_sin_warp(Interval domain, double delta) {
  return WarpFn(std::make_shared<SinFn>(delta), domain);
}
WarpFn make_sinh_warp(Interval domain, double k) {
  return WarpFn(std::make_shared<SinhFn>(k), domain);
}
WarpFn make_tan_half_warp(Interval domain, double c) {
  return WarpFn(std::make_shared<TanHalfFn>(c), domain);
}
WarpFn make_exp_neg_cos_warp(Interval domain, double c) {
  return WarpFn(std::make_shared<ExpNegCosFn>(c), domain);
}
WarpFn make_polynomial_warp(Interval domain, std::vector<double> coeffs,
                            double t0) {
  return WarpFn(std::make_shared<PolynomialFn>(std::move(coeffs), t0), domain);
}

WarpFn make_schwarzschild_areal_warp(double mass, double r_lo, double r_hi) {
  if (mass <= 0.0) fail(ErrorCode::invalid_argument, "mass must be positive");
  if (r_lo < 2.0 * mass)
    fail(ErrorCode::invalid_argument, "area-radius form starts at r >= 2m");
  double t_hi = schwarzschild_areal_arclength(mass, r_lo, r_hi);
  return WarpFn(std::make_shared<SchwarzschildArealFn>(mass, r_lo),
                {0.0, t_hi});
}
WarpFn make_schwarzschild_isotropic_warp(double mass, double r_lo,
                                         double r_hi) {
  if (mass <= 0.0) fail(ErrorCode::invalid_argument, "mass must be positive");
  if (r_lo <= 0.0) fail(ErrorCode::invalid_argument, "r_lo must be positive");
  double t_hi = schwarzschild_isotropic_arclength(mass, r_lo, r_hi);
  return WarpFn(std::make_shared<SchwarzschildIsoFn>(mass, r_lo),
                {0.0, t_hi});
}

WarpFn mirror_warp(const WarpFn& base, double center) {
  Interval d{2.0 * center - base.domain().hi, 2.0 * center - base.domain().lo};
  return WarpFn(std::make_shared<MirrorFn>(base.profile(), center), d,
                base.kind());
}
WarpFn shift_warp(const WarpFn& base, double offset) {
  Interval d{base.domain().lo + offset, base.domain().hi + offset};
  return WarpFn(std::make_shared<ShiftedFn>(base.profile(), offset), d,
                base.kind());
}
WarpFn scale_warp(const WarpFn& base, double lambda) {
  Interval d{base.domain().lo * lambda, base.domain().hi * lambda};
  return WarpFn(std::make_shared<ScaledFn>(base.profile(), lambda), d,
                base.kind());
}
WarpFn add_windowed_polynomial(const WarpFn& base, Interval support,
                               std::vector<double> coeffs, double t0) {
  auto bump = std::make_shared<PolynomialFn>(std::move(coeffs), t0);
  return WarpFn(
      std::make_shared<WindowedSumFn>(base.profile(), bump, support),
      base.domain(), base.kind());
}
WarpFn product_warp(const WarpFn& a, const RadialFnPtr& u, Interval domain) {
  return WarpFn(std::make_shared<ProductFn>(a.profile(), u), domain, a.kind());
}

std::vector<double> quintic_hermite_coeffs(double a, double b, const Jet2& L,
                                           const Jet2& R) {
  double h = b - a;
  double c0 = L.f, c1 = L.d1, c2 = 0.5 * L.d2;
  double r0 = R.f - (c0 + c1 * h + c2 * h * h);
  double r1 = R.d1 - (c1 + 2.0 * c2 * h);
  double r2 = R.d2 - 2.0 * c2;
  double h2 = h * h, h3 = h2 * h;
  // Solves the 3x3 system for c3, c4, c5 (closed form).
  double c3 = (10.0 * r0 - 4.0 * r1 * h + 0.5 * r2 * h2) / h3;
  double c4 = (-15.0 * r0 + 7.0 * r1 * h - r2 * h2) / (h3 * h);
  double c5 = (6.0 * r0 - 3.0 * r1 * h + 0.5 * r2 * h2) / (h3 * h2);
  return {c0, c1, c2, c3, c4, c5};
}

WarpFn make_sampled_warp(Interval domain, std::vector<double> values) {
  return WarpFn(std::make_shared<SampledFn>(domain, std::move(values)), domain,
                WarpKind::sampled);
}
WarpFn make_hermite_warp(std::vector<double> breaks, std::vector<double> values,
                         std::vector<double> slopes) {
  Interval d{breaks.front(), breaks.back()};
  return WarpFn(std::make_shared<HermiteFn>(std::move(breaks),
                                            std::move(values),
                                            std::move(slopes)),
                d, WarpKind::hermite);
}

double schwarzschild_areal_arclength(double mass, double r_lo, double r) {
  return areal_arclen(mass, r) - areal_arclen(mass, r_lo);
}
double schwarzschild_isotropic_arclength(double mass, double r_lo, double r) {
  return iso_arclen(mass, r) - iso_arclen(mass, r_lo);
}
double schwarzschild_areal_radius_at(double mass, double r_lo, double t) {
  return SchwarzschildArealFn(mass, r_lo).radius_at(t);
}
double schwarzschild_isotropic_radius_at(double mass, double r_lo, double t) {
  return SchwarzschildIsoFn(mass, r_lo).radius_at(t);
}

RadialFnPtr make_const_fn(double c) { return std::make_shared<ConstFn>(c); }
RadialFnPtr make_linear_fn(double c1, double c0) {
  return std::make_shared<LinearFn>(c1, c0);
}
RadialFnPtr make_inverse_fn(double c) {
  return std::make_shared<InverseArgFn>(c);
}
RadialFnPtr make_polynomial_fn(std::vector<double> coeffs, double t0) {
  return std::make_shared<PolynomialFn>(std::move(coeffs), t0);
}
RadialFnPtr make_schwarzschild_potential_fn(double mass, double r_lo) {
  return std::make_shared<SchwarzschildPotentialFn>(mass, r_lo);
}
RadialFnPtr make_affine_of_fn(const RadialFnPtr& nu, double scale,
                              double offset) {
  return std::make_shared<AffineOfFn>(nu, scale, offset);
}
RadialFnPtr make_sqrt_conformal_fn(const RadialFnPtr& nu, double delta) {
  return std::make_shared<SqrtConformalFn>(nu, delta);
}
RadialFnPtr make_product_fn(const RadialFnPtr& a, const RadialFnPtr& b) {
  return std::make_shared<ProductFn>(a, b);
}

namespace {
class SumFn final : public RadialFn {
 public:
  SumFn(RadialFnPtr a, RadialFnPtr b, double ca, double cb)
      : a_(std::move(a)), b_(std::move(b)), ca_(ca), cb_(cb) {}
  double value(double t) const override {
    return ca_ * a_->value(t) + cb_ * b_->value(t);
  }
  double deriv(double t, int order) const override {
    return ca_ * a_->deriv(t, order) + cb_ * b_->deriv(t, order);
  }
  int max_exact_order() const override {
    return std::min(a_->max_exact_order(), b_->max_exact_order());
  }
  std::string id() const override {
    return "sum(" + fmt(ca_) + "*" + a_->id() + "+" + fmt(cb_) + "*" +
           b_->id() + ")";
  }

 private:
  RadialFnPtr a_, b_;
  double ca_, cb_;
};
}  // namespace

RadialFnPtr make_sum_fn(const RadialFnPtr& a, const RadialFnPtr& b, double ca,
                        double cb) {
  return std::make_shared<SumFn>(a, b, ca, cb);
}

}  // namespace msl
