#ifndef MSL_WARP_FN_HPP
#define MSL_WARP_FN_HPP

#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "msl/error.hpp"
#include "msl/interval.hpp"

namespace msl {

// A 1D radial profile. Closed-form entries expose exact derivatives up to
// max_exact_order(); sampled/interpolated entries report order 0 and fall
// back to divided differences.
class RadialFn {
 public:
  virtual ~RadialFn() = default;
  virtual double value(double t) const = 0;
  virtual double deriv(double t, int order) const = 0;
  virtual int max_exact_order() const = 0;
  virtual std::string id() const = 0;
};

using RadialFnPtr = std::shared_ptr<const RadialFn>;

enum class WarpKind { closed_form, sampled, hermite };

struct Jet2 {
  double f = 0.0, d1 = 0.0, d2 = 0.0;
};
struct Jet4 {
  double f = 0.0, d1 = 0.0, d2 = 0.0, d3 = 0.0, d4 = 0.0;
};

// A warping function: profile + the interval it is used on.
class WarpFn {
 public:
  WarpFn() = default;
  WarpFn(RadialFnPtr fn, Interval domain, WarpKind kind = WarpKind::closed_form)
      : fn_(std::move(fn)), domain_(domain), kind_(kind) {}

  double operator()(double t) const { return fn_->value(t); }
  double value(double t) const { return fn_->value(t); }
  double deriv(double t, int order) const {
    return order == 0 ? fn_->value(t) : fn_->deriv(t, order);
  }
  Jet2 jet2(double t) const {
    return {fn_->value(t), fn_->deriv(t, 1), fn_->deriv(t, 2)};
  }
  Jet4 jet4(double t) const {
    return {fn_->value(t), fn_->deriv(t, 1), fn_->deriv(t, 2),
            fn_->deriv(t, 3), fn_->deriv(t, 4)};
  }

  const Interval& domain() const { return domain_; }
  WarpKind kind() const { return kind_; }
  int max_exact_order() const { return fn_->max_exact_order(); }
  const RadialFnPtr& profile() const { return fn_; }
  std::string id() const { return fn_ ? fn_->id() : "<null>"; }

  WarpFn with_domain(Interval d) const { return WarpFn(fn_, d, kind_); }

 private:
  RadialFnPtr fn_;
  Interval domain_{};
  WarpKind kind_ = WarpKind::closed_form;
};

// ---- closed-form catalog ----

// c0 + c1*t
WarpFn make_linear_warp(Interval domain, double c1, double c0 = 0.0);
// constant c
WarpFn make_const_warp(Interval domain, double c);
// c * exp(k * (t - t_ref))
WarpFn make_exp_warp(Interval domain, double c, double k, double t_ref = 0.0);
// sin(delta * t) / delta
WarpFn make_sin_warp(Interval domain, double delta);
// sinh(k * t) / k
WarpFn make_sinh_warp(Interval domain, double k);
// c * tan(t / 2)
WarpFn make_tan_half_warp(Interval domain, double c);
// c * exp(-cos(t))
WarpFn make_exp_neg_cos_warp(Interval domain, double c);
// polynomial sum a_i (t - t0)^i
WarpFn make_polynomial_warp(Interval domain, std::vector<double> coeffs,
                            double t0);

// Schwarzschild profiles in arclength t (t = 0 at the inner domain edge).
// Area-radius form: f(t) = r(t) with dr/dt = sqrt(1 - 2m/r), r(0) = r_lo.
WarpFn make_schwarzschild_areal_warp(double mass, double r_lo, double r_hi);
// Conformally flat form: f(t) = r sqrt(1 + 2m/r) with dr/dt = 1/sqrt(1+2m/r).
WarpFn make_schwarzschild_isotropic_warp(double mass, double r_lo, double r_hi);

// ---- combinators ----

// f(2c - t): mirror about t = c.
WarpFn mirror_warp(const WarpFn& base, double center);
// f(t - offset): translate the profile by offset.
WarpFn shift_warp(const WarpFn& base, double offset);
// lambda * f(t / lambda): the warping of the rescaled metric lambda^2 g.
WarpFn scale_warp(const WarpFn& base, double lambda);
// base + bump, where the bump is a polynomial supported on [x0, x1] and
// identically zero outside.
WarpFn add_windowed_polynomial(const WarpFn& base, Interval support,
                               std::vector<double> coeffs, double t0);
// u * f pointwise (u a radial profile); derivatives by Leibniz.
WarpFn product_warp(const WarpFn& a, const RadialFnPtr& u, Interval domain);

// Quintic Hermite on [a, b] matching value and two derivatives at both ends.
std::vector<double> quintic_hermite_coeffs(double a, double b, const Jet2& left,
                                           const Jet2& right);

// ---- sampled / hermite kinds ----

// Uniform samples; derivatives by centered O(h^2) differences.
WarpFn make_sampled_warp(Interval domain, std::vector<double> values);
// Piecewise-cubic Hermite from breakpoints, values, first derivatives.
WarpFn make_hermite_warp(std::vector<double> breaks, std::vector<double> values,
                         std::vector<double> slopes);

// Utilities used by model metrics: map between area/isotropic radius and
// arclength for the Schwarzschild profiles.
double schwarzschild_areal_arclength(double mass, double r_lo, double r);
double schwarzschild_isotropic_arclength(double mass, double r_lo, double r);
double schwarzschild_areal_radius_at(double mass, double r_lo, double t);
double schwarzschild_isotropic_radius_at(double mass, double r_lo, double t);

// Radial scalar fields (potentials u, tau, nu) reuse RadialFn.
RadialFnPtr make_const_fn(double c);
RadialFnPtr make_linear_fn(double c1, double c0 = 0.0);
RadialFnPtr make_inverse_fn(double c);        // c / t
RadialFnPtr make_polynomial_fn(std::vector<double> coeffs, double t0);
// u(t) = sqrt(1 - 2m/r(t)) along the area-radius Schwarzschild profile.
RadialFnPtr make_schwarzschild_potential_fn(double mass, double r_lo);
// u(t) = 1 + delta * nu(t)
RadialFnPtr make_affine_of_fn(const RadialFnPtr& nu, double scale,
                              double offset);
// u(t) = sqrt(1 + 2 * delta * nu(t))
RadialFnPtr make_sqrt_conformal_fn(const RadialFnPtr& nu, double delta);
// pointwise product a*b
RadialFnPtr make_product_fn(const RadialFnPtr& a, const RadialFnPtr& b);
// ca * a + cb * b
RadialFnPtr make_sum_fn(const RadialFnPtr& a, const RadialFnPtr& b, double ca,
                        double cb);

}  // namespace msl

#endif  // MSL_WARP_FN_HPP
