#include <cmath>

#include "doctest.h"
#include "msl/fitting.hpp"
#include "msl/quadrature.hpp"
#include "msl/rootfind.hpp"

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("adaptive quadrature on smooth integrands") {
  auto r = msl::integrate([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 1.0 / 3.0) < 1e-13);

  auto s = msl::integrate([](double x) { return std::sin(x); }, 0.0, kPi);
  CHECK(std::abs(s.value - 2.0) < 1e-12);
}

TEST_CASE("quadrature error estimate is honest under tolerance halving") {
  auto f = [](double x) { return std::exp(-x) * std::cos(7.0 * x); };
  msl::QuadOptions loose;
  loose.rel_tol = 1e-8;
  msl::QuadOptions tight;
  tight.rel_tol = 5e-9;
  auto a = msl::integrate(f, 0.0, 10.0, loose);
  auto b = msl::integrate(f, 0.0, 10.0, tight);
  CHECK(std::abs(a.value - b.value) <= a.error + b.error);
}

TEST_CASE("quadrature to infinity via the rational transform") {
  auto r = msl::integrate_to_infinity([](double t) { return std::exp(-2.0 * t); },
                                      0.0);
  CHECK(std::abs(r.value - 0.5) < 1e-12);

  // Shifted start.
  auto r2 = msl::integrate_to_infinity(
      [](double t) { return std::exp(-2.0 * t); }, 3.0);
  CHECK(std::abs(r2.value - 0.5 * std::exp(-6.0)) < 1e-14);
}

TEST_CASE("bracketed newton") {
  auto f = [](double x) { return x * x - 2.0; };
  auto df = [](double x) { return 2.0 * x; };
  auto res = msl::newton_bracketed(f, df, 0.0, 2.0);
  CHECK(res.converged);
  CHECK(std::abs(res.x - std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("2x2 newton solves a transcendental pair") {
  auto f = [](const std::array<double, 2>& x) -> std::array<double, 2> {
    return {std::sin(x[0] * x[1]) - 0.5, x[0] - 2.0 * x[1]};
  };
  auto jac = [](const std::array<double, 2>& x)
      -> std::array<std::array<double, 2>, 2> {
    double c = std::cos(x[0] * x[1]);
    return {{{x[1] * c, x[0] * c}, {1.0, -2.0}}};
  };
  auto res = msl::newton_2x2(f, jac, {1.0, 0.5});
  CHECK(res.converged);
  CHECK(std::abs(std::sin(res.x[0] * res.x[1]) - 0.5) < 1e-12);
  CHECK(std::abs(res.x[0] - 2.0 * res.x[1]) < 1e-12);
}

TEST_CASE("least squares and log-log slope") {
  std::vector<double> xs, ys;
  for (int i = 1; i <= 30; ++i) {
    double x = 0.1 * i;
    xs.push_back(x);
    ys.push_back(3.0 * x - 1.0);
  }
  auto fit = msl::fit_line(xs, ys);
  CHECK(std::abs(fit.slope - 3.0) < 1e-12);
  CHECK(std::abs(fit.intercept + 1.0) < 1e-12);

  std::vector<double> rs, ps;
  for (int i = 0; i < 20; ++i) {
    double r = std::pow(10.0, 1.0 + 0.1 * i);
    rs.push_back(r);
    ps.push_back(7.5 * std::pow(r, -2.5));
  }
  auto lf = msl::loglog_slope(rs, ps);
  CHECK(std::abs(lf.slope + 2.5) < 1e-12);
}
