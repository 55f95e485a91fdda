#ifndef MSL_TAYLOR_HPP
#define MSL_TAYLOR_HPP

#include <array>
#include <cmath>

namespace msl {

// Truncated Taylor arithmetic to order 4 (normalized coefficients
// a_i = f^{(i)} / i!). Used to compose closed-form derivatives without
// hand-expanding Leibniz chains.
struct Taylor5 {
  std::array<double, 5> a{};

  static Taylor5 constant(double c) {
    Taylor5 t;
    t.a[0] = c;
    return t;
  }
  static Taylor5 from_derivs(const std::array<double, 5>& d) {
    Taylor5 t;
    double fact = 1.0;
    for (int i = 0; i < 5; ++i) {
      if (i > 0) fact *= i;
      t.a[i] = d[i] / fact;
    }
    return t;
  }
  double deriv(int k) const {
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    return a[k] * fact;
  }

  Taylor5 operator+(const Taylor5& o) const {
    Taylor5 r;
    for (int i = 0; i < 5; ++i) r.a[i] = a[i] + o.a[i];
    return r;
  }
  Taylor5 operator-(const Taylor5& o) const {
    Taylor5 r;
    for (int i = 0; i < 5; ++i) r.a[i] = a[i] - o.a[i];
    return r;
  }
  Taylor5 operator*(const Taylor5& o) const {
    Taylor5 r;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j + i < 5; ++j) r.a[i + j] += a[i] * o.a[j];
    return r;
  }
  Taylor5 operator*(double c) const {
    Taylor5 r;
    for (int i = 0; i < 5; ++i) r.a[i] = a[i] * c;
    return r;
  }
  Taylor5 operator+(double c) const {
    Taylor5 r = *this;
    r.a[0] += c;
    return r;
  }
};

inline Taylor5 inverse(const Taylor5& x) {
  Taylor5 r;
  r.a[0] = 1.0 / x.a[0];
  for (int i = 1; i < 5; ++i) {
    double s = 0.0;
    for (int j = 1; j <= i; ++j) s += x.a[j] * r.a[i - j];
    r.a[i] = -s / x.a[0];
  }
  return r;
}

inline Taylor5 sqrt(const Taylor5& x) {
  Taylor5 r;
  r.a[0] = std::sqrt(x.a[0]);
  for (int i = 1; i < 5; ++i) {
    double s = 0.0;
    for (int j = 1; j < i; ++j) s += r.a[j] * r.a[i - j];
    r.a[i] = (x.a[i] - s) / (2.0 * r.a[0]);
  }
  return r;
}

}  // namespace msl

#endif  // MSL_TAYLOR_HPP
