#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace shocklens {

/// Truncated Taylor series ("jet") of a function of one variable, used to
/// propagate exact derivatives through closed-form initial data.
///
/// Coefficient convention: c[k] = f^(k)(x0) / k!, so f(x0 + h) = sum c[k] h^k.
template <int N>
struct Jet {
  std::array<double, N + 1> c{};

  static Jet variable(double x0) {
    Jet j;
    j.c[0] = x0;
    if constexpr (N >= 1) j.c[1] = 1.0;
    return j;
  }
  static Jet constant(double v) {
    Jet j;
    j.c[0] = v;
    return j;
  }

  double value() const { return c[0]; }

  /// f^(k)(x0) = k! * c[k]
  double derivative(int k) const {
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    return c[k] * fact;
  }

  Jet operator-() const {
    Jet r;
    for (int k = 0; k <= N; ++k) r.c[k] = -c[k];
    return r;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k <= N; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k <= N; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k <= N; ++k) {
      double s = 0.0;
      for (int j = 0; j <= k; ++j) s += a.c[j] * b.c[k - j];
      r.c[k] = s;
    }
    return r;
  }
  friend Jet operator/(const Jet& a, const Jet& b) {
    Jet q;
    q.c[0] = a.c[0] / b.c[0];
    for (int k = 1; k <= N; ++k) {
      double s = a.c[k];
      for (int j = 1; j <= k; ++j) s -= b.c[j] * q.c[k - j];
      q.c[k] = s / b.c[0];
    }
    return q;
  }

  friend Jet operator+(const Jet& a, double s) { return a + constant(s); }
  friend Jet operator+(double s, const Jet& a) { return constant(s) + a; }
  friend Jet operator-(const Jet& a, double s) { return a - constant(s); }
  friend Jet operator-(double s, const Jet& a) { return constant(s) - a; }
  friend Jet operator*(const Jet& a, double s) {
    Jet r;
    for (int k = 0; k <= N; ++k) r.c[k] = a.c[k] * s;
    return r;
  }
  friend Jet operator*(double s, const Jet& a) { return a * s; }
  friend Jet operator/(const Jet& a, double s) { return a * (1.0 / s); }
  friend Jet operator/(double s, const Jet& a) { return constant(s) / a; }
};

/// exp of a jet via the recurrence e' = a' e.
template <int N>
Jet<N> exp(const Jet<N>& a) {
  Jet<N> e;
  e.c[0] = std::exp(a.c[0]);
  for (int k = 1; k <= N; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * a.c[j] * e.c[k - j];
    e.c[k] = s / k;
  }
  return e;
}

using Jet6 = Jet<6>;

}  // namespace shocklens
