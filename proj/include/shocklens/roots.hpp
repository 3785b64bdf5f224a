#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "shocklens/errors.hpp"

namespace shocklens {

/// Unique real root of u^3 + p*u + q = 0 with p >= 0 (monotone case).
/// Cardano on the cancellation-free branch, then one Newton polish.
inline double monotone_depressed_cubic_root(double p, double q) {
  if (q == 0.0) return 0.0;
  const double s = std::sqrt(0.25 * q * q + p * p * p / 27.0);
  // -q/2 and -sign(q)*s share a sign, so w avoids catastrophic cancellation.
  const double w = std::cbrt(-0.5 * q - std::copysign(s, q));
  double u = (w == 0.0) ? 0.0 : w - p / (3.0 * w);
  const double fp = 3.0 * u * u + p;
  if (fp > 0.0) u -= (u * (u * u + p) + q) / fp;
  return u;
}

/// All real roots of c3 x^3 + c2 x^2 + c1 x + c0 = 0, ascending.
/// Trigonometric method for three real roots, stable Cardano otherwise.
inline std::vector<double> real_cubic_roots(double c3, double c2, double c1, double c0) {
  std::vector<double> roots;
  if (c3 == 0.0) {
    if (c2 != 0.0) {
      const double disc = c1 * c1 - 4.0 * c2 * c0;
      if (disc >= 0.0) {
        const double r = std::sqrt(disc);
        roots.push_back((-c1 - r) / (2.0 * c2));
        roots.push_back((-c1 + r) / (2.0 * c2));
      }
    } else if (c1 != 0.0) {
      roots.push_back(-c0 / c1);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  const double a = c2 / c3, b = c1 / c3, c = c0 / c3;
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const double shift = -a / 3.0;
  const double disc = 0.25 * q * q + p * p * p / 27.0;
  if (disc > 0.0) {
    const double s = std::sqrt(disc);
    const double w = std::cbrt(-0.5 * q - std::copysign(s, q));
    const double t = (w == 0.0) ? 0.0 : w - p / (3.0 * w);
    roots.push_back(t + shift);
  } else if (p == 0.0) {
    roots.push_back(shift);
  } else {
    const double r = std::sqrt(-p / 3.0);
    double cosarg = 1.5 * q / (p * r);
    cosarg = std::clamp(cosarg, -1.0, 1.0);
    const double phi = std::acos(cosarg) / 3.0;
    for (int k = 0; k < 3; ++k)
      roots.push_back(2.0 * r * std::cos(phi - 2.0 * M_PI * k / 3.0) + shift);
  }
  // Newton polish in the original coefficients.
  for (double& x : roots) {
    for (int it = 0; it < 2; ++it) {
      const double f = ((c3 * x + c2) * x + c1) * x + c0;
      const double fp = (3.0 * c3 * x + 2.0 * c2) * x + c1;
      if (fp != 0.0) x -= f / fp;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Brent-style bracketed root finder. Requires f(a) and f(b) of opposite sign.
template <class F>
double brent_root(F&& f, double a, double b, double fa, double fb,
                  double xtol = 0.0, int max_iter = 200) {
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) throw InvalidInput("brent_root: no sign change");
  double c = a, fc = fa, d = b - a, e = d;
  for (int it = 0; it < max_iter; ++it) {
    if ((fb > 0.0) == (fc > 0.0)) { c = a; fc = fa; d = e = b - a; }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * xtol;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) return b;
    if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
      d = e = m;
    } else {
      double s = fb / fa, P, Q;
      if (a == c) {
        P = 2.0 * m * s;
        Q = 1.0 - s;
      } else {
        const double q = fa / fc, r = fb / fc;
        P = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0));
        Q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (P > 0.0) Q = -Q;
      P = std::abs(P);
      if (2.0 * P < std::min(3.0 * m * Q - std::abs(tol * Q), std::abs(e * Q))) {
        e = d; d = P / Q;
      } else {
        d = e = m;
      }
    }
    a = b; fa = fb;
    b += (std::abs(d) > tol) ? d : std::copysign(tol, m);
    fb = f(b);
  }
  return b;
}

template <class F>
double brent_root(F&& f, double a, double b, double xtol = 0.0, int max_iter = 200) {
  return brent_root(f, a, b, f(a), f(b), xtol, max_iter);
}

}  // namespace shocklens
