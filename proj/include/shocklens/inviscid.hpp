#pragma once

#include <cmath>

#include "shocklens/datum.hpp"
#include "shocklens/errors.hpp"
#include "shocklens/profile.hpp"
#include "shocklens/roots.hpp"

namespace shocklens {

/// Hodograph spatial inverse of the entropy solution:
/// omega(t, y) = omega_ring(y) + (t - t0) y on the window |y| < eps0.
inline double omega(const InitialDatum& d, double t, double y) {
  return d.inverse_on_window(y) + (t - d.t0()) * y;
}

/// Foot point of the characteristic through (t, x): the unique root of
/// xi + (t - t0) u0(xi) = x. Monotone for t < 0 since
/// 1 + (t - t0) u0'(xi) >= 1 + (t - t0)/t0 > 0.
inline double characteristic_foot(const InitialDatum& d, double t, double x) {
  const double s = t - d.t0();
  auto F = [&](double xi) { return xi + s * d.u0(xi) - x; };
  double a = x - d.c_far() * s, b = a;
  double fa = F(a), fb = fa;
  double step = 0.5 * (1.0 + std::abs(d.t0()));
  for (int it = 0; fa > 0.0 && it < 200; ++it, step *= 2.0) { a -= step; fa = F(a); }
  step = 0.5 * (1.0 + std::abs(d.t0()));
  for (int it = 0; fb < 0.0 && it < 200; ++it, step *= 2.0) { b += step; fb = F(b); }
  if (fa > 0.0 || fb < 0.0)
    throw CharacteristicsCrossed("foot-point bracket failed");
  return brent_root(F, a, b, fa, fb, 1e-15);
}

/// Entropy solution and its first two spatial derivatives along
/// characteristics: u = u0(xi), du/dx = u0'(xi)/J, d2u/dx2 = u0''(xi)/J^3
/// with J = 1 + (t - t0) u0'(xi).
struct InviscidPoint {
  double u = 0.0;
  double ux = 0.0;
  double uxx = 0.0;
  double xi = 0.0;  // foot point
  double J = 0.0;   // characteristic Jacobian
};

inline InviscidPoint entropy_point(const InitialDatum& d, double t, double x) {
  if (!(t < 0.0) || t < d.t0() - 1e-12)
    throw InvalidInput("entropy_point: need t in [t0, 0)");
  const double s = t - d.t0();
  InviscidPoint p;
  if (std::abs(x - d.c_far() * s) >= d.L_support() + 1e-9) {
    // Lemma-compact region: constant state, flat to the decay tolerance.
    p.xi = x - d.c_far() * s;
    p.u = d.c_far();
    p.J = 1.0 + s * d.du0(1, p.xi);
    p.ux = d.du0(1, p.xi) / p.J;
    p.uxx = d.du0(2, p.xi) / (p.J * p.J * p.J);
    return p;
  }
  p.xi = characteristic_foot(d, t, x);
  p.J = 1.0 + s * d.du0(1, p.xi);
  if (!(p.J > 0.0))
    throw CharacteristicsCrossed("non-monotone characteristic map (J <= 0)");
  p.u = d.u0(p.xi);
  p.ux = d.du0(1, p.xi) / p.J;
  p.uxx = d.du0(2, p.xi) / (p.J * p.J * p.J);
  return p;
}

/// u0(t, x) for t in [t0, 0).
inline double entropy_solution(const InitialDatum& d, double t, double x) {
  return entropy_point(d, t, x).u;
}

/// Leading homogeneous components of the entropy solution near the origin:
/// u_{0,0} = profile, u_{0,1} = beta4 u^4 m.
struct HomogComponents {
  double u00 = 0.0;
  double u01 = 0.0;
};

inline HomogComponents u0_homog_components(const ProfileParams& params, double t,
                                           double x) {
  const ProfilePoint p = eval_profile(params, t, x);
  return {p.u, params.beta4 * p.u * p.u * p.u * p.u * p.m};
}

/// max_x |du0/dx(t, .)|, located by scanning foot points and refining the
/// maximizer of |u0'(xi)| / J(xi).
inline double sup_slope(const InitialDatum& d, double t, int scan = 2001) {
  const double s = t - d.t0();
  const double R = d.L_support();
  auto slope_at = [&](double xi) {
    const double g = d.du0(1, xi);
    return -g / (1.0 + s * g);
  };
  double best = 0.0, best_xi = 0.0;
  for (int i = 0; i < scan; ++i) {
    const double xi = -R + 2.0 * R * i / (scan - 1);
    const double v = slope_at(xi);
    if (v > best) { best = v; best_xi = xi; }
  }
  // Golden-section refinement around the scan winner.
  double a = best_xi - 2.0 * R / (scan - 1), b = best_xi + 2.0 * R / (scan - 1);
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - gr * (b - a), e = a + gr * (b - a);
  double fc = slope_at(c), fe = slope_at(e);
  for (int it = 0; it < 90; ++it) {
    if (fc > fe) { b = e; e = c; fe = fc; c = b - gr * (b - a); fc = slope_at(c); }
    else { a = c; c = e; fc = fe; e = a + gr * (b - a); fe = slope_at(e); }
  }
  return std::max(best, std::max(fc, fe));
}

}  // namespace shocklens
