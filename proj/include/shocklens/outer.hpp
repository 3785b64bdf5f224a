#pragma once

#include <cmath>

#include "shocklens/datum.hpp"
#include "shocklens/inviscid.hpp"
#include "shocklens/profile.hpp"

namespace shocklens {

/// First viscous corrector, solving
///   dt u1 = -dx(u0 u1) + dxx u0,  u1(t0, .) = 0.
///
/// Along the characteristic with foot xi the corrector integrates exactly to
///   u1(t, x) = u0''(xi) (t - t0) / J^2,   J = 1 + (t - t0) u0'(xi),
/// which is the characteristic transport of the initial-data functional
/// u0''/u0'^2 corrected by the particular solution -dxx u0 / dx u0. The form
/// above needs no division by u0', so it covers flat far-field points too.
inline double u1_exact(const InitialDatum& d, double t, double x) {
  const double s = t - d.t0();
  if (s == 0.0) return 0.0;
  const double cs = d.c_far() * s;
  if (std::abs(x - cs) >= d.L_support() + 1e-9) return 0.0;
  const double xi = characteristic_foot(d, t, x);
  const double J = 1.0 + s * d.du0(1, xi);
  if (!(J > 0.0)) throw CharacteristicsCrossed("u1_exact: J <= 0");
  return d.du0(2, xi) * s / (J * J);
}

/// Leading homogeneous term of the first corrector near the origin:
/// u_{1,0} = -6 beta3 u m^2 (degree -3).
inline double u10_closed_form(const ProfileParams& params, double t, double x) {
  const ProfilePoint p = eval_profile(params, t, x);
  return -6.0 * params.beta3 * p.u * p.m * p.m;
}

/// Weighted outer partial sum u0 + [K >= 1] nu u1, K in {0, 1}.
inline double outer_sum(const InitialDatum& d, int K, double nu, double t,
                        double x) {
  if (K != 0 && K != 1) throw UnsupportedOrder("outer_sum: K must be 0 or 1");
  if (!(nu >= 0.0)) throw InvalidInput("outer_sum: nu must be nonnegative");
  double v = entropy_solution(d, t, x);
  if (K == 1 && nu > 0.0) v += nu * u1_exact(d, t, x);
  return v;
}

}  // namespace shocklens
