#pragma once

#include <cmath>
#include <vector>

#include "shocklens/errors.hpp"
#include "shocklens/roots.hpp"

namespace shocklens {

/// Shape constants of the self-similar cubic profile. beta3 > 0 is required;
/// beta4 feeds the first homogeneous correction of the inviscid solution.
struct ProfileParams {
  double beta3 = 1.0;
  double beta4 = 0.0;

  ProfileParams() = default;
  ProfileParams(double b3, double b4 = 0.0) : beta3(b3), beta4(b4) {
    if (!(beta3 > 0.0) || !std::isfinite(beta3))
      throw InvalidInput("ProfileParams: beta3 must be positive");
  }
};

/// The profile u solves t*u - beta3*u^3 = x. Its slope magnitude is
/// m = (|t| + 3 beta3 u^2)^(-1) and d = m^(-1/2) is the adapted distance
/// to the spacetime origin.
struct ProfilePoint {
  double t = 0.0;
  double x = 0.0;
  double u = 0.0;
  double m = 0.0;
  double d = 0.0;
};

/// Unique real root of t*u - beta3*u^3 = x for t <= 0, with companions m, d.
inline ProfilePoint eval_profile(const ProfileParams& params, double t, double x) {
  if (!std::isfinite(t) || !std::isfinite(x))
    throw InvalidInput("eval_profile: non-finite input");
  if (t > 0.0)
    throw InvalidInput("eval_profile: t > 0 lies in the three-root regime");
  ProfilePoint p;
  p.t = t;
  p.x = x;
  if (std::abs(t) + std::abs(x) < 1e-300) {
    p.u = 0.0;
  } else {
    // beta3 u^3 - t u + x = 0, i.e. u^3 + (-t/beta3) u + x/beta3 = 0.
    p.u = monotone_depressed_cubic_root(-t / params.beta3, x / params.beta3);
  }
  p.m = 1.0 / (std::abs(t) + 3.0 * params.beta3 * p.u * p.u);
  p.d = 1.0 / std::sqrt(p.m);
  return p;
}

namespace detail {

// Monomial c * u^a * m^b; the algebra of such terms is closed under the
// profile derivative identities
//   du/dx = -m, du/dt = u m, dm/dx = 6 b3 u m^3, dm/dt = m^2 (1 - 6 b3 u^2 m).
struct ProfileMonomial {
  double c;
  int a;
  int b;
};

using ProfilePoly = std::vector<ProfileMonomial>;

inline void add_term(ProfilePoly& p, double c, int a, int b) {
  for (auto& t : p) {
    if (t.a == a && t.b == b) {
      t.c += c;
      return;
    }
  }
  p.push_back({c, a, b});
}

inline ProfilePoly ddx(const ProfilePoly& p, double beta3) {
  ProfilePoly r;
  for (const auto& t : p) {
    if (t.a != 0) add_term(r, -t.c * t.a, t.a - 1, t.b + 1);
    if (t.b != 0) add_term(r, 6.0 * beta3 * t.c * t.b, t.a + 1, t.b + 2);
  }
  return r;
}

inline ProfilePoly ddt(const ProfilePoly& p, double beta3) {
  ProfilePoly r;
  for (const auto& t : p) {
    if (t.a + t.b != 0) add_term(r, t.c * (t.a + t.b), t.a, t.b + 1);
    if (t.b != 0) add_term(r, -6.0 * beta3 * t.c * t.b, t.a + 2, t.b + 2);
  }
  return r;
}

inline double eval_poly(const ProfilePoly& p, const ProfilePoint& pt) {
  double s = 0.0;
  for (const auto& t : p)
    s += t.c * std::pow(pt.u, t.a) * std::pow(pt.m, t.b);
  return s;
}

}  // namespace detail

/// d^j/dt^j d^i/dx^i of the profile, for i <= 3, j <= 1, assembled from the
/// closed chain-rule identities on monomials in (u, m).
inline double profile_derivatives(const ProfileParams& params,
                                  const ProfilePoint& p, int i, int j) {
  if (i < 0 || i > 3 || j < 0 || j > 1)
    throw UnsupportedOrder("profile_derivatives: need 0 <= i <= 3, 0 <= j <= 1");
  detail::ProfilePoly poly = {{1.0, 1, 0}};  // u itself
  for (int k = 0; k < i; ++k) poly = detail::ddx(poly, params.beta3);
  for (int k = 0; k < j; ++k) poly = detail::ddt(poly, params.beta3);
  return detail::eval_poly(poly, p);
}

/// Homogeneous envelope e(a,b) = |u|^a m^b for a >= 0, else m^(b + |a|/2).
inline double envelope(int a, int b, const ProfilePoint& p) {
  if (b < 0) throw InvalidInput("envelope: b must be nonnegative");
  if (a >= 0) return std::pow(std::abs(p.u), a) * std::pow(p.m, b);
  return std::pow(p.m, b + 0.5 * std::abs(a));
}

}  // namespace shocklens
