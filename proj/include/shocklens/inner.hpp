#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "shocklens/errors.hpp"
#include "shocklens/profile.hpp"
#include "shocklens/quadrature.hpp"
#include "shocklens/roots.hpp"

namespace shocklens {

/// Integrand family phi_k(z) = z^k exp(X z/2 + T z^2/4 - beta3 z^4/8).
/// Absolutely integrable for all real (T, X) thanks to the quartic decay.
struct QuarticLaplaceIntegrand {
  double T = 0.0;
  double X = 0.0;
  double beta3 = 1.0;
  int moment = 0;  // power of z in the numerator, 0|1|2
};

namespace detail {

struct QuarticMoments {
  std::array<double, 4> m{};  // centered moments m_k = I_k / I_0 about z0
  double I0 = 0.0;            // shifted zeroth moment
  double M = 0.0;             // exponent shift
  double z0 = 0.0;            // centering point (dominant peak)
};

/// Centered moments of exp(X z/2 + T z^2/4 - b3 z^4/8) about its dominant
/// peak. Critical points solve b3 z^3 - T z - X = 0; the outer roots are
/// maxima of the exponent, the middle one (when present) a minimum.
inline QuarticMoments quartic_moments(double beta3, double T, double X,
                                      double tol, bool center_on_peak = true) {
  if (!(tol >= 1e-14 && tol <= 1e-6))
    throw InvalidInput("quartic quadrature: tol must lie in [1e-14, 1e-6]");
  auto phi = [=](double z) {
    const double z2 = z * z;
    return 0.5 * X * z + 0.25 * T * z2 - 0.125 * beta3 * z2 * z2;
  };
  std::vector<double> crit = real_cubic_roots(beta3, 0.0, -T, -X);
  std::vector<double> maxima, minima;
  if (crit.size() >= 3) {
    maxima = {crit.front(), crit.back()};
    minima = {crit[1]};
  } else {
    maxima = {crit.empty() ? 0.0 : crit.front()};
  }
  double z0 = 0.0;
  if (center_on_peak) {
    double best = -std::numeric_limits<double>::infinity();
    for (double z : maxima)
      if (phi(z) > best) { best = phi(z); z0 = z; }
  }
  const double L = std::log(1.0 / tol) + 40.0;
  ExpMoments em = exp_peak_moments(phi, maxima, minima, z0, L, tol);
  QuarticMoments out;
  out.I0 = em.I[0];
  out.M = em.M;
  out.z0 = z0;
  for (int k = 0; k < 4; ++k) out.m[k] = em.I[k] / em.I[0];
  return out;
}

}  // namespace detail

/// Plain value of the quartic Laplace integral (exponent not factored out).
/// Throws ToleranceNotMet in the overflow regime where exp(max phi) cannot
/// be represented; use U0 (a ratio, shift-invariant) in that regime.
inline double quartic_laplace(const QuarticLaplaceIntegrand& q, double tol) {
  if (q.moment < 0 || q.moment > 2)
    throw InvalidInput("quartic_laplace: moment must be 0, 1 or 2");
  auto mom = detail::quartic_moments(q.beta3, q.T, q.X, tol,
                                     /*center_on_peak=*/false);
  const double log_val = mom.M + std::log(mom.I0);
  if (log_val > 700.0)
    throw ToleranceNotMet("quartic_laplace: exponent overflow; rescale inputs");
  return std::exp(mom.M) * mom.I0 * mom.m[q.moment];
}

/// Leading inner solution and its derivatives, from moment identities of the
/// Cole-Hopf representation U0 = -I1/I0:
///   dX I_k = I_{k+1}/2,  dT I_k = I_{k+2}/4.
/// Computed from peak-centered moments so the variance-like combinations
/// carry no large-term cancellation.
struct InnerPoint {
  double u = 0.0;
  double uX = 0.0;
  double uT = 0.0;
  double uXX = 0.0;
};

inline InnerPoint U0_point(const ProfileParams& params, double T, double X,
                           double tol = 1e-11) {
  auto mm = detail::quartic_moments(params.beta3, T, X, tol);
  const double m1 = mm.m[1], m2 = mm.m[2], m3 = mm.m[3];
  InnerPoint p;
  p.u = -(mm.z0 + m1);
  const double var = m2 - m1 * m1;
  p.uX = -0.5 * var;
  p.uT = -0.25 * (m3 - m1 * m2 + 2.0 * mm.z0 * var);
  p.uXX = p.uT + p.u * p.uX;  // Burgers holds exactly in moment form
  return p;
}

/// U0(T, X), valid on all of R^2 (T >= 0 included).
inline double U0(const ProfileParams& params, double T, double X,
                 double tol = 1e-11) {
  return U0_point(params, T, X, tol).u;
}

/// Physical-coordinate leading inner term
/// u_in0(t, x) = nu^(1/4) U0(nu^(-1/2) t, nu^(-3/4) x).
inline double inner_term_physical(const ProfileParams& params, double nu,
                                  double t, double x, double tol = 1e-11) {
  if (!(nu > 0.0)) throw InvalidInput("inner_term_physical: nu must be positive");
  const double q = std::pow(nu, 0.25);
  return q * U0(params, t / (q * q), x / (q * q * q), tol);
}

}  // namespace shocklens
