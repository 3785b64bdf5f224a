#pragma once

#include <algorithm>
#include <cmath>

#include "shocklens/datum.hpp"
#include "shocklens/errors.hpp"
#include "shocklens/inner.hpp"
#include "shocklens/outer.hpp"
#include "shocklens/profile.hpp"

namespace shocklens {

struct ApproxConfig {
  double nu = 1e-3;
  int K = 0;              // truncation order, 0|1
  double alpha = 0.2;     // cutoff exponent, scheme-optimal 1/5
  double eps_t = 1e-6;    // final-time guard
  double quad_tol = 1e-10;

  void validate() const {
    if (!(nu > 0.0)) throw InvalidInput("ApproxConfig: nu must be positive");
    if (K != 0 && K != 1) throw InvalidInput("ApproxConfig: K must be 0 or 1");
    if (!(alpha > 0.0 && alpha < 1.0))
      throw InvalidInput("ApproxConfig: alpha must lie in (0, 1)");
    if (!(eps_t > 0.0)) throw InvalidInput("ApproxConfig: eps_t must be positive");
  }
};

enum class Zone { Inner, Matching, Outer };

inline Zone classify_zone(const ApproxConfig& cfg, const ProfileParams& params,
                          double t, double x) {
  const double dist = eval_profile(params, t, x).d;
  const double da = std::pow(cfg.nu, cfg.alpha);
  if (dist < da) return Zone::Inner;
  if (dist > 2.0 * da) return Zone::Outer;
  return Zone::Matching;
}

/// The concrete C-infinity bump behind the cutoff: 1 on [0,1], 0 on [2,inf),
/// S(2-s)/(S(2-s)+S(s-1)) in between with S(r) = exp(-1/r). Fixed here so
/// outputs are reproducible bit-for-bit.
inline double bump_profile(double s) { return smooth_bump_scalar(s); }

/// theta(t, x) = bump( d(t,x) nu^-alpha ).
inline double cutoff_theta(const ApproxConfig& cfg, const ProfileParams& params,
                           double t, double x) {
  if (!(t < 0.0)) throw InvalidInput("cutoff_theta: need t < 0");
  const double dist = eval_profile(params, t, x).d;
  return bump_profile(dist * std::pow(cfg.nu, -cfg.alpha));
}

/// Matched approximate solution theta u_in_[K] + (1 - theta) u_out_[K].
/// The inner partial sum is the leading term for both K = 0 and K = 1
/// (higher inner terms are existence-theoretic); K = 1 adds the outer
/// corrector nu*u1 as an unbalanced refinement diagnostic.
inline double u_app(const ApproxConfig& cfg, const InitialDatum& d,
                    const ProfileParams& params, double t, double x) {
  cfg.validate();
  if (t < d.t0() - 1e-12 || t > -cfg.eps_t * (1.0 - 1e-9))
    throw InvalidInput("u_app: need t in [t0, -eps_t]");
  const double th = cutoff_theta(cfg, params, t, x);
  double v = 0.0;
  if (th < 1.0) v += (1.0 - th) * outer_sum(d, cfg.K, cfg.nu, t, x);
  if (th > 0.0)
    v += th * inner_term_physical(params, cfg.nu, t, x, cfg.quad_tol);
  return v;
}

/// Residual E = -dt u_app - u_app dx u_app + nu dxx u_app by fourth-order
/// central differences with zone-adapted steps (the natural length scale of
/// a slice is d^3, the time scale d^2).
inline double residual_E(const ApproxConfig& cfg, const InitialDatum& d,
                         const ProfileParams& params, double t, double x) {
  cfg.validate();
  const double dist = eval_profile(params, t, x).d;
  const double hx = std::max(1e-5, 1e-3 * dist * dist * dist);
  double ht = std::max(1e-5, 1e-3 * dist * dist);
  ht = std::min({ht, (t - d.t0()) / 2.5, (-cfg.eps_t - t) / 2.5});
  if (!(ht > 1e-9))
    throw InvalidInput("residual_E: t too close to the interval ends");
  auto ua = [&](double tt, double xx) { return u_app(cfg, d, params, tt, xx); };

  const double u0v = ua(t, x);
  const double um2 = ua(t, x - 2 * hx), um1 = ua(t, x - hx);
  const double up1 = ua(t, x + hx), up2 = ua(t, x + 2 * hx);
  const double ux = (-up2 + 8 * up1 - 8 * um1 + um2) / (12 * hx);
  const double uxx = (-up2 + 16 * up1 - 30 * u0v + 16 * um1 - um2) / (12 * hx * hx);
  const double vt = (-ua(t + 2 * ht, x) + 8 * ua(t + ht, x) -
                     8 * ua(t - ht, x) + ua(t - 2 * ht, x)) /
                    (12 * ht);
  return -vt - u0v * ux + cfg.nu * uxx;
}

}  // namespace shocklens
