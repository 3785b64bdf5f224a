#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "shocklens/datum.hpp"
#include "shocklens/errors.hpp"
#include "shocklens/field.hpp"
#include "shocklens/inviscid.hpp"
#include "shocklens/quadrature.hpp"

namespace shocklens {

/// Viscous Burgers solution by exact Cole-Hopf quadrature:
///   u_nu(t, x) = int (x-z)/(t-t0) W dz / int W dz,
///   W(z) = exp( -(x-z)^2 / (4 nu (t-t0)) - P(z) / (2 nu) ),
/// with P the primitive of the initial datum. The exponent has a unique
/// maximum at the characteristic foot point, which anchors the quadrature;
/// writing the numerator weight as (x - xi) - (z - xi) gives
///   u_nu = u0(xi) - m1 / (t - t0)
/// with m1 the first foot-centered moment. Pointwise and embarrassingly
/// parallel; no discretization error beyond the quadrature tolerance.
inline double reference_colehopf(const InitialDatum& d, double nu, double t,
                                 double x, double tol = 1e-10) {
  if (!(nu > 0.0)) throw InvalidInput("reference_colehopf: nu must be positive");
  if (nu < 1e-7)
    throw NuTooSmall("reference_colehopf: nu below the 1e-7 quadrature floor");
  if (!(t > d.t0()) || t > 0.0)
    throw InvalidInput("reference_colehopf: need t in (t0, 0]");
  const double s = t - d.t0();
  const double xi = characteristic_foot(d, t, x);
  auto E = [&](double z) {
    const double r = x - z;
    return -r * r / (4.0 * nu * s) - d.primitive(z) / (2.0 * nu);
  };
  const double L = std::log(1.0 / tol) + 40.0;
  ExpMoments em = exp_peak_moments(E, {xi}, {}, xi, L, tol, 1);
  return d.u0(xi) - (em.I[1] / em.I[0]) / s;
}

struct FvGrid {
  double half_width = 10.0;
  int cells = 1024;
};

/// Independent cross-check: conservative finite-volume scheme with a local
/// Lax-Friedrichs flux, centered diffusion and explicit Euler stepping;
/// Dirichlet far-field value c_far. Single-threaded per run.
inline FieldSample reference_fv(const InitialDatum& d, double nu, double t_end,
                                const FvGrid& grid, double cfl = 0.4) {
  if (!(nu > 0.0)) throw InvalidInput("reference_fv: nu must be positive");
  if (!(t_end > d.t0()) || t_end > 0.0)
    throw InvalidInput("reference_fv: need t_end in (t0, 0]");
  if (!(cfl > 0.0) || cfl > 0.4)
    throw UnstableParameters("reference_fv: cfl must lie in (0, 0.4]");
  const double needed = d.L_support() +
                        std::abs(d.c_far()) * (t_end - d.t0()) +
                        10.0 * std::sqrt(nu * std::abs(d.t0()));
  if (grid.half_width < needed)
    throw UnstableParameters("reference_fv: domain half-width below " +
                             std::to_string(needed));
  if (grid.cells < 16) throw InvalidInput("reference_fv: too few cells");

  const int n = grid.cells;
  const double dx = 2.0 * grid.half_width / n;
  std::vector<double> u(n), u1s(n), un(n), rhs(n);
  for (int i = 0; i < n; ++i)
    u[i] = d.u0(-grid.half_width + (i + 0.5) * dx);

  const double cbg = d.c_far();
  auto at = [&](const std::vector<double>& v, int i) {
    return (i < 0 || i >= n) ? cbg : v[i];
  };
  // MUSCL (MC-limited) reconstruction feeding the local Lax-Friedrichs flux,
  // centered diffusion on cell averages.
  auto spatial = [&](const std::vector<double>& v, std::vector<double>& out) {
    auto mc = [](double dm, double dp) {
      if (dm * dp <= 0.0) return 0.0;
      const double c = 0.5 * (dm + dp);
      const double b = 2.0 * (std::abs(dm) < std::abs(dp) ? dm : dp);
      return std::abs(c) < std::abs(b) ? c : b;
    };
    auto slope = [&](int i) {
      return mc(at(v, i) - at(v, i - 1), at(v, i + 1) - at(v, i));
    };
    auto f = [](double w) { return 0.5 * w * w; };
    double flux_prev = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double ul = at(v, i - 1) + 0.5 * slope(i - 1);
      const double ur = at(v, i) - 0.5 * slope(i);
      const double a = std::max(std::abs(ul), std::abs(ur));
      const double flux = 0.5 * (f(ul) + f(ur)) - 0.5 * a * (ur - ul);
      if (i > 0)
        out[i - 1] = -(flux - flux_prev) / dx +
                     nu * (at(v, i) - 2.0 * at(v, i - 1) + at(v, i - 2)) /
                         (dx * dx);
      flux_prev = flux;
    }
  };

  double t = d.t0();
  while (t < t_end - 1e-15) {
    double amax = std::abs(cbg);
    for (double v : u) amax = std::max(amax, std::abs(v));
    double dt = cfl * std::min(dx / std::max(amax, 1e-12),
                               dx * dx / (2.0 * nu));
    dt = std::min(dt, t_end - t);

    // Heun / SSP-RK2.
    spatial(u, rhs);
    for (int i = 0; i < n; ++i) u1s[i] = u[i] + dt * rhs[i];
    spatial(u1s, rhs);
    for (int i = 0; i < n; ++i)
      un[i] = 0.5 * (u[i] + u1s[i] + dt * rhs[i]);
    u.swap(un);
    t += dt;
  }

  FieldSample out;
  out.field = "u_nu_fv";
  out.nu = nu;
  out.t = {t_end};
  out.x.resize(n);
  for (int i = 0; i < n; ++i) out.x[i] = -grid.half_width + (i + 0.5) * dx;
  out.values = {u};
  out.validate();
  return out;
}

}  // namespace shocklens
