#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "shocklens/errors.hpp"
#include "shocklens/roots.hpp"

namespace shocklens {

// Gauss-Kronrod 7-15 pair on [-1, 1] (QUADPACK nodes).
namespace gk {
inline constexpr std::array<double, 8> xk = {
    0.0,
    0.2077849550078985,
    0.4058451513773972,
    0.5860872354676911,
    0.7415311855993944,
    0.8648644233597691,
    0.9491079123427585,
    0.9914553711208126};
inline constexpr std::array<double, 8> wk = {
    0.2094821410847278,
    0.2044329400752989,
    0.1903505780647854,
    0.1690047266392679,
    0.1406532597155259,
    0.1047900103222502,
    0.0630920926299786,
    0.0229353220105292};
// Gauss-7 weights for the nodes xk[0], xk[2], xk[4], xk[6].
inline constexpr std::array<double, 4> wg = {
    0.4179591836734694,
    0.3818300505051189,
    0.2797053914892766,
    0.1294849661688697};
}  // namespace gk

struct ExpMoments {
  std::array<double, 4> I{};  // shifted moments: integral of (z-z0)^k exp(phi-M)
  double M = 0.0;             // exponent shift
  double err = 0.0;           // K15-G7 error estimate on I[0]
};

namespace detail {

template <class Phi>
void gk_panel_moments(Phi&& phi, double a, double b, double M, double z0,
                      int max_moment, std::array<double, 4>& k15,
                      std::array<double, 4>& g7) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < 8; ++i) {
    for (int sgn = (i == 0 ? 1 : -1); sgn <= 1; sgn += 2) {
      const double z = mid + sgn * half * gk::xk[i];
      const double w = std::exp(phi(z) - M);
      double zp = 1.0;
      for (int k = 0; k <= max_moment; ++k) {
        k15[k] += half * gk::wk[i] * w * zp;
        if (i % 2 == 0) g7[k] += half * gk::wg[i / 2] * w * zp;
        zp *= (z - z0);
      }
      if (i == 0) break;
    }
  }
}

/// Walk outward from z in direction dir until phi drops below the cut,
/// then locate the crossing. phi must tend to -inf in that direction.
template <class Phi>
double expand_to_cut(Phi&& phi, double z, double dir, double cut) {
  double step = 1e-3 * (1.0 + std::abs(z));
  double prev = z;
  for (int it = 0; it < 200; ++it) {
    const double cand = z + dir * step;
    if (phi(cand) <= cut)
      return brent_root([&](double s) { return phi(s) - cut; }, prev, cand,
                        1e-10 * (1.0 + std::abs(cand)));
    prev = cand;
    step *= 2.0;
  }
  throw ToleranceNotMet("integrand does not decay in search direction");
}

}  // namespace detail

/// Moments of a peaked exponential: integral of (z-z0)^k exp(phi(z)) dz over
/// the region where phi is within L of its maximum, computed with the
/// exponent shifted by M = max phi. `maxima`/`minima` are the interior local
/// extrema of phi (sorted); phi must decay to -inf at both ends.
///
/// Panels are placed deterministically from the superlevel-set geometry, so
/// the result varies smoothly with parameters; the K15-G7 estimate triggers
/// uniform refinement only if the fixed rule misses `rel_tol`.
template <class Phi>
ExpMoments exp_peak_moments(Phi&& phi, const std::vector<double>& maxima,
                            const std::vector<double>& minima, double z0,
                            double L, double rel_tol, int max_moment = 3,
                            int panels = 48) {
  if (maxima.empty()) throw InvalidInput("exp_peak_moments: no maxima");
  ExpMoments out;
  double M = -std::numeric_limits<double>::infinity();
  for (double z : maxima) M = std::max(M, phi(z));
  out.M = M;
  const double cut = M - L;

  // A peak whose height is below the cut contributes < e^-L of the total;
  // drop it so the panel budget resolves the live lobes.
  std::vector<double> live;
  for (double z : maxima)
    if (phi(z) > cut) live.push_back(z);

  // Superlevel segments: expand outward from the outer live maxima; split at
  // an interior minimum that dips below the cut.
  std::vector<std::pair<double, double>> segs;
  const double lo = detail::expand_to_cut(phi, live.front(), -1.0, cut);
  const double hi = detail::expand_to_cut(phi, live.back(), +1.0, cut);
  double zm = 0.0;
  bool split = false;
  if (live.size() >= 2) {
    for (double z : minima)
      if (z > live.front() && z < live.back() && phi(z) <= cut - 5.0) {
        zm = z;
        split = true;
        break;
      }
  }
  if (split) {
    const double a = brent_root([&](double s) { return phi(s) - cut; },
                                live.front(), zm, 1e-12 * (1.0 + std::abs(zm)));
    const double b = brent_root([&](double s) { return phi(s) - cut; }, zm,
                                live.back(), 1e-12 * (1.0 + std::abs(zm)));
    segs.push_back({lo, a});
    segs.push_back({b, hi});
  } else {
    segs.push_back({lo, hi});
  }

  for (int refine = 0;; ++refine) {
    std::array<double, 4> k15{}, g7{};
    for (const auto& [a, b] : segs) {
      const double dz = (b - a) / panels;
      for (int p = 0; p < panels; ++p)
        detail::gk_panel_moments(phi, a + p * dz, a + (p + 1) * dz, M, z0,
                                 max_moment, k15, g7);
    }
    out.err = std::abs(k15[0] - g7[0]);
    if (out.err <= rel_tol * std::abs(k15[0]) || refine >= 4) {
      out.I = k15;
      if (refine >= 4 && out.err > rel_tol * std::abs(k15[0]))
        throw ToleranceNotMet("exp_peak_moments: refinement stalled");
      return out;
    }
    panels *= 2;
  }
}

}  // namespace shocklens
