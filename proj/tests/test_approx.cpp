#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "shocklens/approx.hpp"
#include "shocklens/inviscid.hpp"

using namespace shocklens;

namespace {

// A point on the d-shell with |t| = frac * d^2 (x >= 0 branch).
struct ShellPoint {
  double t, x;
};
ShellPoint shell_point(const ProfileParams& P, double dist, double frac) {
  const double t = -frac * dist * dist;
  const double u = std::sqrt((dist * dist - std::abs(t)) / (3.0 * P.beta3));
  return {t, t * u - P.beta3 * u * u * u};
}

}  // namespace

TEST_CASE("cutoff values by zone and zone partition") {
  InitialDatum d = make_datum("gaussian-odd");
  ProfileParams P = d.profile_params();
  for (double nu : {1e-2, 1e-4}) {
    ApproxConfig cfg{nu, 0};
    const double da = std::pow(nu, cfg.alpha);
    for (double frac : {0.8, 0.3}) {
      auto in = shell_point(P, 0.5 * da, frac);
      CHECK(cutoff_theta(cfg, P, in.t, in.x) == 1.0);
      CHECK(classify_zone(cfg, P, in.t, in.x) == Zone::Inner);

      auto mid = shell_point(P, 1.5 * da, frac);
      const double th = cutoff_theta(cfg, P, mid.t, mid.x);
      CHECK(th > 0.0);
      CHECK(th < 1.0);
      CHECK(classify_zone(cfg, P, mid.t, mid.x) == Zone::Matching);

      auto out = shell_point(P, 3.0 * da, frac);
      CHECK(cutoff_theta(cfg, P, out.t, out.x) == 0.0);
      CHECK(classify_zone(cfg, P, out.t, out.x) == Zone::Outer);
    }
  }
  // Boundary exclusivity: exactly at d = nu^alpha the point is matching.
  ApproxConfig cfg{1e-3, 0};
  const double da = std::pow(cfg.nu, cfg.alpha);
  auto edge = shell_point(P, da, 0.7);
  CHECK(classify_zone(cfg, P, edge.t, edge.x) == Zone::Matching);
}

TEST_CASE("cutoff derivative scalings hold across the nu range") {
  InitialDatum d = make_datum("gaussian-odd");
  ProfileParams P = d.profile_params();
  double cx_lo = 1e300, cx_hi = 0.0, ct_lo = 1e300, ct_hi = 0.0;
  for (double nu : {1e-5, 1e-4, 1e-3, 1e-2}) {
    ApproxConfig cfg{nu, 0};
    const double da = std::pow(nu, cfg.alpha);
    auto mid = shell_point(P, 1.5 * da, 0.8);  // off the dt d = 0 direction
    auto th = [&](double tt, double xx) { return cutoff_theta(cfg, P, tt, xx); };
    const double hx = 1e-4 * da * da * da;
    const double thx =
        (th(mid.t, mid.x + hx) - th(mid.t, mid.x - hx)) / (2 * hx);
    const double ht = 1e-4 * da * da;
    const double tht =
        (th(mid.t + ht, mid.x) - th(mid.t - ht, mid.x)) / (2 * ht);
    const double sx = std::abs(thx) * std::pow(nu, 3 * cfg.alpha);
    const double st = std::abs(tht) * std::pow(nu, 2 * cfg.alpha);
    cx_lo = std::min(cx_lo, sx); cx_hi = std::max(cx_hi, sx);
    ct_lo = std::min(ct_lo, st); ct_hi = std::max(ct_hi, st);
  }
  CHECK(cx_hi < 10.0);
  CHECK(cx_hi / cx_lo < 3.0);  // scaled slopes are nu-independent constants
  CHECK(ct_hi < 10.0);
  CHECK(ct_hi / ct_lo < 3.0);
}

TEST_CASE("u_app equals the pure expansions off the matching zone") {
  InitialDatum d = make_datum("gaussian-odd");
  ProfileParams P = d.profile_params();
  ApproxConfig cfg{1e-3, 0};
  const double da = std::pow(cfg.nu, cfg.alpha);

  auto out = shell_point(P, 4.0 * da, 0.5);
  CHECK(u_app(cfg, d, P, out.t, out.x) == outer_sum(d, 0, cfg.nu, out.t, out.x));

  auto in = shell_point(P, 0.4 * da, 0.5);
  CHECK(u_app(cfg, d, P, in.t, in.x) ==
        inner_term_physical(P, cfg.nu, in.t, in.x, cfg.quad_tol));

  // Initial-time identity: u_app(t0, .) = u0_ring.
  for (double x : {-1.2, -0.2, 0.3, 2.5})
    CHECK_THAT(u_app(cfg, d, P, d.t0(), x),
               Catch::Matchers::WithinAbs(d.u0(x), 1e-12));

  // K = 1 adds the outer corrector.
  ApproxConfig cfg1{1e-3, 1};
  CHECK(u_app(cfg1, d, P, out.t, out.x) ==
        outer_sum(d, 1, cfg1.nu, out.t, out.x));

  CHECK_THROWS_AS(u_app(cfg, d, P, -1e-9, 0.0), InvalidInput);
  const ApproxConfig bad{1e-3, 2};
  CHECK_THROWS_AS(bad.validate(), InvalidInput);
}

TEST_CASE("residual E: zero in I, nu dxx u0 in O, bounded in M") {
  InitialDatum d = make_datum("gaussian-odd");
  ProfileParams P = d.profile_params();
  for (double nu : {1e-2, 1e-3, 1e-4}) {
    ApproxConfig cfg{nu, 0};
    const double da = std::pow(nu, cfg.alpha);

    for (double frac : {0.8, 0.4}) {
      auto in = shell_point(P, 0.35 * da, frac);
      CHECK(std::abs(residual_E(cfg, d, P, in.t, in.x)) <= 1e-7);

      auto mid = shell_point(P, 1.5 * da, frac);
      CHECK(std::abs(residual_E(cfg, d, P, mid.t, mid.x)) <=
            5.0 * std::pow(nu, cfg.K / 5.0));
    }

    const double tO = -0.09, xO = 0.12;  // d ~ 0.4, outer for all nus here
    REQUIRE(classify_zone(cfg, P, tO, xO) == Zone::Outer);
    const double ref = nu * entropy_point(d, tO, xO).uxx;
    CHECK_THAT(residual_E(cfg, d, P, tO, xO),
               Catch::Matchers::WithinRel(ref, 1e-6));
  }
}

TEST_CASE("matching-zone mismatch obeys d^2 + nu d^-3") {
  InitialDatum d = make_datum("gaussian-odd");
  ProfileParams P = d.profile_params();
  double cmax = 0.0;
  for (double nu : {1e-3, 1e-4}) {
    ApproxConfig cfg{nu, 0};
    for (double dist = std::pow(nu, 0.25) * 1.01; dist <= 1.0; dist *= 1.6) {
      for (double frac : {0.9, 0.5, 0.1}) {
        auto p = shell_point(P, dist, frac);
        const double gap =
            std::abs(inner_term_physical(P, nu, p.t, p.x, cfg.quad_tol) -
                     entropy_solution(d, p.t, p.x));
        const double env =
            dist * dist + nu / (dist * dist * dist);
        cmax = std::max(cmax, gap / env);
      }
    }
  }
  CHECK(cmax > 0.0);
  CHECK(cmax < 10.0);  // measured ~1; bounded is the claim
}
