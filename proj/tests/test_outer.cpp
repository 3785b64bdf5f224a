#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "shocklens/outer.hpp"

using namespace shocklens;

TEST_CASE("u1 vanishes at the initial time and in the far field") {
  InitialDatum d = make_datum("gaussian-odd");
  for (double x : {-3.0, -0.4, 0.0, 1.2})
    CHECK(std::abs(u1_exact(d, d.t0(), x)) <= 1e-9);
  for (double t : {-0.9, -0.3, -1e-3})
    for (double x : {-40.0, 9.0, 25.0})
      CHECK(u1_exact(d, t, x) == 0.0);
}

TEST_CASE("u1 satisfies its forced transport equation (FD residual)") {
  InitialDatum d = make_datum("gaussian-odd");
  const double h = 1e-5;
  for (double t : {-0.7, -0.3, -0.1}) {
    for (double x : {-1.1, -0.5, 0.2, 0.8, 1.9}) {
      auto u1 = [&](double tt, double xx) { return u1_exact(d, tt, xx); };
      const double u1_t = (-u1(t + 2 * h, x) + 8 * u1(t + h, x) -
                           8 * u1(t - h, x) + u1(t - 2 * h, x)) /
                          (12 * h);
      auto flux = [&](double xx) {
        return entropy_solution(d, t, xx) * u1(t, xx);
      };
      const double flux_x = (-flux(x + 2 * h) + 8 * flux(x + h) -
                             8 * flux(x - h) + flux(x - 2 * h)) /
                            (12 * h);
      const double forcing = entropy_point(d, t, x).uxx;
      CHECK(std::abs(u1_t + flux_x - forcing) <= 1e-6);
    }
  }
}

TEST_CASE("u1 two-route identity on the hodograph window") {
  // On the window, u1 = -dxx u0 / dx u0 + f(u0) dx u0 with
  // f(y) = u0''(w(y)) / u0'(w(y))^2 and w the inverse of the initial datum.
  InitialDatum d = make_datum("gaussian-skew");
  for (double t : {-0.6, -0.2}) {
    for (double y : {-0.2, -0.05, 0.1}) {
      const double x = omega(d, t, y);
      const InviscidPoint p = entropy_point(d, t, x);
      const double w = d.inverse_on_window(p.u);
      const double f = d.du0(2, w) / (d.du0(1, w) * d.du0(1, w));
      const double two_route = -p.uxx / p.ux + f * p.ux;
      CHECK_THAT(u1_exact(d, t, x), Catch::Matchers::WithinRel(two_route, 1e-9));
    }
  }
}

TEST_CASE("u_{1,0} closed form and homogeneity") {
  ProfileParams P(1.0);
  CHECK(u10_closed_form(P, -1.0, 0.0) == 0.0);
  CHECK_THAT(u10_closed_form(P, -1.0, 2.0), Catch::Matchers::WithinRel(0.375, 1e-12));

  // Degree -3 homogeneity: value at (l^2 t, l^3 x) = l^-3 value at (t, x).
  ProfileParams Q(0.6);
  for (double l : {0.5, 2.0, 3.7}) {
    const double base = u10_closed_form(Q, -0.8, 0.9);
    const double scaled = u10_closed_form(Q, -0.8 * l * l, 0.9 * l * l * l);
    CHECK_THAT(scaled, Catch::Matchers::WithinRel(base / (l * l * l), 1e-10));
  }
}

TEST_CASE("u_{1,0} solves the profile-advected equation (FD residual)") {
  ProfileParams P(1.3);
  const double h = 1e-5;
  for (double t : {-1.2, -0.5}) {
    for (double x : {-0.9, 0.1, 0.7}) {
      auto v = [&](double tt, double xx) { return u10_closed_form(P, tt, xx); };
      const double vt = (v(t + h, x) - v(t - h, x)) / (2 * h);
      auto flux = [&](double xx) {
        return eval_profile(P, t, xx).u * v(t, xx);
      };
      const double vx = (flux(x + h) - flux(x - h)) / (2 * h);
      const double forcing =
          profile_derivatives(P, eval_profile(P, t, x), 2, 0);
      CHECK(std::abs(vt + vx - forcing) <= 100.0 * h * h);
    }
  }
}

TEST_CASE("u1 matches u_{1,0} near the origin: |u1 - u10| <= C m") {
  InitialDatum d = make_datum("gaussian-odd");
  ProfileParams P = d.profile_params();
  double cmax = 0.0;
  for (double t : {-0.99, -0.5, -0.1, -0.01, -1e-4}) {
    for (double x : {-1.0, -0.3, -0.02, 1e-3, 0.05, 0.4, 1.0}) {
      const ProfilePoint p = eval_profile(P, t, x);
      const double gap = std::abs(u1_exact(d, t, x) - u10_closed_form(P, t, x));
      cmax = std::max(cmax, gap / p.m);
    }
  }
  CHECK(cmax > 0.0);
  CHECK(cmax < 30.0);  // measured ~6 for gaussian-odd; bounded is the claim
}

TEST_CASE("global envelope |u1| <= C d^-3") {
  InitialDatum d = make_datum("gaussian-odd");
  ProfileParams P = d.profile_params();
  double cmax = 0.0;
  for (double t : {-0.999, -0.4, -0.05, -1e-3, -1e-5}) {
    for (double x : {-7.0, -2.0, -0.5, -1e-2, 1e-4, 0.1, 1.0, 5.0}) {
      const ProfilePoint p = eval_profile(P, t, x);
      cmax = std::max(cmax, std::abs(u1_exact(d, t, x)) * p.d * p.d * p.d);
    }
  }
  CHECK(cmax < 30.0);  // measured ~2.5; global boundedness is the claim
}

TEST_CASE("outer partial sums") {
  InitialDatum d = make_datum("gaussian-odd");
  const double t = -0.4, x = 0.23;
  const double u0v = entropy_solution(d, t, x);
  CHECK(outer_sum(d, 0, 1e-3, t, x) == u0v);
  CHECK(outer_sum(d, 1, 0.0, t, x) == u0v);
  const double nu = 1e-3;
  CHECK_THAT(outer_sum(d, 1, nu, t, x) - u0v,
             Catch::Matchers::WithinRel(nu * u1_exact(d, t, x), 1e-12));
  CHECK_THROWS_AS(outer_sum(d, 2, nu, t, x), UnsupportedOrder);
}
