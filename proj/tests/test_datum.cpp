#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "shocklens/datum.hpp"

using namespace shocklens;

namespace {

// Least-squares slope of log(err) against log(y).
double loglog_slope(const std::vector<double>& y, const std::vector<double>& e) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int n = static_cast<int>(y.size());
  for (int i = 0; i < n; ++i) {
    const double lx = std::log(y[i]), ly = std::log(e[i]);
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("invert_power_series on the odd cubic") {
  // y = -x + x^3 - x^5/2  =>  x = -y - y^3 + O(y^5)
  std::vector<double> a = {0.0, -1.0, 0.0, 1.0, 0.0, -0.5, 0.0};
  auto b = invert_power_series(a, 6);
  CHECK_THAT(b[1], Catch::Matchers::WithinAbs(-1.0, 1e-15));
  CHECK_THAT(b[2], Catch::Matchers::WithinAbs(0.0, 1e-15));
  CHECK_THAT(b[3], Catch::Matchers::WithinAbs(-1.0, 1e-14));
  CHECK_THAT(b[4], Catch::Matchers::WithinAbs(0.0, 1e-14));

  // Composition residual: a(b(y)) = y through order 6.
  std::vector<double> comp(7, 0.0), pw(b.begin(), b.end());
  for (int k = 1; k <= 6; ++k) {
    for (int i = 0; i <= 6; ++i) comp[i] += a[k] * pw[i];
    std::vector<double> nxt(7, 0.0);
    for (int i = 0; i <= 6; ++i)
      for (int j = 0; i + j <= 6; ++j) nxt[i + j] += pw[i] * b[j];
    pw = nxt;
  }
  CHECK_THAT(comp[1], Catch::Matchers::WithinAbs(1.0, 1e-13));
  for (int m = 2; m <= 6; ++m)
    CHECK_THAT(comp[m], Catch::Matchers::WithinAbs(0.0, 1e-9));
}

TEST_CASE("gaussian-odd normalization: t0 = -1, beta3 = 1, beta4 = 0") {
  InitialDatum d = make_datum("gaussian-odd");
  CHECK_THAT(d.t0(), Catch::Matchers::WithinAbs(-1.0, 1e-12));
  CHECK_THAT(d.x_shift(), Catch::Matchers::WithinAbs(0.0, 1e-12));
  CHECK_THAT(d.u0(0.0), Catch::Matchers::WithinAbs(0.0, 1e-15));
  CHECK_THAT(d.beta3(), Catch::Matchers::WithinAbs(1.0, 1e-11));
  CHECK_THAT(d.beta4(), Catch::Matchers::WithinAbs(0.0, 1e-11));
  CHECK(d.c_far() == 0.0);
  CHECK(d.L_support() > 5.5);
  CHECK(d.L_support() < 7.5);
  CHECK(d.eps0() > 0.3);

  // beta3 via the independent route (1/6) t0^4 u0'''(0).
  const double b3_alt = d.t0() * d.t0() * d.t0() * d.t0() * d.du0(3, 0.0) / 6.0;
  CHECK_THAT(d.beta3(), Catch::Matchers::WithinRel(b3_alt, 1e-9));

  // Odd datum: all even inverse coefficients vanish.
  auto beta = d.taylor_of_inverse(6);
  CHECK_THAT(beta[0], Catch::Matchers::WithinAbs(1.0, 1e-11));  // beta3
  CHECK_THAT(beta[1], Catch::Matchers::WithinAbs(0.0, 1e-11));  // beta4
  CHECK_THAT(beta[3], Catch::Matchers::WithinAbs(0.0, 1e-10));  // beta6
}

TEST_CASE("translation equivariance of the gauge") {
  RawDatum base = make_raw_datum("gaussian-odd");
  const double a = 1.5;
  RawDatum shifted;
  shifted.name = "shifted";
  shifted.f = [base, a](double x) { return base.f(x - a); };
  shifted.fj = [base, a](const Jet6& x) { return base.fj(x - a); };
  shifted.primitive = [base, a](double x) {
    return base.primitive(x - a) - base.primitive(-a);
  };
  shifted.half_width = base.half_width + std::abs(a);

  InitialDatum d0 = make_datum("gaussian-odd");
  InitialDatum d1 = normalize_gauge(shifted);
  CHECK_THAT(d1.x_shift(), Catch::Matchers::WithinAbs(a, 1e-10));
  CHECK_THAT(d1.t0(), Catch::Matchers::WithinRel(d0.t0(), 1e-12));
  CHECK_THAT(d1.beta3(), Catch::Matchers::WithinRel(d0.beta3(), 1e-10));
  CHECK_THAT(d1.u0(0.3), Catch::Matchers::WithinRel(d0.u0(0.3), 1e-12));
}

TEST_CASE("hypothesis violations are rejected") {
  RawDatum flat;
  flat.name = "flat";
  flat.f = [](double) { return 5.0; };
  flat.fj = [](const Jet6&) { return Jet6::constant(5.0); };
  flat.primitive = [](double x) { return 5.0 * x; };
  CHECK_THROWS_AS(normalize_gauge(flat), NoShock);

  RawDatum rising;
  rising.name = "rising";
  rising.f = [](double x) { return x * std::exp(-x * x); };
  rising.fj = [](const Jet6& x) { return x * exp(-(x * x)); };
  rising.primitive = [](double x) { return 0.5 * (1.0 - std::exp(-x * x)); };
  // min slope of +x exp(-x^2) is negative (attained at |x| > 1) but there are
  // two symmetric minimizers.
  CHECK_THROWS_AS(normalize_gauge(rising), NonUniqueMin);

  RawDatum twin;
  twin.name = "twin";
  auto g = [](double x) { return -x * std::exp(-x * x); };
  twin.f = [g](double x) { return g(x - 3.0) + g(x + 3.0); };
  twin.fj = [](const Jet6& x) {
    Jet6 l = x - 3.0, r = x + 3.0;
    return -l * exp(-(l * l)) - r * exp(-(r * r));
  };
  twin.primitive = [](double x) { return 0.0; };
  twin.half_width = 12.0;
  CHECK_THROWS_AS(normalize_gauge(twin), NonUniqueMin);

  // u0'(x) = -exp(-x^4): unique steepest point but a flat (quartic) minimum.
  RawDatum degen;
  degen.name = "degen";
  degen.f = [](double x) { return -x; };  // rejected before f is consulted
  degen.fj = [](const Jet6& x) {
    Jet6 x2 = x * x;
    Jet6 s = -exp(-(x2 * x2));  // jet of u0'
    Jet6 u;
    u.c[0] = 0.0;
    for (int k = 1; k <= 6; ++k) u.c[k] = s.c[k - 1] / k;
    return u;
  };
  degen.primitive = [](double) { return 0.0; };
  CHECK_THROWS_AS(normalize_gauge(degen), DegenerateShock);
}

TEST_CASE("inverse on the window: roundtrips and derivative at 0") {
  InitialDatum d = make_datum("gaussian-odd");
  CHECK(d.inverse_on_window(0.0) == 0.0);

  const double y1 = d.u0(0.1);
  CHECK_THAT(d.inverse_on_window(y1), Catch::Matchers::WithinAbs(0.1, 1e-11));

  for (double y : {-0.3, -0.05, 0.02, 0.25}) {
    const double w = d.inverse_on_window(y);
    CHECK(std::abs(d.u0(w) - y) <= 1e-11);
    CHECK(std::abs(d.inverse_on_window(d.u0(w)) - w) <= 1e-11);
  }

  // Strictly decreasing in y.
  double prev = d.inverse_on_window(-0.3);
  for (double y = -0.25; y < 0.31; y += 0.05) {
    const double w = d.inverse_on_window(y);
    CHECK(w < prev);
    prev = w;
  }

  // omega_ring'(0) = t0, checked by finite differences.
  const double h = 1e-6;
  const double fd = (d.inverse_on_window(h) - d.inverse_on_window(-h)) / (2 * h);
  CHECK_THAT(fd, Catch::Matchers::WithinRel(d.t0(), 1e-7));
  CHECK_THAT(d.inverse_d1(0.0), Catch::Matchers::WithinRel(d.t0(), 1e-12));

  CHECK_THROWS_AS(d.inverse_on_window(d.eps0() * 1.01), OutOfWindow);
}

TEST_CASE("Taylor consistency of the inverse series") {
  InitialDatum d = make_datum("gaussian-odd");
  auto b = d.inverse_series();
  // Start the fit window where the O(y^{M+1}) truncation error clears the
  // ~1e-15 root-solver floor of inverse_on_window.
  for (int M : {4, 6}) {
    std::vector<double> ys, errs;
    for (double y = 0.0125; y <= 0.1; y *= 2.0) {
      double s = 0.0, yp = 1.0;
      for (int m = 1; m <= M; ++m) { yp *= y; s += b[m] * yp; }
      ys.push_back(y);
      errs.push_back(std::abs(s - d.inverse_on_window(y)) + 1e-300);
    }
    CHECK(loglog_slope(ys, errs) >= M + 0.5);
  }
}

TEST_CASE("gaussian-skew: asymmetry produces beta4 != 0") {
  InitialDatum d = make_datum("gaussian-skew");
  CHECK(d.t0() < 0.0);
  CHECK(d.beta3() > 0.0);
  CHECK(std::abs(d.beta4()) > 1e-4);
  CHECK(d.x_shift() < 0.0);  // minimizer sits left of the origin
  CHECK(d.c_far() != 0.0);

  // Cross-check beta4 against the defining expansion. Symmetrizing the
  // residual omega_ring(y) - t0 y + beta3 y^3 kills the odd powers, leaving
  // beta4 y^4 + beta6 y^6; fit both and compare the leading coefficient.
  auto sym_resid = [&](double y) {
    auto resid = [&](double yy) {
      return d.inverse_on_window(yy) - d.t0() * yy +
             d.beta3() * yy * yy * yy;
    };
    return 0.5 * (resid(y) + resid(-y));
  };
  double a44 = 0, a46 = 0, a66 = 0, r4 = 0, r6 = 0;
  for (double y : {0.01, 0.02, 0.03, 0.04, 0.06, 0.08}) {
    const double y4 = std::pow(y, 4), y6 = std::pow(y, 6), s = sym_resid(y);
    a44 += y4 * y4; a46 += y4 * y6; a66 += y6 * y6;
    r4 += y4 * s; r6 += y6 * s;
  }
  const double det = a44 * a66 - a46 * a46;
  const double b4_fit = (r4 * a66 - r6 * a46) / det;
  CHECK_THAT(b4_fit, Catch::Matchers::WithinRel(d.beta4(), 0.01));

  // beta3 two-route agreement for the asymmetric datum as well.
  const double b3_alt = std::pow(d.t0(), 4) * d.du0(3, 0.0) / 6.0;
  CHECK_THAT(d.beta3(), Catch::Matchers::WithinRel(b3_alt, 1e-9));
}

TEST_CASE("compact datum: strict support, same local structure") {
  InitialDatum d = make_datum("compact");
  CHECK_THAT(d.t0(), Catch::Matchers::WithinAbs(-1.0, 1e-11));
  CHECK_THAT(d.beta3(), Catch::Matchers::WithinAbs(1.0, 1e-10));
  CHECK(d.u0(6.5) == 0.0);
  CHECK(d.u0(-6.5) == 0.0);
  CHECK(std::abs(d.u0(d.L_support() + 0.1)) <= 1e-12);
  CHECK(d.L_support() <= 6.2);
}

TEST_CASE("tabulated datum reconstructs the gaussian approximately") {
  RawDatum g = make_raw_datum("gaussian-odd");
  std::vector<double> xs, ys;
  for (double x = -8.0; x <= 8.0 + 1e-9; x += 0.01) {
    xs.push_back(x);
    ys.push_back(g.f(x));
  }
  InitialDatum d = normalize_gauge(make_table_datum(xs, ys));
  CHECK_THAT(d.t0(), Catch::Matchers::WithinAbs(-1.0, 1e-5));
  CHECK_THAT(d.beta3(), Catch::Matchers::WithinRel(1.0, 1e-2));
  CHECK_THAT(d.u0(0.37), Catch::Matchers::WithinAbs(g.f(0.37), 1e-8));
  CHECK_THAT(d.primitive(1.0),
             Catch::Matchers::WithinAbs(g.primitive(1.0), 1e-8));
}
