#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "shocklens/errors.hpp"
#include "shocklens/jet.hpp"
#include "shocklens/profile.hpp"
#include "shocklens/roots.hpp"

namespace shocklens {

/// Un-normalized initial data: scalar and jet evaluators plus an exact
/// primitive of the scalar (for the Cole-Hopf weight). `half_width` bounds
/// the region where the profile differs from its far-field constant.
struct RawDatum {
  std::string name;
  std::function<double(double)> f;
  std::function<Jet6(const Jet6&)> fj;
  std::function<double(double)> primitive;  // integral of f from 0 to x
  double half_width = 10.0;
};

/// Invert a truncated power series a(x) = sum_{k>=1} a_k x^k (a_1 != 0):
/// returns b with x = sum_{m>=1} b_m y^m such that a(b(y)) = y + O(y^{M+1}).
/// Index 0 is unused; both arrays have size M+1.
inline std::vector<double> invert_power_series(const std::vector<double>& a, int M) {
  if (M < 1 || static_cast<int>(a.size()) < M + 1)
    throw InvalidInput("invert_power_series: need coefficients up to order M");
  if (a[1] == 0.0) throw DegenerateInput("invert_power_series: a_1 = 0");
  std::vector<double> b(M + 1, 0.0);
  b[1] = 1.0 / a[1];
  auto truncated_mul = [M](const std::vector<double>& p, const std::vector<double>& q) {
    std::vector<double> r(M + 1, 0.0);
    for (int i = 0; i <= M; ++i)
      for (int j = 0; i + j <= M; ++j) r[i + j] += p[i] * q[j];
    return r;
  };
  for (int m = 2; m <= M; ++m) {
    // c = a(b(y)) with the current b (b_m = 0); the y^m defect fixes b_m.
    std::vector<double> pw = b, c(M + 1, 0.0);
    for (int k = 1; k <= m; ++k) {
      for (int i = 0; i <= M; ++i) c[i] += a[k] * pw[i];
      if (k < m) pw = truncated_mul(pw, b);
    }
    b[m] = -c[m] / a[1];
  }
  return b;
}

namespace detail {

// Cumulative integral table for data without a closed-form primitive.
class NumericPrimitive {
 public:
  NumericPrimitive() = default;
  NumericPrimitive(std::function<double(double)> f, double lo, double hi, int n)
      : f_(std::move(f)), lo_(lo), dx_((hi - lo) / n), cum_(n + 1, 0.0) {
    for (int i = 0; i < n; ++i)
      cum_[i + 1] = cum_[i] + gl16(lo_ + i * dx_, lo_ + (i + 1) * dx_);
  }
  double operator()(double x) const {
    const double hi = lo_ + dx_ * (cum_.size() - 1);
    double tail = 0.0;
    if (x < lo_) { tail = gl16(x, lo_); x = lo_; }
    if (x > hi) { tail = gl16(hi, x); x = hi; }
    int i = std::clamp(static_cast<int>((x - lo_) / dx_), 0,
                       static_cast<int>(cum_.size()) - 2);
    return cum_[i] + gl16(lo_ + i * dx_, x) + tail;
  }

 private:
  double gl16(double a, double b) const {
    static constexpr double xg[8] = {
        0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
        0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
        0.9445750230732326, 0.9894009349916499};
    static constexpr double wg[8] = {
        0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
        0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
        0.0622535239386479, 0.0271524594117541};
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 8; ++i)
      s += wg[i] * (f_(mid + half * xg[i]) + f_(mid - half * xg[i]));
    return half * s;
  }
  std::function<double(double)> f_;
  double lo_ = 0.0, dx_ = 1.0;
  std::vector<double> cum_;
};

struct DatumCore {
  RawDatum raw;
  double x_shift = 0.0;   // argmin of the raw slope
  double u_shift = 0.0;   // raw value there (Galilean boost speed)
  double praw_at_shift = 0.0;
  double c_far = 0.0;
  double L_support = 0.0;
  double t0 = 0.0;
  std::vector<double> beta;     // beta[m] multiplies y^m in omega_ring, m=3..M
  std::vector<double> inv_series;  // raw b-coefficients of the inverse series
  double eps0 = 0.0;
  double xw_lo = 0.0, xw_hi = 0.0;  // invertibility window, normalized coords
};

}  // namespace detail

/// Gauge-normalized initial datum: u0(0) = 0, the steepest slope sits at
/// x = 0, and t0 = 1 / min u0' < 0. Immutable and cheap to copy.
class InitialDatum {
 public:
  double u0(double x) const {
    return core_->raw.f(x + core_->x_shift) - core_->u_shift;
  }
  Jet6 u0_jet(double x) const {
    Jet6 j = core_->raw.fj(Jet6::variable(x + core_->x_shift));
    j.c[0] -= core_->u_shift;
    return j;
  }
  /// d^order u0 / dx^order, 0 <= order <= 6
  double du0(int order, double x) const {
    if (order == 0) return u0(x);
    if (order < 0 || order > 6) throw UnsupportedOrder("du0: order must be in [0, 6]");
    return u0_jet(x).derivative(order);
  }
  /// integral of u0 from 0 to x
  double primitive(double x) const {
    return core_->raw.primitive(x + core_->x_shift) - core_->praw_at_shift -
           core_->u_shift * x;
  }

  double c_far() const { return core_->c_far; }
  double L_support() const { return core_->L_support; }
  double t0() const { return core_->t0; }
  double x_crit() const { return 0.0; }
  double x_shift() const { return core_->x_shift; }
  double u_shift() const { return core_->u_shift; }
  const std::string& name() const { return core_->raw.name; }

  /// beta_m coefficients, indexed so that beta_table()[0] is beta_3.
  std::vector<double> beta_table() const {
    return std::vector<double>(core_->beta.begin() + 3, core_->beta.end());
  }
  double beta3() const { return core_->beta[3]; }
  double beta4() const { return core_->beta.size() > 4 ? core_->beta[4] : 0.0; }
  ProfileParams profile_params() const { return ProfileParams(beta3(), beta4()); }

  double eps0() const { return core_->eps0; }
  double window_lo() const { return core_->xw_lo; }
  double window_hi() const { return core_->xw_hi; }

  /// omega_ring(y): spatial inverse of u0 on the window |y| < eps0.
  double inverse_on_window(double y) const {
    if (!(std::abs(y) < core_->eps0))
      throw OutOfWindow("inverse_on_window: |y| >= eps0");
    if (y == 0.0) return 0.0;
    auto g = [&](double x) { return u0(x) - y; };
    return brent_root(g, core_->xw_lo, core_->xw_hi, 1e-15);
  }
  /// omega_ring'(y) = 1 / u0'(omega_ring(y))
  double inverse_d1(double y) const { return 1.0 / du0(1, inverse_on_window(y)); }
  /// omega_ring''(y) = -u0''(omega_ring(y)) * omega_ring'(y)^3
  double inverse_d2(double y) const {
    const double w = inverse_on_window(y);
    const double o1 = 1.0 / du0(1, w);
    return -du0(2, w) * o1 * o1 * o1;
  }

  /// Taylor coefficients (beta_3, ..., beta_M) of the inverse, from formal
  /// series inversion of the Taylor series of u0 at 0. Sign convention:
  /// omega_ring(y) = t0 y - beta_3 y^3 + sum_{m>=4} beta_m y^m.
  std::vector<double> taylor_of_inverse(int M) const {
    if (M < 3 || M > 6) throw UnsupportedOrder("taylor_of_inverse: need 3 <= M <= 6");
    Jet6 j = u0_jet(0.0);
    std::vector<double> a(M + 1, 0.0);
    for (int k = 1; k <= M; ++k) a[k] = j.c[k];
    std::vector<double> b = invert_power_series(a, M);
    std::vector<double> beta(M - 2);
    beta[0] = -b[3];
    for (int m = 4; m <= M; ++m) beta[m - 3] = b[m];
    return beta;
  }
  /// Raw inverse-series coefficients b_m (omega_ring(y) = sum b_m y^m).
  std::vector<double> inverse_series() const { return core_->inv_series; }

  friend InitialDatum normalize_gauge(const RawDatum& raw);

 private:
  explicit InitialDatum(std::shared_ptr<const detail::DatumCore> core)
      : core_(std::move(core)) {}
  std::shared_ptr<const detail::DatumCore> core_;
};

/// Validate hypotheses on the raw datum, shift to the gauge x_crit = 0,
/// u0(0) = 0, and precompute t0, the beta table and the hodograph window.
inline InitialDatum normalize_gauge(const RawDatum& raw) {
  auto core = std::make_shared<detail::DatumCore>();
  core->raw = raw;
  const double HW = raw.half_width;

  auto slope = [&](double x) { return raw.fj(Jet6::variable(x)).derivative(1); };

  // Locate the global slope minimum on a fine grid.
  const int N = 8001;
  const double step = 2.0 * HW / (N - 1);
  double min_val = std::numeric_limits<double>::infinity();
  int min_idx = 0;
  std::vector<double> vals(N);
  for (int i = 0; i < N; ++i) {
    vals[i] = slope(-HW + i * step);
    if (vals[i] < min_val) { min_val = vals[i]; min_idx = i; }
  }
  if (!(min_val < 0.0)) throw NoShock("min slope of the initial datum is >= 0");

  // Uniqueness of the minimizer: near-minimal grid values must form one
  // contiguous cluster.
  int lo_idx = min_idx, hi_idx = min_idx;
  for (int i = 0; i < N; ++i) {
    if (vals[i] <= min_val + 1e-9) {
      lo_idx = std::min(lo_idx, i);
      hi_idx = std::max(hi_idx, i);
    }
  }
  for (int i = lo_idx; i <= hi_idx; ++i)
    if (vals[i] > min_val + 1e-9)
      throw NonUniqueMin("two separated near-minimal slope locations");

  // Refine the minimizer: Newton on u0''(x) = 0.
  double xc = -HW + min_idx * step;
  for (int it = 0; it < 60; ++it) {
    Jet6 j = raw.fj(Jet6::variable(xc));
    const double g = j.derivative(2), gp = j.derivative(3);
    if (gp <= 0.0) break;
    const double dx = g / gp;
    xc -= dx;
    if (std::abs(dx) < 1e-15 * (1.0 + std::abs(xc))) break;
  }
  {
    Jet6 j = raw.fj(Jet6::variable(xc));
    if (!(j.derivative(3) > 1e-8))
      throw DegenerateShock("third derivative at the critical point is <= tolerance");
    core->t0 = 1.0 / j.derivative(1);
    if (!(core->t0 < 0.0)) throw NoShock("slope at the critical point is >= 0");
  }
  core->x_shift = xc;
  core->u_shift = raw.f(xc);
  core->praw_at_shift = raw.primitive(xc);
  core->c_far = 0.5 * (raw.f(HW) + raw.f(-HW)) - core->u_shift;

  InitialDatum d(core);

  // Support radius of u0 - c_far (rapid decay in place of strict (H2)).
  {
    double L = HW - core->x_shift - step;
    const double Lneg = HW + core->x_shift - step;
    double R = std::max(std::abs(L), std::abs(Lneg));
    while (R > 1.0 && std::abs(d.u0(R - step) - core->c_far) < 1e-16 &&
           std::abs(d.u0(-(R - step)) - core->c_far) < 1e-16)
      R -= step;
    core->L_support = R;
  }

  // Taylor table of the inverse at 0 (orders up to 6).
  {
    Jet6 j = d.u0_jet(0.0);
    std::vector<double> a(7, 0.0);
    for (int k = 1; k <= 6; ++k) a[k] = j.c[k];
    core->inv_series = invert_power_series(a, 6);
    core->beta.assign(7, 0.0);
    core->beta[3] = -core->inv_series[3];
    for (int m = 4; m <= 6; ++m) core->beta[m] = core->inv_series[m];
    if (!(core->beta[3] > 0.0))
      throw DegenerateShock("beta3 <= 0 after normalization");
  }

  // Invertibility window: connected component around 0 of
  // { u0'(x) <= 1/(t0 - 1) }, the slope criterion at the singular time.
  {
    const double s_star = 1.0 / (core->t0 - 1.0);
    auto excess = [&](double x) { return d.du0(1, x) - s_star; };
    if (!(excess(0.0) < 0.0))
      throw DegenerateShock("slope criterion fails at the critical point");
    double hi = 0.0;
    while (hi < 2.0 * HW && excess(hi + 0.05) < 0.0) hi += 0.05;
    core->xw_hi = brent_root(excess, hi, hi + 0.05, 1e-14);
    double lo = 0.0;
    while (lo > -2.0 * HW && excess(lo - 0.05) < 0.0) lo -= 0.05;
    core->xw_lo = brent_root(excess, lo - 0.05, lo, 1e-14);
    core->eps0 = std::min(d.u0(core->xw_lo), -d.u0(core->xw_hi));
    if (!(core->eps0 > 0.0)) throw DegenerateShock("empty hodograph window");
  }
  return d;
}

/// Smooth bump: 1 on [0,1], 0 on [2,inf), exp(-1/r)-interpolation between.
template <class T>
T smooth_bump(const T& s);

inline double smooth_bump_scalar(double s) {
  if (s <= 1.0) return 1.0;
  if (s >= 2.0) return 0.0;
  const double a = std::exp(-1.0 / (2.0 - s));
  const double b = std::exp(-1.0 / (s - 1.0));
  return a / (a + b);
}

template <int N>
Jet<N> smooth_bump_jet(const Jet<N>& s) {
  if (s.value() <= 1.0 + 1e-12) return Jet<N>::constant(1.0);
  if (s.value() >= 2.0 - 1e-12) return Jet<N>::constant(0.0);
  const Jet<N> a = exp(-1.0 / (2.0 - s));
  const Jet<N> b = exp(-1.0 / (s - 1.0));
  return a / (a + b);
}

/// Built-in initial data, selected by name:
///   gaussian-odd   -x exp(-x^2)                        (t0 = -1, beta3 = 1)
///   gaussian-skew  (-x + 0.2 x^2) exp(-x^2)            (asymmetric, beta4 != 0)
///   compact        gaussian-odd times a smooth bump    (strict (H2) variant)
inline RawDatum make_raw_datum(const std::string& name) {
  RawDatum r;
  r.name = name;
  if (name == "gaussian-odd") {
    r.f = [](double x) { return -x * std::exp(-x * x); };
    r.fj = [](const Jet6& x) { return -x * exp(-(x * x)); };
    r.primitive = [](double x) { return 0.5 * (std::exp(-x * x) - 1.0); };
    r.half_width = 10.0;
  } else if (name == "gaussian-skew") {
    r.f = [](double x) { return (-x + 0.2 * x * x) * std::exp(-x * x); };
    r.fj = [](const Jet6& x) { return (0.2 * x * x - x) * exp(-(x * x)); };
    r.primitive = [](double x) {
      const double g = std::exp(-x * x);
      return 0.5 * (g - 1.0) +
             0.2 * (0.25 * std::sqrt(M_PI) * std::erf(x) - 0.5 * x * g);
    };
    r.half_width = 10.0;
  } else if (name == "compact") {
    const double a = 3.0;
    auto f = [a](double x) {
      return -x * std::exp(-x * x) * smooth_bump_scalar(std::abs(x) / a);
    };
    r.f = f;
    r.fj = [a](const Jet6& x) {
      Jet6 s = x.value() >= 0.0 ? x / a : -x / a;
      return -x * exp(-(x * x)) * smooth_bump_jet(s);
    };
    r.primitive = [prim = detail::NumericPrimitive(f, -7.0, 7.0, 4000)](double x) {
      return prim(x);
    };
    r.half_width = 7.0;
  } else {
    throw InvalidInput("unknown datum '" + name + "'");
  }
  return r;
}

inline InitialDatum make_datum(const std::string& name) {
  return normalize_gauge(make_raw_datum(name));
}

/// Tabulated user datum (columns x, u0(x)); natural cubic spline
/// reconstruction. Derivatives beyond order 3 vanish segment-wise, so the
/// beta table is only trustworthy through beta_4; documented accuracy loss.
inline RawDatum make_table_datum(const std::vector<double>& xs,
                                 const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 4)
    throw InvalidInput("table datum: need >= 4 matching (x, y) rows");
  for (size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i] > xs[i - 1])) throw InvalidInput("table datum: x not increasing");

  // Natural cubic spline second derivatives (Thomas algorithm).
  const int n = static_cast<int>(xs.size());
  std::vector<double> h(n - 1), alpha(n, 0.0), l(n), mu(n), zv(n), m2(n, 0.0);
  for (int i = 0; i < n - 1; ++i) h[i] = xs[i + 1] - xs[i];
  for (int i = 1; i < n - 1; ++i)
    alpha[i] = 3.0 * ((ys[i + 1] - ys[i]) / h[i] - (ys[i] - ys[i - 1]) / h[i - 1]);
  l[0] = 1.0; mu[0] = 0.0; zv[0] = 0.0;
  for (int i = 1; i < n - 1; ++i) {
    l[i] = 2.0 * (xs[i + 1] - xs[i - 1]) - h[i - 1] * mu[i - 1];
    mu[i] = h[i] / l[i];
    zv[i] = (alpha[i] - h[i - 1] * zv[i - 1]) / l[i];
  }
  for (int i = n - 2; i >= 0; --i) m2[i] = zv[i] - mu[i] * m2[i + 1];

  struct Seg { double x0, c0, c1, c2, c3; };
  auto segs = std::make_shared<std::vector<Seg>>();
  segs->reserve(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    const double c3 = (m2[i + 1] - m2[i]) / (3.0 * h[i]);
    const double c2 = m2[i];
    const double c1 = (ys[i + 1] - ys[i]) / h[i] - h[i] * (2.0 * m2[i] + m2[i + 1]) / 3.0;
    segs->push_back({xs[i], ys[i], c1, c2, c3});
  }
  auto xs_p = std::make_shared<std::vector<double>>(xs);

  auto locate = [xs_p](double x) {
    const auto& v = *xs_p;
    int i = static_cast<int>(std::upper_bound(v.begin(), v.end(), x) - v.begin()) - 1;
    return std::clamp(i, 0, static_cast<int>(v.size()) - 2);
  };
  RawDatum r;
  r.name = "table";
  r.f = [segs, locate, xs_p](double x) {
    x = std::clamp(x, xs_p->front(), xs_p->back());
    const auto& s = (*segs)[locate(x)];
    const double d = x - s.x0;
    return ((s.c3 * d + s.c2) * d + s.c1) * d + s.c0;
  };
  r.fj = [segs, locate, xs_p](const Jet6& x) {
    const double xv = std::clamp(x.value(), xs_p->front(), xs_p->back());
    const auto& s = (*segs)[locate(xv)];
    Jet6 d = x - s.x0;
    return ((s.c3 * d + s.c2) * d + s.c1) * d + s.c0;
  };
  r.primitive = [prim = detail::NumericPrimitive(r.f, xs.front(), xs.back(), 4000)](
                    double x) { return prim(x); };
  r.half_width = std::min(-xs.front(), xs.back());
  return r;
}

}  // namespace shocklens
