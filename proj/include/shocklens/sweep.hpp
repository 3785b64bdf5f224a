#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "shocklens/approx.hpp"
#include "shocklens/datum.hpp"
#include "shocklens/field.hpp"
#include "shocklens/inner.hpp"
#include "shocklens/inviscid.hpp"
#include "shocklens/metrics.hpp"
#include "shocklens/outer.hpp"
#include "shocklens/parallel.hpp"
#include "shocklens/viscous.hpp"

namespace shocklens {

struct GridSpec {
  double x_halfwidth = 8.0;
  int x_points = 200;  // per-slice budget for the clustered grid
  int t_slices = 20;   // dyadic time-ladder depth
};

/// Spatial evaluation grid adapted to the zone geometry: geometric
/// clustering around x = 0 starting at the inner length nu^(3/4), plus a
/// uniform far field. The L-infinity maximizers sit at d <~ nu^(1/4), which
/// the cluster resolves for every nu in a sweep.
inline std::vector<double> sweep_x_grid(double nu, const GridSpec& g) {
  const double x0 = std::pow(nu, 0.75);
  const double x_far = std::min(3.0, g.x_halfwidth);
  const double levels = std::log2(x_far / x0);
  const double far_pts = std::max(1.0, (g.x_halfwidth - x_far) / 0.5);
  const int per_octave = std::max(
      1, static_cast<int>(std::lround((0.5 * g.x_points - far_pts) / levels)));
  std::set<double> xs;
  xs.insert(0.0);
  const double ratio = std::pow(2.0, 1.0 / per_octave);
  for (double x = x0; x < x_far; x *= ratio) {
    xs.insert(x);
    xs.insert(-x);
  }
  for (double x = x_far; x <= g.x_halfwidth + 1e-12; x += 0.5) {
    xs.insert(x);
    xs.insert(-x);
  }
  return std::vector<double>(xs.begin(), xs.end());
}

/// Time slices: {t0} plus a dyadic ladder toward 0 (floored at -eps_t), plus
/// nu-adapted slices at fixed inner times T = t nu^(-1/2) so every nu in a
/// sweep samples the same inner-zone phases.
inline std::vector<double> sweep_t_slices(double t0, double nu, double eps_t,
                                          const GridSpec& g) {
  std::set<double> ts;
  ts.insert(t0);
  for (int j = 1; j <= g.t_slices; ++j) {
    const double t = -std::abs(t0) * std::pow(2.0, -j);
    if (t <= -eps_t) ts.insert(t);
  }
  for (double Tin : {2.0, 1.0, 0.5, 0.25, 0.125}) {
    const double t = -Tin * std::sqrt(nu);
    if (t <= -eps_t && t >= t0) ts.insert(t);
  }
  ts.insert(-eps_t);
  return std::vector<double>(ts.begin(), ts.end());
}

struct SweepConfig {
  std::string datum = "gaussian-odd";
  int K = 0;
  double alpha = 0.2;
  std::vector<double> nus;
  std::vector<std::string> norms = {"linf"};
  GridSpec grid;
  double quad_tol = 1e-10;
  double eps_t = 1e-6;
  int threads = 0;
};

/// Known norm columns:
///   linf, l1, l2          : || u_nu - u0 ||, sup over slices
///   linf_app, l1_app      : || u_nu - u_app_[K] ||
///   holder_app            : C^(1/2) seminorm of u_nu - u_app, sup in time
///   holder_unu            : C^(1/2) seminorm of u_nu itself
inline const std::vector<std::string>& known_norms() {
  static const std::vector<std::string> k = {
      "linf", "l1", "l2", "linf_app", "l1_app", "holder_app", "holder_unu"};
  return k;
}

struct SweepFields {
  std::vector<double> t;  // slices
  std::vector<double> x;  // nodes
  std::vector<std::vector<double>> u_nu, u0, uapp;
};

/// Evaluate u_nu (Cole-Hopf), u0 and u_app_[K] on the adapted grid.
/// Point evaluations fan out over a worker pool; results are gathered in
/// index order, so the output is deterministic for any thread count.
inline SweepFields evaluate_fields(const InitialDatum& d, double nu,
                                   const SweepConfig& cfg) {
  SweepFields out;
  out.x = sweep_x_grid(nu, cfg.grid);
  out.t = sweep_t_slices(d.t0(), nu, cfg.eps_t, cfg.grid);
  const size_t nt = out.t.size(), nx = out.x.size();
  out.u_nu.assign(nt, std::vector<double>(nx));
  out.u0.assign(nt, std::vector<double>(nx));
  out.uapp.assign(nt, std::vector<double>(nx));

  const ProfileParams P = d.profile_params();
  ApproxConfig acfg;
  acfg.nu = nu;
  acfg.K = cfg.K;
  acfg.alpha = cfg.alpha;
  acfg.eps_t = cfg.eps_t;
  acfg.quad_tol = cfg.quad_tol;

  parallel_for(nt * nx, resolve_threads(cfg.threads), [&](size_t job) {
    const size_t s = job / nx, i = job % nx;
    const double t = out.t[s], x = out.x[i];
    const double u0v = (t == d.t0()) ? d.u0(x) : entropy_solution(d, t, x);
    out.u0[s][i] = u0v;
    out.u_nu[s][i] =
        (t == d.t0()) ? d.u0(x) : reference_colehopf(d, nu, t, x, cfg.quad_tol);
    // u_app, reusing the entropy value on the outer branch.
    const double th = (t == d.t0()) ? 0.0 : cutoff_theta(acfg, P, t, x);
    double ua = 0.0;
    if (th < 1.0) {
      double outer = u0v;
      if (cfg.K >= 1) outer += nu * u1_exact(d, t, x);
      ua += (1.0 - th) * outer;
    }
    if (th > 0.0)
      ua += th * inner_term_physical(P, nu, t, x, cfg.quad_tol);
    out.uapp[s][i] = ua;
  });
  return out;
}

inline double sweep_norm_column(const SweepFields& f, const std::string& norm,
                                double nu, int K) {
  auto diff_sample = [&](const std::vector<std::vector<double>>& a,
                         const std::vector<std::vector<double>>& b) {
    FieldSample fs;
    fs.field = norm;
    fs.nu = nu;
    fs.K = K;
    fs.t = f.t;
    fs.x = f.x;
    fs.values.resize(f.t.size());
    for (size_t s = 0; s < f.t.size(); ++s) {
      fs.values[s].resize(f.x.size());
      for (size_t i = 0; i < f.x.size(); ++i)
        fs.values[s][i] = a[s][i] - b[s][i];
    }
    return fs;
  };
  if (norm == "linf")
    return grid_norm(diff_sample(f.u_nu, f.u0), NormKind::Linf);
  if (norm == "l1") return grid_norm(diff_sample(f.u_nu, f.u0), NormKind::L1);
  if (norm == "l2") return grid_norm(diff_sample(f.u_nu, f.u0), NormKind::L2);
  if (norm == "linf_app")
    return grid_norm(diff_sample(f.u_nu, f.uapp), NormKind::Linf);
  if (norm == "l1_app")
    return grid_norm(diff_sample(f.u_nu, f.uapp), NormKind::L1);
  if (norm == "holder_app")
    return holder_seminorm(diff_sample(f.u_nu, f.uapp), 0.5);
  if (norm == "holder_unu") {
    FieldSample fs;
    fs.t = f.t;
    fs.x = f.x;
    fs.values = f.u_nu;
    return holder_seminorm(fs, 0.5);
  }
  throw InvalidInput("unknown norm '" + norm + "'");
}

struct SweepResult {
  std::vector<std::string> columns;
  std::vector<double> nus;                  // descending
  std::vector<std::vector<double>> errors;  // [nu][column]
};

inline SweepResult run_sweep(const SweepConfig& cfg) {
  if (cfg.nus.empty()) throw InvalidInput("sweep: empty nu list");
  for (const auto& n : cfg.norms)
    if (std::find(known_norms().begin(), known_norms().end(), n) ==
        known_norms().end())
      throw InvalidInput("sweep: unknown norm '" + n + "'");
  InitialDatum d = make_datum(cfg.datum);
  SweepResult res;
  res.columns = cfg.norms;
  res.nus = cfg.nus;
  std::sort(res.nus.rbegin(), res.nus.rend());
  for (double nu : res.nus) {
    SweepFields f = evaluate_fields(d, nu, cfg);
    std::vector<double> row;
    row.reserve(cfg.norms.size());
    for (const auto& norm : cfg.norms)
      row.push_back(sweep_norm_column(f, norm, nu, cfg.K));
    res.errors.push_back(std::move(row));
  }
  return res;
}

/// (nu, error) pairs for one column of a sweep result.
inline std::vector<std::pair<double, double>> column_table(
    const SweepResult& r, const std::string& column) {
  auto it = std::find(r.columns.begin(), r.columns.end(), column);
  if (it == r.columns.end())
    throw InvalidInput("column '" + column + "' not present");
  const size_t c = it - r.columns.begin();
  std::vector<std::pair<double, double>> tab;
  for (size_t i = 0; i < r.nus.size(); ++i)
    tab.push_back({r.nus[i], r.errors[i][c]});
  return tab;
}

}  // namespace shocklens
