#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "shocklens/errors.hpp"
#include "shocklens/field.hpp"

namespace shocklens {

enum class NormKind { Linf, L1, L2 };

struct NormDomain {
  double t_lo = -std::numeric_limits<double>::infinity();
  double t_hi = std::numeric_limits<double>::infinity();
  double x_lo = -std::numeric_limits<double>::infinity();
  double x_hi = std::numeric_limits<double>::infinity();
};

/// Linf: max |f| over the window. L1/L2: trapezoidal quadrature in x,
/// sup over the time slices (the sup-in-time norms of the error analysis).
inline double grid_norm(const FieldSample& f, NormKind kind,
                        const NormDomain& dom = {}) {
  f.validate();
  double result = 0.0;
  bool any_slice = false;
  for (size_t s = 0; s < f.t.size(); ++s) {
    if (f.t[s] < dom.t_lo || f.t[s] > dom.t_hi) continue;
    any_slice = true;
    const auto& row = f.values[s];
    double slice = 0.0;
    bool any_node = false;
    for (size_t i = 0; i < f.x.size(); ++i) {
      if (f.x[i] < dom.x_lo || f.x[i] > dom.x_hi) continue;
      any_node = true;
      if (kind == NormKind::Linf) {
        slice = std::max(slice, std::abs(row[i]));
      } else if (i + 1 < f.x.size() && f.x[i + 1] <= dom.x_hi) {
        const double h = f.x[i + 1] - f.x[i];
        if (kind == NormKind::L1)
          slice += 0.5 * h * (std::abs(row[i]) + std::abs(row[i + 1]));
        else
          slice += 0.5 * h * (row[i] * row[i] + row[i + 1] * row[i + 1]);
      }
    }
    if (!any_node) throw EmptyGrid("grid_norm: no nodes in the window");
    if (kind == NormKind::L2) slice = std::sqrt(slice);
    result = std::max(result, slice);
  }
  if (!any_slice) throw EmptyGrid("grid_norm: no slices in the window");
  return result;
}

/// Discrete Holder seminorm of one slice: sup over grid pairs of
/// |f(x)-f(y)| / |x-y|^gamma restricted to |x-y| <= 1, reduced to
/// adjacent-pair + dyadic index spans (i, i + 2^j). For the monotone-tail
/// fields of interest the sup lives on clustered pairs, which the dyadic
/// spans cover; the brute-force oracle in the tests checks this reduction.
inline double holder_seminorm(const std::vector<double>& x,
                              const std::vector<double>& v, double gamma) {
  if (x.size() != v.size() || x.size() < 2)
    throw EmptyGrid("holder_seminorm: need at least two nodes");
  if (!(gamma > 0.0 && gamma <= 1.0))
    throw InvalidInput("holder_seminorm: gamma must lie in (0, 1]");
  const int n = static_cast<int>(x.size());
  double sup = 0.0;
  for (int span = 1; span < n; span *= 2) {
    for (int i = 0; i + span < n; ++i) {
      const double dx = x[i + span] - x[i];
      if (dx > 1.0) continue;
      if (dx <= 0.0) throw InvalidInput("holder_seminorm: x not increasing");
      sup = std::max(sup, std::abs(v[i + span] - v[i]) / std::pow(dx, gamma));
    }
  }
  return sup;
}

/// Sup over time slices of the per-slice seminorm.
inline double holder_seminorm(const FieldSample& f, double gamma) {
  f.validate();
  double sup = 0.0;
  for (const auto& row : f.values)
    sup = std::max(sup, holder_seminorm(f.x, row, gamma));
  return sup;
}

/// Log-log least-squares rate fit through (ln nu, ln error).
struct RateFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<std::pair<double, double>> table;  // (nu, error), nu descending
};

inline RateFit fit_rate(std::vector<std::pair<double, double>> table) {
  if (table.size() < 3)
    throw DegenerateInput("fit_rate: need at least 3 entries");
  for (auto& [nu, err] : table)
    if (!(nu > 0.0) || !(err > 0.0))
      throw DegenerateInput("fit_rate: entries must be positive");
  std::sort(table.begin(), table.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  if (table.front().first == table.back().first)
    throw DegenerateInput("fit_rate: all nu equal");

  const double n = static_cast<double>(table.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (const auto& [nu, err] : table) {
    const double lx = std::log(nu), ly = std::log(err);
    sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly; syy += ly * ly;
  }
  RateFit fit;
  fit.exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.exponent * sx) / n;
  double ss_res = 0.0;
  for (const auto& [nu, err] : table) {
    const double r = std::log(err) - (fit.intercept + fit.exponent * std::log(nu));
    ss_res += r * r;
  }
  const double ss_tot = syy - sy * sy / n;
  fit.r_squared = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : 1.0;
  fit.table = std::move(table);
  return fit;
}

/// One-parameter fit of the log-corrected benchmark model
/// error = A nu ln(1/nu); rel_residual is the RMS log deviation
/// (~ RMS relative error for small residuals).
struct LogCorrectedFit {
  double amplitude = 0.0;
  double rel_residual = 0.0;
};

inline LogCorrectedFit fit_log_corrected(
    const std::vector<std::pair<double, double>>& table) {
  if (table.size() < 2)
    throw DegenerateInput("fit_log_corrected: need at least 2 entries");
  double mean = 0.0;
  for (const auto& [nu, err] : table) {
    if (!(nu > 0.0 && nu < 1.0) || !(err > 0.0))
      throw DegenerateInput("fit_log_corrected: need 0 < nu < 1, err > 0");
    mean += std::log(err) - std::log(nu * std::log(1.0 / nu));
  }
  mean /= static_cast<double>(table.size());
  LogCorrectedFit fit;
  fit.amplitude = std::exp(mean);
  double ss = 0.0;
  for (const auto& [nu, err] : table) {
    const double r = std::log(err) - std::log(nu * std::log(1.0 / nu)) - mean;
    ss += r * r;
  }
  fit.rel_residual = std::sqrt(ss / static_cast<double>(table.size()));
  return fit;
}

/// RMS log deviation of the free-exponent power-law fit, for comparison
/// against the log-corrected model.
inline double power_fit_residual(const std::vector<std::pair<double, double>>& table) {
  const RateFit fit = fit_rate(table);
  double ss = 0.0;
  for (const auto& [nu, err] : fit.table) {
    const double r =
        std::log(err) - (fit.intercept + fit.exponent * std::log(nu));
    ss += r * r;
  }
  return std::sqrt(ss / static_cast<double>(fit.table.size()));
}

}  // namespace shocklens
