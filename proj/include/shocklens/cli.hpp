#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "shocklens/approx.hpp"
#include "shocklens/io.hpp"
#include "shocklens/metrics.hpp"
#include "shocklens/sweep.hpp"

namespace shocklens::cli {

struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error("config: " + msg) {}
};

struct CliConfig {
  SweepConfig sweep;
  std::vector<std::string> fields;  // profiles subcommand
};

inline CliConfig parse_config_json(const nlohmann::json& j) {
  CliConfig c;
  try {
    if (j.contains("datum")) c.sweep.datum = j.at("datum").get<std::string>();
    if (j.contains("K")) c.sweep.K = j.at("K").get<int>();
    if (c.sweep.K != 0 && c.sweep.K != 1)
      throw ConfigError("field 'K': must be 0 or 1");
    if (j.contains("alpha")) c.sweep.alpha = j.at("alpha").get<double>();
    if (!(c.sweep.alpha > 0.0 && c.sweep.alpha < 1.0))
      throw ConfigError("field 'alpha': must lie in (0, 1)");
    if (j.contains("nus")) {
      c.sweep.nus = j.at("nus").get<std::vector<double>>();
      for (double nu : c.sweep.nus)
        if (!(nu > 0.0)) throw ConfigError("field 'nus': entries must be positive");
    }
    if (c.sweep.nus.empty()) throw ConfigError("field 'nus': empty list");
    if (j.contains("norms")) {
      c.sweep.norms = j.at("norms").get<std::vector<std::string>>();
      for (const auto& n : c.sweep.norms)
        if (std::find(known_norms().begin(), known_norms().end(), n) ==
            known_norms().end())
          throw ConfigError("field 'norms': unknown norm '" + n + "'");
    }
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      if (g.contains("x_halfwidth"))
        c.sweep.grid.x_halfwidth = g.at("x_halfwidth").get<double>();
      if (g.contains("x_points"))
        c.sweep.grid.x_points = g.at("x_points").get<int>();
      if (g.contains("t_slices"))
        c.sweep.grid.t_slices = g.at("t_slices").get<int>();
      if (!(c.sweep.grid.x_halfwidth > 0.0) || c.sweep.grid.x_points < 8 ||
          c.sweep.grid.t_slices < 2)
        throw ConfigError("field 'grid': degenerate grid specification");
    }
    if (j.contains("tolerances")) {
      const auto& t = j.at("tolerances");
      if (t.contains("quad_tol"))
        c.sweep.quad_tol = t.at("quad_tol").get<double>();
      if (t.contains("eps_t")) c.sweep.eps_t = t.at("eps_t").get<double>();
      if (!(c.sweep.quad_tol >= 1e-14 && c.sweep.quad_tol <= 1e-6))
        throw ConfigError("field 'tolerances.quad_tol': must lie in [1e-14, 1e-6]");
      if (!(c.sweep.eps_t > 0.0 && c.sweep.eps_t < 0.1))
        throw ConfigError("field 'tolerances.eps_t': must lie in (0, 0.1)");
    }
    if (j.contains("seed_irrelevant") && !j.at("seed_irrelevant").get<bool>())
      throw ConfigError(
          "field 'seed_irrelevant': the pipeline has no randomness; only "
          "'true' is meaningful");
    if (j.contains("fields"))
      c.fields = j.at("fields").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(e.what());
  }
  return c;
}

inline CliConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("parse error in '") + path + "': " + e.what());
  }
  return parse_config_json(j);
}

inline void write_errors_csv(const SweepResult& r, const std::string& path) {
  CsvWriter csv(path);
  std::vector<std::string> header = {"nu"};
  header.insert(header.end(), r.columns.begin(), r.columns.end());
  csv.row(header);
  for (size_t i = 0; i < r.nus.size(); ++i) {
    std::vector<std::string> row = {format_double(r.nus[i])};
    for (double e : r.errors[i]) row.push_back(format_double(e));
    csv.row(row);
  }
}

inline nlohmann::json rates_json(const SweepResult& r) {
  nlohmann::json out;
  for (size_t c = 0; c < r.columns.size(); ++c) {
    auto tab = column_table(r, r.columns[c]);
    nlohmann::json entry;
    entry["table"] = tab;
    if (tab.size() >= 3) {
      const RateFit fit = fit_rate(tab);
      entry["exponent"] = fit.exponent;
      entry["intercept"] = fit.intercept;
      entry["r_squared"] = fit.r_squared;
    }
    out[r.columns[c]] = entry;
    if (r.columns[c] == "l1" && tab.size() >= 2) {
      const LogCorrectedFit lc = fit_log_corrected(tab);
      nlohmann::json diag;
      diag["amplitude"] = lc.amplitude;
      diag["rel_residual"] = lc.rel_residual;
      if (tab.size() >= 3) diag["power_rel_residual"] = power_fit_residual(tab);
      out["l1_logcorrected"] = diag;
    }
  }
  return out;
}

struct Gate {
  std::string path;  // e.g. rates.linf.exponent
  double lo = 0.0;
  double hi = 0.0;
};

/// Grammar: "<path> in [<lo>, <hi>]" with path rooted at the rates document
/// (a leading "rates." is accepted and stripped).
inline Gate parse_gate(const std::string& expr) {
  std::istringstream in(expr);
  Gate g;
  std::string kw, range;
  if (!(in >> g.path >> kw)) throw ConfigError("gate: cannot parse '" + expr + "'");
  if (kw != "in") throw ConfigError("gate: expected 'in' in '" + expr + "'");
  std::getline(in, range);
  const auto lb = range.find('['), comma = range.find(','), rb = range.find(']');
  if (lb == std::string::npos || comma == std::string::npos ||
      rb == std::string::npos || !(lb < comma && comma < rb))
    throw ConfigError("gate: expected '[lo, hi]' in '" + expr + "'");
  try {
    g.lo = std::stod(range.substr(lb + 1, comma - lb - 1));
    g.hi = std::stod(range.substr(comma + 1, rb - comma - 1));
  } catch (...) {
    throw ConfigError("gate: bad interval bounds in '" + expr + "'");
  }
  if (g.path.rfind("rates.", 0) == 0) g.path = g.path.substr(6);
  return g;
}

inline bool check_gate(const nlohmann::json& rates, const Gate& g,
                       double* value_out = nullptr) {
  const nlohmann::json* node = &rates;
  std::stringstream ss(g.path);
  std::string part;
  while (std::getline(ss, part, '.')) {
    if (!node->contains(part))
      throw ConfigError("gate: no field '" + part + "' in rates");
    node = &(*node)[part];
  }
  const double v = node->get<double>();
  if (value_out) *value_out = v;
  return v >= g.lo && v <= g.hi;
}

/// Tabulate diagnostic fields on a uniform grid; columns t,x,field,value.
/// U0 rows are written in inner coordinates (the t column carries T on a
/// fixed [-5, 5] span, the x column carries X); the 0-lines are always
/// included. E rows stay clear of the interval ends, where the
/// finite-difference stencil has no room.
inline void emit_profiles(const CliConfig& c, const std::string& path) {
  static const std::vector<std::string> known = {
      "u0", "u_nu", "u_app", "U0", "theta", "E", "u1", "u10"};
  if (c.fields.empty()) throw ConfigError("profiles: field 'fields' missing/empty");
  for (const auto& f : c.fields)
    if (std::find(known.begin(), known.end(), f) == known.end())
      throw ConfigError("profiles: unknown field '" + f + "'");

  const InitialDatum d = make_datum(c.sweep.datum);
  const ProfileParams P = d.profile_params();
  const double nu = c.sweep.nus.front();
  ApproxConfig acfg;
  acfg.nu = nu;
  acfg.K = c.sweep.K;
  acfg.alpha = c.sweep.alpha;
  acfg.eps_t = c.sweep.eps_t;
  acfg.quad_tol = c.sweep.quad_tol;

  const GridSpec& g = c.sweep.grid;
  auto linspace = [](double lo, double hi, int n, bool with_zero) {
    std::set<double> v;
    for (int i = 0; i < n; ++i) v.insert(lo + (hi - lo) * i / (n - 1));
    if (with_zero && lo < 0.0 && hi > 0.0) v.insert(0.0);
    return std::vector<double>(v.begin(), v.end());
  };
  const auto xs = linspace(-g.x_halfwidth, g.x_halfwidth, g.x_points, true);
  const auto ts = linspace(d.t0(), -c.sweep.eps_t, g.t_slices, false);
  const auto Ts = linspace(-5.0, 5.0, g.t_slices, true);

  struct Row {
    double t, x;
    const char* field;
    double v;
  };
  std::vector<Row> rows;
  for (const auto& f : c.fields) {
    const auto& tgrid = (f == "U0") ? Ts : ts;
    for (double t : tgrid) {
      double tE = t;  // E needs interior stencil room
      if (f == "E")
        tE = std::clamp(t, d.t0() + 0.05 * std::abs(d.t0()),
                        -std::max(2.0 * c.sweep.eps_t, 2e-5));
      for (double x : xs) {
        double v = 0.0;
        if (f == "u0")
          v = (t == d.t0()) ? d.u0(x) : entropy_solution(d, t, x);
        else if (f == "u_nu")
          v = (t == d.t0()) ? d.u0(x)
                            : reference_colehopf(d, nu, t, x, acfg.quad_tol);
        else if (f == "u_app")
          v = u_app(acfg, d, P, t, x);
        else if (f == "U0")
          v = U0(P, t, x, acfg.quad_tol);
        else if (f == "theta")
          v = cutoff_theta(acfg, P, t, x);
        else if (f == "E")
          v = residual_E(acfg, d, P, tE, x);
        else if (f == "u1")
          v = u1_exact(d, t, x);
        else if (f == "u10")
          v = u10_closed_form(P, t, x);
        rows.push_back({f == "E" ? tE : t, x, f.c_str(), v});
      }
    }
  }
  CsvWriter csv(path);
  csv.row({"t", "x", "field", "value"});
  for (const Row& r : rows)
    csv.row({format_double(r.t), format_double(r.x), r.field,
             format_double(r.v)});
}

/// Fast structural-invariant suite; prints one line per check and returns
/// the number of failures.
inline int run_selftest(std::FILE* out = stdout) {
  int failures = 0;
  auto check = [&](const char* name, bool ok) {
    std::fprintf(out, "[%s] %s\n", ok ? "PASS" : "FAIL", name);
    if (!ok) ++failures;
  };
  const InitialDatum d = make_datum("gaussian-odd");
  const ProfileParams P = d.profile_params();

  {
    const auto p = eval_profile(P, -0.7, 0.41);
    const auto q = eval_profile(P, -0.7 * 4.0, 0.41 * 8.0);
    check("profile homogeneity",
          std::abs(q.u - 2.0 * p.u) <= 1e-11 * std::max(1.0, std::abs(p.u)));
    check("sup-slope identity", eval_profile(P, -0.25, 0.0).m == 4.0);
  }
  {
    const double y = 0.21, t = -0.37;
    const double x = omega(d, t, y);
    check("hodograph roundtrip",
          std::abs(entropy_solution(d, t, x) - y) <= 1e-10);
  }
  check("first corrector initial condition",
        std::abs(u1_exact(d, d.t0(), 0.3)) <= 1e-9);
  {
    const double expect =
        std::tgamma(0.25) / (2.0 * std::pow(P.beta3 / 8.0, 0.25));
    check("quartic integral Gamma closed form",
          std::abs(quartic_laplace({0.0, 0.0, P.beta3, 0}, 1e-12) / expect -
                   1.0) <= 1e-12);
  }
  {
    ApproxConfig acfg;
    acfg.nu = 1e-3;
    check("cutoff is 0 on the outer region",
          cutoff_theta(acfg, P, -0.36, 0.0) == 0.0);
    const double da = std::pow(acfg.nu, acfg.alpha);
    check("cutoff is 1 on the inner region",
          cutoff_theta(acfg, P, -0.2 * da * da, 0.0) == 1.0);
    check("residual vanishes deep inside",
          std::abs(residual_E(acfg, d, P, -0.05 * da * da, 0.0)) <= 1e-6);
    const double ref = acfg.nu * entropy_point(d, -0.09, 0.12).uxx;
    check("residual matches nu*dxx u0 outside",
          std::abs(residual_E(acfg, d, P, -0.09, 0.12) / ref - 1.0) <= 1e-6);
  }
  {
    std::vector<std::pair<double, double>> tab;
    for (double nu : {1e-2, 1e-3, 1e-4}) tab.push_back({nu, 2.0 * nu});
    check("rate fit on a pure power law",
          std::abs(fit_rate(tab).exponent - 1.0) <= 1e-12);
  }
  return failures;
}

/// Re-fit rates from a previously written errors.csv.
inline nlohmann::json rates_from_errors_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty errors csv");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> cols;
  {
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) cols.push_back(f);
  }
  if (cols.size() < 2 || cols[0] != "nu")
    throw ConfigError("errors csv: expected header nu,<norms...>");
  SweepResult r;
  r.columns.assign(cols.begin() + 1, cols.end());
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string f;
    std::vector<double> vals;
    while (std::getline(ss, f, ',')) vals.push_back(std::stod(f));
    if (vals.size() != cols.size())
      throw ConfigError("errors csv: ragged row");
    r.nus.push_back(vals[0]);
    r.errors.push_back(std::vector<double>(vals.begin() + 1, vals.end()));
  }
  return rates_json(r);
}

}  // namespace shocklens::cli
