#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shocklens/cli.hpp"

using namespace shocklens;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitGate = 4;

void write_json(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cli::ConfigError("cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matched-expansion toolkit for small-viscosity Burgers"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".";
  int threads = 0;
  std::vector<std::string> gate_exprs;

  auto* sweep = app.add_subcommand(
      "sweep", "run a nu sweep; writes errors.csv and rates.json");
  sweep->add_option("config", config_path, "JSON config file")->required();
  sweep->add_option("--out", out_dir, "output directory");
  sweep->add_option("--threads", threads,
                    "worker threads (SHOCKLENS_THREADS overrides)");
  sweep->add_option("--gate", gate_exprs,
                    "acceptance gate, e.g. 'rates.linf.exponent in [0.22, 0.28]'");

  auto* profiles = app.add_subcommand(
      "profiles", "tabulate diagnostic fields; writes profiles.csv");
  profiles->add_option("config", config_path, "JSON config file")->required();
  profiles->add_option("--out", out_dir, "output directory");

  auto* rates = app.add_subcommand(
      "rates", "re-fit rates from an existing errors.csv");
  std::string errors_path = "errors.csv", rates_out = "rates.json";
  rates->add_option("errors", errors_path, "errors.csv from a sweep")->required();
  rates->add_option("--out", rates_out, "output rates.json path");

  auto* selftest =
      app.add_subcommand("selftest", "run the structural-invariant suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*selftest) {
      const int failures = cli::run_selftest();
      if (failures > 0) {
        std::fprintf(stderr, "selftest: %d check(s) failed\n", failures);
        return kExitNumerical;
      }
      return 0;
    }

    if (*rates) {
      nlohmann::json r;
      try {
        r = cli::rates_from_errors_csv(errors_path);
      } catch (const cli::ConfigError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitConfig;
      }
      write_json(r, rates_out);
      return 0;
    }

    cli::CliConfig cfg;
    std::vector<cli::Gate> gates;
    try {
      cfg = cli::parse_config_file(config_path);
      for (const auto& expr : gate_exprs) gates.push_back(cli::parse_gate(expr));
    } catch (const cli::ConfigError& e) {
      std::fprintf(stderr, "%s\n", e.what());
      return kExitConfig;
    }
    cfg.sweep.threads = threads;

    if (*profiles) {
      cli::emit_profiles(cfg, out_dir + "/profiles.csv");
      return 0;
    }

    // sweep
    const SweepResult result = run_sweep(cfg.sweep);
    cli::write_errors_csv(result, out_dir + "/errors.csv");
    const nlohmann::json rj = cli::rates_json(result);
    write_json(rj, out_dir + "/rates.json");

    bool gates_ok = true;
    for (const auto& g : gates) {
      double value = 0.0;
      bool ok = false;
      try {
        ok = cli::check_gate(rj, g, &value);
      } catch (const cli::ConfigError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kExitConfig;
      }
      std::fprintf(stdout, "gate %s in [%g, %g]: value %.6g -> %s\n",
                   g.path.c_str(), g.lo, g.hi, value, ok ? "pass" : "FAIL");
      gates_ok = gates_ok && ok;
    }
    return gates_ok ? 0 : kExitGate;
  } catch (const cli::ConfigError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitConfig;
  } catch (const Error& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  }
}
