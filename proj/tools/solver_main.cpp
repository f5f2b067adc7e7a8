#include "heatpen/config.hpp"
#include "heatpen/csv.hpp"
#include "heatpen/experiments.hpp"
#include "heatpen/penalty.hpp"
#include "heatpen/solver.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using heatpen::Experiment;
using heatpen::RunConfig;

void emit_error(const std::string& code, const std::string& message) {
  std::cerr << "error: code=" << code << " msg=\"" << message << "\"\n";
}

struct Overrides {
  std::string config_path;
  std::string out;
  std::string mode;
  std::string base;
  std::string u0, g, f;
  double epsilon = -1, nu = -1, t_end = -1;
  std::string epsilons;
  int nx = -1, ny = -1, nr = -1, ntheta = -1, steps = -1;
  int fine_nx = -1, fine_ny = -1, fine_nr = -1, fine_ntheta = -1, fine_steps = -1;
  int procedure = -1;
};

void add_common_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "key = value configuration file");
  cmd->add_option("--out", o.out, "output directory for CSV files");
  cmd->add_option("--epsilon", o.epsilon, "penalty parameter");
  cmd->add_option("--epsilons", o.epsilons, "comma-separated epsilon list");
  cmd->add_option("--nu", o.nu, "diffusivity");
  cmd->add_option("--t-end", o.t_end, "time horizon");
  cmd->add_option("--mode", o.mode, "all|direct|penalty|corrector");
  cmd->add_option("--procedure", o.procedure, "corrector procedure (0, 1 or 2)");
  cmd->add_option("--u0", o.u0, "initial data (built-in name)");
  cmd->add_option("--g", o.g, "boundary data (built-in name)");
  cmd->add_option("--f", o.f, "forcing (built-in name)");
  cmd->add_option("--nx", o.nx, "cells in x (1D cells on the interval)");
  cmd->add_option("--ny", o.ny, "cells in y");
  cmd->add_option("--nr", o.nr, "radial cells on the disk");
  cmd->add_option("--ntheta", o.ntheta, "angular nodes on the disk");
  cmd->add_option("--steps", o.steps, "time steps of the coarse run");
  cmd->add_option("--fine-nx", o.fine_nx, "fine-mesh cells in x");
  cmd->add_option("--fine-ny", o.fine_ny, "fine-mesh cells in y");
  cmd->add_option("--fine-nr", o.fine_nr, "fine-mesh radial cells");
  cmd->add_option("--fine-ntheta", o.fine_ntheta, "fine-mesh angular nodes");
  cmd->add_option("--fine-steps", o.fine_steps, "time steps of the fine run");
  cmd->add_option("--base", o.base, "sweep-epsilon base experiment (square|disk|oned)");
}

void apply_overrides(RunConfig& config, const Overrides& o) {
  using heatpen::apply_key_value;
  auto set = [&](const char* key, const std::string& v) {
    if (!v.empty()) apply_key_value(config, key, v);
  };
  auto set_num = [&](const char* key, double v) {
    if (v >= 0) apply_key_value(config, key, heatpen::format_number(v));
  };
  auto set_int = [&](const char* key, int v) {
    if (v >= 0) apply_key_value(config, key, std::to_string(v));
  };
  set("mode", o.mode);
  set("base", o.base);
  set("u0", o.u0);
  set("g", o.g);
  set("f", o.f);
  set("epsilons", o.epsilons);
  set_num("epsilon", o.epsilon);
  set_num("nu", o.nu);
  set_num("t_end", o.t_end);
  set_int("procedure", o.procedure);
  set_int("nx", o.nx);
  set_int("ny", o.ny);
  set_int("nr", o.nr);
  set_int("ntheta", o.ntheta);
  set_int("steps", o.steps);
  set_int("fine_nx", o.fine_nx);
  set_int("fine_ny", o.fine_ny);
  set_int("fine_nr", o.fine_nr);
  set_int("fine_ntheta", o.fine_ntheta);
  set_int("fine_steps", o.fine_steps);
  if (!o.out.empty()) config.out_dir = o.out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heat-equation experiments with incompatible initial and boundary data"};
  app.require_subcommand(1);

  struct Sub {
    Experiment experiment;
    CLI::App* cmd;
    Overrides overrides;
  };
  std::vector<Sub> subs;
  subs.push_back({Experiment::BoundaryLayer,
                  app.add_subcommand("boundary-layer",
                                     "boundary relaxation traces and remainder norms"),
                  {}});
  subs.push_back({Experiment::Square,
                  app.add_subcommand("square", "square-domain mesh-pair experiment"),
                  {}});
  subs.push_back({Experiment::Disk,
                  app.add_subcommand("disk", "disk-domain mesh-pair experiment"),
                  {}});
  subs.push_back({Experiment::OneD,
                  app.add_subcommand("oned", "1D comparison of all boundary treatments"),
                  {}});
  subs.push_back({Experiment::SweepEpsilon,
                  app.add_subcommand("sweep-epsilon", "epsilon sweep of a mesh pair"),
                  {}});
  for (auto& s : subs) add_common_flags(s.cmd, s.overrides);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    emit_error("cli", e.what());
    return 1;
  }

  try {
    for (const auto& s : subs) {
      if (!s.cmd->parsed()) continue;
      RunConfig config = heatpen::default_config(s.experiment);
      if (!s.overrides.config_path.empty())
        heatpen::apply_config_file(config, s.overrides.config_path);
      apply_overrides(config, s.overrides);
      std::optional<std::string> env;
      if (const char* v = std::getenv("SOLVER_OUT_DIR")) env = v;
      config.out_dir = heatpen::resolve_out_dir(config.out_dir, env);
      config.validate();
      if (s.experiment != Experiment::BoundaryLayer &&
          (config.mode == "all" || config.mode == "penalty") &&
          heatpen::penalty_step_warns(config.epsilon, config.t_end / config.steps)) {
        std::cerr << "warning: dt/epsilon = "
                  << (config.t_end / config.steps) / config.epsilon
                  << " > 1; the boundary relaxation update loses monotonicity\n";
      }
      const auto files = heatpen::run_experiment(config);
      for (const auto& f : files) std::cout << f << '\n';
    }
    return 0;
  } catch (const heatpen::ConfigError& e) {
    emit_error("config", e.what());
  } catch (const heatpen::CflRefusal& e) {
    emit_error("cfl", e.what());
  } catch (const std::exception& e) {
    emit_error("runtime", e.what());
  }
  return 1;
}
