#include <iostream>

#include <CLI11.hpp>

#include "cavitybec/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Soft-polariton spectrum and damping of a driven cavity condensate"};
  app.set_version_flag("--version", std::string(cavitybec::version()));
  app.require_subcommand(1);

  cavitybec::RunRequest request;
  std::string config;
  const std::pair<const char*, const char*> commands[] = {
      {"sweep-eta", "soft-mode frequency and damping rates over eta/eta_c"},
      {"bands", "three lowest phonon bands on the half zone"},
      {"pair-density", "broadened two-phonon densities for decay and merging"},
      {"point", "damping rates at the configured eta"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config, "key=value parameter file")->check(CLI::ExistingFile);
    sub->add_option("--set", request.overrides, "parameter override key=value (repeatable)")
        ->allow_extra_args(false);
    sub->add_option("--out", request.out_dir, "output directory")->capture_default_str();
    sub->add_option("--grid-eta", request.grid_eta, "points of the eta/eta_c grid")
        ->capture_default_str();
    sub->add_option("--grid-q", request.grid_q, "quasi-momentum points on (0, k/2]");
    sub->add_option("--grid-omega", request.grid_omega, "frequency points for pair-density")
        ->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cavitybec::kExitConfig;
  }

  request.command = app.get_subcommands().front()->get_name();
  if (!config.empty()) request.config = config;
  return cavitybec::run(request, std::cerr);
}
