#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cavitybec/damping.hpp"
#include "cavitybec/params.hpp"
#include "cavitybec/spectrum.hpp"

namespace cavitybec {

const char* version();

enum ExitStatus : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitInstability = 3,
  kExitIo = 4,
};

/// Column layout of every CSV the driver writes, keyed by command name.
const std::vector<std::string>& csv_columns(const std::string& command);

/// 12 significant digits; "nan" marks points without a stable soft mode.
std::string format_number(double x);

void write_sweep_csv(std::ostream& out, const std::vector<DampingPoint>& points);
void write_bands_csv(std::ostream& out, const BandStructure& bands);
void write_pair_density_csv(std::ostream& out, const PairDensity& beliaev,
                            const PairDensity& landau);
void write_point_csv(std::ostream& out, const DampingPoint& point);

struct RunRequest {
  std::string command;
  std::optional<std::filesystem::path> config;
  std::vector<std::string> overrides;  ///< "key=value", applied after the config file
  std::filesystem::path out_dir = ".";
  int grid_eta = 200;
  std::optional<int> grid_q;  ///< replaces zone_points when set
  int grid_omega = 2000;
};

/// Final inputs of a run; written next to the CSV as flat key=value lines.
struct RunManifest {
  std::string command;
  ModelParams params;
  int grid_eta = 0;
  int grid_q = 0;
  int grid_omega = 0;
  std::string version;
  double wall_clock_seconds = 0.0;
};

void write_manifest(std::ostream& out, const RunManifest& m);
std::map<std::string, std::string> read_key_values(std::istream& in);

/// Resolves parameters: defaults, then the config file, then overrides in order.
ModelParams resolve_params(const RunRequest& request);

/// Executes one command and writes <out_dir>/<command>.csv and
/// <out_dir>/<command>.manifest. Diagnostics go to `log`.
int run(const RunRequest& request, std::ostream& log);

}  // namespace cavitybec
