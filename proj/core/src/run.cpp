#include "cavitybec/run.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cavitybec {

namespace {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string format_row(const std::vector<double>& values) {
  std::string row;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) row += ',';
    row += format_number(values[i]);
  }
  row += '\n';
  return row;
}

void write_header(std::ostream& out, const std::string& command) {
  const auto& cols = csv_columns(command);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << content;
  f.flush();
  if (!f) throw IoError("write failed for " + path.string());
}

}  // namespace

const char* version() { return CAVITYBEC_VERSION; }

const std::vector<std::string>& csv_columns(const std::string& command) {
  static const std::map<std::string, std::vector<std::string>> columns = {
      {"sweep-eta", {"eta_over_etac", "omega_soft", "gamma_landau", "gamma_beliaev"}},
      {"bands", {"q", "omega1", "omega2", "omega3"}},
      {"pair-density", {"omega", "beliaev", "landau"}},
      {"point",
       {"eta_over_etac", "omega_soft", "gamma_landau", "gamma_beliaev", "temperature",
        "epsilon", "stable"}},
  };
  const auto it = columns.find(command);
  if (it == columns.end()) throw ValidationError("command", "unknown command '" + command + "'");
  return it->second;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_sweep_csv(std::ostream& out, const std::vector<DampingPoint>& points) {
  write_header(out, "sweep-eta");
  for (const auto& d : points) {
    out << format_row({d.eta_over_etac, d.omega_soft, d.gamma_landau, d.gamma_beliaev});
  }
}

void write_bands_csv(std::ostream& out, const BandStructure& bands) {
  write_header(out, "bands");
  for (std::size_t i = 0; i < bands.q.size(); ++i) {
    const auto& b = bands.bands[i];
    out << format_row({bands.q[i], b[0], b[1], b[2]});
  }
}

void write_pair_density_csv(std::ostream& out, const PairDensity& beliaev,
                            const PairDensity& landau) {
  if (beliaev.omega != landau.omega) {
    throw std::invalid_argument("pair densities must share one frequency grid");
  }
  write_header(out, "pair-density");
  for (std::size_t i = 0; i < beliaev.omega.size(); ++i) {
    out << format_row({beliaev.omega[i], beliaev.density[i], landau.density[i]});
  }
}

void write_point_csv(std::ostream& out, const DampingPoint& d) {
  write_header(out, "point");
  out << format_row({d.eta_over_etac, d.omega_soft, d.gamma_landau, d.gamma_beliaev,
                     d.temperature, d.epsilon, d.stable ? 1.0 : 0.0});
}

void write_manifest(std::ostream& out, const RunManifest& m) {
  out << "command=" << m.command << '\n';
  for (const auto& [key, value] : param_entries(m.params)) out << key << '=' << value << '\n';
  out << "grid_eta=" << m.grid_eta << '\n';
  out << "grid_q=" << m.grid_q << '\n';
  out << "grid_omega=" << m.grid_omega << '\n';
  out << "version=" << m.version << '\n';
  out << "wall_clock_seconds=" << format_number(m.wall_clock_seconds) << '\n';
}

std::map<std::string, std::string> read_key_values(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (line.empty() || line[0] == '#' || eq == std::string::npos) continue;
    out[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return out;
}

ModelParams resolve_params(const RunRequest& request) {
  ModelParams p;
  if (request.config) {
    std::ifstream f(*request.config);
    if (!f) throw ValidationError("config", "cannot read " + request.config->string());
    p = read_params(f, p);
  }
  for (const auto& o : request.overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("override", "expected key=value, got '" + o + "'");
    }
    set_param(p, std::string_view(o).substr(0, eq), std::string_view(o).substr(eq + 1));
  }
  if (request.grid_q) p.zone_points = *request.grid_q;
  return validate(p);
}

int run(const RunRequest& request, std::ostream& log) {
  const auto start = std::chrono::steady_clock::now();
  RunManifest manifest;
  std::ostringstream csv;
  try {
    csv_columns(request.command);
    if (request.grid_eta < 2 || request.grid_omega < 2) {
      throw ValidationError("grid", "eta and omega grids need at least two points");
    }
    manifest.command = request.command;
    manifest.params = resolve_params(request);
    manifest.grid_eta = request.grid_eta;
    manifest.grid_q = manifest.params.zone_points;
    manifest.grid_omega = request.grid_omega;
    manifest.version = version();
    const ModelParams& p = manifest.params;

    if (request.command == "sweep-eta") {
      const auto points = sweep_eta(p, default_eta_grid(request.grid_eta));
      int unstable = 0;
      for (const auto& d : points) unstable += !d.stable;
      if (unstable) log << "warning: " << unstable << " sweep points without stable soft mode\n";
      write_sweep_csv(csv, points);
    } else if (request.command == "bands") {
      write_bands_csv(csv, band_structure(p));
    } else if (request.command == "pair-density") {
      const BandStructure bands = band_structure(p);
      const auto omega = default_omega_grid(bands, p.epsilon, request.grid_omega);
      write_pair_density_csv(csv, pair_density(bands, p.epsilon, PairChannel::Beliaev, omega),
                             pair_density(bands, p.epsilon, PairChannel::Landau, omega));
    } else {
      const DampingPoint d = DampingModel(p).evaluate(p.eta);
      if (!d.stable) throw InstabilityError(d.diagnostic);
      write_point_csv(csv, d);
    }
  } catch (const ValidationError& e) {
    log << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    log << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InstabilityError& e) {
    log << "numerical instability: " << e.what() << '\n';
    return kExitInstability;
  } catch (const IdentificationError& e) {
    log << "numerical instability: " << e.what() << '\n';
    return kExitInstability;
  } catch (const EigensolverError& e) {
    log << "numerical instability: " << e.what() << '\n';
    return kExitInstability;
  }

  try {
    std::error_code ec;
    std::filesystem::create_directories(request.out_dir, ec);
    if (ec) throw IoError("cannot create " + request.out_dir.string() + ": " + ec.message());
    write_file(request.out_dir / (request.command + ".csv"), csv.str());
    manifest.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream m;
    write_manifest(m, manifest);
    write_file(request.out_dir / (request.command + ".manifest"), m.str());
  } catch (const IoError& e) {
    log << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace cavitybec
