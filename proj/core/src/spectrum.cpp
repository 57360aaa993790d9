#include "cavitybec/spectrum.hpp"

#include <cmath>
#include <numbers>

#include "parallel.hpp"

namespace cavitybec {

ZoneGrid zone_grid(int points) {
  if (points < 2) throw std::invalid_argument("zone grid needs at least two points");
  ZoneGrid g;
  const double h = 0.5 / points;
  g.q.resize(points);
  g.weight.assign(points, h);
  for (int i = 0; i < points; ++i) g.q[i] = h * (i + 1);
  g.weight.back() = 0.5 * h;
  return g;
}

double density_weight(double q) { return 24.0 * q * q; }

double lorentzian(double x, double epsilon) {
  return (epsilon / std::numbers::pi) / (x * x + epsilon * epsilon);
}

BandStructure band_structure(const ModelParams& p) {
  const ZoneGrid grid = zone_grid(p.zone_points);
  BandStructure out;
  out.gn = p.gn;
  out.q = grid.q;
  out.bands.resize(grid.q.size());
  detail::parallel_for(grid.q.size(), [&](std::size_t i) {
    const ModeSet modes = symplectic_diagonalize(build_phonon_matrix(grid.q[i], p));
    if (!modes.stable) {
      throw InstabilityError("phonon sector unstable at q = " + std::to_string(grid.q[i]) + ": " +
                             modes.diagnostic);
    }
    for (int m = 0; m < 3; ++m) out.bands[i][m] = modes.frequencies[m];
  });
  return out;
}

double band_touch_frequency(const ModelParams& p) { return bogoliubov_frequency(1.0, p.gn); }

std::vector<double> default_omega_grid(const BandStructure& bands, double epsilon, int points) {
  if (points < 2) throw std::invalid_argument("omega grid needs at least two points");
  double top = 0.0;
  for (const auto& b : bands.bands) top = std::max(top, 2.0 * b[2]);
  top += 5.0 * epsilon;
  std::vector<double> omega(points);
  for (int i = 0; i < points; ++i) omega[i] = top * i / (points - 1);
  return omega;
}

PairDensity pair_density(const BandStructure& bands, double epsilon, PairChannel channel,
                         const std::vector<double>& omega) {
  const ZoneGrid grid = zone_grid(static_cast<int>(bands.q.size()));
  PairDensity out;
  out.channel = channel;
  out.omega = omega;
  out.epsilon = epsilon;
  out.zone_points = static_cast<int>(bands.q.size());
  out.density.assign(omega.size(), 0.0);
  detail::parallel_for(omega.size(), [&](std::size_t k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < grid.q.size(); ++i) {
      const auto& w = bands.bands[i];
      double local = 0.0;
      for (int m = 0; m < 3; ++m) {
        for (int n = 0; n < 3; ++n) {
          if (channel == PairChannel::Beliaev) {
            local += lorentzian(omega[k] - w[m] - w[n], epsilon);
          } else if (w[n] > w[m]) {
            local += lorentzian(omega[k] - (w[n] - w[m]), epsilon);
          }
        }
      }
      sum += grid.weight[i] * density_weight(grid.q[i]) * local;
    }
    out.density[k] = sum;
  });
  return out;
}

PairDensity pair_density(const ModelParams& p, PairChannel channel,
                         const std::vector<double>& omega) {
  return pair_density(band_structure(p), p.epsilon, channel, omega);
}

}  // namespace cavitybec
