#pragma once

#include <array>
#include <vector>

#include "cavitybec/bogoliubov.hpp"
#include "cavitybec/params.hpp"

namespace cavitybec {

/// Uniform quasi-momentum grid on (0, k/2] with trapezoid weights for integrands that
/// vanish at q = 0 (the implicit q = 0 node carries zero weight).
struct ZoneGrid {
  std::vector<double> q;
  std::vector<double> weight;
};

ZoneGrid zone_grid(int points);

/// Three-dimensional mode-density weight on the half zone, 24 q^2 (integrates to 1).
double density_weight(double q);

/// Lorentzian line shape (eps/pi) / (x^2 + eps^2).
double lorentzian(double x, double epsilon);

struct BandStructure {
  std::vector<double> q;
  std::vector<std::array<double, 3>> bands;  ///< ascending per q
  double gn = 0.0;
};

/// Symplectic diagonalization of the phonon sector on every zone grid point.
BandStructure band_structure(const ModelParams& p);

/// omega_B(k): frequency where the second and third bands touch, equal to the bare
/// cos(kx) density-wave frequency.
double band_touch_frequency(const ModelParams& p);

enum class PairChannel { Beliaev, Landau };

struct PairDensity {
  PairChannel channel = PairChannel::Beliaev;
  std::vector<double> omega;
  std::vector<double> density;
  double epsilon = 0.0;
  int zone_points = 0;
};

/// Evenly spaced frequency grid covering every two-phonon energy of the band structure
/// plus five linewidths.
std::vector<double> default_omega_grid(const BandStructure& bands, double epsilon, int points);

/// Lorentzian-broadened joint density of phonon pairs with the 3D weight.
/// Beliaev: sum over all band pairs (m at q, n at -q) of delta(omega - w_m - w_n).
/// Landau: sum over band pairs with w_n > w_m at the same q of delta(omega - w_n + w_m).
PairDensity pair_density(const ModelParams& p, PairChannel channel,
                         const std::vector<double>& omega);
PairDensity pair_density(const BandStructure& bands, double epsilon, PairChannel channel,
                         const std::vector<double>& omega);

}  // namespace cavitybec
