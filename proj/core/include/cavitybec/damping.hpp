#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cavitybec/bogoliubov.hpp"
#include "cavitybec/params.hpp"
#include "cavitybec/spectrum.hpp"
#include "cavitybec/vertices.hpp"

namespace cavitybec {

/// Bose-Einstein occupation 1/(exp(omega/t) - 1); zero at t = 0. Rejects omega <= 0.
double thermal_occupation(double omega, double t);

/// One point of a pump sweep. Rates are in recoil units; NaN fields with
/// stable = false mark a point where the polariton sector is unstable.
struct DampingPoint {
  double eta_over_etac = 0.0;
  double omega_soft = 0.0;
  double gamma_landau = 0.0;
  double gamma_beliaev = 0.0;
  double temperature = 0.0;
  double epsilon = 0.0;
  bool stable = true;
  std::string diagnostic;
};

/// Soft polariton frequency at the parameters' eta; throws InstabilityError above
/// threshold and IdentificationError if the soft mode is ambiguous.
double soft_mode_frequency(const ModelParams& p);

/// Pump strength at which the soft polariton loses stability, located by bisection on
/// [0, 2 critical_coupling(p)] to relative precision `tol`.
double locate_threshold(const ModelParams& p, double tol = 1e-10);

/// Golden-rule decay rates of the soft polariton.
///
/// The phonon sector does not depend on the pump, so its modes and vertex contractions
/// are computed once per zone point and reused for every eta. Only eta may differ
/// between the construction parameters and those passed to evaluate().
class DampingModel {
public:
  explicit DampingModel(const ModelParams& p, VertexOptions options = {});
  ~DampingModel();
  DampingModel(DampingModel&&) noexcept;
  DampingModel& operator=(DampingModel&&) noexcept;

  /// Rates at pump strength eta (absolute, not relative to eta_c).
  DampingPoint evaluate(double eta) const;

  const ModelParams& params() const { return params_; }

private:
  struct Zone;
  ModelParams params_;
  VertexOptions options_;
  std::unique_ptr<Zone> zone_;
};

double beliaev_rate(const ModelParams& p);
double landau_rate(const ModelParams& p);

/// Uniform grid of n points on [0, 0.99] in units of eta_c.
std::vector<double> default_eta_grid(int n = 200);

/// Rates along a grid of eta / eta_c values, in grid order. Unstable points are kept
/// and flagged instead of aborting the sweep.
std::vector<DampingPoint> sweep_eta(const ModelParams& p, const std::vector<double>& eta_grid,
                                    VertexOptions options = {});

}  // namespace cavitybec
