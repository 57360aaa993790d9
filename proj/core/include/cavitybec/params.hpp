#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cavitybec {

/// Raised when a parameter record, config file or override is rejected.
/// `invariant()` names the violated constraint (e.g. "nonnegative-detuning").
class ValidationError : public std::runtime_error {
public:
  ValidationError(std::string invariant, const std::string& detail)
      : std::runtime_error(invariant + ": " + detail), invariant_(std::move(invariant)) {}
  const std::string& invariant() const noexcept { return invariant_; }

private:
  std::string invariant_;
};

/// Physical inputs of the driven cavity-BEC model.
///
/// Every frequency is in units of the recoil frequency omega_R = k^2/2m, momenta are in
/// units of the cavity wavenumber k, and hbar = 1. The drive `eta` is the collective
/// pump coupling, normalized so that the normal phase becomes unstable exactly at
/// critical_coupling().
struct ModelParams {
  double delta_c = -1000.0;  ///< cavity-pump detuning Delta_C
  double u0 = 0.0;           ///< dispersive shift per atom U_0
  double eta = 0.0;          ///< collective drive amplitude
  double gn = 0.1;           ///< interaction energy N_c g / L
  double n_c = 1.0e4;        ///< condensate atom number
  double length = 1000.0;    ///< cavity length in wavelengths, kL/(2 pi)
  double temperature = 0.01; ///< k_B T
  double epsilon = 0.1;      ///< phenomenological phonon linewidth
  int zone_points = 4096;    ///< quasi-momentum grid points on (0, k/2]

  bool operator==(const ModelParams&) const = default;
};

/// Checks every invariant and returns the record unchanged; throws ValidationError
/// naming the first violated one.
ModelParams validate(const ModelParams& raw);

/// Dispersively shifted detuning delta_C = Delta_C - U_0 N_c / 2.
double effective_detuning(const ModelParams& p);

/// Pump strength at which the homogeneous phase breaks down, sqrt(-delta_C omega_R).
double critical_coupling(const ModelParams& p);

/// Excitation energy of the cos(kx) density wave, sqrt(eps_k (eps_k + 2 gn)).
double density_wave_frequency(const ModelParams& p);

/// Coefficient lambda of lambda (a + a^dag)(c_0 + c_0^dag) in the quadratic Hamiltonian.
/// Equals sqrt(N_c/2) times the single-atom drive of the cavity Hamiltonian; chosen so the
/// soft mode vanishes at eta = critical_coupling(p).
double drive_coupling(const ModelParams& p);

/// Sets one field from its textual value. Unknown keys and unparsable values throw.
void set_param(ModelParams& p, std::string_view key, std::string_view value);

/// Parses a flat `key=value` parameter file. Blank lines and `#` comments are ignored;
/// keys not naming a ModelParams field are rejected. Fields not mentioned keep their
/// value from `base`.
ModelParams read_params(std::istream& in, ModelParams base = {});

/// All fields as (key, formatted value) in declaration order.
std::vector<std::pair<std::string, std::string>> param_entries(const ModelParams& p);

/// Writes param_entries() as `key=value` lines; read_params() reads it back exactly.
void write_params(std::ostream& out, const ModelParams& p);

}  // namespace cavitybec
