#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cavitybec/params.hpp"

namespace cavitybec {

using Complex = std::complex<double>;

/// Positions in the polariton vector v = (a, a^dag, b0, b0^dag, c0, c0^dag, s0, s0^dag).
namespace pol {
inline constexpr int photon = 0;
inline constexpr int b0 = 2;
inline constexpr int c0 = 4;
inline constexpr int s0 = 6;
inline constexpr int size = 8;
}  // namespace pol

/// Positions in the phonon vector w(q) = (b_q, b_-q^dag, c_q, c_-q^dag, s_q, s_-q^dag).
namespace phon {
inline constexpr int b = 0;
inline constexpr int c = 2;
inline constexpr int s = 4;
inline constexpr int size = 6;
}  // namespace phon

/// Linear dynamical matrix of a bosonic quadratic Hamiltonian, i dv/dt = matrix * v.
///
/// Rows come in (annihilation, creation) pairs, so the Bogoliubov metric is
/// diag(+1, -1, +1, -1, ...) and metric * matrix is Hermitian.
struct QuadraticForm {
  Eigen::MatrixXcd matrix;

  int modes() const { return static_cast<int>(matrix.rows()) / 2; }
  Eigen::VectorXd metric() const;
};

/// Quasi-particle modes of one sector.
///
/// Column 2j of `transform` is the annihilation part of mode j (eigenvalue +omega_j),
/// column 2j+1 its creation partner (eigenvalue -omega_j); bare operators are
/// v = transform * (xi_0, xi_0^dag, xi_1, ...). Frequencies ascend, zero modes first.
struct ModeSet {
  std::vector<double> frequencies;
  Eigen::MatrixXcd transform;
  std::vector<bool> zero_mode;
  bool stable = true;
  std::string diagnostic;

  int modes() const { return static_cast<int>(frequencies.size()); }
};

class EigensolverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Dynamical instability: the quadratic form has complex frequencies.
class InstabilityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The soft polariton could not be singled out (Goldstone mode or mixed character).
class IdentificationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Free-particle energy eps_p = p^2 (recoil units, so eps_k = 1).
inline double free_energy(double p) { return p * p; }

/// Homogeneous Bogoliubov dispersion sqrt(eps_p (eps_p + 2 gn)).
double bogoliubov_frequency(double p, double gn);

/// 2x2 dynamical block of the pair (a_p, a_-p^dag) in a homogeneous condensate.
Eigen::Matrix2cd plane_wave_bogoliubov_block(double p, double gn);

/// Unitary taking plane-wave amplitudes (a_q, a_{q+k}, a_{q-k}) to Bloch amplitudes
/// (b_q, c_q, s_q), with c = (a_+ + a_-)/sqrt2 and s = i (a_+ - a_-)/sqrt2.
Eigen::Matrix3cd bloch_rotation();

/// 6x6 quadratic form of the phonon sector q in (0, 1/2].
QuadraticForm build_phonon_matrix(double q, const ModelParams& p);

/// 8x8 quadratic form of the q = 0 polariton sector.
QuadraticForm build_polariton_matrix(const ModelParams& p);

/// Bogoliubov diagonalization preserving the bosonic metric.
///
/// Decoupled mode groups are treated separately. Each group with a positive
/// semidefinite energy matrix is diagonalized through its Hermitian square root, which
/// yields transform^dag * metric * transform = metric even for degenerate modes. Zero
/// modes are flagged and completed with a metric-orthonormal basis of the remaining
/// subspace. Indefinite groups are checked for complex frequencies and, if found, the
/// result is returned with stable = false.
ModeSet symplectic_diagonalize(const QuadraticForm& form);

/// Soft polariton: lowest non-zero polariton mode, ties broken by photon + c0 weight.
/// Throws if the candidate is not dominated by the photon and c0 components.
int identify_soft_mode(const ModeSet& polariton);

/// Fraction of |transform column 2j|^2 carried by the photon and c0 components.
double photon_c0_weight(const ModeSet& polariton, int mode);

}  // namespace cavitybec
