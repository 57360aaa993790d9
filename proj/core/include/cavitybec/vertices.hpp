#pragma once

#include <array>

#include "cavitybec/bogoliubov.hpp"
#include "cavitybec/params.hpp"

namespace cavitybec {

using VertexSlice = Eigen::Matrix<Complex, 6, 6>;

/// Cubic polariton-phonon-phonon couplings of the sector pair (q, -q).
///
/// The cubic Hamiltonian restricted to one q = 0 leg and two q != 0 legs reads
///   H3 = prefactor * sum_{mu, alpha, beta} amplitude[mu](alpha, beta) v_mu w_alpha^dag w_beta
/// with v the polariton vector and w(q) the phonon vector; prefactor = 1/sqrt(N_c).
/// Every bilinear of the (q, -q) operators appears exactly once, so q runs over the
/// half zone only.
struct VertexTensor {
  double q = 0.0;
  double prefactor = 1.0;
  std::array<VertexSlice, pol::size> amplitude;
};

struct VertexOptions {
  bool contact = true;  ///< s-wave collision vertex
  bool drive = true;    ///< pump-scattering vertex with the photon leg
};

VertexTensor build_cubic_tensor(double q, const ModelParams& p, VertexOptions options = {});

/// Collision vertex for unit interaction energy (gn = 1); scales linearly in gn.
VertexTensor contact_vertex_unit(double q);

/// Pump vertex for unit drive coupling (lambda = 1); scales linearly in lambda.
VertexTensor drive_vertex_unit(double q);

/// Vertex with both phonon legs expressed through the quasi-particles of the sector q.
/// For each polariton leg mu (3x3 in band indices, bands ascending):
///   beliaev(m, n):       creates band m at q and band n at -q
///   landau_plus(m, n):   absorbs band m at q, creates band n at q
///   landau_minus(m, n):  absorbs band m at -q, creates band n at -q
struct PhononContraction {
  std::array<Eigen::Matrix3cd, pol::size> beliaev;
  std::array<Eigen::Matrix3cd, pol::size> landau_plus;
  std::array<Eigen::Matrix3cd, pol::size> landau_minus;
};

PhononContraction contract_phonon_legs(const VertexTensor& tensor, const ModeSet& phonons);

/// Matrix elements of the soft polariton decay channels at one q (without prefactor).
struct DecayAmplitudes {
  double q = 0.0;
  Eigen::Matrix3cd beliaev;
  Eigen::Matrix3cd landau_plus;
  Eigen::Matrix3cd landau_minus;
  std::array<double, 3> phonon_frequencies{};
};

/// Applies the polariton leg (column 2 * soft_mode of the polariton transform).
DecayAmplitudes contract_polariton_leg(const PhononContraction& contraction,
                                       const Eigen::VectorXcd& soft_column, double q,
                                       const ModeSet& phonons);

/// Full contraction: identifies the soft polariton and returns its decay amplitudes.
/// The -q quasi-particles are the creation partners in the q-sector transform.
/// Throws IdentificationError if the soft mode cannot be singled out and
/// InstabilityError if either mode set is unstable.
DecayAmplitudes to_decay_amplitudes(const VertexTensor& tensor, const ModeSet& polariton,
                                    const ModeSet& phonons);

}  // namespace cavitybec
