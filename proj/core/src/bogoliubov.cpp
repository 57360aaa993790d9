#include "cavitybec/bogoliubov.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace cavitybec {

namespace {

constexpr double kZeroFrequency = 1e-9;    // |omega| below this is a zero mode
constexpr double kImaginaryTol = 1e-9;     // |Im omega| above this is an instability
constexpr double kPairTol = 1e-9;          // +omega / -omega matching, relative above 1
constexpr double kNegativeEnergyTol = 1e-12;

// Dynamical block of the sector q in the interleaved Bloch ordering
// (b_q, b_-q^dag, c_q, c_-q^dag, s_q, s_-q^dag). Built over the plane waves
// (q, q + k, q - k) and rotated; the creation partners (a_-q^dag, a_{-q-k}^dag,
// a_{-q+k}^dag) rotate with the same matrix as the annihilators.
Eigen::Matrix<Complex, 6, 6> sector_block(double q, double gn) {
  Eigen::Matrix<Complex, 6, 6> plane = Eigen::Matrix<Complex, 6, 6>::Zero();
  const double momenta[3] = {q, q + 1.0, q - 1.0};
  for (int j = 0; j < 3; ++j) {
    plane.block<2, 2>(2 * j, 2 * j) = plane_wave_bogoliubov_block(momenta[j], gn);
  }
  const Eigen::Matrix3cd r = bloch_rotation();
  Eigen::Matrix<Complex, 6, 6> t = Eigen::Matrix<Complex, 6, 6>::Zero();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      t(2 * i, 2 * j) = r(i, j);
      t(2 * i + 1, 2 * j + 1) = r(i, j);
    }
  }
  return t * plane * t.adjoint();
}

struct Mode {
  double omega = 0.0;
  Eigen::VectorXcd annihilation;
  Eigen::VectorXcd creation;
  bool zero = false;
};

struct BlockResult {
  std::vector<Mode> modes;
  bool stable = true;
  std::string diagnostic;
};

Eigen::VectorXd alternating_metric(Eigen::Index n) {
  Eigen::VectorXd s(n);
  for (Eigen::Index i = 0; i < n; ++i) s(i) = (i % 2 == 0) ? 1.0 : -1.0;
  return s;
}

// Groups of modes connected by nonzero matrix entries.
std::vector<std::vector<int>> coupled_groups(const Eigen::MatrixXcd& m) {
  const int n = static_cast<int>(m.rows()) / 2;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m.block(2 * i, 2 * j, 2, 2).cwiseAbs().maxCoeff() > 0.0) {
        parent[find(i)] = find(j);
      }
    }
  }
  std::vector<std::vector<int>> groups;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    const int root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[slot[root]].push_back(i);
  }
  return groups;
}

BlockResult unstable_block(const Eigen::MatrixXcd& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ces(m, false);
  if (ces.info() != Eigen::Success) throw EigensolverError("complex eigensolver did not converge");
  std::vector<Complex> ev(ces.eigenvalues().data(), ces.eigenvalues().data() + m.rows());
  bool complex_found = std::any_of(ev.begin(), ev.end(),
                                   [](Complex z) { return std::abs(z.imag()) > kImaginaryTol; });
  if (!complex_found) {
    throw std::domain_error("quadratic form has negative-energy modes with a real spectrum");
  }
  std::sort(ev.begin(), ev.end(), [](Complex x, Complex y) {
    return x.real() != y.real() ? x.real() > y.real() : x.imag() > y.imag();
  });
  BlockResult out;
  out.stable = false;
  std::ostringstream msg;
  msg << "complex frequencies:";
  const Eigen::Index n = m.rows() / 2;
  for (Eigen::Index j = 0; j < n; ++j) {
    Mode mode;
    mode.omega = std::max(0.0, ev[j].real());
    mode.annihilation = Eigen::VectorXcd::Unit(m.rows(), 2 * j);
    mode.creation = Eigen::VectorXcd::Unit(m.rows(), 2 * j + 1);
    out.modes.push_back(std::move(mode));
  }
  for (Complex z : ev) {
    if (std::abs(z.imag()) > kImaginaryTol) msg << ' ' << z;
  }
  out.diagnostic = msg.str();
  return out;
}

// Metric-orthonormal completion of the span of the finite-frequency columns.
bool complete_zero_modes(const Eigen::MatrixXcd& found, const Eigen::VectorXd& signs,
                         const Eigen::VectorXd& metric, int zero_pairs, std::vector<Mode>& out) {
  const Eigen::Index n = metric.size();
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(n, n);
  for (Eigen::Index j = 0; j < found.cols(); ++j) {
    proj -= signs(j) * found.col(j) * (found.col(j).adjoint() * metric.asDiagonal());
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(proj);
  const Eigen::MatrixXcd basis =
      Eigen::MatrixXcd(qr.householderQ()).leftCols(2 * zero_pairs);
  const Eigen::MatrixXcd gram = basis.adjoint() * metric.asDiagonal() * basis;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (gram + gram.adjoint()));
  if (es.info() != Eigen::Success) throw EigensolverError("zero-mode completion did not converge");
  std::vector<Eigen::VectorXcd> plus, minus;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lam = es.eigenvalues()(i);
    if (std::abs(lam) < 1e-8) return false;
    Eigen::VectorXcd col = basis * es.eigenvectors().col(i) / std::sqrt(std::abs(lam));
    (lam > 0 ? plus : minus).push_back(std::move(col));
  }
  if (static_cast<int>(plus.size()) != zero_pairs) return false;
  for (int j = 0; j < zero_pairs; ++j) {
    Mode mode;
    mode.zero = true;
    mode.annihilation = std::move(plus[j]);
    mode.creation = std::move(minus[j]);
    out.push_back(std::move(mode));
  }
  return true;
}

BlockResult diagonalize_block(const Eigen::MatrixXcd& m) {
  const Eigen::Index n = m.rows();
  const Eigen::VectorXd metric = alternating_metric(n);
  Eigen::MatrixXcd h = metric.asDiagonal() * m;
  h = 0.5 * (h + h.adjoint());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hs(h);
  if (hs.info() != Eigen::Success) throw EigensolverError("Hermitian eigensolver did not converge");
  const Eigen::VectorXd energies = hs.eigenvalues();
  const double scale = std::max(1.0, energies.cwiseAbs().maxCoeff());
  if (energies.minCoeff() < -kNegativeEnergyTol * scale) return unstable_block(m);

  // h = K^dag K; the spectrum of K metric K^dag is that of the dynamical matrix.
  const Eigen::VectorXd root = energies.cwiseMax(0.0).cwiseSqrt();
  const Eigen::MatrixXcd k = root.asDiagonal() * hs.eigenvectors().adjoint();
  Eigen::MatrixXcd w = k * metric.asDiagonal() * k.adjoint();
  w = 0.5 * (w + w.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ws(w);
  if (ws.info() != Eigen::Success) throw EigensolverError("Hermitian eigensolver did not converge");

  std::vector<std::pair<double, Eigen::VectorXcd>> pos, neg;
  int zeros = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lam = ws.eigenvalues()(i);
    if (std::abs(lam) <= kZeroFrequency) {
      ++zeros;
      continue;
    }
    // Eigenvector of the dynamical matrix with eigenvalue lam and metric norm sign(lam).
    Eigen::VectorXcd t = metric.asDiagonal() * (k.adjoint() * ws.eigenvectors().col(i));
    t /= std::sqrt(std::abs(lam));
    (lam > 0 ? pos : neg).emplace_back(std::abs(lam), std::move(t));
  }
  auto by_omega = [](const auto& x, const auto& y) { return x.first < y.first; };
  std::stable_sort(pos.begin(), pos.end(), by_omega);
  std::stable_sort(neg.begin(), neg.end(), by_omega);

  if (pos.size() != neg.size() || zeros % 2 != 0) return unstable_block(m);
  BlockResult out;
  for (std::size_t j = 0; j < pos.size(); ++j) {
    if (std::abs(pos[j].first - neg[j].first) > kPairTol * std::max(1.0, pos[j].first)) {
      out.stable = false;
      out.diagnostic = "eigenvalues do not pair as +omega/-omega";
    }
    Mode mode;
    mode.omega = pos[j].first;
    mode.annihilation = std::move(pos[j].second);
    mode.creation = std::move(neg[j].second);
    out.modes.push_back(std::move(mode));
  }
  if (zeros > 0) {
    Eigen::MatrixXcd found(n, 2 * static_cast<Eigen::Index>(out.modes.size()));
    Eigen::VectorXd signs(found.cols());
    for (std::size_t j = 0; j < out.modes.size(); ++j) {
      found.col(2 * j) = out.modes[j].annihilation;
      found.col(2 * j + 1) = out.modes[j].creation;
      signs(2 * j) = 1.0;
      signs(2 * j + 1) = -1.0;
    }
    if (!complete_zero_modes(found, signs, metric, zeros / 2, out.modes)) {
      out.stable = false;
      out.diagnostic = "zero-mode subspace has an indefinite metric";
    }
  }
  return out;
}

}  // namespace

Eigen::VectorXd QuadraticForm::metric() const { return alternating_metric(matrix.rows()); }

double bogoliubov_frequency(double p, double gn) {
  const double e = free_energy(p);
  return std::sqrt(e * (e + 2.0 * gn));
}

Eigen::Matrix2cd plane_wave_bogoliubov_block(double p, double gn) {
  const double diag = free_energy(p) + gn;
  Eigen::Matrix2cd b;
  b << diag, gn, -gn, -diag;
  return b;
}

Eigen::Matrix3cd bloch_rotation() {
  const double h = 1.0 / std::sqrt(2.0);
  const Complex i{0.0, 1.0};
  Eigen::Matrix3cd r;
  r << 1.0, 0.0, 0.0,
       0.0, h, h,
       0.0, i * h, -i * h;
  return r;
}

QuadraticForm build_phonon_matrix(double q, const ModelParams& p) {
  if (!(q > 0.0) || q > 0.5) {
    throw std::invalid_argument("phonon quasi-momentum must lie in (0, k/2]");
  }
  return {sector_block(q, p.gn)};
}

QuadraticForm build_polariton_matrix(const ModelParams& p) {
  Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(pol::size, pol::size);
  const double omega_a = -effective_detuning(p);
  f(pol::photon, pol::photon) = omega_a;
  f(pol::photon + 1, pol::photon + 1) = -omega_a;
  f.block(pol::b0, pol::b0, 6, 6) = sector_block(0.0, p.gn);

  // lambda (a + a^dag)(c0 + c0^dag)
  const double lambda = drive_coupling(p);
  for (int col : {pol::c0, pol::c0 + 1}) {
    f(pol::photon, col) = lambda;
    f(pol::photon + 1, col) = -lambda;
  }
  for (int col : {pol::photon, pol::photon + 1}) {
    f(pol::c0, col) = lambda;
    f(pol::c0 + 1, col) = -lambda;
  }
  return {f};
}

ModeSet symplectic_diagonalize(const QuadraticForm& form) {
  const Eigen::MatrixXcd& m = form.matrix;
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) {
    throw std::invalid_argument("quadratic form must be a nonempty 2M x 2M matrix");
  }
  const Eigen::VectorXd metric = form.metric();
  const Eigen::MatrixXcd h = metric.asDiagonal() * m;
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw std::invalid_argument("metric * matrix is not Hermitian");
  }

  const Eigen::Index dim = m.rows();
  std::vector<Mode> modes;
  ModeSet out;
  for (const auto& group : coupled_groups(m)) {
    const Eigen::Index gdim = 2 * static_cast<Eigen::Index>(group.size());
    std::vector<Eigen::Index> idx;
    for (int mode : group) {
      idx.push_back(2 * mode);
      idx.push_back(2 * mode + 1);
    }
    Eigen::MatrixXcd sub(gdim, gdim);
    for (Eigen::Index i = 0; i < gdim; ++i) {
      for (Eigen::Index j = 0; j < gdim; ++j) sub(i, j) = m(idx[i], idx[j]);
    }
    BlockResult res = diagonalize_block(sub);
    if (!res.stable) {
      out.stable = false;
      if (!out.diagnostic.empty()) out.diagnostic += "; ";
      out.diagnostic += res.diagnostic;
    }
    for (Mode& mode : res.modes) {
      Mode full;
      full.omega = mode.omega;
      full.zero = mode.zero;
      full.annihilation = Eigen::VectorXcd::Zero(dim);
      full.creation = Eigen::VectorXcd::Zero(dim);
      for (Eigen::Index i = 0; i < gdim; ++i) {
        full.annihilation(idx[i]) = mode.annihilation(i);
        full.creation(idx[i]) = mode.creation(i);
      }
      modes.push_back(std::move(full));
    }
  }
  std::stable_sort(modes.begin(), modes.end(), [](const Mode& a, const Mode& b) {
    if (a.zero != b.zero) return a.zero;
    return a.omega < b.omega;
  });

  out.transform.resize(dim, dim);
  for (std::size_t j = 0; j < modes.size(); ++j) {
    out.frequencies.push_back(modes[j].omega);
    out.zero_mode.push_back(modes[j].zero);
    out.transform.col(2 * j) = modes[j].annihilation;
    out.transform.col(2 * j + 1) = modes[j].creation;
  }
  return out;
}

double photon_c0_weight(const ModeSet& polariton, int mode) {
  const auto col = polariton.transform.col(2 * mode);
  const double total = col.squaredNorm();
  if (total == 0.0) return 0.0;
  double w = 0.0;
  for (int r : {pol::photon, pol::photon + 1, pol::c0, pol::c0 + 1}) w += std::norm(col(r));
  return w / total;
}

int identify_soft_mode(const ModeSet& polariton) {
  if (polariton.modes() != pol::size / 2) {
    throw std::invalid_argument("soft-mode identification needs the polariton sector");
  }
  int best = -1;
  double lowest = 0.0;
  for (int j = 0; j < polariton.modes(); ++j) {
    if (polariton.zero_mode[j]) continue;
    const double w = polariton.frequencies[j];
    if (best < 0 || w < lowest - kPairTol * std::max(1.0, lowest)) {
      best = j;
      lowest = w;
    } else if (std::abs(w - lowest) <= kPairTol * std::max(1.0, lowest) &&
               photon_c0_weight(polariton, j) > photon_c0_weight(polariton, best)) {
      best = j;
    }
  }
  if (best < 0) throw IdentificationError("only zero modes in the polariton sector");
  if (photon_c0_weight(polariton, best) <= 0.5) {
    throw IdentificationError("lowest polariton is not dominated by photon and c0");
  }
  return best;
}

}  // namespace cavitybec
