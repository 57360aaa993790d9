#include "cavitybec/vertices.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cavitybec {

namespace {

// Operator basis for linear forms: v_0..v_7, w_0..w_5, w_0^dag..w_5^dag.
constexpr int kPolBase = 0;
constexpr int kWBase = pol::size;
constexpr int kWDagBase = pol::size + phon::size;
constexpr int kOps = pol::size + 2 * phon::size;

using LinearOp = std::array<Complex, kOps>;

LinearOp adjoint(const LinearOp& x) {
  LinearOp out{};
  for (int mu = 0; mu < pol::size; ++mu) out[kPolBase + (mu ^ 1)] = std::conj(x[kPolBase + mu]);
  for (int a = 0; a < phon::size; ++a) {
    out[kWDagBase + a] = std::conj(x[kWBase + a]);
    out[kWBase + a] = std::conj(x[kWDagBase + a]);
  }
  return out;
}

// Plane wave with momentum sector * q + shell * k; sector 0 is the polariton set.
struct Label {
  int sector;
  int shell;
};

bool valid(Label l) { return std::abs(l.sector) <= 1 && std::abs(l.shell) <= 1; }

// Annihilator a_p expressed through the Bloch operators; see bloch_rotation().
LinearOp annihilator(Label l) {
  const double h = 1.0 / std::sqrt(2.0);
  const Complex i{0.0, 1.0};
  LinearOp x{};
  switch (l.sector) {
    case 0:
      if (l.shell == 0) {
        x[kPolBase + pol::b0] = 1.0;
      } else {
        x[kPolBase + pol::c0] = h;
        x[kPolBase + pol::s0] = -static_cast<double>(l.shell) * i * h;
      }
      break;
    case 1:
      if (l.shell == 0) {
        x[kWBase + phon::b] = 1.0;
      } else {
        x[kWBase + phon::c] = h;
        x[kWBase + phon::s] = -static_cast<double>(l.shell) * i * h;
      }
      break;
    case -1:
      // a_{-q+nk} is the adjoint of a creation entry of w(q).
      if (l.shell == 0) {
        x[kWDagBase + phon::b + 1] = 1.0;
      } else {
        x[kWDagBase + phon::c + 1] = h;
        x[kWDagBase + phon::s + 1] = -static_cast<double>(l.shell) * i * h;
      }
      break;
  }
  return x;
}

LinearOp photon_quadrature() {
  LinearOp x{};
  x[kPolBase + pol::photon] = 1.0;
  x[kPolBase + pol::photon + 1] = 1.0;
  return x;
}

// Adds coeff * x y z, keeping the v w^dag w monomials. Operators of different modes
// commute; reordering w w^dag of the same mode only produces terms linear in v, which
// shift the mean field and are dropped.
void accumulate(VertexTensor& t, Complex coeff, const LinearOp& x, const LinearOp& y,
                const LinearOp& z) {
  for (int i = 0; i < kOps; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < kOps; ++j) {
      if (y[j] == 0.0) continue;
      for (int k = 0; k < kOps; ++k) {
        if (z[k] == 0.0) continue;
        int mu = -1, alpha = -1, beta = -1;
        bool repeated = false;
        for (int idx : {i, j, k}) {
          int& slot = idx < kWBase ? mu : (idx < kWDagBase ? beta : alpha);
          repeated |= slot >= 0;
          slot = idx < kWBase ? idx : (idx < kWDagBase ? idx - kWBase : idx - kWDagBase);
        }
        if (repeated) throw std::logic_error("cubic term violates quasi-momentum conservation");
        t.amplitude[mu](alpha, beta) += coeff * x[i] * y[j] * z[k];
      }
    }
  }
}

VertexTensor empty_tensor(double q) {
  VertexTensor t;
  t.q = q;
  for (auto& slice : t.amplitude) slice.setZero();
  return t;
}

int polariton_legs(std::initializer_list<Label> labels) {
  int n = 0;
  for (Label l : labels) n += (l.sector == 0);
  return n;
}

}  // namespace

VertexTensor contact_vertex_unit(double q) {
  // (g sqrt(N_c) / L) sum_{p,p'} [a^dag_{p+p'} a_p a_p' + a^dag_p a^dag_p' a_{p+p'}],
  // in units of gn / sqrt(N_c).
  VertexTensor t = empty_tensor(q);
  std::vector<Label> labels;
  for (int s = -1; s <= 1; ++s) {
    for (int n = -1; n <= 1; ++n) labels.push_back({s, n});
  }
  for (Label p : labels) {
    for (Label pp : labels) {
      const Label r{p.sector + pp.sector, p.shell + pp.shell};
      if (!valid(r) || polariton_legs({p, pp, r}) != 1) continue;
      const LinearOp ap = annihilator(p);
      const LinearOp app = annihilator(pp);
      const LinearOp ar = annihilator(r);
      accumulate(t, 1.0, adjoint(ar), ap, app);
      accumulate(t, 1.0, adjoint(ap), adjoint(app), ar);
    }
  }
  return t;
}

VertexTensor drive_vertex_unit(double q) {
  // lambda / (sqrt2 sqrt(N_c)) (a + a^dag) sum_p (a^dag_{p+k} a_p + h.c.) over phonon p.
  VertexTensor t = empty_tensor(q);
  const LinearOp x = photon_quadrature();
  const double h = 1.0 / std::sqrt(2.0);
  for (int s : {-1, 1}) {
    for (int n : {-1, 0}) {
      const LinearOp lo = annihilator({s, n});
      const LinearOp hi = annihilator({s, n + 1});
      accumulate(t, h, x, adjoint(hi), lo);
      accumulate(t, h, x, adjoint(lo), hi);
    }
  }
  return t;
}

VertexTensor build_cubic_tensor(double q, const ModelParams& p, VertexOptions options) {
  if (!(q > 0.0) || q > 0.5) {
    throw std::invalid_argument("vertex quasi-momentum must lie in (0, k/2]");
  }
  VertexTensor t = empty_tensor(q);
  if (options.contact && p.gn != 0.0) {
    const VertexTensor c = contact_vertex_unit(q);
    for (int mu = 0; mu < pol::size; ++mu) t.amplitude[mu] += p.gn * c.amplitude[mu];
  }
  const double lambda = drive_coupling(p);
  if (options.drive && lambda != 0.0) {
    const VertexTensor d = drive_vertex_unit(q);
    for (int mu = 0; mu < pol::size; ++mu) t.amplitude[mu] += lambda * d.amplitude[mu];
  }
  t.prefactor = 1.0 / std::sqrt(p.n_c);
  return t;
}

PhononContraction contract_phonon_legs(const VertexTensor& tensor, const ModeSet& phonons) {
  if (phonons.modes() != 3) throw std::invalid_argument("phonon mode set must have three modes");
  Eigen::Matrix<Complex, 6, 3> ann, cre;
  for (int m = 0; m < 3; ++m) {
    ann.col(m) = phonons.transform.col(2 * m);
    cre.col(m) = phonons.transform.col(2 * m + 1);
  }
  PhononContraction out;
  for (int mu = 0; mu < pol::size; ++mu) {
    const VertexSlice& x = tensor.amplitude[mu];
    out.beliaev[mu] = ann.adjoint() * x * cre;
    out.landau_plus[mu] = (ann.adjoint() * x * ann).transpose();
    out.landau_minus[mu] = cre.adjoint() * x * cre;
  }
  return out;
}

DecayAmplitudes contract_polariton_leg(const PhononContraction& contraction,
                                       const Eigen::VectorXcd& soft_column, double q,
                                       const ModeSet& phonons) {
  DecayAmplitudes out;
  out.q = q;
  out.beliaev.setZero();
  out.landau_plus.setZero();
  out.landau_minus.setZero();
  for (int mu = 0; mu < pol::size; ++mu) {
    const Complex u = soft_column(mu);
    if (u == 0.0) continue;
    out.beliaev += u * contraction.beliaev[mu];
    out.landau_plus += u * contraction.landau_plus[mu];
    out.landau_minus += u * contraction.landau_minus[mu];
  }
  for (int m = 0; m < 3; ++m) out.phonon_frequencies[m] = phonons.frequencies[m];
  return out;
}

DecayAmplitudes to_decay_amplitudes(const VertexTensor& tensor, const ModeSet& polariton,
                                    const ModeSet& phonons) {
  if (!polariton.stable || !phonons.stable) {
    throw InstabilityError("decay amplitudes need dynamically stable mode sets");
  }
  const int soft = identify_soft_mode(polariton);
  return contract_polariton_leg(contract_phonon_legs(tensor, phonons),
                                polariton.transform.col(2 * soft), tensor.q, phonons);
}

}  // namespace cavitybec
