#include "cavitybec/damping.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "parallel.hpp"

namespace cavitybec {

double thermal_occupation(double omega, double t) {
  if (!(omega > 0.0)) throw std::domain_error("thermal occupation needs omega > 0");
  if (t < 0.0) throw std::domain_error("temperature must be nonnegative");
  if (t == 0.0) return 0.0;
  return 1.0 / std::expm1(omega / t);
}

double soft_mode_frequency(const ModelParams& p) {
  const ModeSet modes = symplectic_diagonalize(build_polariton_matrix(p));
  if (!modes.stable) throw InstabilityError("polariton sector unstable: " + modes.diagnostic);
  return modes.frequencies[identify_soft_mode(modes)];
}

double locate_threshold(const ModelParams& p, double tol) {
  const auto below = [&](double eta) {
    ModelParams q = p;
    q.eta = eta;
    try {
      return soft_mode_frequency(q) > 0.0;
    } catch (const InstabilityError&) {
      return false;
    } catch (const IdentificationError&) {
      return false;
    }
  };
  double lo = 0.0;
  double hi = 2.0 * critical_coupling(p);
  if (!below(lo)) throw InstabilityError("soft mode unstable without pump");
  if (below(hi)) throw InstabilityError("no threshold below twice the estimate");
  while (hi - lo > tol * hi) {
    const double mid = 0.5 * (lo + hi);
    (below(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

struct DampingModel::Zone {
  std::vector<double> q;
  std::vector<double> measure;  // trapezoid weight times 24 q^2
  std::vector<std::array<double, 3>> omega;
  std::vector<std::array<double, 3>> occupation;
  std::vector<PhononContraction> contact;  // already scaled by gn
  std::vector<PhononContraction> drive;    // unit drive coupling
};

DampingModel::DampingModel(const ModelParams& p, VertexOptions options)
    : params_(validate(p)), options_(options), zone_(std::make_unique<Zone>()) {
  const ZoneGrid grid = zone_grid(params_.zone_points);
  Zone& z = *zone_;
  const std::size_t n = grid.q.size();
  z.q = grid.q;
  z.measure.resize(n);
  z.omega.resize(n);
  z.occupation.resize(n);
  z.contact.resize(n);
  z.drive.resize(n);
  detail::parallel_for(n, [&](std::size_t i) {
    const double q = grid.q[i];
    const ModeSet modes = symplectic_diagonalize(build_phonon_matrix(q, params_));
    if (!modes.stable) {
      throw InstabilityError("phonon sector unstable at q = " + std::to_string(q));
    }
    z.measure[i] = grid.weight[i] * density_weight(q);
    for (int m = 0; m < 3; ++m) {
      z.omega[i][m] = modes.frequencies[m];
      z.occupation[i][m] = thermal_occupation(modes.frequencies[m], params_.temperature);
    }
    VertexTensor c = contact_vertex_unit(q);
    for (auto& slice : c.amplitude) slice *= params_.gn;
    z.contact[i] = contract_phonon_legs(c, modes);
    z.drive[i] = contract_phonon_legs(drive_vertex_unit(q), modes);
  });
}

DampingModel::~DampingModel() = default;
DampingModel::DampingModel(DampingModel&&) noexcept = default;
DampingModel& DampingModel::operator=(DampingModel&&) noexcept = default;

DampingPoint DampingModel::evaluate(double eta) const {
  ModelParams p = params_;
  p.eta = eta;
  DampingPoint out;
  out.eta_over_etac = eta / critical_coupling(p);
  out.temperature = p.temperature;
  out.epsilon = p.epsilon;

  const ModeSet polariton = symplectic_diagonalize(build_polariton_matrix(p));
  int soft = -1;
  if (!polariton.stable) {
    out.diagnostic = "polariton sector unstable: " + polariton.diagnostic;
  } else {
    try {
      soft = identify_soft_mode(polariton);
    } catch (const IdentificationError& e) {
      out.diagnostic = e.what();
    }
  }
  if (soft < 0) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out.stable = false;
    out.omega_soft = out.gamma_landau = out.gamma_beliaev = nan;
    return out;
  }

  const double ws = polariton.frequencies[soft];
  const Eigen::VectorXcd u = polariton.transform.col(2 * soft);
  const double lambda = options_.drive ? drive_coupling(p) : 0.0;
  const double eps = p.epsilon;
  const Zone& z = *zone_;

  double beliaev = 0.0;
  double landau = 0.0;
  for (std::size_t i = 0; i < z.q.size(); ++i) {
    Eigen::Matrix3cd mb = Eigen::Matrix3cd::Zero();
    Eigen::Matrix3cd lp = Eigen::Matrix3cd::Zero();
    Eigen::Matrix3cd lm = Eigen::Matrix3cd::Zero();
    for (int mu = 0; mu < pol::size; ++mu) {
      if (u(mu) == 0.0) continue;
      if (options_.contact) {
        mb += u(mu) * z.contact[i].beliaev[mu];
        lp += u(mu) * z.contact[i].landau_plus[mu];
        lm += u(mu) * z.contact[i].landau_minus[mu];
      }
      if (lambda != 0.0) {
        const Complex s = lambda * u(mu);
        mb += s * z.drive[i].beliaev[mu];
        lp += s * z.drive[i].landau_plus[mu];
        lm += s * z.drive[i].landau_minus[mu];
      }
    }
    const auto& w = z.omega[i];
    const auto& nb = z.occupation[i];
    double b = 0.0;
    double l = 0.0;
    for (int m = 0; m < 3; ++m) {
      for (int n = 0; n < 3; ++n) {
        b += std::norm(mb(m, n)) * lorentzian(ws - w[m] - w[n], eps) * (1.0 + nb[m] + nb[n]);
        if (w[n] > w[m]) {
          const double occ = nb[m] - nb[n];
          if (occ > 0.0) {
            l += (std::norm(lp(m, n)) + std::norm(lm(m, n))) *
                 lorentzian(ws + w[m] - w[n], eps) * occ;
          }
        }
      }
    }
    beliaev += z.measure[i] * b;
    landau += z.measure[i] * l;
  }
  const double scale = 2.0 * std::numbers::pi / p.n_c;
  out.omega_soft = ws;
  out.gamma_beliaev = scale * beliaev;
  out.gamma_landau = scale * landau;
  return out;
}

double beliaev_rate(const ModelParams& p) {
  const DampingPoint d = DampingModel(p).evaluate(p.eta);
  if (!d.stable) throw InstabilityError(d.diagnostic);
  return d.gamma_beliaev;
}

double landau_rate(const ModelParams& p) {
  const DampingPoint d = DampingModel(p).evaluate(p.eta);
  if (!d.stable) throw InstabilityError(d.diagnostic);
  return d.gamma_landau;
}

std::vector<double> default_eta_grid(int n) {
  if (n < 2) throw std::invalid_argument("eta grid needs at least two points");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = 0.99 * i / (n - 1);
  return g;
}

std::vector<DampingPoint> sweep_eta(const ModelParams& p, const std::vector<double>& eta_grid,
                                    VertexOptions options) {
  for (double x : eta_grid) {
    if (!(x >= 0.0) || !(x < 1.0)) {
      throw std::invalid_argument("eta grid must lie in [0, eta_c)");
    }
  }
  const DampingModel model(p, options);
  const double etac = critical_coupling(model.params());
  std::vector<DampingPoint> out(eta_grid.size());
  detail::parallel_for(eta_grid.size(), [&](std::size_t i) {
    out[i] = model.evaluate(eta_grid[i] * etac);
    out[i].eta_over_etac = eta_grid[i];
  }, 1);
  return out;
}

}  // namespace cavitybec
