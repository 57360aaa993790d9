// Acceptance report: one PASS/FAIL line per criterion, exit status = number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "cavitybec/damping.hpp"
#include "cavitybec/spectrum.hpp"
#include "cavitybec/vertices.hpp"

using namespace cavitybec;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Reference cavity: N_c = 1e4, kL/2pi = 1000, gn = 0.1, Delta_C = -1000, eps = 0.1, T = 0.01.
ModelParams reference() { return ModelParams{}; }

std::size_t peak_index(const std::vector<DampingPoint>& s) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i].gamma_beliaev > s[best].gamma_beliaev) best = i;
  }
  return best;
}

double max_of(const std::vector<DampingPoint>& s, double DampingPoint::*field) {
  double m = 0.0;
  for (const auto& d : s) m = std::max(m, d.*field);
  return m;
}

Outcome threshold() {
  ModelParams p = reference();
  const double dev_gn = std::abs(locate_threshold(p) / critical_coupling(p) - 1.0);
  p.gn = 0.0;
  const double dev_free = std::abs(locate_threshold(p) / critical_coupling(p) - 1.0);
  return {dev_gn < 0.1 && dev_free < 1e-3,
          fmt("relative deviation %.2e at gn=0.1, %.2e at gn=0", dev_gn, dev_free)};
}

Outcome soft_mode_endpoints(const std::vector<DampingPoint>& sweep) {
  const double w0 = sweep.front().omega_soft;
  const double dev = std::abs(w0 / std::sqrt(1.2) - 1.0);
  bool monotone = true;
  for (std::size_t i = 1; i < sweep.size(); ++i) {
    monotone &= sweep[i].omega_soft <= sweep[i - 1].omega_soft;
  }
  return {dev < 1e-6 && monotone,
          fmt("omega_soft(0) = %.10f (rel. dev %.1e), monotone %s, omega_soft(0.99) = %.4f", w0,
              dev, monotone ? "yes" : "no", sweep.back().omega_soft)};
}

Outcome band_oracle(const BandStructure& b, const ModelParams& p) {
  double worst = 0.0;
  for (std::size_t i = 0; i < b.q.size(); ++i) {
    std::array<double, 3> ref = {bogoliubov_frequency(b.q[i], p.gn),
                                 bogoliubov_frequency(1.0 - b.q[i], p.gn),
                                 bogoliubov_frequency(1.0 + b.q[i], p.gn)};
    std::sort(ref.begin(), ref.end());
    for (int m = 0; m < 3; ++m) worst = std::max(worst, std::abs(b.bands[i][m] / ref[m] - 1.0));
  }
  const double touch = band_touch_frequency(p);
  const double gap = b.bands[0][2] - b.bands[0][1];
  const bool touches = gap < 1e-3 && b.bands[0][1] < touch && b.bands[0][2] > touch;
  return {worst < 1e-10 && touches,
          fmt("max rel. deviation %.1e over %zu points, band 2/3 gap %.1e at q = %.1e", worst,
              b.q.size(), gap, b.q[0])};
}

Outcome beliaev_resonance(const std::vector<DampingPoint>& sweep, const DampingModel& model) {
  const std::size_t ip = peak_index(sweep);
  const double peak = sweep[ip].gamma_beliaev;
  int dominant = 0;
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    const double g = sweep[i].gamma_beliaev;
    const bool left = i == 0 || g > sweep[i - 1].gamma_beliaev;
    const bool right = i + 1 == sweep.size() || g > sweep[i + 1].gamma_beliaev;
    if (left && right && g > 0.5 * peak) ++dominant;
  }
  const double x = sweep[ip].eta_over_etac;
  const double g95 = model.evaluate(0.95 * critical_coupling(model.params())).gamma_beliaev;
  const double ratio = g95 / peak;
  return {dominant == 1 && std::abs(x - 0.8) <= 0.1 && ratio < 0.2,
          fmt("peak at eta/eta_c = %.4f, %d dominant maxima, gamma_B(0.95)/peak = %.3f", x,
              dominant, ratio)};
}

struct PeakMatch {
  double omega_peak;  // argmax of D_B
  double eta_from_density;
  double eta_from_rate;
  double steps;
};

// Maps the D_B argmax onto eta through the monotone soft-mode curve and compares it with
// the eta of the largest Beliaev rate, in units of the eta grid step.
PeakMatch match_peaks(const std::vector<DampingPoint>& sweep, const BandStructure& b,
                      double epsilon) {
  std::vector<double> omega;
  for (double w = 0.0; w <= sweep.front().omega_soft; w += 1e-4) omega.push_back(w);
  const PairDensity d = pair_density(b, epsilon, PairChannel::Beliaev, omega);
  PeakMatch m;
  m.omega_peak = omega[std::max_element(d.density.begin(), d.density.end()) - d.density.begin()];
  m.eta_from_density = sweep.back().eta_over_etac;
  for (std::size_t i = 1; i < sweep.size(); ++i) {
    if (sweep[i].omega_soft <= m.omega_peak) {
      const double t = (sweep[i - 1].omega_soft - m.omega_peak) /
                       (sweep[i - 1].omega_soft - sweep[i].omega_soft);
      m.eta_from_density = sweep[i - 1].eta_over_etac +
                           t * (sweep[i].eta_over_etac - sweep[i - 1].eta_over_etac);
      break;
    }
  }
  m.eta_from_rate = sweep[peak_index(sweep)].eta_over_etac;
  const double step = sweep[1].eta_over_etac - sweep[0].eta_over_etac;
  m.steps = std::abs(m.eta_from_rate - m.eta_from_density) / step;
  return m;
}

Outcome pair_density_consistency(const std::vector<DampingPoint>& sweep, const BandStructure& b,
                                 const std::vector<double>& grid) {
  const PeakMatch m = match_peaks(sweep, b, reference().epsilon);
  ModelParams narrow = reference();
  narrow.epsilon = 0.05;
  const PeakMatch n = match_peaks(sweep_eta(narrow, grid), b, narrow.epsilon);
  return {m.steps <= 1.0,
          fmt("eps=0.1: D_B argmax %.4f -> eta/eta_c %.4f, rate peak %.4f (%.2f grid steps); "
              "eps=0.05: %.2f grid steps",
              m.omega_peak, m.eta_from_density, m.eta_from_rate, m.steps, n.steps)};
}

Outcome epsilon_study(const std::vector<double>& grid) {
  const std::array<double, 3> eps = {0.05, 0.1, 0.2};
  std::array<double, 3> peak{}, w{};
  for (int k = 0; k < 3; ++k) {
    ModelParams p = reference();
    p.epsilon = eps[k];
    const auto s = sweep_eta(p, grid);
    const std::size_t i = peak_index(s);
    peak[k] = s[i].gamma_beliaev;
    w[k] = s[i].omega_soft;
  }
  const bool decreasing = peak[0] > peak[1] && peak[1] > peak[2];
  bool within = true;
  for (int k = 0; k < 3; ++k) within &= std::abs(w[k] - w[1]) < eps[k];
  return {decreasing && within,
          fmt("peaks %.3e > %.3e > %.3e; peak omega_soft %.4f, %.4f, %.4f", peak[0], peak[1],
              peak[2], w[0], w[1], w[2])};
}

Outcome temperature_laws(const std::vector<double>& grid) {
  ModelParams p = reference();
  p.temperature = 0.0;
  bool zero = true;
  for (const auto& d : sweep_eta(p, grid)) zero &= d.gamma_landau == 0.0;

  double worst = 0.0;
  double worst_t = 0.0;
  for (double t : {0.01, 0.05, 0.1}) {
    p.temperature = t;
    const auto s = sweep_eta(p, grid);
    const double r = max_of(s, &DampingPoint::gamma_landau) / max_of(s, &DampingPoint::gamma_beliaev);
    if (r > worst) {
      worst = r;
      worst_t = t;
    }
  }

  std::array<double, 3> gl{};
  const std::array<double, 3> temps = {0.2, 0.5, 1.0};
  for (int k = 0; k < 3; ++k) {
    p.temperature = temps[k];
    p.eta = 0.95 * critical_coupling(p);
    gl[k] = landau_rate(p);
  }
  const bool rising = gl[0] < gl[1] && gl[1] < gl[2];
  return {zero && worst <= 1e-2 && rising,
          fmt("T=0 exact zero %s; max gamma_L/max gamma_B up to T=0.1: %.2e (worst at T=%.2f); "
              "gamma_L(0.95) at T=0.2,0.5,1: %.2e, %.2e, %.2e",
              zero ? "yes" : "no", worst, worst_t, gl[0], gl[1], gl[2])};
}

Outcome atom_number_scaling() {
  double worst = 0.0;
  for (double t : {0.01, 0.5}) {
    for (double x : {0.3, 0.8, 0.95}) {
      ModelParams p = reference();
      p.temperature = t;
      p.eta = x * critical_coupling(p);
      const DampingPoint a = DampingModel(p).evaluate(p.eta);
      p.n_c *= 2.0;
      const DampingPoint b = DampingModel(p).evaluate(p.eta);
      worst = std::max(worst, std::abs(2.0 * b.gamma_beliaev / a.gamma_beliaev - 1.0));
      worst = std::max(worst, std::abs(2.0 * b.gamma_landau / a.gamma_landau - 1.0));
    }
  }
  return {worst < 0.01, fmt("max deviation of gamma(2 N_c)/gamma(N_c) from 1/2: %.1e", worst)};
}

Outcome structural_invariants(const std::vector<double>& grid) {
  const ModelParams p = reference();
  double metric = 0.0, pairing = 0.0;
  const auto check = [&](const QuadraticForm& f) {
    const ModeSet m = symplectic_diagonalize(f);
    const Eigen::MatrixXcd s = f.metric().cast<Complex>().asDiagonal();
    metric = std::max(metric, (m.transform.adjoint() * s * m.transform - s).cwiseAbs().maxCoeff());
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(f.matrix, false);
    std::vector<double> ev;
    for (int i = 0; i < es.eigenvalues().size(); ++i) ev.push_back(es.eigenvalues()(i).real());
    std::sort(ev.begin(), ev.end());
    const double scale = std::max(1.0, ev.back());
    for (std::size_t i = 0; i < ev.size(); ++i) {
      pairing = std::max(pairing, std::abs(ev[i] + ev[ev.size() - 1 - i]) / scale);
    }
  };
  const ZoneGrid zone = zone_grid(p.zone_points);
  for (std::size_t i = 0; i < zone.q.size(); i += 7) check(build_phonon_matrix(zone.q[i], p));
  for (double x : grid) {
    ModelParams q = p;
    q.eta = x * critical_coupling(q);
    check(build_polariton_matrix(q));
  }

  const ModeSet free = symplectic_diagonalize(build_polariton_matrix(p));
  bool decoupled = false;
  for (int j = 0; j < free.modes(); ++j) {
    const auto col = free.transform.col(2 * j);
    if (std::abs(std::abs(col(pol::photon)) - 1.0) < 1e-12 &&
        std::abs(free.frequencies[j] + effective_detuning(p)) < 1e-9) {
      decoupled = true;
    }
  }

  ModelParams bare = p;
  bare.gn = 0.0;
  bare.eta = 0.0;
  double vertex = 0.0;
  for (double q : {0.01, 0.25, 0.5}) {
    for (const auto& s : build_cubic_tensor(q, bare).amplitude) {
      vertex = std::max(vertex, s.cwiseAbs().maxCoeff());
    }
  }

  const auto a = sweep_eta(p, grid);
  const auto b = sweep_eta(p, grid);
  bool same = a.size() == b.size();
  for (std::size_t i = 0; same && i < a.size(); ++i) {
    same = a[i].omega_soft == b[i].omega_soft && a[i].gamma_beliaev == b[i].gamma_beliaev &&
           a[i].gamma_landau == b[i].gamma_landau;
  }
  return {metric < 1e-10 && pairing < 1e-9 && decoupled && vertex == 0.0 && same,
          fmt("metric defect %.1e, pairing defect %.1e, photon decoupled %s, bare vertex %.1e, "
              "repeat sweep identical %s",
              metric, pairing, decoupled ? "yes" : "no", vertex, same ? "yes" : "no")};
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const ModelParams p = reference();
  const std::vector<double> grid = default_eta_grid();
  const DampingModel model(p);
  const std::vector<DampingPoint> sweep = sweep_eta(p, grid);
  const BandStructure bands = band_structure(p);

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"threshold formula", [] { return threshold(); }},
      {"soft-mode endpoints", [&] { return soft_mode_endpoints(sweep); }},
      {"band-structure oracle", [&] { return band_oracle(bands, p); }},
      {"Beliaev resonance", [&] { return beliaev_resonance(sweep, model); }},
      {"peak/pair-density consistency",
       [&] { return pair_density_consistency(sweep, bands, grid); }},
      {"epsilon study", [&] { return epsilon_study(grid); }},
      {"temperature laws", [&] { return temperature_laws(grid); }},
      {"atom-number scaling", [] { return atom_number_scaling(); }},
      {"structural invariants", [&] { return structural_invariants(grid); }},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s  %-30s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria failed (%.1f s)\n", failures, criteria.size(), secs);
  return failures;
}
