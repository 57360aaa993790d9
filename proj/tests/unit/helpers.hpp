#pragma once

#include <cmath>
#include <complex>

#include "cavitybec/params.hpp"
#include "expansion_reference.hpp"

namespace testing {

// Parameter record reproducing one symbolic reference case.
inline cavitybec::ModelParams params_for(const oracle::ExpansionCase& c) {
  cavitybec::ModelParams p;
  p.gn = c.gn;
  p.n_c = c.n_c;
  p.delta_c = c.delta_c;
  p.u0 = c.u0;
  p.eta = 2.0 * c.drive / std::sqrt(1.0 + 2.0 * c.gn);
  return p;
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace testing
