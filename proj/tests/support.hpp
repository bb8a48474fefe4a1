#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "cxho/params.hpp"

namespace testsupport {

using cxho::cplx;

inline bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

inline bool rel_close(cplx a, cplx b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

// Random admissible angle pair strictly inside the parallelogram.
inline std::pair<double, double> random_angles(std::mt19937_64& rng, double margin = 0.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double tm = margin + (cxho::pi - 2 * margin) * u(rng);
  const double tw = -tm / 2 - cxho::pi / 2 + margin + (cxho::pi / 2 - 2 * margin) * u(rng);
  return {tm, tw};
}

}  // namespace testsupport
