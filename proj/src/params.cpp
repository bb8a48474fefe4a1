#include "cxho/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cxho {

namespace {

constexpr double kRelTol = 1e-12;

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// arg(m) forced into [0, pi]; a negative real mass (with either sign of zero)
// sits at pi.
double mass_angle(cplx m) {
  if (m.imag() == 0.0) return m.real() > 0 ? 0.0 : pi;
  return std::arg(m);
}

void check_common(cplx m, cplx omega, double hbar, double& theta_m, double& theta_omega) {
  if (!finite(m) || !finite(omega) || !std::isfinite(hbar))
    throw Error(ErrorKind::InvalidParameter, "non-finite parameter");
  if (!(hbar > 0)) throw Error(ErrorKind::InvalidParameter, "hbar must be positive");
  if (std::abs(m) == 0.0 || std::abs(omega) == 0.0)
    throw Error(ErrorKind::InvalidParameter, "m and omega must be nonzero");

  if (m.imag() < -kRelTol * std::abs(m))
    throw Error(ErrorKind::KineticDivergence, "Im(m) < 0");
  const cplx mw2 = m * omega * omega;
  if (mw2.imag() > kRelTol * std::abs(mw2))
    throw Error(ErrorKind::PotentialDivergence, "Im(m omega^2) > 0");

  theta_m = mass_angle(m);
  if (theta_m < 0) theta_m = 0;  // Im m within tolerance of zero

  // Pick the branch of arg(omega) that lands in the parallelogram.
  const double hi = -theta_m / 2;
  const double lo = hi - pi / 2;
  double t = std::arg(omega);
  if (t > hi + kAngleTol) t -= 2 * pi;
  if (t < lo - kAngleTol || t > hi + kAngleTol)
    throw Error(ErrorKind::OutOfDomain,
                "arg(omega) outside [-theta_m/2 - pi/2, -theta_m/2]; only -omega is admissible");
  theta_omega = std::clamp(t, lo, hi);
}

}  // namespace

ModelParams validate(cplx m, cplx omega, double hbar, double eps, double eps_prime) {
  double tm = 0, tw = 0;
  check_common(m, omega, hbar, tm, tw);
  if (!std::isfinite(eps) || !std::isfinite(eps_prime) || !(eps > 0) || !(eps_prime > 0) ||
      !(eps * eps_prime < 1))
    throw Error(ErrorKind::RegulatorInvalid, "need eps > 0, eps' > 0 and eps*eps' < 1");

  ModelParams p;
  p.m_ = m;
  p.omega_ = omega;
  p.hbar_ = hbar;
  p.eps_ = eps;
  p.eps_prime_ = eps_prime;
  p.r_m_ = std::abs(m);
  p.theta_m_ = tm;
  p.r_omega_ = std::abs(omega);
  p.theta_omega_ = tw;
  return p;
}

ModelParams validate_limit(cplx m, cplx omega, double hbar) {
  double tm = 0, tw = 0;
  check_common(m, omega, hbar, tm, tw);
  ModelParams p;
  p.m_ = m;
  p.omega_ = omega;
  p.hbar_ = hbar;
  p.r_m_ = std::abs(m);
  p.theta_m_ = tm;
  p.r_omega_ = std::abs(omega);
  p.theta_omega_ = tw;
  return p;
}

std::string_view to_string(Theory t) {
  switch (t) {
    case Theory::UTT: return "UTT";
    case Theory::ITT: return "ITT";
    case Theory::FTT: return "FTT";
  }
  return "?";
}

std::string_view to_string(Potential p) {
  switch (p) {
    case Potential::HO: return "HO";
    case Potential::IHO: return "IHO";
    case Potential::FREE_IMAG: return "FREE_IMAG";
  }
  return "?";
}

PhaseClassification classify_phase(double theta_m, double theta_omega, double tol) {
  const double s = theta_m + 2 * theta_omega;
  if (!std::isfinite(theta_m) || !std::isfinite(theta_omega) || theta_m < -tol ||
      theta_m > pi + tol || s > tol || s < -pi - tol)
    throw Error(ErrorKind::OutOfDomain, "(theta_m, theta_omega) outside the allowed parallelogram");

  PhaseClassification c;
  if (std::abs(s) <= tol)
    c.region = 1;
  else if (std::abs(s + pi / 2) <= tol)
    c.region = 3;
  else if (std::abs(s + pi) <= tol)
    c.region = 5;
  else if (s > -pi / 2)
    c.region = 2;
  else
    c.region = 4;

  if (std::abs(theta_m - pi / 2) <= tol) {
    c.theory = Theory::ITT;
    c.frame_factor = cplx(0, -1);
  } else if (theta_m < pi / 2) {
    c.theory = Theory::UTT;
    c.frame_factor = cplx(1, 0);
  } else {
    c.theory = Theory::FTT;
    c.frame_factor = cplx(-1, 0);
  }

  // Potential labels per theory, indexed by region - 1.
  static constexpr Potential utt[5] = {Potential::HO, Potential::HO, Potential::FREE_IMAG,
                                       Potential::IHO, Potential::IHO};
  static constexpr Potential itt[5] = {Potential::FREE_IMAG, Potential::HO, Potential::HO,
                                       Potential::HO, Potential::FREE_IMAG};
  static constexpr Potential ftt[5] = {Potential::IHO, Potential::IHO, Potential::FREE_IMAG,
                                       Potential::HO, Potential::HO};
  const Potential* table = c.theory == Theory::UTT ? utt : c.theory == Theory::ITT ? itt : ftt;
  c.potential = table[c.region - 1];

  c.normalizable = std::abs(theta_m + theta_omega) < pi / 2 - tol;
  // Inside the parallelogram |theta| reaches pi/2 only at (0,-pi/2) and (pi,-pi/2).
  c.excluded_corner = !c.normalizable;
  return c;
}

Frame new_frame(const ModelParams& params, double tol) {
  const auto c = classify_phase(params.theta_m(), params.theta_omega(), tol);
  const cplx a = c.frame_factor;
  return {a, a * params.m(), params.omega() / a};
}

double DerivedScales::require_m_h() const {
  if (!m_h) throw Error(ErrorKind::DivisionDegenerate, "m_h undefined: cos(theta_omega) = 0");
  return *m_h;
}

double DerivedScales::require_m_a() const {
  if (!m_a) throw Error(ErrorKind::DivisionDegenerate, "m_a undefined: sin(theta_omega) = 0");
  return *m_a;
}

DerivedScales derived(const ModelParams& params) {
  DerivedScales d;
  const double rm = params.r_m(), rw = params.r_omega(), tw = params.theta_omega();
  const double c = std::cos(tw), s = std::sin(tw);
  d.m_prime = std::polar(rm, -tw);
  if (std::abs(tw + pi / 2) > kAngleTol) d.m_h = rm / c;
  d.omega_h = rw * c;
  if (std::abs(tw) > kAngleTol && std::abs(tw + pi) > kAngleTol) d.m_a = -rm / s;
  d.omega_a = -rw * s;

  const cplx mw = params.m_omega();
  const double e = params.eps(), ep = params.eps_prime();
  d.momega_1 = (mw - ep) / (1.0 - mw * e);
  d.momega_2 = (mw + ep) / (1.0 + mw * e);
  d.normalizable = params.normalizable();
  return d;
}

cplx eigenvalue(const ModelParams& params, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidParameter, "n must be non-negative");
  return params.hbar() * params.omega() * (n + 0.5);
}

std::vector<PhasePoint> phase_grid(int resolution) {
  if (resolution < 2) throw Error(ErrorKind::InvalidParameter, "resolution must be >= 2");
  std::vector<PhasePoint> out;
  out.reserve(static_cast<std::size_t>(resolution) * resolution);
  const double step = 1.0 / (resolution - 1);
  for (int i = 0; i < resolution; ++i) {
    const double tm = pi * i * step;
    for (int j = 0; j < resolution; ++j) {
      const double tw = -tm / 2 - pi / 2 + (pi / 2) * j * step;
      out.push_back({tm, tw, classify_phase(tm, tw)});
    }
  }
  return out;
}

}  // namespace cxho
