#pragma once

#include <complex>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include "cxho/error.hpp"

namespace cxho {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double kAngleTol = 1e-9;

/// Validated oscillator parameters. Construct through validate() or
/// validate_limit(); the fields are immutable afterwards.
class ModelParams {
 public:
  cplx m() const { return m_; }
  cplx omega() const { return omega_; }
  double hbar() const { return hbar_; }
  double eps() const { return eps_; }
  double eps_prime() const { return eps_prime_; }

  double r_m() const { return r_m_; }
  double theta_m() const { return theta_m_; }
  double r_omega() const { return r_omega_; }
  double theta_omega() const { return theta_omega_; }

  // m*omega = r e^{i theta}
  double r() const { return r_m_ * r_omega_; }
  double theta() const { return theta_m_ + theta_omega_; }
  cplx m_omega() const { return std::polar(r(), theta()); }
  cplx m_omega2() const { return m_ * omega_ * omega_; }

  /// |theta| < pi/2: the dual-normalized eigenstates and coherent states exist.
  bool normalizable() const { return std::abs(theta()) < pi / 2 - kAngleTol; }

  /// eps = eps' = 0, i.e. the regulator-free Hamiltonian.
  bool regulator_free() const { return eps_ == 0.0 && eps_prime_ == 0.0; }

 private:
  friend ModelParams validate(cplx, cplx, double, double, double);
  friend ModelParams validate_limit(cplx, cplx, double);

  cplx m_{1.0}, omega_{1.0};
  double hbar_ = 1.0, eps_ = 0.0, eps_prime_ = 0.0;
  double r_m_ = 1.0, theta_m_ = 0.0, r_omega_ = 1.0, theta_omega_ = 0.0;
};

/// Checks Im m >= 0, Im(m omega^2) <= 0, the angular parallelogram and the
/// regulators, then caches polar data. theta_omega is the representative in
/// [-theta_m/2 - pi/2, -theta_m/2] (so omega = -1 carries theta_omega = -pi).
ModelParams validate(cplx m, cplx omega, double hbar, double eps, double eps_prime);

/// Same checks, with eps = eps' = 0 (the limit Hamiltonian).
ModelParams validate_limit(cplx m, cplx omega, double hbar = 1.0);

enum class Theory { UTT, ITT, FTT };
enum class Potential { HO, IHO, FREE_IMAG };

std::string_view to_string(Theory t);
std::string_view to_string(Potential p);

struct PhaseClassification {
  Theory theory = Theory::UTT;
  int region = 1;
  Potential potential = Potential::HO;
  bool excluded_corner = false;
  bool normalizable = true;
  cplx frame_factor{1.0, 0.0};
};

/// Region from s = theta_m + 2 theta_omega, theory from theta_m, potential
/// from the sign of the real part of the frame-transformed potential.
PhaseClassification classify_phase(double theta_m, double theta_omega, double tol = kAngleTol);

struct Frame {
  cplx a;
  cplx m_new;
  cplx omega_new;
};

Frame new_frame(const ModelParams& params, double tol = kAngleTol);

struct DerivedScales {
  cplx m_prime;
  std::optional<double> m_h;      // undefined where cos(theta_omega) = 0
  double omega_h = 0.0;
  std::optional<double> m_a;      // undefined where sin(theta_omega) = 0
  double omega_a = 0.0;
  cplx momega_1;
  cplx momega_2;
  bool normalizable = true;

  /// Throws DivisionDegenerate when the value is undefined.
  double require_m_h() const;
  double require_m_a() const;
};

DerivedScales derived(const ModelParams& params);

/// lambda_n = hbar omega (n + 1/2)
cplx eigenvalue(const ModelParams& params, int n);

struct PhasePoint {
  double theta_m;
  double theta_omega;
  PhaseClassification cls;
};

/// Uniform resolution x resolution grid over the closed parallelogram,
/// row-major in theta_m then theta_omega (both ascending).
std::vector<PhasePoint> phase_grid(int resolution);

}  // namespace cxho
