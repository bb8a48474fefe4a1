#include "cxho/position.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace cxho {

namespace {

void check_validity(int n, const ModelParams& params) {
  if (n < 0) throw Error(ErrorKind::InvalidParameter, "n must be non-negative");
  const double e = params.eps();
  if (e > 0 && n >= 1.0 / e)
    throw Error(ErrorKind::ValidityExceeded, "n >= 1/eps: closed form not valid");
}

cplx basis_momega(int basis, const ModelParams& params) {
  if (basis != 1 && basis != 2) throw Error(ErrorKind::InvalidParameter, "basis must be 1 or 2");
  const cplx mw = params.m_omega();
  return basis == 1 ? mw : std::conj(mw);
}

void check_ground_conditions(const ModelParams& params) {
  const cplx mw = params.m_omega();
  const double e = params.eps(), ep = params.eps_prime();
  const auto d = derived(params);
  const bool upper = e == 0.0 || mw.real() < 1.0 / e;
  if (!(ep < mw.real()) || !upper || !(d.momega_1.real() > 0) || !(d.momega_2.real() > 0))
    throw Error(ErrorKind::ConvergenceViolated,
                "need eps' < Re(m omega) < 1/eps and Re (m omega)_1,2 > 0");
}

}  // namespace

cplx hermite(int n, cplx z) {
  if (n < 0) throw Error(ErrorKind::InvalidParameter, "n must be non-negative");
  cplx h0 = 1.0;
  if (n == 0) return h0;
  cplx h1 = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    const cplx h2 = 2.0 * z * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

std::vector<cplx> eigenfunctions(int basis, int n_max, cplx q, const ModelParams& params) {
  if (n_max < 1) return {};
  check_validity(n_max - 1, params);
  const cplx mw = basis_momega(basis, params);
  const double hbar = params.hbar();
  const cplx x = std::sqrt(mw / hbar) * q;
  const cplx g = std::pow(mw / (pi * hbar), 0.25) * std::exp(-x * x / 2.0);

  // H_n(x) / sqrt(2^n n!) by its normalized recurrence.
  std::vector<cplx> out(n_max);
  cplx h0 = 1.0, h1 = std::sqrt(2.0) * x;
  out[0] = g * h0;
  if (n_max > 1) out[1] = g * h1;
  for (int n = 1; n + 1 < n_max; ++n) {
    const cplx h2 = std::sqrt(2.0 / (n + 1)) * x * h1 - std::sqrt(double(n) / (n + 1)) * h0;
    h0 = h1;
    h1 = h2;
    out[n + 1] = g * h2;
  }
  return out;
}

cplx eigenfunction(int basis, int n, cplx q, const ModelParams& params) {
  check_validity(n, params);
  return eigenfunctions(basis, n + 1, q, params)[n];
}

cplx GaussPoly::operator()(cplx q) const {
  const cplx x = q - shift;
  cplx p = 0.0;
  for (auto it = poly_coeffs.rbegin(); it != poly_coeffs.rend(); ++it) p = p * x + *it;
  return p * std::exp(-gauss_scale * x * x / 2.0);
}

cplx ground_norm(const ModelParams& params) {
  const cplx mw = params.m_omega();
  const double e = params.eps(), ep = params.eps_prime();
  return std::pow(mw * (1.0 - e * ep) / (pi * params.hbar() * (1.0 - mw * mw * e * e)), 0.25);
}

cplx ground_eps(int basis, cplx q, const ModelParams& params) {
  basis_momega(basis, params);
  return excited_eps(basis, 0, params)(q);
}

GaussPoly excited_eps(int basis, int n, const ModelParams& params) {
  basis_momega(basis, params);
  if (n < 0) throw Error(ErrorKind::InvalidParameter, "n must be non-negative");
  check_ground_conditions(params);

  const auto d = derived(params);
  const double hbar = params.hbar(), e = params.eps(), ep = params.eps_prime();
  const cplx mw = params.m_omega();
  const cplx C = ground_norm(params);

  cplx alpha, beta, c0, kappa;
  if (basis == 1) {
    alpha = d.momega_1 / hbar;
    beta = hbar / d.momega_2;
    c0 = C;
    kappa = std::sqrt(mw / (2.0 * hbar)) * (1.0 + ep / mw) / std::sqrt(1.0 - e * ep);
  } else {
    const cplx mwc = std::conj(mw);
    alpha = std::conj(d.momega_2) / hbar;
    beta = hbar / std::conj(d.momega_1);
    c0 = std::conj(C);
    kappa = std::sqrt(mwc / (2.0 * hbar)) * (1.0 - ep / mwc) / std::sqrt(1.0 - e * ep);
  }

  // (q - beta d/dq) [p(q) e^{-alpha q^2/2}] = [(1 + alpha beta) q p - beta p'] e^{-alpha q^2/2}
  std::vector<cplx> p{c0};
  const cplx ab = 1.0 + alpha * beta;
  for (int k = 1; k <= n; ++k) {
    std::vector<cplx> next(p.size() + 1, 0.0);
    for (std::size_t j = 0; j < p.size(); ++j) next[j + 1] += ab * p[j];
    for (std::size_t j = 1; j < p.size(); ++j) next[j - 1] -= beta * double(j) * p[j];
    const cplx s = kappa / std::sqrt(double(k));
    for (auto& c : next) c *= s;
    p = std::move(next);
  }
  return GaussPoly{std::move(p), alpha, 0.0};
}

cplx coherent_wavefunction(int basis, cplx lambda, cplx q, const ModelParams& params) {
  const cplx mw = basis_momega(basis, params);
  if (!params.normalizable()) throw Error(ErrorKind::NotNormalizable, "Re(m omega) <= 0");
  const double hbar = params.hbar();
  const cplx shift = lambda * std::sqrt(2.0 * hbar / mw);
  const cplx d = q - shift;
  return std::exp((lambda * lambda - std::norm(lambda)) / 2.0) * std::pow(mw / (pi * hbar), 0.25) *
         std::exp(-mw / (2.0 * hbar) * d * d);
}

ContourPath overlap_path(const ModelParams& params, int n_max, double angle, int n_nodes) {
  // Re(m omega q^2) along the ray, per unit s^2.
  const double decay = params.r() * std::cos(params.theta() + 2 * angle);
  if (!(decay > 0))
    throw Error(ErrorKind::PathInvalid, "overlap integrand does not decay along this contour");
  const double hw = 12.0 * std::sqrt(params.hbar() * std::max(n_max, 1) / decay);
  if (n_nodes <= 0) {
    // A tilted contour picks up an oscillating phase; resolve it.
    const double c = decay / params.r();
    n_nodes = static_cast<int>(std::min(4000.0, std::ceil(400.0 / (c * c))));
  }
  return rotated_path(angle, hw, n_nodes);
}

Mat cross_gram(const ModelParams& params, int n_max, const std::optional<ContourPath>& path) {
  if (!params.normalizable())
    throw Error(ErrorKind::NotNormalizable, "|theta| >= pi/2: eigenstates are not normalizable");
  if (n_max < 1) throw Error(ErrorKind::InvalidParameter, "n_max must be >= 1");
  check_validity(n_max - 1, params);

  const ContourPath p = path ? *path : overlap_path(params, n_max, -params.theta() / 2);
  Mat acc = Mat::Zero(n_max, n_max);
  Eigen::VectorXcd v(n_max);
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const auto psi = eigenfunctions(1, n_max, p.nodes[i], params);
    for (int k = 0; k < n_max; ++k) {
      if (!std::isfinite(psi[k].real()) || !std::isfinite(psi[k].imag()))
        throw Error(ErrorKind::NonFiniteSample, "wavefunction not finite on the contour");
      v(k) = psi[k];
    }
    acc.noalias() += p.weights[i] * (v * v.transpose());
  }
  return p.direction * acc;
}

GramMatrices gram_and_metric(const ModelParams& params, int n_max, Warnings* warnings) {
  if (!(params.m_omega().real() > 0) || !params.normalizable())
    throw Error(ErrorKind::NotNormalizable, "Re(m omega) <= 0");
  if (n_max < 1) throw Error(ErrorKind::InvalidParameter, "n_max must be >= 1");
  check_validity(n_max - 1, params);

  GramMatrices g;
  const ContourPath real_axis = overlap_path(params, n_max, 0.0, 600);
  g.S = Mat::Zero(n_max, n_max);
  Eigen::VectorXcd v(n_max);
  for (std::size_t i = 0; i < real_axis.nodes.size(); ++i) {
    const auto psi = eigenfunctions(1, n_max, real_axis.nodes[i], params);
    for (int k = 0; k < n_max; ++k) v(k) = psi[k];
    g.S.noalias() += real_axis.weights[i] * (v.conjugate() * v.transpose());
  }

  g.asymmetry = max_abs(g.S - g.S.adjoint());
  if (g.asymmetry > 1e-10 && warnings)
    warnings->push_back("Asymmetry: |S - S^dagger| = " + std::to_string(g.asymmetry));
  const Mat Sh = (g.S + g.S.adjoint()) / 2.0;
  g.S = Sh;

  Eigen::SelfAdjointEigenSolver<Mat> es(Sh, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
  g.condition = lo > 0 ? hi / lo : std::numeric_limits<double>::infinity();
  g.ill_conditioned = g.condition > 1e12;
  if (g.ill_conditioned && warnings)
    warnings->push_back("IllConditioned: cond(S) = " + std::to_string(g.condition));

  g.Qmat = Sh.ldlt().solve(Mat::Identity(n_max, n_max));
  Eigen::SelfAdjointEigenSolver<Mat> eq((g.Qmat + g.Qmat.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  g.min_eig_Q = eq.eigenvalues().minCoeff();

  g.cross = cross_gram(params, n_max);
  return g;
}

}  // namespace cxho
