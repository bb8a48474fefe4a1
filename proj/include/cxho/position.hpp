#pragma once

#include <optional>
#include <vector>

#include "cxho/cfx.hpp"
#include "cxho/fock.hpp"

namespace cxho {

/// Physicists' Hermite polynomial H_n(z).
cplx hermite(int n, cplx z);

/// <q|n>_1 (basis 1) or <q|n>_2 (basis 2, m omega -> conj(m omega)) in the
/// eps -> 0 form. Throws ValidityExceeded when n >= 1/eps.
cplx eigenfunction(int basis, int n, cplx q, const ModelParams& params);

/// All of n = 0 .. n_max-1 at one point.
std::vector<cplx> eigenfunctions(int basis, int n_max, cplx q, const ModelParams& params);

/// sum_k coeffs[k] (q - shift)^k exp(-gauss_scale (q - shift)^2 / 2)
struct GaussPoly {
  std::vector<cplx> poly_coeffs;
  cplx gauss_scale;
  cplx shift{0.0, 0.0};

  cplx operator()(cplx q) const;
};

/// Finite-eps ground state wavefunctions with the symmetric normalization C.
cplx ground_eps(int basis, cplx q, const ModelParams& params);

/// Finite-eps excited state as an exact polynomial times Gaussian.
GaussPoly excited_eps(int basis, int n, const ModelParams& params);

/// Normalization constant C (principal fourth root).
cplx ground_norm(const ModelParams& params);

cplx coherent_wavefunction(int basis, cplx lambda, cplx q, const ModelParams& params);

/// Straight contour at `angle` wide enough for the n_max-th overlap integrand.
/// n_nodes <= 0 picks a count from how far the contour is tilted off the
/// steepest-descent direction.
ContourPath overlap_path(const ModelParams& params, int n_max, double angle, int n_nodes = 0);

/// cross[m][n] = integral of psi_1m(q) psi_1n(q), the m omega-analytic form of
/// the basis-2 bra times the basis-1 ket. Default contour is at -theta/2.
Mat cross_gram(const ModelParams& params, int n_max,
               const std::optional<ContourPath>& path = std::nullopt);

struct GramMatrices {
  Mat S;      // <m|n> between basis-1 states under the ordinary inner product
  Mat Qmat;   // S^{-1}
  Mat cross;
  double condition = 0.0;
  double asymmetry = 0.0;
  double min_eig_Q = 0.0;
  bool ill_conditioned = false;
};

GramMatrices gram_and_metric(const ModelParams& params, int n_max, Warnings* warnings = nullptr);

}  // namespace cxho
