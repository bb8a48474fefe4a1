#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cxho/fock.hpp"

namespace cxho {

/// sum_n conj(b_n) a_n e^{-i omega (n+1/2) T}
cplx amplitude(const StateVec& a, const StateVec& b, double T, const ModelParams& params);

struct AnalyticMax {
  double value;
  std::vector<int> argmax;   // indices n attaining the maximum
  bool degenerate;
};

AnalyticMax analytic_max(double T, const ModelParams& params, int n_max);

struct MaximizeOptions {
  double tol = 1e-12;
  int max_iters = 10000;
  std::uint64_t seed = 0;
  std::optional<StateVec> start;
};

struct MaximizationResult {
  StateVec a;   // at T_A = 0
  StateVec b;   // at T_B = T
  double T = 0.0;
  cplx amplitude;
  double amplitude_abs = 0.0;
  double analytic_max = 0.0;
  double ground_overlap = 0.0;
  bool degenerate = false;
  int iterations = 0;
  bool converged = false;
  std::uint64_t seed = 0;
  std::vector<double> history;   // amplitude_abs after each iteration, starting value first
};

/// Alternating normalized iteration b <- D a, a <- D^dagger b with
/// D = diag(e^{-i omega (n+1/2) T}). The reported pair has a_0 real and
/// non-negative.
MaximizationResult maximize(double T, const ModelParams& params, int n_max,
                            const MaximizeOptions& opts = {});

struct MaxWeakValues {
  cplx q_Q, p_Q, h_Qh;
};

/// Weak values of q_Q, p_Q and H_Qh between the maximizing states at time t.
MaxWeakValues max_weak_values(const MaximizationResult& result, const FockRep& rep, double t);

}  // namespace cxho
