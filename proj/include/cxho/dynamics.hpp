#pragma once

#include <utility>
#include <vector>

#include "cxho/fock.hpp"

namespace cxho {

enum class Side { A, B };

/// a_n e^{-i omega (n+1/2) dt}
StateVec evolve_a(const StateVec& a0, double dt, const ModelParams& params);
/// b_n e^{-i conj(omega) (n+1/2) dt}
StateVec evolve_b(const StateVec& b0, double dt, const ModelParams& params);

cplx coherent_lambda(cplx lambda0, double dt, Side which, const ModelParams& params);

/// Closed-form time-developed coherent state (prefactor times the
/// coherent coefficients of lambda(dt)).
StateVec coherent_state_at(cplx lambda0, double dt, Side which, int n_max,
                           const ModelParams& params, Warnings* warnings = nullptr);

/// <B|_Q O |A> / <B|_Q A>
cplx weak_value(const Mat& O, const StateVec& a, const StateVec& b);

/// Weak values of q_new and p_new between coherent states labelled by
/// lambda_A(t) and lambda_B(t).
std::pair<cplx, cplx> weak_qp_closed(cplx lambdaA_t, cplx lambdaB_t, const ModelParams& params);

/// Overlap of the coherent states lambda_B and lambda_A (both in basis 1
/// coordinates, B conjugated).
cplx coherent_overlap(cplx lambdaA, cplx lambdaB);

struct TwoStateSystem {
  StateVec a0;   // at T_A
  StateVec b0;   // at T_B
  double T_A = 0.0;
  double T_B = 0.0;
  FockRep rep;

  /// Normalizes a0 and b0 to unit Q-norm.
  static TwoStateSystem make(StateVec a0, StateVec b0, double T_A, double T_B, FockRep rep);

  StateVec a_at(double t) const;
  StateVec b_at(double t) const;
  cplx amplitude_at(double t) const;
};

struct WeakValueSample {
  double t = 0.0;
  cplx amplitude;
  cplx q_new, p_new, q_Q, p_Q, h_Qh;
};

WeakValueSample sample_at(const TwoStateSystem& sys, double t);

struct EhrenfestResidual {
  cplx r1;   // d<q>/dt - <p>/m
  cplx r2;   // d<p>/dt + m omega^2 <q>
};

EhrenfestResidual ehrenfest_residual(const TwoStateSystem& sys, double t, double dt_fd);

/// Samples with a vanishing amplitude are dropped; their times go to `skipped`.
std::vector<WeakValueSample> trajectory(const TwoStateSystem& sys, const std::vector<double>& times,
                                        std::vector<double>* skipped = nullptr);

}  // namespace cxho
