#pragma once

#include <Eigen/Dense>

#include "cxho/params.hpp"

namespace cxho {

using Mat = Eigen::MatrixXcd;
using StateVec = Eigen::VectorXcd;

/// Operators of the truncated oscillator in |n>_1 coordinates. In these
/// coordinates the Q inner product is the plain dot product, so Q-adjoints
/// are conjugate transposes.
struct FockRep {
  int n_max = 0;
  ModelParams params;
  Mat A;       // a_1
  Mat R;       // a_2^dagger
  Mat N1;      // number operator
  Mat H;
  Mat H_dagQ;
  Mat q_new, p_new;
  Mat q_Q, p_Q;
  Mat H_Qh, H_Qa;
};

FockRep build(const ModelParams& params, int n_max);

/// max |[A,R] - 1| and |[q_Q, p_Q] - i hbar|. With restricted = true only the
/// leading (N-1) block is compared; the full matrices carry a defect of size
/// N (times hbar for the q_Q, p_Q pair) in the last diagonal entry.
double commutator_defect(const FockRep& rep, bool restricted = true);

struct SplitDefect {
  double h_defect;
  double a_defect;
  double tan_defect;
};

/// Compares H_Qh and H_Qa with their kinetic-plus-potential forms built from
/// q_Q, p_Q on the leading (N-2) block.
SplitDefect qh_split_defect(const FockRep& rep);

struct ConjDefect {
  double q_defect;
  double p_defect;
};

ConjDefect conjugation_defect(const FockRep& rep);

/// f(n) = exp(-|lambda|^2/2) lambda^n / sqrt(n!), n < n_max. A "TailTooHeavy"
/// entry is appended to warnings when |f(n_max - 1)| >= 1e-12.
StateVec coherent_coeffs(cplx lambda, int n_max, Warnings* warnings = nullptr);

/// |f(n_max - 1)|
double coherent_tail(cplx lambda, int n_max);

/// sum_n conj(u_n) v_n
cplx q_inner(const StateVec& u, const StateVec& v);

double max_abs(const Mat& m);

}  // namespace cxho
