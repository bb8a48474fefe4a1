#include "cxho/fock.hpp"

#include <cmath>

namespace cxho {

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

FockRep build(const ModelParams& params, int n_max) {
  if (n_max < 2) throw Error(ErrorKind::InvalidParameter, "n_max must be >= 2");
  if (!params.normalizable())
    throw Error(ErrorKind::NotNormalizable, "|theta| >= pi/2: eigenstates are not normalizable");

  const int N = n_max;
  const double hbar = params.hbar(), r = params.r();
  const cplx mw = params.m_omega(), w = params.omega();
  const cplx I(0.0, 1.0);

  FockRep rep;
  rep.n_max = N;
  rep.params = params;
  rep.A = Mat::Zero(N, N);
  for (int i = 0; i + 1 < N; ++i) rep.A(i, i + 1) = std::sqrt(i + 1.0);
  rep.R = rep.A.transpose();

  rep.N1 = Mat::Zero(N, N);
  rep.H = Mat::Zero(N, N);
  rep.H_dagQ = Mat::Zero(N, N);
  rep.H_Qh = Mat::Zero(N, N);
  rep.H_Qa = Mat::Zero(N, N);
  for (int n = 0; n < N; ++n) {
    rep.N1(n, n) = n;
    rep.H(n, n) = hbar * w * (n + 0.5);
    rep.H_dagQ(n, n) = hbar * std::conj(w) * (n + 0.5);
  }
  rep.H_Qh = (rep.H + rep.H_dagQ) / 2.0;
  rep.H_Qa = (rep.H - rep.H_dagQ) / 2.0;

  rep.q_new = std::sqrt(hbar / (2.0 * mw)) * (rep.A + rep.R);
  rep.p_new = -I * std::sqrt(hbar * mw / 2.0) * (rep.A - rep.R);
  // e^{i theta/2} q_new and e^{-i theta/2} p_new, with the phases absorbed.
  rep.q_Q = std::sqrt(hbar / (2.0 * r)) * (rep.A + rep.R);
  rep.p_Q = -I * std::sqrt(hbar * r / 2.0) * (rep.A - rep.R);
  return rep;
}

double commutator_defect(const FockRep& rep, bool restricted) {
  const int N = rep.n_max;
  const double hbar = rep.params.hbar();
  const cplx I(0.0, 1.0);
  const Mat Id = Mat::Identity(N, N);
  const Mat c1 = rep.A * rep.R - rep.R * rep.A - Id;
  const Mat c2 = rep.q_Q * rep.p_Q - rep.p_Q * rep.q_Q - I * hbar * Id;
  const int k = restricted ? N - 1 : N;
  return std::max(max_abs(c1.topLeftCorner(k, k)), max_abs(c2.topLeftCorner(k, k)));
}

SplitDefect qh_split_defect(const FockRep& rep) {
  const auto d = derived(rep.params);
  const double m_h = d.require_m_h();
  const double w_h = d.omega_h, w_a = d.omega_a;
  const double r = rep.params.r();
  const cplx I(0.0, 1.0);
  const int k = rep.n_max - 2;
  const Mat p2 = rep.p_Q * rep.p_Q;
  const Mat q2 = rep.q_Q * rep.q_Q;

  const Mat h_form = p2 / (2.0 * m_h) + 0.5 * m_h * w_h * w_h * q2;
  // m_a omega_a = r, so 1/m_a = omega_a/r stays finite where sin(theta_omega) = 0.
  const Mat a_form = d.m_a ? Mat(-I * (p2 / (2.0 * *d.m_a) + 0.5 * *d.m_a * w_a * w_a * q2))
                           : Mat(-I * (w_a / (2.0 * r) * p2 + 0.5 * r * w_a * q2));

  SplitDefect s{};
  s.h_defect = k > 0 ? max_abs((rep.H_Qh - h_form).topLeftCorner(k, k)) : 0.0;
  s.a_defect = k > 0 ? max_abs((rep.H_Qa - a_form).topLeftCorner(k, k)) : 0.0;
  s.tan_defect = max_abs(rep.H_Qa - I * std::tan(rep.params.theta_omega()) * rep.H_Qh);
  return s;
}

ConjDefect conjugation_defect(const FockRep& rep) {
  const double th = rep.params.theta();
  const cplx ph = std::polar(1.0, th);
  ConjDefect c{};
  c.q_defect = max_abs(rep.q_new.adjoint() - ph * rep.q_new);
  c.p_defect = max_abs(rep.p_new.adjoint() - std::conj(ph) * rep.p_new);
  return c;
}

StateVec coherent_coeffs(cplx lambda, int n_max, Warnings* warnings) {
  if (n_max < 1) throw Error(ErrorKind::InvalidParameter, "n_max must be >= 1");
  StateVec f(n_max);
  f(0) = std::exp(-std::norm(lambda) / 2.0);
  for (int n = 1; n < n_max; ++n) f(n) = f(n - 1) * lambda / std::sqrt(static_cast<double>(n));
  if (warnings && std::abs(f(n_max - 1)) >= 1e-12)
    warnings->push_back("TailTooHeavy: |f(N-1)| = " + std::to_string(std::abs(f(n_max - 1))));
  return f;
}

double coherent_tail(cplx lambda, int n_max) {
  return std::abs(coherent_coeffs(lambda, n_max)(n_max - 1));
}

cplx q_inner(const StateVec& u, const StateVec& v) {
  if (u.size() != v.size()) throw Error(ErrorKind::LengthMismatch, "state vectors differ in length");
  return u.dot(v);
}

}  // namespace cxho
