#include "cxho/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace cxho {

namespace {

StateVec evolve(const StateVec& v, double dt, cplx w) {
  const cplx I(0.0, 1.0);
  StateVec out(v.size());
  for (Eigen::Index n = 0; n < v.size(); ++n) out(n) = v(n) * std::exp(-I * w * (n + 0.5) * dt);
  return out;
}

}  // namespace

StateVec evolve_a(const StateVec& a0, double dt, const ModelParams& params) {
  return evolve(a0, dt, params.omega());
}

StateVec evolve_b(const StateVec& b0, double dt, const ModelParams& params) {
  return evolve(b0, dt, std::conj(params.omega()));
}

cplx coherent_lambda(cplx lambda0, double dt, Side which, const ModelParams& params) {
  const cplx I(0.0, 1.0);
  const cplx w = which == Side::A ? params.omega() : std::conj(params.omega());
  return lambda0 * std::exp(-I * w * dt);
}

StateVec coherent_state_at(cplx lambda0, double dt, Side which, int n_max,
                           const ModelParams& params, Warnings* warnings) {
  const cplx I(0.0, 1.0);
  const cplx w = which == Side::A ? params.omega() : std::conj(params.omega());
  const double wi = w.imag();
  const cplx pref =
      std::exp(-I * w * dt / 2.0) * std::exp(-std::norm(lambda0) * (1.0 - std::exp(2.0 * wi * dt)) / 2.0);
  return pref * coherent_coeffs(coherent_lambda(lambda0, dt, which, params), n_max, warnings);
}

cplx weak_value(const Mat& O, const StateVec& a, const StateVec& b) {
  if (a.size() != b.size() || O.rows() != a.size() || O.cols() != a.size())
    throw Error(ErrorKind::LengthMismatch, "operator and states differ in dimension");
  const cplx den = b.dot(a);
  if (!(std::abs(den) > 1e-300)) throw Error(ErrorKind::VanishingOverlap, "<B|A> vanishes");
  return b.dot(O * a) / den;
}

std::pair<cplx, cplx> weak_qp_closed(cplx la, cplx lb, const ModelParams& params) {
  const cplx I(0.0, 1.0);
  const cplx mw = params.m_omega();
  const double hbar = params.hbar();
  const cplx q = std::sqrt(hbar / (2.0 * mw)) * (la + std::conj(lb));
  const cplx p = -I * std::sqrt(hbar * mw / 2.0) * (la - std::conj(lb));
  return {q, p};
}

cplx coherent_overlap(cplx la, cplx lb) {
  return std::exp(-(std::norm(lb) - 2.0 * std::conj(lb) * la + std::norm(la)) / 2.0);
}

TwoStateSystem TwoStateSystem::make(StateVec a0, StateVec b0, double T_A, double T_B, FockRep rep) {
  if (a0.size() != rep.n_max || b0.size() != rep.n_max)
    throw Error(ErrorKind::LengthMismatch, "state length differs from the truncation");
  const double na = a0.norm(), nb = b0.norm();
  if (!(na > 0) || !(nb > 0)) throw Error(ErrorKind::InvalidParameter, "zero state vector");
  TwoStateSystem s;
  s.a0 = a0 / na;
  s.b0 = b0 / nb;
  s.T_A = T_A;
  s.T_B = T_B;
  s.rep = std::move(rep);
  return s;
}

StateVec TwoStateSystem::a_at(double t) const { return evolve_a(a0, t - T_A, rep.params); }
StateVec TwoStateSystem::b_at(double t) const { return evolve_b(b0, t - T_B, rep.params); }
cplx TwoStateSystem::amplitude_at(double t) const { return q_inner(b_at(t), a_at(t)); }

WeakValueSample sample_at(const TwoStateSystem& sys, double t) {
  const StateVec a = sys.a_at(t), b = sys.b_at(t);
  WeakValueSample s;
  s.t = t;
  s.amplitude = q_inner(b, a);
  s.q_new = weak_value(sys.rep.q_new, a, b);
  s.p_new = weak_value(sys.rep.p_new, a, b);
  s.q_Q = weak_value(sys.rep.q_Q, a, b);
  s.p_Q = weak_value(sys.rep.p_Q, a, b);
  s.h_Qh = weak_value(sys.rep.H_Qh, a, b);
  return s;
}

EhrenfestResidual ehrenfest_residual(const TwoStateSystem& sys, double t, double dt_fd) {
  if (!(dt_fd > 0)) throw Error(ErrorKind::InvalidParameter, "dt_fd must be positive");
  const auto& R = sys.rep;
  auto qp = [&](double s) {
    const StateVec a = sys.a_at(s), b = sys.b_at(s);
    return std::pair{weak_value(R.q_new, a, b), weak_value(R.p_new, a, b)};
  };
  const auto [q0, p0] = qp(t);
  const auto [qp1, pp1] = qp(t + dt_fd);
  const auto [qm1, pm1] = qp(t - dt_fd);
  const cplx m = R.params.m(), w = R.params.omega();
  EhrenfestResidual r;
  r.r1 = (qp1 - qm1) / (2.0 * dt_fd) - p0 / m;
  r.r2 = (pp1 - pm1) / (2.0 * dt_fd) + m * w * w * q0;
  return r;
}

std::vector<WeakValueSample> trajectory(const TwoStateSystem& sys, const std::vector<double>& times,
                                        std::vector<double>* skipped) {
  std::vector<WeakValueSample> out;
  out.reserve(times.size());
  const double lo = std::min(sys.T_A, sys.T_B), hi = std::max(sys.T_A, sys.T_B);
  for (double t : times)
    if (!(t >= lo && t <= hi))
      throw Error(ErrorKind::InvalidParameter, "sample time outside [T_A, T_B]");
  for (double t : times) {
    try {
      out.push_back(sample_at(sys, t));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::VanishingOverlap) throw;
      if (skipped) skipped->push_back(t);
    }
  }
  return out;
}

}  // namespace cxho
