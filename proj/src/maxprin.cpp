#include "cxho/maxprin.hpp"

#include <cmath>
#include <random>

#include "cxho/dynamics.hpp"

namespace cxho {

namespace {

StateVec kernel(const ModelParams& params, int n, double T) {
  const cplx I(0.0, 1.0);
  StateVec d(n);
  for (int k = 0; k < n; ++k) d(k) = std::exp(-I * params.omega() * (k + 0.5) * T);
  return d;
}

bool degenerate_omega(const ModelParams& params) {
  return std::abs(params.omega().imag()) < 1e-12 * std::abs(params.omega());
}

}  // namespace

cplx amplitude(const StateVec& a, const StateVec& b, double T, const ModelParams& params) {
  if (a.size() != b.size()) throw Error(ErrorKind::LengthMismatch, "state vectors differ in length");
  const StateVec d = kernel(params, static_cast<int>(a.size()), T);
  return b.dot(d.cwiseProduct(a));
}

AnalyticMax analytic_max(double T, const ModelParams& params, int n_max) {
  if (!(T > 0)) throw Error(ErrorKind::InvalidParameter, "T must be positive");
  if (n_max < 1) throw Error(ErrorKind::InvalidParameter, "n_max must be >= 1");
  AnalyticMax r;
  if (degenerate_omega(params)) {
    r.value = 1.0;
    r.degenerate = true;
    for (int n = 0; n < n_max; ++n) r.argmax.push_back(n);
  } else {
    r.value = std::exp(T / 2 * params.omega().imag());
    r.degenerate = false;
    r.argmax = {0};
  }
  return r;
}

MaximizationResult maximize(double T, const ModelParams& params, int n_max,
                            const MaximizeOptions& opts) {
  if (!(T > 0)) throw Error(ErrorKind::InvalidParameter, "T must be positive");
  if (n_max < 2) throw Error(ErrorKind::InvalidParameter, "n_max must be >= 2");

  MaximizationResult res;
  res.T = T;
  res.seed = opts.seed;
  const auto am = analytic_max(T, params, n_max);
  res.analytic_max = am.value;
  res.degenerate = am.degenerate;

  StateVec a(n_max);
  if (opts.start) {
    if (opts.start->size() != n_max)
      throw Error(ErrorKind::LengthMismatch, "start vector length differs from n_max");
    a = *opts.start;
  } else {
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> g;
    for (int k = 0; k < n_max; ++k) a(k) = cplx(g(rng), g(rng));
  }
  if (!(a.norm() > 0)) throw Error(ErrorKind::InvalidParameter, "start vector is zero");
  a.normalize();

  const StateVec d = kernel(params, n_max, T);
  const StateVec dc = d.conjugate();
  StateVec b = d.cwiseProduct(a);
  double amp = b.norm();
  b /= amp;
  res.history.push_back(amp);

  for (int it = 1; it <= opts.max_iters; ++it) {
    StateVec a2 = dc.cwiseProduct(b);
    a2.normalize();
    StateVec b2 = d.cwiseProduct(a2);
    const double amp2 = b2.norm();
    b2 /= amp2;
    const double change = (a2 - a).norm() + (b2 - b).norm();
    const double step = std::abs(amp2 - amp);
    a = a2;
    b = b2;
    amp = amp2;
    res.history.push_back(amp);
    res.iterations = it;
    if (step < opts.tol && change < opts.tol) {
      res.converged = true;
      break;
    }
  }

  // Global phase: a_0 real and non-negative, b rotated alike.
  if (std::abs(a(0)) > 0) {
    const cplx ph = std::conj(a(0)) / std::abs(a(0));
    a *= ph;
    b *= ph;
    a(0) = std::abs(a(0));
  }
  res.a = a;
  res.b = b;
  res.amplitude = amplitude(a, b, T, params);
  res.amplitude_abs = std::abs(res.amplitude);
  res.ground_overlap = std::abs(a(0));
  return res;
}

MaxWeakValues max_weak_values(const MaximizationResult& result, const FockRep& rep, double t) {
  const StateVec a = evolve_a(result.a, t, rep.params);
  const StateVec b = evolve_b(result.b, t - result.T, rep.params);
  return {weak_value(rep.q_Q, a, b), weak_value(rep.p_Q, a, b), weak_value(rep.H_Qh, a, b)};
}

}  // namespace cxho
