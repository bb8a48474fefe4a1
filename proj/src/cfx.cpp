#include "cxho/cfx.hpp"

#include <cmath>
#include <limits>

namespace cxho {

namespace {

double legendre_with_deriv(int n, double x, double& dp) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  dp = n * (x * p1 - p0) / (x * x - 1.0);
  return p1;
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "need at least one node");
  std::vector<double> x(n), w(n);
  if (n == 1) {
    x[0] = 0.0;
    w[0] = 2.0;
    return {x, w};
  }
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      const double p = legendre_with_deriv(n, z, dp);
      const double dz = p / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    legendre_with_deriv(n, z, dp);
    const double wi = 2.0 / ((1.0 - z * z) * dp * dp);
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = wi;
    w[n - 1 - i] = wi;
  }
  if (n % 2 == 1) x[n / 2] = 0.0;
  return {x, w};
}

ContourPath rotated_path(double angle, double half_width, int n_nodes, cplx center) {
  if (!std::isfinite(angle) || std::abs(angle) >= pi / 2)
    throw Error(ErrorKind::AngleTooSteep, "contour angle must satisfy |angle| < pi/2");
  if (!(half_width > 0) || !std::isfinite(half_width))
    throw Error(ErrorKind::InvalidParameter, "half_width must be positive");
  if (n_nodes < 2) throw Error(ErrorKind::InvalidParameter, "need at least two nodes");

  auto [x, w] = gauss_legendre(n_nodes);
  ContourPath p;
  p.direction = std::polar(1.0, angle);
  p.max_tangent_angle = std::abs(angle);
  p.nodes.resize(n_nodes);
  p.weights.resize(n_nodes);
  for (int i = 0; i < n_nodes; ++i) {
    p.nodes[i] = center + half_width * x[i] * p.direction;
    p.weights[i] = half_width * w[i];
  }
  return p;
}

cplx contour_integrate(const CFunc& f, const ContourPath& path) {
  cplx sum = 0.0;
  for (std::size_t i = 0; i < path.nodes.size(); ++i) {
    const cplx v = f(path.nodes[i]);
    if (!finite(v)) throw Error(ErrorKind::NonFiniteSample, "integrand not finite on the contour");
    sum += path.weights[i] * v;
  }
  return path.direction * sum;
}

DeltaValue delta_eval(cplx q, cplx eps) {
  if (eps == cplx(0.0)) throw Error(ErrorKind::InvalidParameter, "eps must be nonzero");
  const cplx pref = std::sqrt(1.0 / (4.0 * pi * eps));
  const cplx expo = -q * q / (4.0 * eps);
  DeltaValue d{};
  d.log_abs = std::log(std::abs(pref)) + expo.real();
  constexpr double lo = -745.0, hi = 709.0;
  if (d.log_abs < lo) {
    d.underflow = true;
    d.value = 0.0;
  } else if (d.log_abs > hi) {
    d.overflow = true;
    const double inf = std::numeric_limits<double>::infinity();
    d.value = cplx(inf, 0.0);
  } else {
    d.value = pref * std::exp(expo);
  }
  return d;
}

SmearedDelta::SmearedDelta(cplx e, cplx c) : eps(e), center(c) {
  if (eps == cplx(0.0)) throw Error(ErrorKind::InvalidParameter, "eps must be nonzero");
}

DeltaValue SmearedDelta::operator()(cplx q) const { return delta_eval(q - center, eps); }

bool delta_domain_ok(cplx q) { return q.real() * q.real() - q.imag() * q.imag() > 0; }

ScaleCheck delta_scale_ok(cplx a, cplx q, cplx eps) {
  if (a == cplx(0.0)) throw Error(ErrorKind::InvalidParameter, "a must be nonzero");
  if (a.real() == 0.0) throw Error(ErrorKind::SignUndefined, "sign(Re a) undefined for Re a = 0");
  const double sgn = a.real() > 0 ? 1.0 : -1.0;
  const cplx lhs = delta_eval(a * q, eps).value;
  const cplx rhs = sgn / a * delta_eval(q, eps / (a * a)).value;
  ScaleCheck c;
  c.ok = (a * a * q * q / eps).real() > 0;
  c.residual = std::abs(lhs - rhs);
  return c;
}

ContourPath smear_path(double angle, cplx q0, cplx eps, int n_nodes) {
  const double c = std::cos(2 * angle - std::arg(eps));
  if (!(c > 0))
    throw Error(ErrorKind::PathInvalid, "Gaussian does not decay along this direction");
  return rotated_path(angle, 16.0 * std::sqrt(std::abs(eps) / c), n_nodes, q0);
}

cplx smear(const CFunc& f, cplx q0, cplx eps, const ContourPath& path) {
  if (path.max_tangent_angle >= pi / 4)
    throw Error(ErrorKind::PathInvalid, "smearing path must stay within pi/4 of the real axis");
  const SmearedDelta delta(eps, q0);
  return contour_integrate([&](cplx q) { return f(q) * delta(q).value; }, path);
}

}  // namespace cxho
