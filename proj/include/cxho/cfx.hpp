#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "cxho/params.hpp"

namespace cxho {

/// A straight, discretized contour q(s) = center + s * direction. The
/// quadrature weights are real and positive; the complex line element is
/// direction * weight.
struct ContourPath {
  std::vector<cplx> nodes;
  std::vector<double> weights;
  cplx direction{1.0, 0.0};
  double max_tangent_angle = 0.0;
};

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

/// Segment of half-width `half_width` through `center` at `angle` to the real axis.
ContourPath rotated_path(double angle, double half_width, int n_nodes = 400, cplx center = 0.0);

using CFunc = std::function<cplx(cplx)>;

cplx contour_integrate(const CFunc& f, const ContourPath& path);

struct DeltaValue {
  cplx value;
  double log_abs;   // log|value|, finite even when value under/overflows
  bool underflow;
  bool overflow;
};

struct SmearedDelta {
  cplx eps;
  cplx center{0.0, 0.0};

  SmearedDelta(cplx eps, cplx center = 0.0);
  DeltaValue operator()(cplx q) const;
};

/// sqrt(1/(4 pi eps)) exp(-q^2 / (4 eps)), principal branch.
DeltaValue delta_eval(cplx q, cplx eps);

/// L(q) = (Re q)^2 - (Im q)^2 > 0
bool delta_domain_ok(cplx q);

struct ScaleCheck {
  bool ok;
  double residual;
};

/// Compares delta(a q; eps) with sign(Re a)/a * delta(q; eps/a^2).
/// ok reports whether q lies in the convergence windows, i.e. Re(a^2 q^2 / eps) > 0.
ScaleCheck delta_scale_ok(cplx a, cplx q, cplx eps);

/// Straight smearing path through q0 whose half-width puts the Gaussian tails
/// far below double precision.
ContourPath smear_path(double angle, cplx q0, cplx eps, int n_nodes = 400);

/// Integral of f(q) delta(q - q0; eps) along path.
cplx smear(const CFunc& f, cplx q0, cplx eps, const ContourPath& path);

}  // namespace cxho
