#include <doctest.h>

#include <random>

#include "cxho/position.hpp"
#include "support.hpp"

using namespace cxho;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidParameter;
}

ModelParams P(cplx m, cplx w, double e = 1e-3, double ep = 1e-3, double hbar = 1.0) {
  return validate(m, w, hbar, e, ep);
}

// Coefficients of e^{z^2/2} (z - d/dz)^n e^{-z^2/2}: each step maps p to 2 z p - p'.
std::vector<double> hermite_by_operator(int n) {
  std::vector<double> p{1.0};
  for (int k = 0; k < n; ++k) {
    std::vector<double> q(p.size() + 1, 0.0);
    for (std::size_t j = 0; j < p.size(); ++j) q[j + 1] += 2 * p[j];
    for (std::size_t j = 1; j < p.size(); ++j) q[j - 1] -= j * p[j];
    p = q;
  }
  return p;
}

// Coefficients from H_{n+1} = 2 z H_n - 2 n H_{n-1}.
std::vector<double> hermite_by_recurrence(int n) {
  std::vector<double> h0{1.0}, h1{0.0, 2.0};
  if (n == 0) return h0;
  for (int k = 1; k < n; ++k) {
    std::vector<double> h2(h1.size() + 1, 0.0);
    for (std::size_t j = 0; j < h1.size(); ++j) h2[j + 1] += 2 * h1[j];
    for (std::size_t j = 0; j < h0.size(); ++j) h2[j] -= 2.0 * k * h0[j];
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

cplx horner(const std::vector<double>& c, cplx z) {
  cplx s = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * z + *it;
  return s;
}

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("hermite values") {
  CHECK(std::abs(hermite(2, cplx(1, 1)) - cplx(-2, 8)) < 1e-14);
  CHECK(hermite(0, cplx(3, -7)) == cplx(1.0));
  CHECK(hermite(3, 0.0) == cplx(0.0));
  CHECK(kind_of([] { hermite(-1, 0.0); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("hermite recurrence equals the operator definition") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int n = 0; n <= 8; ++n) {
    const auto a = hermite_by_operator(n);
    const auto b = hermite_by_recurrence(n);
    CHECK(a == b);
    for (int i = 0; i < 20; ++i) {
      const cplx z(u(rng), u(rng));
      CHECK(testsupport::rel_close(hermite(n, z), horner(a, z), 1e-12));
    }
  }
}

TEST_CASE("eigenfunction values") {
  const auto p = P(1.0, 1.0);
  CHECK(std::abs(eigenfunction(1, 0, 0.0, p) - std::pow(pi, -0.25)) < 1e-15);
  CHECK(std::abs(eigenfunction(1, 0, 0.0, p) - 0.751126) < 1e-6);

  // Direct formula with factorials and the Hermite polynomial.
  const auto p2 = P(std::polar(1.3, 0.4), std::polar(0.8, -0.9), 1e-3, 1e-3, 0.6);
  const cplx mw = p2.m_omega();
  for (int n = 0; n < 10; ++n) {
    const cplx q(0.7, -0.2);
    const cplx x = std::sqrt(mw / 0.6) * q;
    const cplx want = std::pow(mw / (pi * 0.6), 0.25) / std::sqrt(factorial(n)) *
                      std::pow(1 / std::sqrt(2.0), n) * hermite(n, x) * std::exp(-mw * q * q / 1.2);
    CHECK(testsupport::rel_close(eigenfunction(1, n, q, p2), want, 1e-12));
    CHECK(testsupport::rel_close(eigenfunction(2, n, std::conj(q), p2),
                                 std::conj(eigenfunction(1, n, q, p2)), 1e-13));
  }

  CHECK(kind_of([] { eigenfunction(1, 10, 0.0, P(1.0, 1.0, 0.1, 0.1)); }) ==
        ErrorKind::ValidityExceeded);
  CHECK_NOTHROW(eigenfunction(1, 9, 0.0, P(1.0, 1.0, 0.1, 0.1)));
  CHECK(kind_of([] { eigenfunction(3, 0, 0.0, P(1.0, 1.0)); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("ground eigenfunction decays fastest along the e^{i pi/12} ray") {
  const auto p = P(1.0, std::polar(1.0, -pi / 6));
  const double s = 2.0;
  const double best = std::abs(eigenfunction(1, 0, s * std::polar(1.0, pi / 12), p));
  for (double a = -pi / 4; a <= pi / 4; a += pi / 48) {
    if (std::abs(a - pi / 12) < 1e-9) continue;
    CHECK(std::abs(eigenfunction(1, 0, s * std::polar(1.0, a), p)) > best);
  }
}

TEST_CASE("finite-eps ground states") {
  const auto lim = validate_limit(std::polar(1.0, 0.3), std::polar(1.2, -0.5));
  for (double q : {-1.0, 0.0, 0.4, 2.0})
    CHECK(std::abs(ground_eps(1, q, lim) - eigenfunction(1, 0, q, lim)) < 1e-15);

  const auto p = P(1.0, 1.0, 0.01, 0.01);
  const auto d = derived(p);
  CHECK(std::abs(d.momega_1 - 1.0) < 1e-15);
  const double C = std::pow(0.9999 / (pi * (1 - 1e-4)), 0.25);
  CHECK(std::abs(ground_norm(p) - C) < 1e-15);

  std::mt19937_64 rng(4);
  for (int i = 0; i < 10; ++i) {
    const auto [tm, tw] = testsupport::random_angles(rng, 0.05);
    if (std::abs(tm + tw) > pi / 2 - 0.1) continue;
    const auto pe = P(std::polar(1.1, tm), std::polar(0.9, tw), 0.02, 0.03);
    const ContourPath path = overlap_path(pe, 1, 0.0, 600);
    const cplx ov = contour_integrate(
        [&](cplx q) { return std::conj(ground_eps(2, q, pe)) * ground_eps(1, q, pe); }, path);
    CHECK(std::abs(ov - 1.0) < 1e-10);
  }

  // eps' >= Re(m omega) breaks the ground-state conditions.
  CHECK(kind_of([] { ground_eps(1, 0.0, P(1.0, std::polar(1.0, -1.4), 0.01, 0.5)); }) ==
        ErrorKind::ConvergenceViolated);
}

TEST_CASE("finite-eps excited states") {
  const auto p = P(std::polar(1.0, 0.2), std::polar(1.1, -0.6), 0.02, 0.01);
  for (double q : {-0.5, 0.0, 1.2})
    CHECK(std::abs(excited_eps(1, 0, p)(q) - ground_eps(1, q, p)) == 0.0);

  const auto lim = validate_limit(std::polar(1.0, 0.2), std::polar(1.1, -0.6));
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  for (int n = 0; n <= 5; ++n) {
    const auto g1 = excited_eps(1, n, lim), g2 = excited_eps(2, n, lim);
    for (int i = 0; i < 20; ++i) {
      const double q = u(rng);
      CHECK(std::abs(g1(q) - eigenfunction(1, n, q, lim)) < 1e-12);
      CHECK(std::abs(g2(q) - eigenfunction(2, n, q, lim)) < 1e-12);
    }
  }

  const auto unit = validate_limit(1.0, 1.0);
  const auto g = excited_eps(1, 1, unit);
  REQUIRE(g.poly_coeffs.size() == 2);
  CHECK(std::abs(g.poly_coeffs[0]) == 0.0);
  CHECK(std::abs(g.poly_coeffs[1] - std::pow(pi, -0.25) * 2 / std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("finite-eps wavefunctions approach the limit forms linearly in eps") {
  const cplx m = std::polar(1.0, 0.3), w = std::polar(1.0, -0.4);
  const auto lim = validate_limit(m, w);
  for (int n : {0, 2}) {
    double prev = 0;
    for (double e : {1e-2, 1e-3}) {
      const auto pe = P(m, w, e, e);
      const auto g = excited_eps(1, n, pe);
      double err = 0;
      for (double q = -2; q <= 2; q += 0.25) err = std::max(err, std::abs(g(q) - eigenfunction(1, n, q, lim)));
      if (prev > 0) CHECK(prev / err == doctest::Approx(10.0).epsilon(0.1));
      prev = err;
    }
  }
}

TEST_CASE("coherent wavefunctions") {
  const auto p = P(1.0, 1.0);
  for (double q : {-1.0, 0.3})
    CHECK(std::abs(coherent_wavefunction(1, 0.0, q, p) - eigenfunction(1, 0, q, p)) < 1e-15);
  CHECK(std::abs(coherent_wavefunction(1, 1.0, std::sqrt(2.0), p) - std::pow(pi, -0.25)) < 1e-15);

  const auto pc = P(std::polar(1.2, 0.5), std::polar(0.9, -0.7));
  const int N = 40;
  for (cplx lam : {cplx(0.5, 0.2), cplx(-0.3, 0.9), cplx(1.0, 0.0)}) {
    const StateVec f = coherent_coeffs(lam, N);
    for (double q : {-1.0, 0.2, 1.5}) {
      for (int basis : {1, 2}) {
        const auto psi = eigenfunctions(basis, N, q, pc);
        cplx sum = 0;
        for (int n = 0; n < N; ++n) sum += f(n) * psi[n];
        CHECK(std::abs(sum - coherent_wavefunction(basis, lam, q, pc)) < 1e-10);
      }
    }
  }
  CHECK(kind_of([] { coherent_wavefunction(1, 0.0, 0.0, P(1.0, cplx(0, -1))); }) ==
        ErrorKind::NotNormalizable);
}

TEST_CASE("cross Gram matrix is the identity") {
  Mat c = cross_gram(P(1.0, 1.0), 12);
  CHECK(max_abs(c - Mat::Identity(12, 12)) < 1e-12);

  c = cross_gram(P(1.0, std::polar(1.0, -pi / 3)), 10);
  CHECK(max_abs(c - Mat::Identity(10, 10)) < 1e-8);

  c = cross_gram(P(-1.0, std::polar(1.0, -pi / 2 - 1e-3)), 12);
  CHECK(max_abs(c - Mat::Identity(12, 12)) < 1e-6);
  c = cross_gram(P(1.0, std::polar(1.0, -pi / 2 + 1e-3)), 12);
  CHECK(max_abs(c - Mat::Identity(12, 12)) < 1e-6);

  CHECK(kind_of([] { cross_gram(P(1.0, cplx(0, -1)), 4); }) == ErrorKind::NotNormalizable);
  CHECK(kind_of([] { cross_gram(P(1.0, 1.0, 0.1, 0.1), 12); }) == ErrorKind::ValidityExceeded);
}

TEST_CASE("dual normalization across admissible points and contour rotations") {
  const double pts[][2] = {{0, 0}, {pi / 6, -pi / 6}, {pi / 3, -pi / 2}, {2 * pi / 3, -1.6}, {pi, -2.5}};
  for (const auto& pt : pts) {
    const auto p = P(std::polar(1.4, pt[0]), std::polar(0.7, pt[1]));
    REQUIRE(p.normalizable());
    const Mat c0 = cross_gram(p, 12);
    CHECK(max_abs(c0 - Mat::Identity(12, 12)) <= 1e-8);
    for (double d : {-pi / 8, pi / 8}) {
      const Mat c1 = cross_gram(p, 12, overlap_path(p, 12, -p.theta() / 2 + d));
      CHECK(max_abs(c1 - c0) <= 1e-8);
    }
  }
}

TEST_CASE("Gram and metric") {
  for (double th : {pi / 6, pi / 3, -pi / 4}) {
    // m omega = e^{i theta} with m = e^{i max(theta,0)}.
    const auto q = th >= 0 ? P(std::polar(1.0, 2 * th), std::polar(1.0, -th))
                           : P(1.0, std::polar(1.0, th));
    REQUIRE(std::abs(q.theta() - th) < 1e-12);
    Warnings w;
    const auto g = gram_and_metric(q, 10, &w);
    CHECK(std::abs(g.S(0, 0) - 1 / std::sqrt(std::cos(th))) < 1e-9);
    CHECK(max_abs(g.S * g.Qmat - Mat::Identity(10, 10)) < 1e-8);
    CHECK(g.min_eig_Q > 0);
    CHECK(max_abs(g.cross - Mat::Identity(10, 10)) < 1e-8);
    CHECK_FALSE(g.ill_conditioned);
  }
  const auto g3 = gram_and_metric(P(std::polar(1.0, 2 * pi / 3), std::polar(1.0, -pi / 3)), 4);
  CHECK(std::abs(g3.S(0, 0) - std::sqrt(2.0)) < 1e-9);

  const auto r = gram_and_metric(P(2.0, 0.5), 8);
  CHECK(max_abs(r.S - Mat::Identity(8, 8)) < 1e-12);
  CHECK(max_abs(r.Qmat - Mat::Identity(8, 8)) < 1e-12);
  CHECK(r.asymmetry < 1e-12);
}
