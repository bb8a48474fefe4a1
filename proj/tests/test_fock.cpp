#include <doctest.h>

#include <random>

#include "cxho/fock.hpp"
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

ModelParams P(cplx m, cplx w, double hbar = 1.0) { return validate(m, w, hbar, 1e-3, 1e-3); }

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("ladder matrices") {
  const auto r = build(P(1.3, cplx(0.7, -0.2)), 2);
  Mat A(2, 2);
  A << 0, 1, 0, 0;
  CHECK(max_abs(r.A - A) == 0.0);
  CHECK(max_abs(r.R - A.transpose()) == 0.0);

  const int N = 9;
  const auto rep = build(P(1.0, 1.0), N);
  for (int n = 0; n < N - 1; ++n) {
    StateVec e = StateVec::Zero(N);
    e(n) = 1.0;
    StateVec up = StateVec::Zero(N);
    up(n + 1) = std::sqrt(n + 1.0);
    CHECK((rep.R * e - up).norm() == 0.0);
    StateVec down = StateVec::Zero(N);
    if (n > 0) down(n - 1) = std::sqrt(double(n));
    CHECK((rep.A * e - down).norm() == 0.0);
  }
  CHECK(max_abs(rep.A.adjoint() - rep.R) == 0.0);
}

TEST_CASE("build examples") {
  const auto rep = build(P(1.0, 1.0), 5);
  CHECK(rep.q_new(0, 1).real() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(rep.H(2, 2) == cplx(2.5));

  const auto r2 = build(P(1.0, std::polar(1.0, -pi / 6)), 6);
  const cplx ph = std::polar(1.0, pi / 3);
  CHECK(max_abs(r2.H_dagQ - ph * r2.H) < 1e-14);

  CHECK(kind_of([] { build(P(1.0, cplx(0, -1)), 4); }) == ErrorKind::NotNormalizable);
  CHECK(kind_of([] { build(P(1.0, 1.0), 1); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("q_Q and p_Q are Hermitian; H_Qh has real spectrum; H and H^dagQ commute") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    const auto [tm, tw] = testsupport::random_angles(rng, 1e-3);
    if (std::abs(tm + tw) >= pi / 2 - 1e-6) continue;
    const auto rep = build(P(std::polar(1.2, tm), std::polar(0.9, tw), 0.7), 12);
    CHECK(max_abs(rep.q_Q - rep.q_Q.adjoint()) <= 1e-14);
    CHECK(max_abs(rep.p_Q - rep.p_Q.adjoint()) <= 1e-14);
    // Same operators as the phase-rotated q_new, p_new.
    const double th = rep.params.theta();
    CHECK(max_abs(rep.q_Q - std::polar(1.0, th / 2) * rep.q_new) < 1e-14);
    CHECK(max_abs(rep.p_Q - std::polar(1.0, -th / 2) * rep.p_new) < 1e-14);
    Eigen::ComplexEigenSolver<Mat> es(rep.H_Qh);
    CHECK(es.eigenvalues().imag().cwiseAbs().maxCoeff() < 1e-12);
    CHECK(max_abs(rep.H_dagQ * rep.H - rep.H * rep.H_dagQ) == 0.0);
    for (int n = 0; n < 12; ++n)
      CHECK(std::abs(rep.H(n, n) - eigenvalue(rep.params, n)) == 0.0);
  }
}

TEST_CASE("commutator defects") {
  for (int N : {2, 3, 8, 20}) {
    const auto rep = build(P(1.0, std::polar(1.0, -pi / 5), 1.7), N);
    CHECK(commutator_defect(rep) < 1e-13);
    // Full block: ([A,R] - 1)[N-1,N-1] = -(N-1) - 1, times hbar for q_Q, p_Q.
    CHECK(commutator_defect(rep, false) == doctest::Approx(N * 1.7).epsilon(1e-12));
  }
  const auto r1 = build(P(1.0, 1.0, 0.5), 6);
  CHECK(commutator_defect(r1, false) == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("Q-Hermitian split") {
  auto rep = build(P(1.0, 2.0), 10);
  auto d = qh_split_defect(rep);
  CHECK(max_abs(rep.H_Qa) == 0.0);
  CHECK(d.tan_defect == 0.0);
  CHECK(d.h_defect < 1e-13);
  CHECK(d.a_defect < 1e-13);

  rep = build(P(1.0, std::polar(1.0, -pi / 6)), 16);
  d = qh_split_defect(rep);
  CHECK(d.h_defect < 1e-12);
  CHECK(d.a_defect < 1e-12);
  CHECK(d.tan_defect < 1e-12);

  const cplx pts[][2] = {{std::polar(2.0, 0.3), std::polar(0.5, -0.9)},
                         {std::polar(0.7, 2.5), std::polar(1.3, -1.5)}};
  for (const auto& pt : pts) {
    const auto r = build(P(pt[0], pt[1], 1.3), 14);
    const double wr = r.params.r_omega(), tw = r.params.theta_omega();
    for (int n = 0; n < 14; ++n) {
      CHECK(std::abs(r.H_Qh(n, n) - 1.3 * wr * std::cos(tw) * (n + 0.5)) < 1e-13);
      CHECK(std::abs(r.H_Qa(n, n) - cplx(0, 1.3 * wr * std::sin(tw) * (n + 0.5))) < 1e-13);
    }
    const auto s = qh_split_defect(r);
    CHECK(s.h_defect < 1e-12);
    CHECK(s.a_defect < 1e-12);
    CHECK(s.tan_defect < 1e-12);
  }

  rep = build(P(cplx(0, 1), cplx(0, -1)), 6);
  CHECK(kind_of([&] { qh_split_defect(rep); }) == ErrorKind::DivisionDegenerate);
}

TEST_CASE("conjugation identities") {
  auto rep = build(P(1.0, 1.0), 10);
  auto c = conjugation_defect(rep);
  CHECK(c.q_defect == 0.0);
  CHECK(c.p_defect == 0.0);
  rep = build(P(1.0, std::polar(1.0, -pi / 4)), 10);
  c = conjugation_defect(rep);
  CHECK(c.q_defect < 1e-14);
  CHECK(c.p_defect < 1e-14);
}

TEST_CASE("coherent coefficients") {
  StateVec v = coherent_coeffs(0.0, 5);
  CHECK(v(0) == cplx(1.0));
  CHECK(v.tail(4).norm() == 0.0);

  v = coherent_coeffs(1.0, 24);
  CHECK(std::abs(v.squaredNorm() - 1.0) < 1e-12);
  for (int n = 0; n < 10; ++n)
    CHECK(std::abs(v(n) - std::exp(-0.5) / std::sqrt(factorial(n))) < 1e-15);

  const cplx lam(0.6, -0.8);
  const int N = 40;
  const auto rep = build(P(1.0, 1.0), N);
  v = coherent_coeffs(lam, N);
  CHECK((rep.A * v - lam * v).head(N - 1).norm() < 1e-14);
  CHECK(coherent_tail(lam, N) < 1e-12);

  Warnings w;
  coherent_coeffs(3.0, 8, &w);
  REQUIRE(w.size() == 1);
  CHECK(w[0].rfind("TailTooHeavy", 0) == 0);
  w.clear();
  coherent_coeffs(0.5, 40, &w);
  CHECK(w.empty());
}

TEST_CASE("Q inner product") {
  StateVec e0 = StateVec::Zero(3), e1 = StateVec::Zero(3);
  e0(0) = 1;
  e1(1) = 1;
  CHECK(q_inner(e0, e0) == cplx(1.0));
  CHECK(q_inner(e0, e1) == cplx(0.0));
  CHECK(kind_of([&] { q_inner(e0, StateVec::Zero(4)); }) == ErrorKind::LengthMismatch);

  const cplx la(0.4, 0.3), lb(-0.2, 0.5);
  const cplx got = q_inner(coherent_coeffs(lb, 40), coherent_coeffs(la, 40));
  const cplx want = std::exp(-(std::norm(lb) - 2.0 * std::conj(lb) * la + std::norm(la)) / 2.0);
  CHECK(std::abs(got - want) < 1e-14);
}
