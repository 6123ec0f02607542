// Copyright 2026 The Spinform Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinform/conn.hpp"
#include "spinform/scenarios.hpp"

#include <doctest.h>

using namespace spinform;

namespace {

RVector pt(std::initializer_list<double> v) {
  RVector x(Eigen::Index(v.size()));
  int i = 0;
  for (double t : v) x[i++] = t;
  return x;
}

}  // namespace

TEST_CASE("flat patch has zero Christoffel symbols and the identity frame") {
  const Scenario sc = flat_standard(2);
  const RVector x = pt({0.1, -0.05, 0.2, 0.0});
  for (const auto& G : christoffel(sc.patch, x)) CHECK(G.cwiseAbs().maxCoeff() == 0.0);
  const FrameField ff = unitary_frame_field(sc.patch, x);
  CHECK((ff.F - RMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(ff.skipped == 0);
  for (const auto& dF : frame_field_derivative(sc.patch, x))
    CHECK(dF.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("conformal metric Christoffel symbols in closed form") {
  // g = e^{2f} Id with f = x_1: Gamma^i_{jk} = d_j f delta_ik + d_k f delta_ij
  // - d_i f delta_jk, so only the f-gradient direction contributes.
  const Scenario sc = conformal_warp(2);
  const RVector x = pt({0.07, -0.12, 0.03, 0.21});
  const auto gamma = christoffel(sc.patch, x);
  for (int l = 0; l < 4; ++l)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        const double expect = (j == 0 ? (l == k ? 1.0 : 0.0) : 0.0) +
                              (k == 0 ? (l == j ? 1.0 : 0.0) : 0.0) -
                              (l == 0 ? (j == k ? 1.0 : 0.0) : 0.0);
        CHECK(gamma[l](j, k) == doctest::Approx(expect).epsilon(1e-10));
      }
}

TEST_CASE("finite-difference oracles track the analytic ones") {
  for (const Scenario& sc :
       {kahler_potential(2, 0.15), kodaira_thurston(), conformal_warp(2)}) {
    const MetricPatch fd = with_fd_oracles(sc.patch, 1e-3);
    const RVector x = pt({0.11, -0.07, 0.05, 0.13});
    const auto dga = sc.patch.dg(x), dgf = fd.dg(x);
    const auto dJa = sc.patch.dJ(x), dJf = fd.dJ(x);
    for (int i = 0; i < 4; ++i) {
      CHECK((dga[i] - dgf[i]).cwiseAbs().maxCoeff() < 5e-6);
      CHECK((dJa[i] - dJf[i]).cwiseAbs().maxCoeff() < 5e-6);
    }
  }
}

TEST_CASE("frame field is g-orthonormal and J-adapted") {
  for (const Scenario& sc :
       {kahler_potential(2, 0.15), kodaira_thurston(), conformal_warp(2),
        random_perturbation(2, 0.1, 5)}) {
    const RVector x = pt({0.09, 0.02, -0.14, 0.18});
    const RMatrix g = sc.patch.g(x);
    const RMatrix J = sc.patch.J(x);
    const FrameField ff = unitary_frame_field(sc.patch, x);
    CHECK((ff.F.transpose() * g * ff.F - RMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() <
          1e-12);
    for (int j = 0; j < 2; ++j)
      CHECK((J * ff.F.col(2 * j) - ff.F.col(2 * j + 1)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("covariant derivative of the metric vanishes through the frame") {
  // d_p g(E_q, E_r) = 0 for an orthonormal frame, so the real connection
  // coefficients are antisymmetric in (q, r).
  for (const Scenario& sc : {kodaira_thurston(), conformal_warp(2),
                             random_perturbation(2, 0.1, 11)}) {
    const RVector x = pt({0.06, -0.03, 0.12, -0.09});
    const FrameField ff = unitary_frame_field(sc.patch, x);
    const auto dF = frame_field_derivative(sc.patch, x);
    const ConnCoeffs cc = connection_coeffs(sc.patch, x, ff.F, dF);
    for (int p = 0; p < 4; ++p)
      CHECK((cc.gamma[p] + cc.gamma[p].transpose()).cwiseAbs().maxCoeff() < 1e-7);
  }
}

TEST_CASE("connection coefficient symmetries") {
  // a_{j,k}^l = -a_{j,l}^k, b antisymmetric the same way, c = -conj(d)
  // transposed; consequences of metric compatibility.
  for (const Scenario& sc : {kodaira_thurston(), conformal_warp(2),
                             random_perturbation(2, 0.15, 3)}) {
    const RVector x = pt({0.04, 0.16, -0.08, 0.02});
    const FrameField ff = unitary_frame_field(sc.patch, x);
    const ConnCoeffs cc =
        connection_coeffs(sc.patch, x, ff.F, frame_field_derivative(sc.patch, x));
    for (int j = 0; j < 2; ++j) {
      CHECK((cc.a[j] + cc.a[j].transpose()).cwiseAbs().maxCoeff() < 1e-7);
      CHECK((cc.b[j] + cc.b[j].transpose()).cwiseAbs().maxCoeff() < 1e-7);
      CHECK((cc.c[j] + cc.d[j].transpose().conjugate()).cwiseAbs().maxCoeff() < 1e-7);
    }
  }
}

TEST_CASE("torsion-free relation for b") {
  // b_{j,k}^l - b_{k,j}^l equals the eps_l component of [epsbar_j, epsbar_k].
  const Scenario sc = kodaira_thurston();
  const RVector x = pt({0.13, -0.02, 0.07, 0.05});
  const int m = 2;
  const FrameField ff = unitary_frame_field(sc.patch, x);
  const ConnCoeffs cc =
      connection_coeffs(sc.patch, x, ff.F, frame_field_derivative(sc.patch, x));
  const RMatrix g = sc.patch.g(x);
  const auto dF = frame_field_derivative(sc.patch, x);

  // coordinate components of epsbar = (E_{2j} + i E_{2j+1}) / sqrt2 and their
  // coordinate derivatives
  auto ebar = [&](const RMatrix& F, int j) -> CVector {
    return (F.col(2 * j).cast<Complex>() + Complex(0, 1) * F.col(2 * j + 1).cast<Complex>()) /
           std::sqrt(2.0);
  };
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      // Lie bracket of the frame vector fields in coordinates
      CVector lie = CVector::Zero(4);
      const CVector vj = ebar(ff.F, j), vk = ebar(ff.F, k);
      for (int i = 0; i < 4; ++i) {
        CVector dkF = ebar(dF[i], k), djF = ebar(dF[i], j);
        lie += vj[i] * dkF - vk[i] * djF;
      }
      for (int l = 0; l < m; ++l) {
        // bilinear pairing g(., epsbar_l) picks the eps_l frame coefficient
        const Complex bracket =
            (lie.transpose() * g.cast<Complex>() * ebar(ff.F, l))(0);
        const Complex diff = cc.b[j](k, l) - cc.b[k](j, l);
        CHECK(std::abs(bracket - diff) < 1e-6);
      }
    }
}

TEST_CASE("domain containment") {
  const Scenario sc = flat_standard(2);
  CHECK(sc.patch.contains(pt({0.0, 0.0, 0.0, 0.0})));
  CHECK_FALSE(sc.patch.contains(pt({0.3, 0.0, 0.0, 0.0})));
}
