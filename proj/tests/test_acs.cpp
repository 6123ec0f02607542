// Copyright 2026 The Spinform Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinform/acs.hpp"

#include <doctest.h>

using namespace spinform;

TEST_CASE("standard ACS is valid and the vacuum is its spinor") {
  for (int m = 1; m <= 4; ++m) {
    const OrthoACS acs = standard_acs(m);
    CHECK(acs.valid());
    CHECK(canonical_orientation(acs) == 1);
    const Spinor u = pure_spinor_line(acs);
    CHECK(approx_equal(u, Spinor::vacuum(m), 1e-10));
  }
}

TEST_CASE("isotropic subspace of an ACS is maximal isotropic") {
  std::mt19937_64 rng(43);
  for (int m = 1; m <= 4; ++m) {
    const OrthoACS acs = random_positive_acs(m, rng);
    const IsotropicSubspace V = isotropic_of_acs(acs);
    CHECK(V.dimension() == m);
    CHECK(V.isotropy_defect() < 1e-12);
    // eigenvalue check: J v = -i v for all columns
    for (int j = 0; j < m; ++j) {
      const CVector v = V.basis.col(j);
      CHECK((acs.J.cast<Complex>() * v + Complex(0, 1) * v).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("unitary basis is orthonormal and J-adapted") {
  std::mt19937_64 rng(47);
  for (int m = 1; m <= 4; ++m) {
    const OrthoACS acs = random_positive_acs(m, rng);
    const RMatrix F = unitary_basis(acs);
    CHECK((F.transpose() * F - RMatrix::Identity(2 * m, 2 * m)).cwiseAbs().maxCoeff() < 1e-12);
    for (int j = 0; j < m; ++j)
      CHECK((acs.J * F.col(2 * j) - F.col(2 * j + 1)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("round trip J -> spinor -> J") {
  std::mt19937_64 rng(53);
  for (int m = 1; m <= 3; ++m) {
    for (int t = 0; t < 25; ++t) {
      const OrthoACS acs = random_positive_acs(m, rng);
      const Spinor u = pure_spinor_line(acs);
      CHECK(is_pure(u));
      const OrthoACS back = acs_of_pure_spinor(u);
      CHECK((back.J - acs.J).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("round trip spinor -> J -> spinor up to phase") {
  std::mt19937_64 rng(59);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int m = 1; m <= 3; ++m) {
    for (int t = 0; t < 10; ++t) {
      Spinor s(m);
      for (Mask i = 0; i < Mask(s.size()); ++i)
        if (!(std::popcount(i) & 1)) s.coeff(i) = Complex(g(rng), g(rng));
      s = fix_phase(s);
      const Spinor back = pure_spinor_line(acs_of_pure_spinor(s));
      CHECK((back - s).max_abs() < 1e-9);
    }
  }
}

TEST_CASE("negative orientation is rejected by pure_spinor_line") {
  // reflect one axis of the standard structure
  OrthoACS acs = standard_acs(2);
  RMatrix R = RMatrix::Identity(4, 4);
  R(0, 0) = -1.0;
  acs.J = R * acs.J * R.transpose();
  CHECK(acs.valid());
  CHECK(canonical_orientation(acs) == -1);
  CHECK_THROWS(pure_spinor_line(acs));
}

TEST_CASE("spin lift intertwines rotation and module action") {
  std::mt19937_64 rng(61);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int m = 2;
  for (int p = 0; p < 2 * m; ++p) {
    for (int q = 0; q < 2 * m; ++q) {
      if (p == q) continue;
      const double theta = 0.37 + 0.11 * p + 0.05 * q;
      const Multivector g = plane_rotor(m, p, q, theta);
      const Multivector ginv = plane_rotor(m, p, q, -theta);
      const RMatrix R = plane_rotation(2 * m, p, q, theta);
      CHECK(approx_equal(g * ginv, Multivector::scalar(m, 1.0)));
      CVector v(2 * m);
      for (int i = 0; i < 2 * m; ++i) v[i] = Complex(gauss(rng), gauss(rng));
      // g v g^{-1} = (R v) as grade-1 elements
      CHECK(approx_equal(g * vector_embed(v) * ginv, vector_embed(R.cast<Complex>() * v), 1e-12));
    }
  }
}

TEST_CASE("rotated ACS maps to the rotor-transported spinor line") {
  const int m = 2;
  const double theta = 0.83;
  const OrthoACS acs0 = standard_acs(m);
  const RMatrix R = plane_rotation(2 * m, 0, 2, theta);
  const OrthoACS acs{R * acs0.J * R.transpose()};
  const Spinor lhs = pure_spinor_line(acs);
  const Spinor rhs = fix_phase(clifford_action(plane_rotor(m, 0, 2, theta), pure_spinor_line(acs0)));
  CHECK((lhs - rhs).max_abs() < 1e-10);
}

TEST_CASE("random special orthogonal sanity") {
  std::mt19937_64 rng(67);
  for (int n : {2, 4, 6}) {
    const RMatrix Q = random_special_orthogonal(n, rng);
    CHECK((Q.transpose() * Q - RMatrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(Q.determinant() == doctest::Approx(1.0));
  }
}
