// Copyright 2026 The Spinform Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinform/spinor.hpp"

#include <doctest.h>

#include <random>

using namespace spinform;

namespace {

Spinor random_spinor(int m, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Spinor s(m);
  for (Mask i = 0; i < Mask(s.size()); ++i) s.coeff(i) = Complex(g(rng), g(rng));
  return s;
}

Multivector random_mv(int m, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Multivector x(m);
  for (Mask i = 0; i < Mask(x.size()); ++i) x.coeff(i) = Complex(g(rng), g(rng));
  return x;
}

Multivector eps(int m, int j, bool bar) {
  CVector v = CVector::Zero(2 * m);
  v[2 * j] = 1.0 / std::sqrt(2.0);
  v[2 * j + 1] = Complex(0.0, bar ? 1.0 : -1.0) / std::sqrt(2.0);
  return vector_embed(v);
}

}  // namespace

TEST_CASE("vacuum identities") {
  for (int m = 1; m <= 4; ++m) {
    const Spinor u = Spinor::vacuum(m);
    for (int j = 0; j < m; ++j) {
      // epsbar_j kills the vacuum, eps_j creates slot j with weight sqrt(2)
      CHECK(clifford_action(eps(m, j, true), u).norm() < 1e-14);
      CHECK(approx_equal(clifford_action(eps(m, j, false), u),
                         std::sqrt(2.0) * Spinor::basis(m, Mask(1) << j)));
      // omegabar_j = -epsbar_j eps_j acts as 2 on the vacuum
      const Spinor w = Complex(-1.0) *
                       clifford_action(eps(m, j, true), clifford_action(eps(m, j, false), u));
      CHECK(approx_equal(w, 2.0 * u, 1e-12));
    }
    CHECK(approx_equal(clifford_action(complex_volume(m), u), u, 1e-12));
  }
}

TEST_CASE("module action respects the algebra product") {
  std::mt19937_64 rng(23);
  for (int m = 1; m <= 4; ++m) {
    const int trials = m <= 3 ? 40 : 10;
    for (int t = 0; t < trials; ++t) {
      const Multivector x = random_mv(m, rng);
      const Multivector y = random_mv(m, rng);
      const Spinor s = random_spinor(m, rng);
      const Spinor lhs = clifford_action(x * y, s);
      const Spinor rhs = clifford_action(x, clifford_action(y, s));
      const double scale = x.max_abs() * y.max_abs() * s.norm();
      CHECK((lhs - rhs).max_abs() / scale < 1e-12);
    }
  }
}

TEST_CASE("generator action matches the Clifford relation on states") {
  std::mt19937_64 rng(29);
  const int m = 3;
  for (int p = 0; p < 2 * m; ++p) {
    for (int q = 0; q < 2 * m; ++q) {
      const Spinor s = random_spinor(m, rng);
      const Spinor anti = generator_action(p, generator_action(q, s)) +
                          generator_action(q, generator_action(p, s));
      const Spinor expect = (p == q) ? Complex(-2.0) * s : Spinor(m);
      CHECK((anti - expect).max_abs() < 1e-12 * s.norm());
    }
  }
}

TEST_CASE("action_matrix agrees with clifford_action") {
  std::mt19937_64 rng(31);
  const int m = 3;
  const Multivector x = random_mv(m, rng);
  const Spinor s = random_spinor(m, rng);
  const CMatrix A = action_matrix(x, m);
  CHECK((A * s.coeffs() - clifford_action(x, s).coeffs()).cwiseAbs().maxCoeff() <
        1e-12 * x.max_abs() * s.norm());
}

TEST_CASE("chirality split diagonalizes the volume element") {
  std::mt19937_64 rng(37);
  for (int m = 1; m <= 4; ++m) {
    const Spinor s = random_spinor(m, rng);
    const auto [plus, minus] = chirality_split(s);
    CHECK(approx_equal(plus + minus, s));
    const Multivector w = complex_volume(m);
    CHECK((clifford_action(w, plus) - plus).max_abs() < 1e-12 * s.norm());
    CHECK((clifford_action(w, minus) + minus).max_abs() < 1e-12 * s.norm());
  }
}

TEST_CASE("vacuum kernel is the epsbar span and the vacuum is pure") {
  for (int m = 1; m <= 4; ++m) {
    const Spinor u = Spinor::vacuum(m);
    const KernelResult kr = kernel_of_j(u);
    CHECK(kr.space.dimension() == m);
    CHECK(kr.space.isotropy_defect() < 1e-10);
    CHECK(kr.margin > 0.5);
    CHECK(is_pure(u));
    // every kernel vector annihilates u
    for (int j = 0; j < m; ++j)
      CHECK(clifford_action(vector_embed(kr.space.basis.col(j)), u).norm() < 1e-10);
  }
}

TEST_CASE("basis states are pure, generic sums are not") {
  for (int m = 1; m <= 4; ++m)
    for (Mask sub = 0; sub < (Mask(1) << m); ++sub)
      CHECK(is_pure(Spinor::basis(m, sub)));

  // vac + top has isotropic kernel of dimension zero at m = 4
  Spinor s = Spinor::vacuum(4);
  s += Spinor::basis(4, 0b1111);
  CHECK_FALSE(is_pure(s));
  CHECK(kernel_of_j(s).space.dimension() == 0);
}

TEST_CASE("every chiral spinor is pure for m <= 3") {
  std::mt19937_64 rng(41);
  for (int m = 1; m <= 3; ++m) {
    for (int t = 0; t < 20; ++t) {
      Spinor s = chirality_split(random_spinor(m, rng)).first;
      s *= 1.0 / s.norm();
      CHECK(is_pure(s));
    }
  }
}

TEST_CASE("purity is projective") {
  Spinor u = Spinor::vacuum(3);
  CHECK(is_pure(Complex(0.3, -1.7) * u));
}

TEST_CASE("zero spinor is rejected") {
  CHECK_THROWS(kernel_of_j(Spinor(2)));
}
