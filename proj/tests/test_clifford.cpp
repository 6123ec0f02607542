// Copyright 2026 The Spinform Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinform/clifford.hpp"

#include <doctest.h>

#include <random>

using namespace spinform;

namespace {

Multivector random_mv(int m, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Multivector x(m);
  for (Mask i = 0; i < Mask(x.size()); ++i) x.coeff(i) = Complex(g(rng), g(rng));
  return x;
}

CVector random_cv(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CVector v(n);
  for (int i = 0; i < n; ++i) v[i] = Complex(g(rng), g(rng));
  return v;
}

}  // namespace

TEST_CASE("generators square to -1 and anticommute") {
  const int m = 2;
  const Multivector e1 = Multivector::blade(m, 0b0001);
  const Multivector e2 = Multivector::blade(m, 0b0010);
  CHECK((e1 * e1 + Multivector::scalar(m, 1.0)).max_abs() == doctest::Approx(0.0));
  CHECK(approx_equal(e1 * e2, Multivector::blade(m, 0b0011)));
  CHECK(approx_equal(e2 * e1, -Multivector::blade(m, 0b0011)));
}

TEST_CASE("i e1 e2 squares to one at m = 1") {
  const Multivector x = Multivector::blade(1, 0b11, Complex(0, 1));
  CHECK(approx_equal(x * x, Multivector::scalar(1, 1.0)));
}

TEST_CASE("vector embedding and the Clifford relation") {
  std::mt19937_64 rng(7);
  for (int m = 1; m <= 4; ++m) {
    for (int t = 0; t < 50; ++t) {
      const CVector v = random_cv(2 * m, rng);
      const Multivector sq = vector_embed(v) * vector_embed(v);
      CHECK((sq + bilinear_form(v, v) * Multivector::scalar(m, 1.0)).max_abs() < 1e-12);
    }
  }
  // standard basis vector lands on the singleton blade
  CVector e1 = CVector::Zero(4);
  e1[0] = 1.0;
  CHECK(approx_equal(vector_embed(e1), Multivector::blade(2, 0b0001)));
}

TEST_CASE("geometric product is associative (m up to 5)") {
  std::mt19937_64 rng(11);
  for (int m = 1; m <= 5; ++m) {
    const int trials = m <= 3 ? 10 : 3;
    for (int t = 0; t < trials; ++t) {
      const Multivector x = random_mv(m, rng);
      const Multivector y = random_mv(m, rng);
      const Multivector z = random_mv(m, rng);
      const double scale = x.max_abs() * y.max_abs() * z.max_abs();
      CHECK(((x * y) * z - x * (y * z)).max_abs() / scale < 1e-12);
    }
  }
}

TEST_CASE("complex volume element") {
  CHECK(approx_equal(complex_volume(1), Multivector::blade(1, 0b11, Complex(0, 1))));
  CHECK(approx_equal(complex_volume(2), Multivector::blade(2, 0b1111, -1.0)));
  for (int m = 1; m <= 3; ++m) {
    const Multivector w = complex_volume(m);
    CHECK(approx_equal(w * w, Multivector::scalar(m, 1.0)));
  }
}

TEST_CASE("volume element is central on even elements") {
  std::mt19937_64 rng(13);
  for (int m = 1; m <= 3; ++m) {
    const Multivector w = complex_volume(m);
    const Multivector x = random_mv(m, rng);
    Multivector even(m);
    for (int k = 0; k <= 2 * m; k += 2) even += grade_project(x, k);
    CHECK((w * even - even * w).max_abs() < 1e-12 * even.max_abs());
  }
}

TEST_CASE("grade projection partitions a multivector") {
  std::mt19937_64 rng(17);
  const Multivector x = random_mv(3, rng);
  Multivector sum(3);
  for (int k = 0; k <= 6; ++k) sum += grade_project(x, k);
  CHECK(approx_equal(sum, x));
  CHECK(grade_project(Multivector::blade(3, 0b11), 0).max_abs() == 0.0);
}

TEST_CASE("bilinear and hermitian forms on the standard complex frame") {
  // eps_1 = (e1 - i e2)/sqrt2, epsbar_1 = (e1 + i e2)/sqrt2
  CVector eps = CVector::Zero(4), epsbar = CVector::Zero(4);
  eps[0] = 1.0 / std::sqrt(2.0);
  eps[1] = Complex(0, -1) / std::sqrt(2.0);
  epsbar[0] = 1.0 / std::sqrt(2.0);
  epsbar[1] = Complex(0, 1) / std::sqrt(2.0);
  CHECK(std::abs(bilinear_form(eps, eps)) < 1e-15);
  CHECK(std::abs(bilinear_form(eps, epsbar) - 1.0) < 1e-15);
  CHECK(std::abs(hermitian_form(eps, eps) - 1.0) < 1e-15);

  std::mt19937_64 rng(19);
  std::normal_distribution<double> g(0.0, 1.0);
  RVector v(6);
  for (int i = 0; i < 6; ++i) v[i] = g(rng);
  CHECK(std::abs(bilinear_form(v.cast<Complex>(), v.cast<Complex>()) - v.squaredNorm()) < 1e-12);
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS(Multivector(1) * Multivector(2));
}
