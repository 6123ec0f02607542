// Copyright 2026 The Spinform Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinform/spinor_io.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace spinform;

TEST_CASE("spinor round trips through the text format") {
  std::mt19937_64 rng(103);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int m = 1; m <= 4; ++m) {
    Spinor s(m);
    for (Mask i = 0; i < Mask(s.size()); ++i) s.coeff(i) = Complex(g(rng), g(rng));
    std::stringstream ss;
    write_spinor(ss, s);
    const Spinor back = read_spinor(ss);
    CHECK(back.half_dim() == m);
    CHECK((back - s).max_abs() < 1e-15);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  std::istringstream in(
      "# vacuum plus top, m = 2\n"
      "m 2\n"
      "\n"
      "0 1.0 0.0   # vacuum\n"
      "3 0.0 -1.0\n");
  const Spinor s = read_spinor(in);
  CHECK(s.coeff(0) == Complex(1.0));
  CHECK(s.coeff(3) == Complex(0.0, -1.0));
}

TEST_CASE("malformed files are rejected with line context") {
  {
    std::istringstream in("0 1.0 0.0\n");
    CHECK_THROWS_WITH_AS(read_spinor(in), doctest::Contains("missing 'm' header"),
                         std::runtime_error);
  }
  {
    std::istringstream in("m 2\nm 2\n");
    CHECK_THROWS_AS(read_spinor(in), std::runtime_error);
  }
  {
    std::istringstream in("m 2\n9 1.0 0.0\n");
    CHECK_THROWS_WITH_AS(read_spinor(in), doctest::Contains("line 2"), std::runtime_error);
  }
  {
    std::istringstream in("m 2\n1 not-a-number 0.0\n");
    CHECK_THROWS_AS(read_spinor(in), std::runtime_error);
  }
  {
    std::istringstream in("m 0\n");
    CHECK_THROWS_AS(read_spinor(in), std::runtime_error);
  }
}
