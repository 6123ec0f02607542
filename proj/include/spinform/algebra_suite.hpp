// Copyright 2026 The Spinform Authors
// SPDX-License-Identifier: Apache-2.0
//
// Randomized property suites over the algebra layers, shared by the CLI
// `algebra` command and the acceptance tests. Every check records its worst
// deviation so reports stay auditable.

#pragma once

#include "spinform/acs.hpp"
#include "spinform/exterior.hpp"
#include "spinform/spinor.hpp"

#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace spinform {

struct CheckResult {
  std::string name;
  double max_err = 0.0;
  double tolerance = 0.0;
  bool pass = true;

  void record(double err) {
    max_err = std::max(max_err, err);
    pass = max_err <= tolerance;
  }
};

struct SuiteResult {
  int m = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

inline Multivector random_multivector(int m, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Multivector x(m);
  for (Mask i = 0; i < Mask(x.size()); ++i) x.coeff(i) = Complex(gauss(rng), gauss(rng));
  return x;
}

inline CVector random_cvector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector v(n);
  for (int i = 0; i < n; ++i) v[i] = Complex(gauss(rng), gauss(rng));
  return v;
}

inline Spinor random_spinor(int m, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Spinor s(m);
  for (Mask i = 0; i < Mask(s.size()); ++i) s.coeff(i) = Complex(gauss(rng), gauss(rng));
  return s;
}

inline Spinor random_chiral_spinor(int m, std::mt19937_64& rng) {
  auto [plus, minus] = chirality_split(random_spinor(m, rng));
  return plus.norm() > 0 ? plus : minus;
}

}  // namespace detail

// Clifford relations, associativity, volume element, module action, the
// omega product expansion, Hodge identities, q-projection and round trips.
inline SuiteResult algebra_suite(int m, int trials, std::uint64_t seed) {
  SuiteResult res;
  res.m = m;
  res.trials = trials;
  res.seed = seed;
  std::mt19937_64 rng(seed);

  auto check = [&](const std::string& name, double tol) -> CheckResult& {
    res.checks.push_back({name, 0.0, tol, true});
    return res.checks.back();
  };

  const double tol = 1e-12;
  const Multivector one = Multivector::scalar(m, 1.0);
  const Multivector volc = complex_volume(m);
  const Spinor vac = Spinor::vacuum(m);

  {
    auto& c = check("clifford_relation: v^2 = -<v,v>", tol);
    for (int t = 0; t < trials; ++t) {
      const CVector v = detail::random_cvector(2 * m, rng);
      const Multivector sq = vector_embed(v) * vector_embed(v);
      c.record((sq + bilinear_form(v, v) * one).max_abs());
    }
  }
  {
    auto& c = check("anticommutation: vw + wv = -2<v,w>", tol);
    for (int t = 0; t < trials; ++t) {
      const CVector v = detail::random_cvector(2 * m, rng);
      const CVector w = detail::random_cvector(2 * m, rng);
      const Multivector mv = vector_embed(v), mw = vector_embed(w);
      c.record((mv * mw + mw * mv + 2.0 * bilinear_form(v, w) * one).max_abs());
    }
  }
  {
    auto& c = check("associativity: (xy)z = x(yz)", tol);
    const int atrials = std::min(trials, 50);  // cubic cost
    for (int t = 0; t < atrials; ++t) {
      const Multivector x = detail::random_multivector(m, rng);
      const Multivector y = detail::random_multivector(m, rng);
      const Multivector z = detail::random_multivector(m, rng);
      const double scale = x.max_abs() * y.max_abs() * z.max_abs();
      c.record(((x * y) * z - x * (y * z)).max_abs() / (scale > 0 ? scale : 1.0));
    }
  }
  {
    auto& c = check("volume: omega_C^2 = 1 and central on even part", tol);
    c.record((volc * volc - one).max_abs());
    for (int t = 0; t < std::min(trials, 100); ++t) {
      Multivector even(m);
      const Multivector x = detail::random_multivector(m, rng);
      for (int k = 0; k <= 2 * m; k += 2) even += grade_project(x, k);
      c.record((volc * even - even * volc).max_abs() / std::max(1.0, even.max_abs()));
    }
  }
  {
    auto& c = check("module: action(xy, s) = action(x, action(y, s))", tol);
    for (int t = 0; t < std::min(trials, 200); ++t) {
      const Multivector x = detail::random_multivector(m, rng);
      const Multivector y = detail::random_multivector(m, rng);
      const Spinor s = detail::random_spinor(m, rng);
      const Spinor lhs = clifford_action(x * y, s);
      const Spinor rhs = clifford_action(x, clifford_action(y, s));
      const double scale = x.max_abs() * y.max_abs() * s.norm();
      c.record((lhs - rhs).max_abs() / (scale > 0 ? scale : 1.0));
    }
  }
  {
    auto& c = check("vacuum: epsbar_j u = 0, omegabar_j u = 2u, omega_C u = u", tol);
    const RMatrix F = RMatrix::Identity(2 * m, 2 * m);
    for (int j = 0; j < m; ++j) {
      const Multivector eb = detail::frame_eps(F, j, true);
      const Multivector e = detail::frame_eps(F, j, false);
      c.record(clifford_action(eb, vac).max_abs());
      const Multivector omegabar = -(eb * e);
      c.record((clifford_action(omegabar, vac) - 2.0 * vac).max_abs());
    }
    c.record((clifford_action(volc, vac) - vac).max_abs());
  }

  const std::size_t i_exp =
      (check("expansion: omega_1..omega_m = sum (1/k!)(-i)^k omega^k", tol), res.checks.size() - 1);
  const std::size_t i_hodge =
      (check("hodge: *omega^k = k!/(m-k)! omega^{m-k}", tol), res.checks.size() - 1);
  const std::size_t i_eig =
      (check("spinor eigenvalues: q u = 2^m u, omega u = -mi u, omega_C u = u", tol),
       res.checks.size() - 1);
  const std::size_t i_iw =
      (check("clifford identity: i omega = m - sum omega_j", tol), res.checks.size() - 1);

  auto factorial = [](int k) {
    double f = 1.0;
    for (int r = 2; r <= k; ++r) f *= r;
    return f;
  };

  for (int t = 0; t < trials; ++t) {
    const OrthoACS J = random_positive_acs(m, rng);

    const auto [lhs, rhs] = omega_product_expansion(J);
    res.checks[i_exp].record((lhs - rhs).max_abs());

    const RMatrix id = RMatrix::Identity(2 * m, 2 * m);
    const KForm w = kahler_form(J, id);
    for (int k = 0; k <= m; ++k) {
      const KForm star = hodge_star(wedge_power(w, k), id);
      const KForm expect = wedge_power(w, m - k) * Complex(factorial(k) / factorial(m - k));
      res.checks[i_hodge].record((star - expect).max_abs());
    }

    const Spinor u = pure_spinor_line(J);
    res.checks[i_eig].record(
        (clifford_action(q_element(J), u) - std::pow(2.0, m) * u).max_abs());
    res.checks[i_eig].record(
        (clifford_action(clifford_of_form(w), u) + Complex(0, double(m)) * u).max_abs());
    res.checks[i_eig].record((clifford_action(volc, u) - u).max_abs());

    const RMatrix F = unitary_basis(J);
    Multivector sum_wj(m);
    for (int j = 0; j < m; ++j)
      sum_wj += -(detail::frame_eps(F, j, false) * detail::frame_eps(F, j, true));
    res.checks[i_iw].record((Complex(0, 1) * clifford_of_form(w) -
                             (Multivector::scalar(m, double(m)) - sum_wj))
                                .max_abs());
  }

  {
    auto& c = check("q annihilates the u-orthocomplement in S+", 1e-10);
    for (int t = 0; t < std::min(trials, 50); ++t) {
      const OrthoACS J = random_positive_acs(m, rng);
      const Spinor u = pure_spinor_line(J);
      const Multivector q = q_element(J);
      Spinor sigma = detail::random_chiral_spinor(m, rng);
      const Complex overlap = (u.coeffs().adjoint() * sigma.coeffs())(0);
      sigma -= overlap * u;
      c.record(clifford_action(q, sigma).max_abs() / std::max(1.0, sigma.norm()));
    }
  }
  {
    auto& c = check("round trip: J -> u -> J (1e-10)", 1e-10);
    for (int t = 0; t < std::min(trials, 100); ++t) {
      const OrthoACS J = random_positive_acs(m, rng);
      const Spinor u = pure_spinor_line(J);
      c.record((acs_of_pure_spinor(u).J - J.J).cwiseAbs().maxCoeff());
    }
  }
  if (m <= 3) {
    auto& c = check("purity of chiral spinors (dim <= 6)", 0.5);
    for (int t = 0; t < std::min(trials, 100); ++t) {
      const Spinor s = detail::random_chiral_spinor(m, rng);
      c.record(is_pure(s) ? 0.0 : 1.0);
    }
  }
  if (m == 4) {
    auto& c = check("impure witness at m = 4: vacuum + top", 0.5);
    Spinor s = Spinor::basis(4, 0) + Spinor::basis(4, 0xF);
    const KernelResult kr = kernel_of_j(s);
    c.record(kr.space.dimension() < 4 ? 0.0 : 1.0);
    res.notes.push_back("impure witness kernel dimension = " +
                        std::to_string(kr.space.dimension()));
  }

  // Open-question probe: fitted constant in *phi = c(m,p) phi omega_C.
  for (int p = 0; p <= 2 * m && m <= 3; ++p) {
    const StarVolumeFit fit = star_volume_constant(m, p);
    std::ostringstream os;
    os.precision(12);
    os << "star-volume constant m=" << m << " p=" << p << ": c = (" << fit.constant.real()
       << ", " << fit.constant.imag() << "), residual " << fit.residual;
    res.notes.push_back(os.str());
  }

  return res;
}

}  // namespace spinform
