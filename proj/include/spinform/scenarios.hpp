// Copyright 2026 The Spinform Authors
// SPDX-License-Identifier: Apache-2.0
//
// Built-in analytic geometries with known ground truth. Each scenario carries
// closed-form g, J and first derivatives on a small box (side 0.5 around the
// origin, so the polynomial data stays well-conditioned).

#pragma once

#include "spinform/conn.hpp"

#include <random>
#include <string>

namespace spinform {

enum class Verdict { zero, nonzero, unknown };

struct ExpectedTable {
  Verdict domega = Verdict::unknown;
  Verdict dstar = Verdict::unknown;
  Verdict a = Verdict::unknown;
  Verdict b = Verdict::unknown;
  Verdict cyclicb = Verdict::unknown;
  Verdict du = Verdict::unknown;
  Verdict nijenhuis = Verdict::unknown;
};

struct Scenario {
  std::string name;
  int m = 0;
  MetricPatch patch;  // analytic oracles
  ExpectedTable expected;
};

namespace detail {

inline void default_box(MetricPatch& p) {
  p.lo = RVector::Constant(p.dim(), -0.25);
  p.hi = RVector::Constant(p.dim(), 0.25);
}

// Real 2m x 2m metric of a hermitian m x m matrix field h in coordinates
// (x_1, y_1, .., x_m, y_m) adapted to the standard J0.
inline RMatrix real_metric_of_hermitian(const CMatrix& h) {
  const int m = int(h.rows());
  RMatrix g(2 * m, 2 * m);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      const double re = h(j, k).real(), im = h(j, k).imag();
      g(2 * j, 2 * k) = re;
      g(2 * j + 1, 2 * k + 1) = re;
      g(2 * j, 2 * k + 1) = im;
      g(2 * j + 1, 2 * k) = -im;
    }
  return g;
}

}  // namespace detail

// g = Id, J = J0; the trivial parallel case.
inline Scenario flat_standard(int m) {
  Scenario s;
  s.name = "flat";
  s.m = m;
  s.patch.m = m;
  const int n = 2 * m;
  s.patch.g = [n](const RVector&) { return RMatrix::Identity(n, n); };
  s.patch.dg = [n](const RVector&) { return std::vector<RMatrix>(n, RMatrix::Zero(n, n)); };
  const RMatrix J0 = standard_acs(m).J;
  s.patch.J = [J0](const RVector&) { return J0; };
  s.patch.dJ = [n](const RVector&) { return std::vector<RMatrix>(n, RMatrix::Zero(n, n)); };
  detail::default_box(s.patch);
  s.expected = {Verdict::zero, Verdict::zero, Verdict::zero, Verdict::zero,
                Verdict::zero, Verdict::zero, Verdict::zero};
  return s;
}

// Metric from the plurisubharmonic potential |z|^2 + eps Re(z_1^2 zbar_2),
// J = J0. Positive (Kahler) control: every defect vanishes.
inline Scenario kahler_potential(int m, double eps = 0.1) {
  if (m < 2) throw std::invalid_argument("kahler_potential: needs m >= 2");
  Scenario s;
  s.name = "kahler";
  s.m = m;
  s.patch.m = m;
  const int n = 2 * m;

  // Complex Hessian of the potential: h = Id except h_{12} = eps z_1.
  auto hermitian = [m, eps](const RVector& x) {
    CMatrix h = CMatrix::Identity(m, m);
    const Complex z1(x[0], x[1]);
    h(0, 1) += eps * z1;
    h(1, 0) += eps * std::conj(z1);
    return h;
  };
  s.patch.g = [hermitian](const RVector& x) {
    return detail::real_metric_of_hermitian(hermitian(x));
  };
  s.patch.dg = [m, eps, n](const RVector&) {
    std::vector<RMatrix> out(n, RMatrix::Zero(n, n));
    CMatrix dh = CMatrix::Zero(m, m);
    dh(0, 1) = eps;  // d h / d x_1
    dh(1, 0) = eps;
    out[0] = detail::real_metric_of_hermitian(dh);
    dh(0, 1) = Complex(0, eps);  // d h / d y_1
    dh(1, 0) = Complex(0, -eps);
    out[1] = detail::real_metric_of_hermitian(dh);
    return out;
  };
  const RMatrix J0 = standard_acs(m).J;
  s.patch.J = [J0](const RVector&) { return J0; };
  s.patch.dJ = [n](const RVector&) { return std::vector<RMatrix>(n, RMatrix::Zero(n, n)); };
  detail::default_box(s.patch);
  s.expected = {Verdict::zero, Verdict::zero, Verdict::zero, Verdict::zero,
                Verdict::zero, Verdict::zero, Verdict::zero};
  return s;
}

// Local model of the Kodaira-Thurston nilmanifold: coframe (dx, dy, dz,
// dt - x dy), g the coframe sum of squares, J mapping e1 -> e3, e2 -> e4.
// Symplectic but non-integrable: d(omega) = 0 with b != 0.
inline Scenario kodaira_thurston() {
  Scenario s;
  s.name = "kodaira-thurston";
  s.m = 2;
  s.patch.m = 2;
  const int n = 4;

  auto coframe = [](double x) {
    RMatrix A = RMatrix::Identity(4, 4);
    A(3, 1) = -x;  // sigma_4 = dt - x dy
    return A;
  };
  auto frame = [](double x) {
    RMatrix E = RMatrix::Identity(4, 4);
    E(3, 1) = x;  // e_2 = d/dy + x d/dt
    return E;
  };
  // J in the frame: e1 -> e3, e2 -> e4, e3 -> -e1, e4 -> -e2.
  RMatrix Jf = RMatrix::Zero(4, 4);
  Jf(2, 0) = 1;
  Jf(3, 1) = 1;
  Jf(0, 2) = -1;
  Jf(1, 3) = -1;

  s.patch.g = [coframe](const RVector& x) {
    const RMatrix A = coframe(x[0]);
    return (A.transpose() * A).eval();
  };
  s.patch.dg = [coframe, n](const RVector& x) {
    std::vector<RMatrix> out(n, RMatrix::Zero(n, n));
    const RMatrix A = coframe(x[0]);
    RMatrix dA = RMatrix::Zero(4, 4);
    dA(3, 1) = -1.0;
    out[0] = dA.transpose() * A + A.transpose() * dA;
    return out;
  };
  s.patch.J = [frame, Jf](const RVector& x) {
    const RMatrix E = frame(x[0]);
    return (E * Jf * E.inverse()).eval();
  };
  s.patch.dJ = [frame, Jf, n](const RVector& x) {
    std::vector<RMatrix> out(n, RMatrix::Zero(n, n));
    const RMatrix E = frame(x[0]);
    const RMatrix Einv = E.inverse();
    RMatrix dE = RMatrix::Zero(4, 4);
    dE(3, 1) = 1.0;
    // d(E Jf E^-1) = dE Jf E^-1 - E Jf E^-1 dE E^-1
    out[0] = dE * Jf * Einv - E * Jf * Einv * dE * Einv;
    return out;
  };
  detail::default_box(s.patch);
  s.expected = {Verdict::zero, Verdict::zero,    Verdict::zero,   Verdict::nonzero,
                Verdict::zero, Verdict::zero, Verdict::nonzero};
  return s;
}

// g = e^{2 x_1} Id, J = J0. Negative control: d(omega) != 0, so the
// anti-holomorphic defect is nonzero; J stays integrable (b = 0, N = 0).
inline Scenario conformal_warp(int m) {
  Scenario s;
  s.name = "conformal-warp";
  s.m = m;
  s.patch.m = m;
  const int n = 2 * m;
  s.patch.g = [n](const RVector& x) {
    return (std::exp(2.0 * x[0]) * RMatrix::Identity(n, n)).eval();
  };
  s.patch.dg = [n](const RVector& x) {
    std::vector<RMatrix> out(n, RMatrix::Zero(n, n));
    out[0] = 2.0 * std::exp(2.0 * x[0]) * RMatrix::Identity(n, n);
    return out;
  };
  const RMatrix J0 = standard_acs(m).J;
  s.patch.J = [J0](const RVector&) { return J0; };
  s.patch.dJ = [n](const RVector&) { return std::vector<RMatrix>(n, RMatrix::Zero(n, n)); };
  detail::default_box(s.patch);
  s.expected = {Verdict::nonzero, m == 2 ? Verdict::nonzero : Verdict::unknown,
                Verdict::nonzero, Verdict::zero,
                Verdict::zero,    Verdict::nonzero,
                Verdict::zero};
  return s;
}

// g = Id + amplitude S(x), J = g-polar orthogonalization of J0 + amplitude
// A(x), with S, A random affine matrix polynomials. Property-test generator:
// only the defect-equivalence consistency is asserted, not individual verdicts.
inline Scenario random_perturbation(int m, double amplitude, std::uint64_t seed) {
  Scenario s;
  s.name = "random";
  s.m = m;
  s.patch.m = m;
  const int n = 2 * m;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-0.3, 0.3);
  RMatrix S0(n, n);
  std::vector<RMatrix> S1(n, RMatrix(n, n));
  RMatrix A0(n, n);
  std::vector<RMatrix> A1(n, RMatrix(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      S0(i, j) = uni(rng);
      A0(i, j) = uni(rng);
      for (int k = 0; k < n; ++k) {
        S1[k](i, j) = uni(rng);
        A1[k](i, j) = uni(rng);
      }
    }
  S0 = ((S0 + S0.transpose()) / 2).eval();
  for (auto& M : S1) M = ((M + M.transpose()) / 2).eval();

  auto gfun = [=](const RVector& x) {
    RMatrix S = S0;
    for (int k = 0; k < n; ++k) S += x[k] * S1[k];
    return (RMatrix::Identity(n, n) + amplitude * S).eval();
  };
  s.patch.g = gfun;
  s.patch.dg = [=](const RVector&) {
    std::vector<RMatrix> out(n);
    for (int k = 0; k < n; ++k) out[k] = amplitude * S1[k];
    return out;
  };

  const RMatrix J0 = standard_acs(m).J;
  auto jfun = [=](const RVector& x) {
    RMatrix K = J0 + amplitude * A0;
    for (int k = 0; k < n; ++k) K += amplitude * x[k] * A1[k];
    const RMatrix g = gfun(x);
    Eigen::SelfAdjointEigenSolver<RMatrix> es(g);
    const RMatrix G = es.operatorSqrt();
    const RMatrix Ginv = es.operatorInverseSqrt();
    const RMatrix Kp = G * K * Ginv;
    const RMatrix B = (Kp - Kp.transpose()) / 2;
    Eigen::SelfAdjointEigenSolver<RMatrix> es2((B.transpose() * B).eval());
    const RMatrix Jp = B * es2.operatorInverseSqrt();
    return (Ginv * Jp * G).eval();
  };
  s.patch.J = jfun;
  // The polar factor has no polynomial closed form; a tight 5-point stencil
  // on the exact pointwise construction stands in for the symbolic oracle.
  s.patch.dJ = [=](const RVector& x) {
    std::vector<RMatrix> out(n);
    for (int i = 0; i < n; ++i) out[i] = detail::deriv5(jfun, x, i, 1e-3);
    return out;
  };
  detail::default_box(s.patch);
  s.expected = {};  // all unknown; equivalence consistency still applies
  return s;
}

struct ScenarioParams {
  int m = 2;
  double eps = 0.1;
  double amplitude = 0.1;
  std::uint64_t seed = 1;
};

inline Scenario make_scenario(const std::string& name, const ScenarioParams& p) {
  if (name == "flat") return flat_standard(p.m);
  if (name == "kahler") return kahler_potential(p.m, p.eps);
  if (name == "kodaira-thurston") return kodaira_thurston();
  if (name == "conformal-warp") return conformal_warp(p.m);
  if (name == "random") return random_perturbation(p.m, p.amplitude, p.seed);
  throw std::invalid_argument("unknown scenario: " + name);
}

}  // namespace spinform
