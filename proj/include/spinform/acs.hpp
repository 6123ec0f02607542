// Copyright 2026 The Spinform Authors
// SPDX-License-Identifier: Apache-2.0
//
// Orthogonal almost complex structures on R^{2m}, adapted unitary bases, and
// the two-way correspondence with pure spinor lines.

#pragma once

#include "spinform/spinor.hpp"

#include <Eigen/QR>

#include <optional>
#include <random>
#include <stdexcept>

namespace spinform {

struct OrthoACS {
  RMatrix J;

  int half_dim() const { return int(J.rows()) / 2; }

  double defect() const {
    const auto I = RMatrix::Identity(J.rows(), J.cols());
    return std::max((J.transpose() * J - I).cwiseAbs().maxCoeff(),
                    (J * J + I).cwiseAbs().maxCoeff());
  }
  bool valid(double tol = 1e-10) const {
    return J.rows() == J.cols() && J.rows() % 2 == 0 && defect() <= tol;
  }
};

// Block-diagonal J0 with J0 e_{2j} = e_{2j+1}.
inline OrthoACS standard_acs(int m) {
  RMatrix J = RMatrix::Zero(2 * m, 2 * m);
  for (int j = 0; j < m; ++j) {
    J(2 * j + 1, 2 * j) = 1.0;
    J(2 * j, 2 * j + 1) = -1.0;
  }
  return {J};
}

// Ordered orthonormal frame (e_1, Je_1, .., e_m, Je_m) as matrix columns.
// Deterministic Gram-Schmidt over the J-action: seed columns are consumed in
// order, each fixing a J-invariant plane. Near-zero pivots are skipped.
inline RMatrix unitary_basis(const OrthoACS& acs,
                             std::optional<RMatrix> seed = std::nullopt,
                             double pivot_tol = 1e-8) {
  if (!acs.valid(1e-8)) throw std::invalid_argument("unitary_basis: invalid ACS");
  const int n = int(acs.J.rows());
  RMatrix S = seed ? *seed : RMatrix(RMatrix::Identity(n, n));
  RMatrix F(n, n);
  int placed = 0;
  for (int col = 0; col < S.cols() && placed < n; ++col) {
    RVector v = S.col(col);
    v -= F.leftCols(placed) * (F.leftCols(placed).transpose() * v);
    const double len = v.norm();
    if (len < pivot_tol) continue;
    F.col(placed) = v / len;
    F.col(placed + 1) = acs.J * F.col(placed);
    placed += 2;
  }
  if (placed < n) throw std::runtime_error("unitary_basis: degenerate seed");
  return F;
}

// Sign of det of any adapted frame against the ambient orientation.
inline int canonical_orientation(const OrthoACS& acs) {
  return unitary_basis(acs).determinant() > 0.0 ? 1 : -1;
}

// V(J) = {v : Jv = -iv} = span{(e_j + i Je_j)/sqrt(2)}; maximal isotropic.
inline IsotropicSubspace isotropic_of_acs(const OrthoACS& acs) {
  const int n = int(acs.J.rows());
  const RMatrix F = unitary_basis(acs);
  IsotropicSubspace V;
  V.basis.resize(n, n / 2);
  for (int j = 0; j < n / 2; ++j)
    V.basis.col(j) =
        (F.col(2 * j).cast<Complex>() + Complex(0, 1) * F.col(2 * j + 1).cast<Complex>()) /
        std::sqrt(2.0);
  return V;
}

// Representative phase: largest-magnitude Fock coefficient real positive.
inline Spinor fix_phase(Spinor s) {
  Eigen::Index imax = 0;
  s.coeffs().cwiseAbs().maxCoeff(&imax);
  const Complex z = s.coeff(Mask(imax));
  if (std::abs(z) > 0) s *= std::abs(z) / z;
  s *= 1.0 / s.norm();
  return s;
}

// Unit spinor u (up to phase) with v.u = 0 for all v in V(J). Lives in the
// positive chirality module; negative-orientation J is unsupported there.
inline Spinor pure_spinor_line(const OrthoACS& acs) {
  const int m = acs.half_dim();
  if (canonical_orientation(acs) != 1)
    throw std::invalid_argument("pure_spinor_line: negative canonical orientation unsupported");
  const IsotropicSubspace V = isotropic_of_acs(acs);
  const Eigen::Index dim = Eigen::Index(1) << m;
  CMatrix A(m * dim, dim);
  for (int j = 0; j < m; ++j)
    A.middleRows(j * dim, dim) = action_matrix(vector_embed(V.basis.col(j)), m);
  Eigen::JacobiSVD<CMatrix> svd(A, Eigen::ComputeFullV);
  Spinor u(m);
  u.coeffs() = svd.matrixV().col(dim - 1);
  return fix_phase(u);
}

// The unique J with V(J) = ker j_s. With P the hermitian projector onto the
// kernel, J = i (Id - 2P) is real, orthogonal and squares to -Id.
inline OrthoACS acs_of_pure_spinor(const Spinor& s) {
  const KernelResult kr = kernel_of_j(s);
  if (kr.space.dimension() != s.half_dim())
    throw std::invalid_argument("acs_of_pure_spinor: spinor is not pure");
  const CMatrix& W = kr.space.basis;
  const CMatrix P = W * W.adjoint();
  const CMatrix Jc =
      Complex(0, 1) * (CMatrix::Identity(P.rows(), P.cols()) - 2.0 * P);
  OrthoACS acs{Jc.real()};
  if (!acs.valid(1e-8)) throw std::runtime_error("acs_of_pure_spinor: reconstruction failed");
  return acs;
}

// Haar-ish random special orthogonal matrix via QR of a Gaussian sample.
inline RMatrix random_special_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  RMatrix G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = gauss(rng);
  Eigen::HouseholderQR<RMatrix> qr(G);
  RMatrix Q = qr.householderQ();
  RMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i)
    if (R(i, i) < 0) Q.col(i) *= -1.0;
  if (Q.determinant() < 0) Q.col(0) *= -1.0;
  return Q;
}

// Random positive J by conjugating J0 with a random rotation; orientation is
// verified, not assumed.
inline OrthoACS random_positive_acs(int m, std::mt19937_64& rng) {
  const RMatrix R = random_special_orthogonal(2 * m, rng);
  OrthoACS acs{R * standard_acs(m).J * R.transpose()};
  if (canonical_orientation(acs) != 1)
    throw std::runtime_error("random_positive_acs: orientation flipped");
  return acs;
}

// Spin lift of the rotation by theta in the (p, q) coordinate plane:
// exp(theta e_p e_q / 2) = cos(theta/2) + sin(theta/2) e_p e_q.
inline Multivector plane_rotor(int m, int p, int q, double theta) {
  Multivector r = Multivector::scalar(m, std::cos(theta / 2.0));
  r += Multivector::blade(m, (Mask(1) << p) | (Mask(1) << q),
                          (p < q ? 1.0 : -1.0) * std::sin(theta / 2.0));
  return r;
}

// The SO(2m) rotation induced by conjugation v -> g v g^{-1}.
inline RMatrix plane_rotation(int n, int p, int q, double theta) {
  RMatrix R = RMatrix::Identity(n, n);
  R(p, p) = std::cos(theta);
  R(q, q) = std::cos(theta);
  R(p, q) = -std::sin(theta);
  R(q, p) = std::sin(theta);
  return R;
}

}  // namespace spinform
