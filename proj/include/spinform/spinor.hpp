// Copyright 2026 The Spinform Authors
// SPDX-License-Identifier: Apache-2.0
//
// Fock model of the irreducible 2^m spinor module of Cl(2m, C).
//
// Basis states are indexed by subsets of {0, .., m-1}. The complex frame
// vectors eps_j = (e_{2j} - i e_{2j+1})/sqrt(2) act as sqrt(2) x creation,
// their conjugates epsbar_j as -sqrt(2) x annihilation. The two scalings and
// the one free sign are pinned by the Clifford relation
// eps ebar + ebar eps = -2 and by omegabar_j . vacuum = 2 vacuum.

#pragma once

#include "spinform/clifford.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace spinform {

class Spinor {
 public:
  Spinor() : m_(0) {}
  explicit Spinor(int m) : m_(m), c_(CVector::Zero(std::size_t(1) << m)) {
    if (m < 1 || m > 20) throw std::invalid_argument("Spinor: bad half-dimension");
  }

  static Spinor vacuum(int m) {
    Spinor s(m);
    s.c_[0] = 1.0;
    return s;
  }
  static Spinor basis(int m, Mask subset, Complex z = 1.0) {
    Spinor s(m);
    if (subset >= (Mask(1) << m)) throw std::invalid_argument("Spinor: subset out of range");
    s.c_[subset] = z;
    return s;
  }

  int half_dim() const { return m_; }
  Eigen::Index size() const { return c_.size(); }
  Complex coeff(Mask subset) const { return c_[subset]; }
  Complex& coeff(Mask subset) { return c_[subset]; }
  const CVector& coeffs() const { return c_; }
  CVector& coeffs() { return c_; }

  Spinor& operator+=(const Spinor& o) {
    check(o);
    c_ += o.c_;
    return *this;
  }
  Spinor& operator-=(const Spinor& o) {
    check(o);
    c_ -= o.c_;
    return *this;
  }
  Spinor& operator*=(Complex z) {
    c_ *= z;
    return *this;
  }
  friend Spinor operator+(Spinor a, const Spinor& b) { return a += b; }
  friend Spinor operator-(Spinor a, const Spinor& b) { return a -= b; }
  friend Spinor operator*(Complex z, Spinor a) { return a *= z; }
  friend Spinor operator*(Spinor a, Complex z) { return a *= z; }

  double norm() const { return c_.norm(); }
  double max_abs() const { return c_.cwiseAbs().maxCoeff(); }

 private:
  void check(const Spinor& o) const {
    if (m_ != o.m_) throw std::invalid_argument("Spinor: dimension mismatch");
  }

  int m_;
  CVector c_;
};

inline bool approx_equal(const Spinor& a, const Spinor& b, double tol = 1e-12) {
  return (a - b).max_abs() <= tol;
}

namespace detail {

// Sign of wedging slot j into (or out of) subset S: parity of occupied slots
// below j.
inline double slot_sign(Mask subset, int j) {
  const Mask below = subset & ((Mask(1) << j) - 1);
  return (std::popcount(below) & 1) ? -1.0 : 1.0;
}

}  // namespace detail

// Signed creation on slot j (wedge), no sqrt(2) scaling.
inline Spinor create(int j, const Spinor& s) {
  Spinor r(s.half_dim());
  const Mask bit = Mask(1) << j;
  for (Mask sub = 0; sub < Mask(s.size()); ++sub) {
    const Complex z = s.coeff(sub);
    if (z == 0.0 || (sub & bit)) continue;
    r.coeff(sub | bit) += detail::slot_sign(sub, j) * z;
  }
  return r;
}

// Signed annihilation on slot j (contraction), no scaling.
inline Spinor annihilate(int j, const Spinor& s) {
  Spinor r(s.half_dim());
  const Mask bit = Mask(1) << j;
  for (Mask sub = 0; sub < Mask(s.size()); ++sub) {
    const Complex z = s.coeff(sub);
    if (z == 0.0 || !(sub & bit)) continue;
    r.coeff(sub & ~bit) += detail::slot_sign(sub, j) * z;
  }
  return r;
}

// Action of the generator e_p, p in {0, .., 2m-1}, pair j = p/2:
//   e_{2j}   = (eps_j + epsbar_j)/sqrt(2)   -> create_j - annihilate_j
//   e_{2j+1} = i (eps_j - epsbar_j)/sqrt(2) -> i (create_j + annihilate_j)
inline Spinor generator_action(int p, const Spinor& s) {
  const int j = p / 2;
  if (p % 2 == 0) return create(j, s) - annihilate(j, s);
  return Complex(0.0, 1.0) * (create(j, s) + annihilate(j, s));
}

// Clifford module action of a multivector; blades act by their generators in
// ascending product order (rightmost generator acts first).
inline Spinor clifford_action(const Multivector& x, const Spinor& s) {
  if (x.half_dim() != s.half_dim())
    throw std::invalid_argument("clifford_action: dimension mismatch");
  Spinor r(s.half_dim());
  for (Mask blade = 0; blade < Mask(x.size()); ++blade) {
    const Complex z = x.coeff(blade);
    if (z == 0.0) continue;
    Spinor t = s;
    for (int p = 2 * s.half_dim() - 1; p >= 0; --p)
      if (blade & (Mask(1) << p)) t = generator_action(p, t);
    r += z * t;
  }
  return r;
}

// Matrix of s -> x.s on the Fock basis.
inline CMatrix action_matrix(const Multivector& x, int m) {
  const Eigen::Index n = Eigen::Index(1) << m;
  CMatrix A(n, n);
  for (Eigen::Index col = 0; col < n; ++col)
    A.col(col) = clifford_action(x, Spinor::basis(m, Mask(col))).coeffs();
  return A;
}

// Chirality split s = s+ + s-; the +1 eigenspace of the complex volume
// element is spanned by even-cardinality Fock subsets.
inline std::pair<Spinor, Spinor> chirality_split(const Spinor& s) {
  Spinor plus(s.half_dim()), minus(s.half_dim());
  for (Mask sub = 0; sub < Mask(s.size()); ++sub) {
    if (std::popcount(sub) & 1)
      minus.coeff(sub) = s.coeff(sub);
    else
      plus.coeff(sub) = s.coeff(sub);
  }
  return {plus, minus};
}

struct IsotropicSubspace {
  // Hermitian-orthonormal column basis of a subspace of C^{2m}.
  CMatrix basis;

  int dimension() const { return int(basis.cols()); }

  double isotropy_defect() const {
    double worst = 0.0;
    for (Eigen::Index i = 0; i < basis.cols(); ++i)
      for (Eigen::Index j = 0; j < basis.cols(); ++j)
        worst = std::max(worst, std::abs(bilinear_form(basis.col(i), basis.col(j))));
    return worst;
  }
};

struct KernelResult {
  IsotropicSubspace space;
  // Smallest kept-to-dropped singular value separation, relative to the
  // largest; reported so borderline purity calls are visible.
  double margin = 0.0;
};

// {v in C^{2m} : v.s = 0} via rank-revealing SVD of the 2^m x 2m system.
inline KernelResult kernel_of_j(const Spinor& s, double rel_threshold = 1e-9) {
  if (s.norm() == 0.0) throw std::invalid_argument("kernel_of_j: zero spinor");
  const int m = s.half_dim();
  const int n = 2 * m;
  CMatrix M(s.size(), n);
  for (int p = 0; p < n; ++p) M.col(p) = generator_action(p, s).coeffs();

  Eigen::JacobiSVD<CMatrix> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv[0] : 0.0;
  const double cut = rel_threshold * (smax > 0 ? smax : 1.0);

  int rank = 0;
  while (rank < sv.size() && sv[rank] > cut) ++rank;

  KernelResult kr;
  kr.space.basis = svd.matrixV().rightCols(n - rank);
  if (rank == 0)
    kr.margin = 1.0;
  else if (rank == n)
    kr.margin = 1.0;
  else
    kr.margin = (sv[rank - 1] - sv[rank]) / (smax > 0 ? smax : 1.0);
  return kr;
}

inline bool is_pure(const Spinor& s, double rel_threshold = 1e-9) {
  return kernel_of_j(s, rel_threshold).space.dimension() == s.half_dim();
}

}  // namespace spinform
