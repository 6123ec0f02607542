// Copyright 2026 The Spinform Authors
// SPDX-License-Identifier: Apache-2.0
//
// Exterior k-forms on R^{2m}, the Kahler 2-form, wedge powers, the metric
// Hodge star, and the grade-wise Clifford/exterior identification.
//
// Coefficients are stored per ascending index combination, bit-indexed the
// same way as Clifford blades, so the identification is coefficient-wise.

#pragma once

#include "spinform/acs.hpp"

#include <Eigen/LU>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace spinform {

class KForm {
 public:
  KForm() : m_(0), k_(0) {}
  KForm(int m, int k) : m_(m), k_(k), c_(CVector::Zero(std::size_t(1) << (2 * m))) {
    if (k < 0 || k > 2 * m) throw std::invalid_argument("KForm: bad degree");
  }

  int half_dim() const { return m_; }
  int dim() const { return 2 * m_; }
  int degree() const { return k_; }
  Eigen::Index size() const { return c_.size(); }

  Complex coeff(Mask combo) const { return c_[combo]; }
  Complex& coeff(Mask combo) { return c_[combo]; }

  KForm& operator+=(const KForm& o) {
    if (m_ != o.m_ || k_ != o.k_) throw std::invalid_argument("KForm: shape mismatch");
    c_ += o.c_;
    return *this;
  }
  KForm& operator-=(const KForm& o) {
    if (m_ != o.m_ || k_ != o.k_) throw std::invalid_argument("KForm: shape mismatch");
    c_ -= o.c_;
    return *this;
  }
  KForm& operator*=(Complex z) {
    c_ *= z;
    return *this;
  }
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(Complex z, KForm a) { return a *= z; }
  friend KForm operator*(KForm a, Complex z) { return a *= z; }

  double max_abs() const { return c_.cwiseAbs().maxCoeff(); }
  double norm() const { return c_.norm(); }

 private:
  int m_, k_;
  CVector c_;
};

inline KForm wedge(const KForm& a, const KForm& b) {
  if (a.half_dim() != b.half_dim()) throw std::invalid_argument("wedge: dimension mismatch");
  if (a.degree() + b.degree() > a.dim()) throw std::invalid_argument("wedge: degree overflow");
  KForm r(a.half_dim(), a.degree() + b.degree());
  for (Mask i = 0; i < Mask(a.size()); ++i) {
    const Complex ai = a.coeff(i);
    if (ai == 0.0) continue;
    for (Mask j = 0; j < Mask(b.size()); ++j) {
      const Complex bj = b.coeff(j);
      if (bj == 0.0 || (i & j)) continue;
      r.coeff(i | j) += double(reorder_sign(i, j)) * ai * bj;
    }
  }
  return r;
}

inline KForm wedge_power(const KForm& a, int k) {
  if (k == 0) {
    KForm one(a.half_dim(), 0);
    one.coeff(0) = 1.0;
    return one;
  }
  KForm r = a;
  for (int i = 1; i < k; ++i) r = wedge(r, a);
  return r;
}

namespace detail {

inline void unpack_mask(Mask mask, std::vector<int>& idx) {
  idx.clear();
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) idx.push_back(i);
}

// det of the submatrix of A with the given rows and columns.
inline double minor_det(const RMatrix& A, const std::vector<int>& rows,
                        const std::vector<int>& cols) {
  const int k = int(rows.size());
  if (k == 0) return 1.0;
  RMatrix S(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) S(i, j) = A(rows[i], cols[j]);
  return S.determinant();
}

}  // namespace detail

// Metric Hodge star from the Gram determinant; no orthonormality assumption.
// (*a)_{Ic} = orient . sqrt(det g) . sign(I, Ic) . a^I with indices raised by
// k x k minors of g^{-1}.
inline KForm hodge_star(const KForm& a, const RMatrix& g, int orientation = 1) {
  const int n = a.dim();
  const int k = a.degree();
  if (g.rows() != n || g.cols() != n) throw std::invalid_argument("hodge_star: bad metric");
  const RMatrix ginv = g.inverse();
  const double volg = std::sqrt(g.determinant());
  const Mask full = (Mask(1) << n) - 1;

  KForm r(a.half_dim(), n - k);
  std::vector<int> rows, cols;
  for (Mask I = 0; I <= full; ++I) {
    if (grade_of(I) != k) continue;
    detail::unpack_mask(I, rows);
    Complex raised = 0.0;
    for (Mask L = 0; L <= full; ++L) {
      if (grade_of(L) != k) continue;
      const Complex aL = a.coeff(L);
      if (aL == 0.0) continue;
      detail::unpack_mask(L, cols);
      raised += detail::minor_det(ginv, rows, cols) * aL;
    }
    if (raised == 0.0) continue;
    const Mask Ic = full & ~I;
    r.coeff(Ic) += double(orientation * reorder_sign(I, Ic)) * volg * raised;
  }
  return r;
}

// Degree-k form <-> grade-k multivector, coefficient-wise (orthonormal
// identification frame).
inline Multivector clifford_of_form(const KForm& a) {
  Multivector x(a.half_dim());
  for (Mask i = 0; i < Mask(a.size()); ++i) x.coeff(i) = a.coeff(i);
  return x;
}

inline KForm form_of_clifford(const Multivector& x, int k) {
  KForm a(x.half_dim(), k);
  for (Mask i = 0; i < Mask(x.size()); ++i)
    if (grade_of(i) == k) a.coeff(i) = x.coeff(i);
  return a;
}

// Kahler 2-form of a compatible pair: omega(v, w) = g(Jv, w), components
// (J^T g)_{ij} for i < j.
inline KForm kahler_form(const OrthoACS& acs, const RMatrix& g, double tol = 1e-10) {
  const int n = int(acs.J.rows());
  if ((acs.J.transpose() * g * acs.J - g).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("kahler_form: J is not g-orthogonal");
  const RMatrix W = acs.J.transpose() * g;
  KForm w(n / 2, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      w.coeff((Mask(1) << i) | (Mask(1) << j)) = W(i, j);
  return w;
}

namespace detail {

// eps_j / epsbar_j of an adapted frame as grade-1 Clifford elements.
inline Multivector frame_eps(const RMatrix& F, int j, bool bar) {
  const Complex s = bar ? Complex(0, 1) : Complex(0, -1);
  const CVector v =
      (F.col(2 * j).cast<Complex>() + s * F.col(2 * j + 1).cast<Complex>()) / std::sqrt(2.0);
  return vector_embed(v);
}

}  // namespace detail

// Both sides of the product expansion
//   omega_1 ... omega_m = sum_k (1/k!) (-i)^k omega^k
// with omega_j = -eps_j epsbar_j built from an adapted frame of J.
inline std::pair<Multivector, Multivector> omega_product_expansion(const OrthoACS& acs) {
  const int m = acs.half_dim();
  const RMatrix F = unitary_basis(acs);

  Multivector lhs = Multivector::scalar(m, 1.0);
  for (int j = 0; j < m; ++j)
    lhs = lhs * (-(detail::frame_eps(F, j, false) * detail::frame_eps(F, j, true)));

  const KForm w = kahler_form(acs, RMatrix::Identity(2 * m, 2 * m));
  Multivector rhs(m);
  double fact = 1.0;
  Complex mik = 1.0;
  for (int k = 0; k <= m; ++k) {
    if (k > 0) {
      fact *= k;
      mik *= Complex(0, -1);
    }
    rhs += (mik / fact) * clifford_of_form(wedge_power(w, k));
  }
  return {lhs, rhs};
}

// q = prod_j omegabar_j = prod_j (1 + i e_j . Je_j); acts on the positive
// spinor module as 2^m times projection onto the twistor line of J.
inline Multivector q_element(const OrthoACS& acs) {
  const int m = acs.half_dim();
  const RMatrix F = unitary_basis(acs);
  Multivector q = Multivector::scalar(m, 1.0);
  for (int j = 0; j < m; ++j) {
    Multivector ejJej = vector_embed(F.col(2 * j).cast<Complex>()) *
                        vector_embed(F.col(2 * j + 1).cast<Complex>());
    q = q * (Multivector::scalar(m, 1.0) + Complex(0, 1) * ejJej);
  }
  return q;
}

// Fit the constant c(m, p) in *phi = c . phi . omega_C over all grade-p
// blades (Euclidean metric, standard orientation). Returns the fitted
// constant and the worst residual of the fit.
struct StarVolumeFit {
  Complex constant;
  double residual;
};

inline StarVolumeFit star_volume_constant(int m, int p) {
  const Multivector volc = complex_volume(m);
  const Mask full = (Mask(1) << (2 * m)) - 1;
  const RMatrix id = RMatrix::Identity(2 * m, 2 * m);

  Complex num = 0.0;
  double den = 0.0;
  std::vector<std::pair<Multivector, Multivector>> pairs;
  for (Mask I = 0; I <= full; ++I) {
    if (grade_of(I) != p) continue;
    KForm phi(m, p);
    phi.coeff(I) = 1.0;
    const Multivector lhs = clifford_of_form(hodge_star(phi, id));
    const Multivector rhs = clifford_of_form(phi) * volc;
    pairs.emplace_back(lhs, rhs);
    for (Mask b = 0; b <= full; ++b) {
      num += lhs.coeff(b) * std::conj(rhs.coeff(b));
      den += std::norm(rhs.coeff(b));
    }
  }
  StarVolumeFit fit{den > 0 ? num / den : Complex(0.0), 0.0};
  for (auto& [lhs, rhs] : pairs)
    fit.residual = std::max(fit.residual, (lhs - fit.constant * rhs).max_abs());
  return fit;
}

}  // namespace spinform
