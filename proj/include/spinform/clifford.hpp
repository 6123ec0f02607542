// Copyright 2026 The Spinform Authors
// SPDX-License-Identifier: Apache-2.0
//
// Complexified Clifford algebra Cl(2m, C) on bit-indexed basis blades.
// Sign convention: generators square to -1, i.e. v.v = -|v|^2.

#pragma once

#include <Eigen/Dense>

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace spinform {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;

// A blade is a subset of generator indices {0, .., 2m-1} packed into a mask,
// canonically ordered ascending.
using Mask = std::uint32_t;

inline int grade_of(Mask b) { return std::popcount(b); }

// Sign from reordering the concatenation e_A e_B into canonical ascending
// order (counts transpositions; no metric contractions).
inline int reorder_sign(Mask a, Mask b) {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

// Full product sign for e_A e_B, including e_i e_i = -1 on shared indices.
inline int product_sign(Mask a, Mask b) {
  int s = reorder_sign(a, b);
  if (std::popcount(a & b) & 1) s = -s;
  return s;
}

class Multivector {
 public:
  Multivector() : m_(0) {}
  explicit Multivector(int m) : m_(m), c_(CVector::Zero(std::size_t(1) << (2 * m))) {
    if (m < 1 || m > 15) throw std::invalid_argument("Multivector: bad half-dimension");
  }

  static Multivector scalar(int m, Complex z) {
    Multivector x(m);
    x.c_[0] = z;
    return x;
  }
  static Multivector blade(int m, Mask mask, Complex z = 1.0) {
    Multivector x(m);
    if (mask >= (Mask(1) << (2 * m))) throw std::invalid_argument("blade mask out of range");
    x.c_[mask] = z;
    return x;
  }

  int half_dim() const { return m_; }
  int dim() const { return 2 * m_; }
  Eigen::Index size() const { return c_.size(); }

  Complex coeff(Mask mask) const { return c_[mask]; }
  Complex& coeff(Mask mask) { return c_[mask]; }
  const CVector& coeffs() const { return c_; }
  CVector& coeffs() { return c_; }

  Multivector& operator+=(const Multivector& o) {
    check(o);
    c_ += o.c_;
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check(o);
    c_ -= o.c_;
    return *this;
  }
  Multivector& operator*=(Complex z) {
    c_ *= z;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Complex z, Multivector a) { return a *= z; }
  friend Multivector operator*(Multivector a, Complex z) { return a *= z; }
  friend Multivector operator-(Multivector a) { return a *= Complex(-1.0); }

  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check(b);
    Multivector r(a.m_);
    const Mask n = Mask(a.c_.size());
    for (Mask i = 0; i < n; ++i) {
      const Complex ai = a.c_[i];
      if (ai == 0.0) continue;
      for (Mask j = 0; j < n; ++j) {
        const Complex bj = b.c_[j];
        if (bj == 0.0) continue;
        r.c_[i ^ j] += double(product_sign(i, j)) * ai * bj;
      }
    }
    return r;
  }

  double max_abs() const { return c_.size() ? c_.cwiseAbs().maxCoeff() : 0.0; }
  double norm() const { return c_.norm(); }

  // Conjugation of the complexified algebra over its real form: conjugate
  // coefficients in the real blade basis.
  friend Multivector conj(Multivector x) {
    x.c_ = x.c_.conjugate();
    return x;
  }

  friend Multivector grade_project(const Multivector& x, int k) {
    Multivector r(x.m_);
    if (k < 0 || k > 2 * x.m_) return r;
    for (Mask i = 0; i < Mask(x.c_.size()); ++i)
      if (grade_of(i) == k) r.c_[i] = x.c_[i];
    return r;
  }

 private:
  void check(const Multivector& o) const {
    if (m_ != o.m_) throw std::invalid_argument("Multivector: dimension mismatch");
  }

  int m_;
  CVector c_;
};

inline bool approx_equal(const Multivector& a, const Multivector& b, double tol = 1e-12) {
  return (a - b).max_abs() <= tol;
}

// Grade-1 embedding of v in C^{2m}.
inline Multivector vector_embed(const CVector& v) {
  const int n = int(v.size());
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("vector_embed: length must be even");
  Multivector x(n / 2);
  for (int i = 0; i < n; ++i) x.coeff(Mask(1) << i) = v[i];
  return x;
}

// Complex volume element i^m e_1 ... e_{2m}; squares to 1.
inline Multivector complex_volume(int m) {
  const Complex im(0.0, 1.0);
  Complex z = 1.0;
  for (int j = 0; j < m; ++j) z *= im;
  return Multivector::blade(m, (Mask(1) << (2 * m)) - 1, z);
}

// C-bilinear extension of the standard inner product.
inline Complex bilinear_form(const CVector& v, const CVector& w) {
  if (v.size() != w.size()) throw std::invalid_argument("bilinear_form: length mismatch");
  return (v.array() * w.array()).sum();
}

// Hermitian pairing (v, w) = <v, conj(w)>.
inline Complex hermitian_form(const CVector& v, const CVector& w) {
  return bilinear_form(v, w.conjugate());
}

}  // namespace spinform
