// Copyright 2026 The Spinform Authors
// SPDX-License-Identifier: Apache-2.0
//
// Frame connection coefficients a, b, c, d of a unitary frame field, the
// Dirac defects of the twistor spinor and of the Kahler form, exterior
// derivative / codifferential oracles, and the Nijenhuis tensor.

#pragma once

#include "spinform/patch.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace spinform {

// a[j](k,l) = coefficient of eps_l   in  nabla_{eps_j}    epsbar_k
// c[j](k,l) = coefficient of epsbar_l in nabla_{eps_j}    epsbar_k
// b[j](k,l) = coefficient of eps_l   in  nabla_{epsbar_j} epsbar_k
// d[j](k,l) = coefficient of epsbar_l in nabla_{epsbar_j} epsbar_k
struct ConnCoeffs {
  int m = 0;
  std::vector<CMatrix> a, b, c, d;
  // Real frame coefficients gamma[p](q,r) = g(nabla_{E_p} E_q, E_r).
  std::vector<RMatrix> gamma;
};

namespace detail {

inline double frob(const std::vector<CMatrix>& t) {
  double s = 0.0;
  for (const auto& M : t) s += M.squaredNorm();
  return std::sqrt(s);
}

}  // namespace detail

inline ConnCoeffs connection_coeffs(const MetricPatch& patch, const RVector& x, const RMatrix& F,
                                    const std::vector<RMatrix>& dF) {
  const int n = patch.dim();
  const int m = patch.m;
  const RMatrix g = patch.g(x);
  const std::vector<RMatrix> gamma = christoffel(patch, x);

  // Covariant derivative of each frame column along each coordinate:
  // (D_i E_q)^l = d_i F^l_q + Gamma^l_{ij} F^j_q.
  std::vector<RMatrix> Dcov(n);
  for (int i = 0; i < n; ++i) {
    Dcov[i] = dF[i];
    for (int l = 0; l < n; ++l) Dcov[i].row(l) += (gamma[l].row(i) * F).eval();
  }

  ConnCoeffs cc;
  cc.m = m;
  cc.a.assign(m, CMatrix::Zero(m, m));
  cc.b.assign(m, CMatrix::Zero(m, m));
  cc.c.assign(m, CMatrix::Zero(m, m));
  cc.d.assign(m, CMatrix::Zero(m, m));
  cc.gamma.assign(n, RMatrix::Zero(n, n));

  for (int p = 0; p < n; ++p) {
    // nabla_{E_p} E_q in coordinates, then frame components via g.
    RMatrix covp = RMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) covp += F(i, p) * Dcov[i];
    cc.gamma[p] = covp.transpose() * g * F;  // (q,r) = g(nabla_{E_p} E_q, E_r)
  }

  const Complex I(0, 1);
  const double s2 = std::sqrt(2.0);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      // nabla_{eps_j} epsbar_k and nabla_{epsbar_j} epsbar_k in frame
      // components: eps_j = (E_{2j} - i E_{2j+1})/sqrt(2).
      auto covbar = [&](int p) -> Eigen::RowVectorXcd {
        return (cc.gamma[p].row(2 * k).cast<Complex>() +
                I * cc.gamma[p].row(2 * k + 1).cast<Complex>()) /
               s2;
      };
      const Eigen::RowVectorXcd W_eps = (covbar(2 * j) - I * covbar(2 * j + 1)) / s2;
      const Eigen::RowVectorXcd W_bar = (covbar(2 * j) + I * covbar(2 * j + 1)) / s2;
      for (int l = 0; l < m; ++l) {
        // <., epsbar_l> picks the eps_l coefficient: frame pairing
        // <E_p, E_q> = delta, so <W, epsbar_l> = (W_{2l} + i W_{2l+1})/sqrt2.
        cc.a[j](k, l) = (W_eps[2 * l] + I * W_eps[2 * l + 1]) / s2;
        cc.c[j](k, l) = (W_eps[2 * l] - I * W_eps[2 * l + 1]) / s2;
        cc.b[j](k, l) = (W_bar[2 * l] + I * W_bar[2 * l + 1]) / s2;
        cc.d[j](k, l) = (W_bar[2 * l] - I * W_bar[2 * l + 1]) / s2;
      }
    }
  return cc;
}

// ||a||: vanishes iff the twistor is anti-holomorphic.
inline double antiholo_defect(const ConnCoeffs& cc) { return detail::frob(cc.a); }

// ||b||: vanishes iff the twistor is holomorphic (J integrable).
inline double holo_defect(const ConnCoeffs& cc) { return detail::frob(cc.b); }

inline double cyclic_b_defect(const ConnCoeffs& cc) {
  double s = 0.0;
  for (int j = 0; j < cc.m; ++j)
    for (int k = 0; k < cc.m; ++k)
      for (int l = 0; l < cc.m; ++l)
        s += std::norm(cc.b[j](k, l) + cc.b[l](j, k) + cc.b[k](l, j));
  return std::sqrt(s);
}

// Du of the twistor spinor (vacuum of the frame Fock model), modulo the
// u-line: sum_{j,k} a_{j,j}^k eps_k.u + sum_{j<k<l} (cyclic b)/2 eps_j eps_k
// eps_l.u.
inline Spinor dirac_spinor_defect(const ConnCoeffs& cc) {
  const int m = cc.m;
  const Spinor vac = Spinor::vacuum(m);
  Spinor du(m);
  for (int k = 0; k < m; ++k) {
    Complex tr = 0.0;
    for (int j = 0; j < m; ++j) tr += cc.a[j](j, k);
    // eps_k . vacuum = sqrt(2) |{k}>
    du += tr * std::sqrt(2.0) * Spinor::basis(m, Mask(1) << k);
  }
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k)
      for (int l = k + 1; l < m; ++l) {
        const Complex cyc = 0.5 * (cc.b[j](k, l) + cc.b[l](j, k) + cc.b[k](l, j));
        // eps_j eps_k eps_l . vacuum = 2 sqrt(2) |{j,k,l}> for j < k < l
        du += cyc * 2.0 * std::sqrt(2.0) *
              Spinor::basis(m, (Mask(1) << j) | (Mask(1) << k) | (Mask(1) << l));
      }
  return du;
}

namespace detail {

// eps_j / epsbar_j in the standard-model algebra (frame components).
inline Multivector std_eps(int m, int j, bool bar) {
  CVector v = CVector::Zero(2 * m);
  v[2 * j] = 1.0 / std::sqrt(2.0);
  v[2 * j + 1] = bar ? Complex(0, 1) / std::sqrt(2.0) : Complex(0, -1) / std::sqrt(2.0);
  return vector_embed(v);
}

}  // namespace detail

// D applied to the Clifford element omega_1 + .. + omega_m, expanded through
// the connection coefficients. Vanishes iff a = 0 and cyclic-b = 0.
inline Multivector dirac_form_defect(const ConnCoeffs& cc) {
  const int m = cc.m;
  Multivector half(m);  // this is -D^{1/2} of (omega_1 + .. + omega_m)
  for (int j = 0; j < m; ++j) {
    const Multivector ej = detail::std_eps(m, j, false);
    for (int k = 0; k < m; ++k) {
      const Multivector ek = detail::std_eps(m, k, false);
      const Multivector ekb = detail::std_eps(m, k, true);
      for (int l = 0; l < m; ++l) {
        const Multivector el = detail::std_eps(m, l, false);
        const Multivector elb = detail::std_eps(m, l, true);
        half += std::conj(cc.a[j](k, l)) * (ej * elb * ekb);
        half += std::conj(cc.c[j](k, l)) * (ej * el * ekb);
        half += cc.b[j](k, l) * (ej * ek * el);
        half += cc.d[j](k, l) * (ej * ek * elb);
      }
    }
  }
  // D = 2i Im D^{1/2} on purely imaginary elements.
  return conj(half) - half;
}

// Kahler form as a matrix field, Omega(x) = J(x)^T g(x).
inline RMatrix kahler_matrix(const MetricPatch& patch, const RVector& x) {
  return patch.J(x).transpose() * patch.g(x);
}

inline KForm kahler_kform(const MetricPatch& patch, const RVector& x) {
  const RMatrix W = kahler_matrix(patch, x);
  const int n = patch.dim();
  KForm w(patch.m, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) w.coeff((Mask(1) << i) | (Mask(1) << j)) = W(i, j);
  return w;
}

// d(omega) in coordinate components from the derivative oracles only:
// (d omega)_{ijk} = antisymmetrized d_i Omega_{jk}.
inline KForm d_omega(const MetricPatch& patch, const RVector& x) {
  const int n = patch.dim();
  const RMatrix g = patch.g(x);
  const RMatrix J = patch.J(x);
  const std::vector<RMatrix> dg = patch.dg(x);
  const std::vector<RMatrix> dJ = patch.dJ(x);
  std::vector<RMatrix> dW(n);
  for (int i = 0; i < n; ++i) dW[i] = dJ[i].transpose() * g + J.transpose() * dg[i];

  KForm r(patch.m, 3);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        r.coeff((Mask(1) << i) | (Mask(1) << j) | (Mask(1) << k)) =
            dW[i](j, k) - dW[j](i, k) + dW[k](i, j);
  return r;
}

namespace detail {

// Exterior derivative of a pointwise-computable form field by a 5-point
// stencil per coordinate direction.
template <class Field>
KForm exterior_derivative_fd(Field&& phi, const MetricPatch& patch, const RVector& x, double h) {
  const int n = patch.dim();
  const KForm at_x = phi(x);
  const int p = at_x.degree();
  std::vector<KForm> dphi;
  dphi.reserve(n);
  auto comp = [&](const RVector& y) { return phi(y); };
  for (int i = 0; i < n; ++i) {
    RVector xp = x, xpp = x, xm = x, xmm = x;
    xp[i] += h;
    xpp[i] += 2 * h;
    xm[i] -= h;
    xmm[i] -= 2 * h;
    KForm d = comp(xpp) * Complex(-1.0) + comp(xp) * Complex(8.0) + comp(xm) * Complex(-8.0) +
              comp(xmm) * Complex(1.0);
    dphi.push_back(d * Complex(1.0 / (12.0 * h)));
  }

  KForm r(patch.m, p + 1);
  const Mask full = (Mask(1) << n) - 1;
  for (Mask M = 0; M <= full; ++M) {
    if (grade_of(M) != p + 1) continue;
    Complex acc = 0.0;
    int pos = 0;
    for (int i = 0; i < n; ++i) {
      const Mask bit = Mask(1) << i;
      if (!(M & bit)) continue;
      acc += double((pos & 1) ? -1 : 1) * dphi[i].coeff(M & ~bit);
      ++pos;
    }
    r.coeff(M) = acc;
  }
  return r;
}

}  // namespace detail

// d*omega = -*d*omega (Euclidean signature, even dimension). The inner star
// field is differentiated with a tight 5-point stencil.
inline KForm d_star_omega(const MetricPatch& patch, const RVector& x, double h_star = 1e-4) {
  auto star_field = [&](const RVector& y) {
    return hodge_star(kahler_kform(patch, y), patch.g(y));
  };
  const KForm ds = detail::exterior_derivative_fd(star_field, patch, x, h_star);
  return hodge_star(ds, patch.g(x)) * Complex(-1.0);
}

// Independent codifferential route: (d*omega)_j = -g^{ab} (nabla_a omega)_{bj}.
inline KForm d_star_omega_divergence(const MetricPatch& patch, const RVector& x) {
  const int n = patch.dim();
  const RMatrix g = patch.g(x);
  const RMatrix ginv = g.inverse();
  const RMatrix J = patch.J(x);
  const RMatrix W = kahler_matrix(patch, x);
  const std::vector<RMatrix> dg = patch.dg(x);
  const std::vector<RMatrix> dJ = patch.dJ(x);
  const std::vector<RMatrix> gamma = christoffel(patch, x);

  KForm r(patch.m, 1);
  for (int j = 0; j < n; ++j) {
    double acc = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        double nab = dJ[a].col(b).dot(g.col(j)) + J.col(b).dot(dg[a].col(j));
        for (int c = 0; c < n; ++c) nab -= gamma[c](a, b) * W(c, j) + gamma[c](a, j) * W(b, c);
        acc += ginv(a, b) * nab;
      }
    r.coeff(Mask(1) << j) = -acc;
  }
  return r;
}

// Nijenhuis tensor N^k_{ij} from the dJ oracle (coordinate vector fields, so
// all bracket terms reduce to dJ contractions).
inline std::vector<RMatrix> nijenhuis(const MetricPatch& patch, const RVector& x) {
  const int n = patch.dim();
  const RMatrix J = patch.J(x);
  const std::vector<RMatrix> dJ = patch.dJ(x);
  std::vector<RMatrix> N(n, RMatrix::Zero(n, n));  // N[k](i,j)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double v = 0.0;
        for (int l = 0; l < n; ++l)
          v += J(l, i) * dJ[l](k, j) - J(l, j) * dJ[l](k, i) - J(k, l) * dJ[i](l, j) +
               J(k, l) * dJ[j](l, i);
        N[k](i, j) = v;
      }
  return N;
}

inline double nijenhuis_norm(const MetricPatch& patch, const RVector& x) {
  double s = 0.0;
  for (const auto& M : nijenhuis(patch, x)) s += M.squaredNorm();
  return std::sqrt(s);
}

// Covariant k-form in frame components: phi(E_{a1}, .., E_{ak}) via minors of
// the frame matrix.
inline KForm form_to_frame(const KForm& phi, const RMatrix& F) {
  const int n = int(F.rows());
  const int k = phi.degree();
  KForm r(phi.half_dim(), k);
  const Mask full = (Mask(1) << n) - 1;
  std::vector<int> rows, cols;
  RMatrix sub(k, k);
  for (Mask A = 0; A <= full; ++A) {
    if (grade_of(A) != k) continue;
    detail::unpack_mask(A, cols);
    Complex acc = 0.0;
    for (Mask Jm = 0; Jm <= full; ++Jm) {
      if (grade_of(Jm) != k) continue;
      const Complex c = phi.coeff(Jm);
      if (c == 0.0) continue;
      detail::unpack_mask(Jm, rows);
      acc += detail::minor_det(F, rows, cols) * c;
    }
    r.coeff(A) = acc;
  }
  return r;
}

struct ProportionalityResult {
  Spinor dq_u;      // (Dq).u
  Spinor domega_u;  // (d omega).u, frame components
  Complex fitted = 0.0;
  Complex predicted = 0.0;  // 2i (1 + m + .. + m^{m-2}/(m-2)!)
  double angle = 0.0;       // collinearity angle, radians
  bool both_zero = false;   // proportionality vacuous
};

// Dq through the product rule on q = prod_j (1 + i E_{2j} E_{2j+1}), using
// the real frame connection coefficients.
inline Multivector dirac_q_defect(const ConnCoeffs& cc) {
  const int m = cc.m;
  const int n = 2 * m;
  auto frame_vec = [&](int p) {
    CVector v = CVector::Zero(n);
    v[p] = 1.0;
    return vector_embed(v);
  };

  std::vector<Multivector> factor(m);
  for (int j = 0; j < m; ++j)
    factor[j] =
        Multivector::scalar(m, 1.0) + Complex(0, 1) * (frame_vec(2 * j) * frame_vec(2 * j + 1));

  Multivector Dq(m);
  for (int p = 0; p < n; ++p) {
    // nabla_{E_p} E_q = sum_r gamma[p](q,r) E_r
    auto cov = [&](int q) {
      Multivector v(m);
      for (int r = 0; r < n; ++r) v += Complex(cc.gamma[p](q, r)) * frame_vec(r);
      return v;
    };
    Multivector dq(m);
    for (int j = 0; j < m; ++j) {
      Multivector term = Complex(0, 1) * (cov(2 * j) * frame_vec(2 * j + 1) +
                                          frame_vec(2 * j) * cov(2 * j + 1));
      for (int r = j - 1; r >= 0; --r) term = factor[r] * term;
      for (int r = j + 1; r < m; ++r) term = term * factor[r];
      dq += term;
    }
    Dq += frame_vec(p) * dq;
  }
  return Dq;
}

inline ProportionalityResult proportionality_check(const MetricPatch& patch, const RVector& x,
                                           const ConnCoeffs& cc, const RMatrix& F,
                                           double zero_tol = 1e-9) {
  const int m = patch.m;
  ProportionalityResult res;
  const Spinor u = Spinor::vacuum(m);

  res.dq_u = clifford_action(dirac_q_defect(cc), u);
  const KForm dw_frame = form_to_frame(d_omega(patch, x), F);
  res.domega_u = clifford_action(clifford_of_form(dw_frame), u);

  double fact = 1.0, mp = 1.0, series = 0.0;
  for (int r = 0; r <= m - 2; ++r) {
    if (r > 0) {
      fact *= r;
      mp *= m;
    }
    series += mp / fact;
  }
  res.predicted = Complex(0, 2) * series;

  const double na = res.dq_u.norm(), nb = res.domega_u.norm();
  if (na <= zero_tol && nb <= zero_tol) {
    res.both_zero = true;
    return res;
  }
  Complex inner = (res.domega_u.coeffs().adjoint() * res.dq_u.coeffs())(0);
  res.fitted = nb > 0 ? inner / Complex(nb * nb) : Complex(0.0);
  const double cosang = (na > 0 && nb > 0) ? std::min(1.0, std::abs(inner) / (na * nb)) : 0.0;
  res.angle = std::acos(cosang);
  return res;
}

}  // namespace spinform
