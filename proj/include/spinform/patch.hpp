// Copyright 2026 The Spinform Authors
// SPDX-License-Identifier: Apache-2.0
//
// Pointwise Riemannian geometry on a single coordinate chart: metric and ACS
// fields with first-derivative oracles, Christoffel symbols, and adapted
// unitary frame fields.

#pragma once

#include "spinform/exterior.hpp"

#include <Eigen/Cholesky>

#include <functional>
#include <stdexcept>
#include <vector>

namespace spinform {

enum class OracleKind { analytic, finite_difference };

using MatrixField = std::function<RMatrix(const RVector&)>;
using MatrixGradField = std::function<std::vector<RMatrix>(const RVector&)>;

struct MetricPatch {
  int m = 0;
  RVector lo, hi;  // domain box; fields stay evaluable slightly outside
  MatrixField g;
  MatrixGradField dg;  // dg(x)[i](j,k) = d_i g_jk
  MatrixField J;
  MatrixGradField dJ;
  OracleKind kind = OracleKind::analytic;
  double h = 1e-3;  // finite-difference step for derivative oracles

  int dim() const { return 2 * m; }
  bool contains(const RVector& x, double slack = 1e-12) const {
    for (int i = 0; i < x.size(); ++i)
      if (x[i] < lo[i] - slack || x[i] > hi[i] + slack) return false;
    return true;
  }
};

namespace detail {

// 5-point central stencil, O(h^4).
template <class F>
auto deriv5(F&& f, const RVector& x, int i, double h) {
  RVector xp = x, xpp = x, xm = x, xmm = x;
  xp[i] += h;
  xpp[i] += 2 * h;
  xm[i] -= h;
  xmm[i] -= 2 * h;
  return ((-f(xpp) + 8.0 * f(xp) - 8.0 * f(xm) + f(xmm)) / (12.0 * h)).eval();
}

}  // namespace detail

// Replace the derivative oracles by central finite differences of the fields.
inline MetricPatch with_fd_oracles(MetricPatch p, double h) {
  const MatrixField g = p.g, J = p.J;
  const int n = p.dim();
  p.dg = [g, h, n](const RVector& x) {
    std::vector<RMatrix> out(n);
    RVector xp, xm;
    for (int i = 0; i < n; ++i) {
      xp = x;
      xm = x;
      xp[i] += h;
      xm[i] -= h;
      out[i] = (g(xp) - g(xm)) / (2.0 * h);
    }
    return out;
  };
  p.dJ = [J, h, n](const RVector& x) {
    std::vector<RMatrix> out(n);
    RVector xp, xm;
    for (int i = 0; i < n; ++i) {
      xp = x;
      xm = x;
      xp[i] += h;
      xm[i] -= h;
      out[i] = (J(xp) - J(xm)) / (2.0 * h);
    }
    return out;
  };
  p.kind = OracleKind::finite_difference;
  p.h = h;
  return p;
}

// Levi-Civita coefficients Gamma[l](j,k) = Gamma^l_{jk} from g and dg.
inline std::vector<RMatrix> christoffel(const MetricPatch& patch, const RVector& x) {
  const int n = patch.dim();
  const RMatrix g = patch.g(x);
  Eigen::LLT<RMatrix> llt(g);
  if (llt.info() != Eigen::Success) throw std::runtime_error("christoffel: metric not SPD");
  const RMatrix ginv = g.inverse();
  const std::vector<RMatrix> dg = patch.dg(x);

  std::vector<RMatrix> gamma(n, RMatrix::Zero(n, n));
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      RVector lower(n);
      for (int r = 0; r < n; ++r) lower[r] = 0.5 * (dg[j](r, k) + dg[k](r, j) - dg[r](j, k));
      const RVector up = ginv * lower;
      for (int l = 0; l < n; ++l) {
        gamma[l](j, k) = up[l];
        gamma[l](k, j) = up[l];
      }
    }
  return gamma;
}

struct FrameField {
  RMatrix F;        // columns (e_1, Je_1, .., e_m, Je_m), g-orthonormal
  int skipped = 0;  // seed columns dropped for near-zero pivots
};

// Reorder the identity columns by max-residual pivoting against the
// J-adapted Gram-Schmidt at x. Using the result as a frozen seed keeps every
// pivot of the sequential construction at unit scale, so the frame field is
// smooth in a neighbourhood of x and safe to differentiate.
inline RMatrix stable_seed(const MetricPatch& patch, const RVector& x) {
  const int n = patch.dim();
  const RMatrix g = patch.g(x);
  const RMatrix J = patch.J(x);
  RMatrix F(n, n);
  std::vector<int> order;
  std::vector<bool> used(n, false);
  int placed = 0;
  while (placed < n) {
    int best = -1;
    double best_len = -1.0;
    RVector best_v;
    for (int col = 0; col < n; ++col) {
      if (used[col]) continue;
      RVector v = RMatrix::Identity(n, n).col(col);
      for (int j = 0; j < placed; ++j) v -= (F.col(j).dot(g * v)) * F.col(j);
      const double len = std::sqrt(v.dot(g * v));
      if (len > best_len) {
        best_len = len;
        best = col;
        best_v = v;
      }
    }
    used[best] = true;
    order.push_back(best);
    F.col(placed) = best_v / best_len;
    RVector w = J * F.col(placed);
    w /= std::sqrt(w.dot(g * w));
    F.col(placed + 1) = w;
    placed += 2;
  }
  for (int col = 0; col < n; ++col)
    if (!used[col]) order.push_back(col);
  RMatrix S = RMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) S(order[i], i) = 1.0;
  return S;
}

// Deterministic g-orthonormal J-adapted frame at x; smooth in x for a fixed
// seed as long as pivots stay away from the threshold. Without an explicit
// seed the max-residual pivot order at x is used.
inline FrameField unitary_frame_field(const MetricPatch& patch, const RVector& x,
                                      std::optional<RMatrix> seed = std::nullopt,
                                      double pivot_tol = 1e-8) {
  const int n = patch.dim();
  const RMatrix g = patch.g(x);
  const RMatrix J = patch.J(x);
  RMatrix S = seed ? *seed : stable_seed(patch, x);

  FrameField out;
  out.F.resize(n, n);
  int placed = 0;
  for (int col = 0; col < S.cols() && placed < n; ++col) {
    RVector v = S.col(col);
    for (int j = 0; j < placed; ++j) v -= (out.F.col(j).dot(g * v)) * out.F.col(j);
    const double len = std::sqrt(v.dot(g * v));
    if (len < pivot_tol) {
      ++out.skipped;
      continue;
    }
    out.F.col(placed) = v / len;
    RVector w = J * out.F.col(placed);
    w /= std::sqrt(w.dot(g * w));
    out.F.col(placed + 1) = w;
    placed += 2;
  }
  if (placed < n) throw std::runtime_error("unitary_frame_field: Gram-Schmidt breakdown");
  return out;
}

// Coordinate derivatives of the frame field, dF[i] = d_i F, by a 5-point
// stencil on the deterministic construction above.
inline std::vector<RMatrix> frame_field_derivative(const MetricPatch& patch, const RVector& x,
                                                   std::optional<RMatrix> seed = std::nullopt,
                                                   double h = 1e-3) {
  const int n = patch.dim();
  std::vector<RMatrix> dF(n);
  // Freeze the pivot order of the center point across the whole stencil.
  const RMatrix S = seed ? *seed : stable_seed(patch, x);
  auto field = [&](const RVector& y) { return unitary_frame_field(patch, y, S).F; };
  for (int i = 0; i < n; ++i) dF[i] = detail::deriv5(field, x, i, h);
  return dF;
}

}  // namespace spinform
