// Copyright 2026 The Spinform Authors
// SPDX-License-Identifier: Apache-2.0
//
// Point sweeps over scenario patches, defect verdicts against expected
// tables, and JSON report serialization.

#pragma once

#include "spinform/scenarios.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace spinform {

using Json = nlohmann::ordered_json;

struct ToleranceLadder {
  double algebra = 1e-9;
  double analytic = 1e-6;
  double fd = 1e-4;
  double fail_factor = 10.0;  // nonzero verdict above fail_factor * pass

  double pass_for(OracleKind k) const {
    return k == OracleKind::analytic ? analytic : fd;
  }
};

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::zero: return "zero";
    case Verdict::nonzero: return "nonzero";
    default: return "unknown";
  }
}

// Two-sided band: pass below tau, fail above fail_factor * tau, inconclusive
// in between (finite-difference noise must not flip theorem verdicts).
inline std::string band_verdict(double norm, double tau, double fail_factor) {
  if (norm <= tau) return "zero";
  if (norm >= fail_factor * tau) return "nonzero";
  return "inconclusive";
}

struct PointRecord {
  RVector x;
  bool skipped = false;
  std::map<std::string, double> norms;       // defect name -> Frobenius norm
  std::map<std::string, std::string> verdicts;
  double dual_path_gap = 0.0;
  bool prop_vacuous = true;
  double prop_angle = 0.0;
  Complex prop_fitted = 0.0;
};

// Halton low-discrepancy point in [0,1)^d, then scaled to the box.
inline RVector halton_point(int index, const RVector& lo, const RVector& hi) {
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  const int d = int(lo.size());
  RVector x(d);
  for (int i = 0; i < d; ++i) {
    const int base = primes[i % 10];
    double f = 1.0, r = 0.0;
    int n = index + 1;
    while (n > 0) {
      f /= base;
      r += f * (n % base);
      n /= base;
    }
    x[i] = lo[i] + r * (hi[i] - lo[i]);
  }
  return x;
}

inline PointRecord evaluate_point(const MetricPatch& patch, const RVector& x,
                                  const ToleranceLadder& tol,
                                  std::optional<RMatrix> seed = std::nullopt) {
  PointRecord rec;
  rec.x = x;
  const double tau = tol.pass_for(patch.kind);

  FrameField ff;
  RMatrix S;
  try {
    S = seed ? *seed : stable_seed(patch, x);
    ff = unitary_frame_field(patch, x, S);
  } catch (const std::runtime_error&) {
    rec.skipped = true;
    return rec;
  }
  const std::vector<RMatrix> dF = frame_field_derivative(patch, x, S);
  const ConnCoeffs cc = connection_coeffs(patch, x, ff.F, dF);

  rec.norms["domega"] = d_omega(patch, x).norm();
  rec.norms["dstar"] = d_star_omega(patch, x).norm();
  rec.norms["a"] = antiholo_defect(cc);
  rec.norms["b"] = holo_defect(cc);
  rec.norms["cyclicb"] = cyclic_b_defect(cc);
  rec.norms["du"] = dirac_spinor_defect(cc).norm();
  rec.norms["nijenhuis"] = nijenhuis_norm(patch, x);

  // Dual path: the Clifford realization of D(omega_1 + .. + omega_m) against
  // -i (d + d*) omega through the frame identification.
  const Multivector clifford_path = dirac_form_defect(cc);
  const KForm dwf = form_to_frame(d_omega(patch, x), ff.F);
  const KForm dswf = form_to_frame(d_star_omega(patch, x), ff.F);
  const Multivector coord_path =
      Complex(0, -1) * (clifford_of_form(dwf) + clifford_of_form(dswf));
  rec.dual_path_gap = (clifford_path - coord_path).max_abs();

  if (patch.m >= 2) {
    const ProportionalityResult prop = proportionality_check(patch, x, cc, ff.F, tau);
    rec.prop_vacuous = prop.both_zero;
    rec.prop_angle = prop.angle;
    rec.prop_fitted = prop.fitted;
  }

  for (const auto& [name, norm] : rec.norms)
    rec.verdicts[name] = band_verdict(norm, tau, tol.fail_factor);
  return rec;
}

struct ScenarioRunResult {
  std::string scenario;
  std::string oracle;  // "analytic" or "fd"
  int m = 0;
  double h = 0.0;
  double tau = 0.0;
  std::vector<PointRecord> points;
  int skipped = 0;
  int mismatches = 0;
  int warnings = 0;  // inconclusive bands
  int equivalence_mismatches = 0;
  std::map<std::string, double> max_norms;
  std::vector<std::string> findings;
};

namespace detail {

// Definite three-way comparison of booleans derived from band verdicts:
// mismatch only when two defects land in opposite definite bands.
inline bool definite_conflict(const std::string& u, const std::string& v) {
  return (u == "zero" && v == "nonzero") || (u == "nonzero" && v == "zero");
}

}  // namespace detail

inline ScenarioRunResult run_scenario(const Scenario& sc, OracleKind kind, int npoints,
                                      double h, const ToleranceLadder& tol) {
  MetricPatch patch = sc.patch;
  if (kind == OracleKind::finite_difference) patch = with_fd_oracles(patch, h);

  ScenarioRunResult out;
  out.scenario = sc.name;
  out.oracle = kind == OracleKind::analytic ? "analytic" : "fd";
  out.m = sc.m;
  out.h = h;
  out.tau = tol.pass_for(patch.kind);

  const std::map<std::string, Verdict> expected = {
      {"domega", sc.expected.domega}, {"dstar", sc.expected.dstar},
      {"a", sc.expected.a},           {"b", sc.expected.b},
      {"cyclicb", sc.expected.cyclicb}, {"du", sc.expected.du},
      {"nijenhuis", sc.expected.nijenhuis}};

  for (int i = 0; i < npoints; ++i) {
    PointRecord rec = evaluate_point(patch, halton_point(i, patch.lo, patch.hi), tol);
    if (rec.skipped) {
      ++out.skipped;
      out.points.push_back(std::move(rec));
      continue;
    }
    for (const auto& [name, norm] : rec.norms)
      out.max_norms[name] = std::max(out.max_norms[name], norm);

    // Expected-zero defects must be zero at every point.
    for (const auto& [name, verdict] : rec.verdicts) {
      if (expected.at(name) == Verdict::zero) {
        if (verdict == "nonzero") ++out.mismatches;
        if (verdict == "inconclusive") ++out.warnings;
      }
    }
    // Per-point equivalence of the closedness characterizations: d(omega) = 0 iff
    // (a = 0 and cyclic-b = 0) iff Du = 0, and iff d*omega = 0.
    const std::string& zdw = rec.verdicts.at("domega");
    const std::string zab = (rec.verdicts.at("a") == "nonzero" ||
                             rec.verdicts.at("cyclicb") == "nonzero")
                                ? "nonzero"
                                : ((rec.verdicts.at("a") == "zero" &&
                                    rec.verdicts.at("cyclicb") == "zero")
                                       ? "zero"
                                       : "inconclusive");
    const std::string& zdu = rec.verdicts.at("du");
    const std::string& zds = rec.verdicts.at("dstar");
    if (detail::definite_conflict(zdw, zab) || detail::definite_conflict(zdw, zdu) ||
        detail::definite_conflict(zab, zdu) || detail::definite_conflict(zdw, zds))
      ++out.equivalence_mismatches;

    out.points.push_back(std::move(rec));
  }

  // Expected-nonzero defects must show up somewhere in the sample.
  for (const auto& [name, exp] : expected)
    if (exp == Verdict::nonzero && out.max_norms[name] < tol.fail_factor * out.tau)
      ++out.mismatches;

  out.mismatches += out.equivalence_mismatches;
  return out;
}

inline bool skip_budget_exceeded(const ScenarioRunResult& r) {
  return r.points.size() > 0 && double(r.skipped) > 0.01 * double(r.points.size());
}

inline Json to_json(const PointRecord& rec) {
  Json j;
  j["x"] = std::vector<double>(rec.x.data(), rec.x.data() + rec.x.size());
  j["skipped"] = rec.skipped;
  if (rec.skipped) return j;
  Json norms, verdicts;
  for (const auto& [k, v] : rec.norms) norms[k] = v;
  for (const auto& [k, v] : rec.verdicts) verdicts[k] = v;
  j["norms"] = norms;
  j["verdicts"] = verdicts;
  j["dual_path_gap"] = rec.dual_path_gap;
  Json prop;
  prop["vacuous"] = rec.prop_vacuous;
  if (!rec.prop_vacuous) {
    prop["angle"] = rec.prop_angle;
    prop["fitted"] = {rec.prop_fitted.real(), rec.prop_fitted.imag()};
  }
  j["proportionality"] = prop;
  return j;
}

inline Json to_json(const ScenarioRunResult& r) {
  Json j;
  j["scenario"] = r.scenario;
  j["oracle"] = r.oracle;
  j["m"] = r.m;
  j["h"] = r.h;
  j["tolerance"] = r.tau;
  Json pts = Json::array();
  for (const auto& p : r.points) pts.push_back(to_json(p));
  j["points"] = pts;
  Json summary;
  summary["sampled"] = int(r.points.size());
  summary["skipped"] = r.skipped;
  summary["mismatches"] = r.mismatches;
  summary["equivalence_mismatches"] = r.equivalence_mismatches;
  summary["warnings"] = r.warnings;
  Json maxima;
  for (const auto& [k, v] : r.max_norms) maxima[k] = v;
  summary["max_norms"] = maxima;
  summary["findings"] = r.findings;
  j["summary"] = summary;
  return j;
}

}  // namespace spinform
