// Copyright 2026 The Spinform Authors
// SPDX-License-Identifier: Apache-2.0
//
// spinform: property suites and geometric defect verification from the
// command line.
//
//   spinform algebra --m 3 --trials 500 --seed 42
//   spinform verify --scenario kodaira-thurston --points 64 --oracle both
//   spinform probe --scenario conformal-warp --at 0.1,0.1,0.1,0.1
//   spinform purity --file spinor.txt
//
// Exit codes: 0 success, 1 check/verdict failure, 2 configuration error,
// 3 skip budget exceeded (verify only).

#include "spinform/algebra_suite.hpp"
#include "spinform/report.hpp"
#include "spinform/spinor_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace spinform;

struct Options {
  int m = 2;
  int trials = 500;
  std::uint64_t seed = 42;
  std::string scenario = "flat";
  int points = 64;
  std::string oracle = "analytic";  // analytic | fd | both
  double h = 1e-3;
  double eps = 0.1;
  double amplitude = 0.1;
  std::string format = "text";  // text | json
  std::string out;
  std::string at;    // probe point, comma-separated
  std::string file;  // purity input
  ToleranceLadder tol;
};

std::ostream& sink(const Options& opt, std::ofstream& file_stream) {
  if (opt.out.empty()) return std::cout;
  file_stream.open(opt.out);
  if (!file_stream) throw std::runtime_error("cannot open output file: " + opt.out);
  return file_stream;
}

RVector parse_point(const std::string& csv) {
  std::vector<double> vals;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
  RVector x(Eigen::Index(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) x[Eigen::Index(i)] = vals[i];
  return x;
}

Json to_json(const SuiteResult& res) {
  Json j;
  j["m"] = res.m;
  j["trials"] = res.trials;
  j["seed"] = res.seed;
  Json checks = Json::array();
  for (const auto& c : res.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["max_err"] = c.max_err;
    jc["tolerance"] = c.tolerance;
    jc["pass"] = c.pass;
    checks.push_back(jc);
  }
  j["checks"] = checks;
  j["notes"] = res.notes;
  j["all_pass"] = res.all_pass();
  return j;
}

void print_suite(std::ostream& os, const SuiteResult& res) {
  os << "algebra suite  m=" << res.m << "  trials=" << res.trials << "  seed=" << res.seed
     << "\n";
  for (const auto& c : res.checks) {
    os.precision(3);
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << "  (max err "
       << std::scientific << c.max_err << ", tol " << c.tolerance << ")\n";
    os.unsetf(std::ios::scientific);
  }
  for (const auto& n : res.notes) os << "  note: " << n << "\n";
  os << (res.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
}

int cmd_algebra(const Options& opt) {
  if (opt.m < 1 || opt.m > 5 || opt.trials < 1) {
    std::cerr << "algebra: need 1 <= m <= 5 and trials >= 1\n";
    return 2;
  }
  const SuiteResult res = algebra_suite(opt.m, opt.trials, opt.seed);
  std::ofstream fs;
  std::ostream& os = sink(opt, fs);
  if (opt.format == "json")
    os << to_json(res).dump(2) << "\n";
  else
    print_suite(os, res);
  return res.all_pass() ? 0 : 1;
}

void print_run(std::ostream& os, const ScenarioRunResult& r) {
  os << "scenario " << r.scenario << "  oracle=" << r.oracle << "  m=" << r.m
     << "  points=" << r.points.size() << "  tol=" << r.tau << "\n";
  os << "  defect maxima:\n";
  for (const auto& [name, v] : r.max_norms) {
    os.precision(3);
    os << "    " << name << " = " << std::scientific << v << "\n";
    os.unsetf(std::ios::scientific);
  }
  os << "  mismatches=" << r.mismatches << "  equivalence_mismatches=" << r.equivalence_mismatches
     << "  warnings=" << r.warnings << "  skipped=" << r.skipped << "\n";
  for (const auto& f : r.findings) os << "  finding: " << f << "\n";
}

int cmd_verify(const Options& opt) {
  if (opt.points < 1 || opt.h <= 0) {
    std::cerr << "verify: need points >= 1 and h > 0\n";
    return 2;
  }
  Scenario sc;
  try {
    sc = make_scenario(opt.scenario, {opt.m, opt.eps, opt.amplitude, opt.seed});
  } catch (const std::invalid_argument& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  }

  std::vector<OracleKind> kinds;
  if (opt.oracle == "analytic" || opt.oracle == "both") kinds.push_back(OracleKind::analytic);
  if (opt.oracle == "fd" || opt.oracle == "both")
    kinds.push_back(OracleKind::finite_difference);
  if (kinds.empty()) {
    std::cerr << "verify: oracle must be analytic, fd or both\n";
    return 2;
  }

  std::vector<ScenarioRunResult> runs;
  for (OracleKind k : kinds) runs.push_back(run_scenario(sc, k, opt.points, opt.h, opt.tol));

  std::ofstream fs;
  std::ostream& os = sink(opt, fs);
  if (opt.format == "json") {
    Json j = Json::array();
    for (const auto& r : runs) j.push_back(to_json(r));
    os << j.dump(2) << "\n";
  } else {
    for (const auto& r : runs) print_run(os, r);
  }

  int rc = 0;
  for (const auto& r : runs) {
    if (skip_budget_exceeded(r)) rc = std::max(rc, 3);
    if (r.mismatches > 0) rc = std::max(rc, 1);
  }
  return rc;
}

int cmd_probe(const Options& opt) {
  Scenario sc;
  try {
    sc = make_scenario(opt.scenario, {opt.m, opt.eps, opt.amplitude, opt.seed});
  } catch (const std::invalid_argument& e) {
    std::cerr << "probe: " << e.what() << "\n";
    return 2;
  }
  RVector x;
  if (opt.at.empty()) {
    x = RVector::Zero(sc.patch.dim());
  } else {
    try {
      x = parse_point(opt.at);
    } catch (...) {
      std::cerr << "probe: cannot parse --at point\n";
      return 2;
    }
  }
  if (x.size() != sc.patch.dim() || !sc.patch.contains(x)) {
    std::cerr << "probe: point is outside the scenario domain\n";
    return 2;
  }

  const PointRecord rec = evaluate_point(sc.patch, x, opt.tol);
  std::ofstream fs;
  std::ostream& os = sink(opt, fs);

  if (opt.format == "json") {
    os << to_json(rec).dump(2) << "\n";
    return rec.skipped ? 1 : 0;
  }

  os << "probe " << sc.name << " at [" << x.transpose() << "]\n";
  if (rec.skipped) {
    os << "  frame construction failed at this point\n";
    return 1;
  }
  const FrameField ff = unitary_frame_field(sc.patch, x);
  os << "frame columns (e_1, Je_1, ..):\n" << ff.F << "\n";
  const auto gamma = christoffel(sc.patch, x);
  os << "christoffel slice Gamma^0:\n" << gamma[0] << "\n";
  const ConnCoeffs cc =
      connection_coeffs(sc.patch, x, ff.F, frame_field_derivative(sc.patch, x));
  for (int j = 0; j < cc.m; ++j) {
    os << "a[" << j << "]:\n" << cc.a[j] << "\n";
    os << "b[" << j << "]:\n" << cc.b[j] << "\n";
  }
  os << "defect norms:\n";
  for (const auto& [name, v] : rec.norms) os << "  " << name << " = " << v << "\n";
  os << "dual path gap = " << rec.dual_path_gap << "\n";
  if (!rec.prop_vacuous)
    os << "proportionality: angle = " << rec.prop_angle << ", fitted = ("
       << rec.prop_fitted.real() << ", " << rec.prop_fitted.imag() << ")\n";
  return 0;
}

int cmd_purity(const Options& opt) {
  std::ifstream in(opt.file);
  if (!in) {
    std::cerr << "purity: cannot open " << opt.file << "\n";
    return 2;
  }
  Spinor s;
  try {
    s = read_spinor(in);
  } catch (const std::runtime_error& e) {
    std::cerr << "purity: " << e.what() << "\n";
    return 2;
  }
  if (s.norm() == 0.0) {
    std::cerr << "purity: zero spinor\n";
    return 2;
  }
  const KernelResult kr = kernel_of_j(s);
  const bool pure = kr.space.dimension() == s.half_dim();

  std::ofstream fs;
  std::ostream& os = sink(opt, fs);
  os << "m = " << s.half_dim() << "\n";
  os << "kernel dimension = " << kr.space.dimension() << " (margin " << kr.margin << ")\n";
  os << "pure: " << (pure ? "yes" : "no") << "\n";
  if (pure) {
    const OrthoACS acs = acs_of_pure_spinor(s);
    os << "orientation: " << (canonical_orientation(acs) == 1 ? "positive" : "negative")
       << "\n";
    os << "J =\n" << acs.J << "\n";
  }
  return pure ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinform: Clifford/spinor algebra suites and geometric defect verification"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from an ini file (flags override)");

  Options opt;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    c->add_option("--out", opt.out, "write report to this file instead of stdout");
    c->add_option("--seed", opt.seed, "random seed");
  };

  CLI::App* alg = app.add_subcommand("algebra", "run the randomized identity suites");
  alg->add_option("--m", opt.m, "half-dimension");
  alg->add_option("--trials", opt.trials, "random instances per check");
  add_common(alg);

  CLI::App* ver = app.add_subcommand("verify", "sample a scenario and check defect verdicts");
  ver->add_option("--scenario", opt.scenario, "flat|kahler|kodaira-thurston|conformal-warp|random");
  ver->add_option("--m", opt.m, "half-dimension (where the scenario is parametric)");
  ver->add_option("--points", opt.points, "sample count");
  ver->add_option("--oracle", opt.oracle, "derivative oracles")
      ->check(CLI::IsMember({"analytic", "fd", "both"}));
  ver->add_option("--step", opt.h, "finite-difference step");
  ver->add_option("--eps", opt.eps, "kahler potential perturbation");
  ver->add_option("--amplitude", opt.amplitude, "random scenario amplitude");
  ver->add_option("--tol-analytic", opt.tol.analytic, "pass threshold, analytic oracle");
  ver->add_option("--tol-fd", opt.tol.fd, "pass threshold, finite differences");
  add_common(ver);

  CLI::App* prb = app.add_subcommand("probe", "full diagnostic at a single point");
  prb->add_option("--scenario", opt.scenario, "scenario name");
  prb->add_option("--m", opt.m, "half-dimension");
  prb->add_option("--at", opt.at, "comma-separated coordinates (default: origin)");
  prb->add_option("--eps", opt.eps, "kahler potential perturbation");
  prb->add_option("--amplitude", opt.amplitude, "random scenario amplitude");
  add_common(prb);

  CLI::App* pur = app.add_subcommand("purity", "purity analysis of a spinor file");
  pur->add_option("--file", opt.file, "spinor file")->required();
  add_common(pur);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (alg->parsed()) return cmd_algebra(opt);
    if (ver->parsed()) return cmd_verify(opt);
    if (prb->parsed()) return cmd_probe(opt);
    if (pur->parsed()) return cmd_purity(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
