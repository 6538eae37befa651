// Copyright 2026 The sepscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: expand, decompose, minimize-w, classify, bounds,
// werner, nmr-audit.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sepscope.hpp"
#include "sepscope/io.hpp"

namespace {

using namespace sepscope;

std::string digits(const std::vector<int>& alpha) {
  std::string s;
  for (int a : alpha) s += static_cast<char>('0' + a);
  return s;
}

int cmd_expand(const std::string& path, double zero) {
  const auto rho = io::load_state(path);
  const auto t = pauli_expand(rho);
  std::printf("# %d-qubit Pauli coefficients c[a1..aN] = tr(rho sigma_a1 x ... x sigma_aN)\n", t.num_qubits());
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (std::abs(t[k]) > zero) std::printf("%s %.15g\n", digits(t.multi_index(k)).c_str(), t[k] == 0.0 ? 0.0 : t[k]);
  }
  return 0;
}

void print_weights(const std::vector<double>& w, int n, int radix, bool all) {
  if (!all) return;
  for (std::size_t k = 0; k < w.size(); ++k) {
    std::string label;
    std::size_t f = k;
    for (int q = 0; q < n; ++q, f /= static_cast<std::size_t>(radix)) label.insert(label.begin(), static_cast<char>('0' + f % radix));
    std::printf("%s %.15g\n", label.c_str(), w[k]);
  }
}

int cmd_decompose(const std::string& path, const std::string& basis, bool optimize, std::uint64_t seed,
                  const TetraOptions& topt, bool all) {
  const auto rho = io::load_state(path);
  const auto t = pauli_expand(rho);
  const int n = t.num_qubits();
  if (basis == "discrete") {
    const auto dec = discrete_decompose(t);
    const auto lo = min_weight(dec);
    std::string label;
    for (int b : dec.digits(lo.index)) {
      label += "xyz"[DiscreteDecomposition::axis_of(b) - 1];
      label += DiscreteDecomposition::sign_of(b) > 0 ? '+' : '-';
    }
    std::printf("basis: discrete (%zu product projectors, digits x+ x- y+ y- z+ z-)\n", dec.weights.size());
    std::printf("uniform weight: %.15g\n", std::pow(6.0, -n));
    std::printf("min weight: %.15g at %s\n", lo.value, label.c_str());
    std::printf("threshold: %.15g\n", mixing_threshold(std::pow(6.0, -n), lo.value));
    std::printf("worst-case threshold: %.15g\n", worst_case_discrete_threshold(n));
    print_weights(dec.weights, n, 6, all);
    return 0;
  }
  TetrahedralDecomposition dec = tetrahedral_decompose(t);
  if (optimize) {
    TetraOptions o = topt;
    o.seed = seed;
    const auto best = optimize_tetrahedra(rho, o);
    dec = tetrahedral_decompose(t, best.tetrahedra);
    std::printf("seed: %llu\n", static_cast<unsigned long long>(seed));
  }
  std::printf("basis: tetrahedral%s (%zu product states)\n", optimize ? ", optimized orientation" : "", dec.weights.size());
  for (int q = 0; q < n; ++q) {
    std::printf("qubit %d vertices:", q + 1);
    for (const auto& v : dec.tetrahedra[static_cast<std::size_t>(q)].vertices()) std::printf(" (%.15g, %.15g, %.15g)", v.x(), v.y(), v.z());
    std::printf("\n");
  }
  const auto lo = min_weight(dec.weights);
  std::printf("uniform weight: %.15g\n", std::ldexp(1.0, -2 * n));
  std::printf("min weight: %.15g at index %zu\n", lo.value, lo.index);
  std::printf("threshold: %.15g\n", tetrahedral_threshold(dec));
  print_weights(dec.weights, n, 4, all);
  return 0;
}

int cmd_minimize(const std::string& path, int starts, std::uint64_t seed) {
  const auto rho = io::load_state(path);
  const auto t = pauli_expand(rho);
  const int n = t.num_qubits();
  const auto best = minimize_weight(t, {starts, seed});
  std::printf("seed: %llu\n", static_cast<unsigned long long>(seed));
  std::printf("min w: %.15g\n", best.value);
  std::printf("min w * (4pi)^N: %.15g\n", best.value / uniform_weight(n));
  std::printf("floor * (4pi)^N: %.15g\n", weight_floor(n) / uniform_weight(n));
  for (int q = 0; q < n; ++q) {
    const auto& b = best.blochs[static_cast<std::size_t>(q)];
    std::printf("qubit %d: theta %.15g phi %.15g\n", q + 1, b.theta(), b.phi());
  }
  std::printf("threshold: %.15g\n", continuous_threshold(n, best.value));
  return 0;
}

int cmd_classify(const std::string& path, std::optional<double> eps, std::uint64_t seed, const std::string& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto rho = io::load_state(path);
  ClassifyOptions opt;
  opt.seed = seed;
  const auto rep = classify(rho, eps, opt);
  io::RunInfo info;
  info.seed = seed;
  info.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string text = io::report_json(rep, info).dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    io::write_atomic(out, text);
    std::printf("verdict: %s\n", to_string(rep.verdict));
    if (rep.certificate) std::printf("certificate: %s, %zu terms\n", rep.certificate_method.c_str(), rep.certificate->terms.size());
    if (rep.witness) std::printf("witness: %s\n", rep.witness->description.c_str());
    std::printf("seed: %llu\n", static_cast<unsigned long long>(seed));
  }
  return io::exit_code(rep.verdict);
}

int cmd_bounds(int n_max) {
  if (n_max < 1 || n_max > 60) throw RangeError("--n-max must be in 1..60");
  std::printf("%-4s %-22s %-22s %-22s %-22s %-22s\n", "N", "discrete_worst", "lower_continuum", "lower_prior", "upper",
              "delta_ball");
  for (int n = 1; n <= n_max; ++n) {
    char upper[32] = "-";
    if (n % 2 == 0) std::snprintf(upper, sizeof(upper), "%.15g", upper_bound(n));
    std::printf("%-4d %-22.15g %-22.15g %-22.15g %-22s %-22.15g\n", n, worst_case_discrete_threshold(n),
                lower_bound_continuum(n), lower_bound_prior(n), upper, delta_ball_radius(n));
  }
  return 0;
}

int cmd_werner(int n, double eps) {
  const auto w = construct_werner_instance(n, eps);
  const double ppt = ppt_min_eigenvalue(w.projected_state, {2});
  std::printf("n: %d\nd: %d\neps: %.15g\nnorm A: %.15g\neps': %.15g\neps' (from projected state): %.15g\n", n, w.d, eps,
              w.norm_A, w.eps_prime, w.eps_prime_recovered);
  std::printf("upper bound 1/(1+2^(n/2)): %.15g\n", upper_bound(n));
  std::printf("projected PPT min eigenvalue: %.15g\n", ppt);
  std::printf("projected state: %s\n", ppt < -1e-9 ? "entangled" : "separable");
  return 0;
}

int cmd_nmr(double alpha, int n_max) {
  const auto audit = nmr_audit(alpha, n_max);
  std::printf("alpha: %.15g\n", alpha);
  std::printf("%-4s %-22s %-22s %-22s %s\n", "N", "epsilon", "lower_continuum", "upper", "region");
  for (const auto& r : audit.rows) {
    char upper[32] = "-";
    if (r.upper) std::snprintf(upper, sizeof(upper), "%.15g", *r.upper);
    std::printf("%-4d %-22.15g %-22.15g %-22s %s\n", r.n, r.epsilon, r.lower, upper, to_string(r.region));
  }
  std::printf("crossing: N = %d (first N with epsilon above the separable lower bound)\n", audit.crossing);
  if (audit.first_entry) {
    std::printf("enters the entangled-exists region at N = %d\n", *audit.first_entry);
  } else {
    std::printf("never enters the entangled-exists region for N <= %d\n", n_max);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sepscope: separability certificates near the maximally mixed state"};
  app.require_subcommand(1);

  std::string state_path;
  std::uint64_t seed = 0;

  auto* expand = app.add_subcommand("expand", "Print the nonzero Pauli coefficients of a state");
  double zero = 1e-12;
  expand->add_option("state", state_path, "State file")->required();
  expand->add_option("--zero", zero, "Coefficients at or below this magnitude are omitted");

  auto* decompose = app.add_subcommand("decompose", "Product-state decomposition and its mixing threshold");
  std::string basis = "discrete";
  bool optimize = false, all_weights = false;
  TetraOptions topt;
  decompose->add_option("state", state_path, "State file")->required();
  decompose->add_option("--basis", basis, "discrete or tetra")->check(CLI::IsMember({"discrete", "tetra"}));
  decompose->add_flag("--optimize", optimize, "Optimize tetrahedron orientations");
  decompose->add_option("--seed", seed, "Random seed");
  decompose->add_option("--budget", topt.budget, "Simplex iterations per polish round");
  decompose->add_option("--starts", topt.starts, "Orientation search starts");
  decompose->add_flag("--weights", all_weights, "Print every weight");

  auto* minimize = app.add_subcommand("minimize-w", "Minimize the continuous weight function");
  int starts = 64;
  minimize->add_option("state", state_path, "State file")->required();
  minimize->add_option("--starts", starts, "Number of starts");
  minimize->add_option("--seed", seed, "Random seed");

  auto* classify_cmd = app.add_subcommand("classify", "Certify separability or entanglement of (1-eps) M_d + eps rho");
  std::optional<double> eps;
  std::string out;
  classify_cmd->add_option("state", state_path, "State file")->required();
  classify_cmd->add_option("--eps", eps, "Mixing parameter in [0, 1]; the state itself when omitted")->check(CLI::Range(0.0, 1.0));
  classify_cmd->add_option("--seed", seed, "Random seed");
  classify_cmd->add_option("--out", out, "Report path (standard output when omitted)");

  auto* bounds = app.add_subcommand("bounds", "Table of separability bounds");
  int n_max = 20;
  bounds->add_option("--n-max", n_max, "Largest qubit count (<= 60)");

  auto* werner = app.add_subcommand("werner", "Werner reduction of a noisy maximally entangled state");
  int werner_n = 4;
  double werner_eps = 0.25;
  werner->add_option("--n", werner_n, "Even qubit count")->required();
  werner->add_option("--eps", werner_eps, "Mixing parameter")->required();

  auto* nmr = app.add_subcommand("nmr-audit", "Pseudopure polarization alpha N/2^N against the bounds");
  double alpha = 2e-5;
  int nmr_n_max = 60;
  nmr->add_option("--alpha", alpha, "Scale: epsilon = alpha N / 2^N")->check(CLI::PositiveNumber);
  nmr->add_option("--n-max", nmr_n_max, "Largest qubit count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*expand) return cmd_expand(state_path, zero);
    if (*decompose) return cmd_decompose(state_path, basis, optimize, seed, topt, all_weights);
    if (*minimize) return cmd_minimize(state_path, starts, seed);
    if (*classify_cmd) return cmd_classify(state_path, eps, seed, out);
    if (*bounds) return cmd_bounds(n_max);
    if (*werner) return cmd_werner(werner_n, werner_eps);
    if (*nmr) return cmd_nmr(alpha, nmr_n_max);
  } catch (const sepscope::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
