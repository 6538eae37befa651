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

#ifndef SEPSCOPE_IO_HPP
#define SEPSCOPE_IO_HPP

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sepscope/bloch.hpp"
#include "sepscope/density_matrix.hpp"
#include "sepscope/error.hpp"
#include "sepscope/frontier.hpp"
#include "sepscope/pauli.hpp"

namespace sepscope::io {

using nlohmann::json;

inline constexpr const char* kToolName = "sepscope";
inline constexpr const char* kToolVersion = "0.1.0";

/// Rounds to 15 significant digits.
inline double round15(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return std::strtod(buf, nullptr);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes through a sibling temporary and renames it into place.
inline void write_atomic(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw InvalidInput("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// State files
//
//   {"num_qubits": N, "entries": [[re, im], ...]}            dense, row-major
//   {"num_qubits": N, "terms": [{"indices": [...], "value": c}, ...]}   Pauli

inline json dense_state_json(const Matrix& m) {
  json entries = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back({m(r, c).real(), m(r, c).imag()});
  return {{"format", "dense"}, {"num_qubits", qubits_for_dim(m.rows())}, {"entries", std::move(entries)}};
}

inline json dense_state_json(const DensityMatrix& rho) { return dense_state_json(rho.matrix()); }

/// Nonzero coefficients only; c[0..0] is always written.
inline json pauli_state_json(const PauliTensor& t, double zero = 0.0) {
  json terms = json::array();
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k == 0 || std::abs(t[k]) > zero) terms.push_back({{"indices", t.multi_index(k)}, {"value", t[k]}});
  }
  return {{"format", "pauli"}, {"num_qubits", t.num_qubits()}, {"terms", std::move(terms)}};
}

namespace detail {

inline int read_num_qubits(const json& j) {
  if (!j.is_object()) throw InvalidInput("state file must be a JSON object");
  if (!j.contains("num_qubits") || !j["num_qubits"].is_number_integer()) throw InvalidInput("state file needs integer num_qubits");
  const int n = j["num_qubits"].get<int>();
  if (n < 1 || n > kMaxDenseQubits) throw InvalidInput("num_qubits must be in 1..12");
  return n;
}

inline Matrix read_dense(const json& j, int n) {
  const auto& entries = j["entries"];
  const auto d = static_cast<Eigen::Index>(dim_of(n));
  if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != d * d) {
    throw InvalidInput("dense state needs " + std::to_string(d * d) + " entries");
  }
  Matrix m(d, d);
  for (Eigen::Index k = 0; k < d * d; ++k) {
    const auto& e = entries[static_cast<std::size_t>(k)];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw InvalidInput("entry " + std::to_string(k) + " is not a [re, im] pair");
    }
    m(k / d, k % d) = Complex{e[0].get<double>(), e[1].get<double>()};
  }
  return m;
}

inline PauliTensor read_pauli(const json& j, int n) {
  if (n > kMaxPauliQubits) throw CapacityError("Pauli state files are limited to 10 qubits");
  const auto& terms = j["terms"];
  if (!terms.is_array()) throw InvalidInput("terms must be an array");
  auto t = PauliTensor::identity(n);
  std::set<std::size_t> seen;
  for (const auto& term : terms) {
    if (!term.is_object() || !term.contains("indices") || !term.contains("value") || !term["value"].is_number()) {
      throw InvalidInput("each Pauli term needs indices and a numeric value");
    }
    std::vector<int> alpha;
    for (const auto& a : term["indices"]) {
      if (!a.is_number_integer()) throw InvalidInput("Pauli indices must be integers");
      alpha.push_back(a.get<int>());
    }
    const std::size_t flat = t.flat_index(alpha);
    if (!seen.insert(flat).second) throw InvalidInput("repeated Pauli term");
    t[flat] = term["value"].get<double>();
  }
  return t;
}

}  // namespace detail

/// Parses and validates a state file; failures name the broken invariant.
inline DensityMatrix parse_state(const json& j) {
  const int n = detail::read_num_qubits(j);
  if (j.contains("entries")) return DensityMatrix(detail::read_dense(j, n));
  if (j.contains("terms")) {
    const auto t = detail::read_pauli(j, n);
    t.validate();
    return pauli_reconstruct(t);
  }
  throw InvalidInput("state file needs either entries (dense) or terms (pauli)");
}

inline DensityMatrix load_state(const std::filesystem::path& path) { return parse_state(parse_json(read_file(path))); }

// ---------------------------------------------------------------------------
// Report files

struct RunInfo {
  std::string version = kToolVersion;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;
};

namespace detail {

inline json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

inline std::optional<double> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<double>();
}

}  // namespace detail

inline json ensemble_json(const ProductEnsemble& ens) {
  json terms = json::array();
  for (const auto& t : ens.terms) {
    json blochs = json::array();
    for (const auto& b : t.blochs) blochs.push_back({round15(b.x()), round15(b.y()), round15(b.z())});
    terms.push_back({{"weight", t.weight}, {"blochs", std::move(blochs)}});
  }
  return {{"num_qubits", ens.num_qubits}, {"terms", std::move(terms)}};
}

inline ProductEnsemble ensemble_from_json(const json& j) {
  ProductEnsemble ens;
  ens.num_qubits = j.at("num_qubits").get<int>();
  for (const auto& t : j.at("terms")) {
    EnsembleTerm term;
    term.weight = t.at("weight").get<double>();
    for (const auto& b : t.at("blochs")) {
      // Vectors were rounded to 15 digits; renormalize before the unit check.
      term.blochs.push_back(BlochVector::normalized(Eigen::Vector3d(b.at(0).get<double>(), b.at(1).get<double>(), b.at(2).get<double>())));
    }
    ens.terms.push_back(std::move(term));
  }
  return ens;
}

inline json report_json(const SeparabilityReport& rep, const RunInfo& info) {
  json j;
  j["tool"] = kToolName;
  j["version"] = info.version;
  j["seed"] = info.seed;
  j["elapsed_seconds"] = info.elapsed_seconds;
  j["num_qubits"] = rep.num_qubits;
  j["epsilon"] = detail::opt(rep.epsilon);
  j["delta"] = rep.delta;
  j["thresholds"] = {{"discrete", detail::opt(rep.thresholds.discrete)},
                     {"continuous_floor", rep.thresholds.continuous_floor},
                     {"continuous_state", detail::opt(rep.thresholds.continuous_state)},
                     {"tetrahedral", detail::opt(rep.thresholds.tetrahedral)}};
  j["bounds"] = {{"lower_continuum", rep.bounds.lower_continuum},
                 {"lower_prior", rep.bounds.lower_prior},
                 {"upper", detail::opt(rep.bounds.upper)},
                 {"delta_ball", rep.bounds.delta_ball}};
  j["verdict"] = to_string(rep.verdict);
  if (rep.certificate) {
    j["certificate"] = ensemble_json(*rep.certificate);
    j["certificate"]["method"] = rep.certificate_method;
  } else {
    j["certificate"] = nullptr;
  }
  if (rep.witness) {
    j["witness"] = {{"second_group", rep.witness->second_group},
                    {"min_eigenvalue", rep.witness->min_eigenvalue},
                    {"description", rep.witness->description}};
  } else {
    j["witness"] = nullptr;
  }
  j["state"] = dense_state_json(rep.state);
  return j;
}

struct LoadedReport {
  SeparabilityReport report;
  RunInfo info;
};

/// Parses a report and re-validates it: a certificate must have nonnegative
/// weights summing to 1 and reconstruct the stored state within 1e-8; an
/// entangled verdict must carry a witness.
inline LoadedReport parse_report(const json& j) {
  LoadedReport out;
  auto& rep = out.report;
  try {
    out.info.version = j.at("version").get<std::string>();
    out.info.seed = j.at("seed").get<std::uint64_t>();
    out.info.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    rep.num_qubits = j.at("num_qubits").get<int>();
    rep.epsilon = detail::opt_from(j, "epsilon");
    rep.delta = j.at("delta").get<double>();
    const auto& th = j.at("thresholds");
    rep.thresholds.discrete = detail::opt_from(th, "discrete");
    rep.thresholds.continuous_floor = th.at("continuous_floor").get<double>();
    rep.thresholds.continuous_state = detail::opt_from(th, "continuous_state");
    rep.thresholds.tetrahedral = detail::opt_from(th, "tetrahedral");
    const auto& b = j.at("bounds");
    rep.bounds.lower_continuum = b.at("lower_continuum").get<double>();
    rep.bounds.lower_prior = b.at("lower_prior").get<double>();
    rep.bounds.upper = detail::opt_from(b, "upper");
    rep.bounds.delta_ball = b.at("delta_ball").get<double>();
    rep.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    rep.state = detail::read_dense(j.at("state"), rep.num_qubits);
    if (!j.at("certificate").is_null()) {
      rep.certificate = ensemble_from_json(j["certificate"]);
      rep.certificate_method = j["certificate"].value("method", "");
    }
    if (!j.at("witness").is_null()) {
      const auto& w = j["witness"];
      rep.witness = PptWitness{w.at("second_group").get<std::vector<int>>(), w.at("min_eigenvalue").get<double>(),
                               w.at("description").get<std::string>()};
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
  if (rep.verdict == Verdict::kSeparableCertified) {
    if (!rep.certificate) throw InvalidInput("separable verdict without a certificate");
    if (auto why = rep.certificate->check(rep.state, 1e-8); !why.empty()) throw InvalidInput("certificate rejected: " + why);
  }
  if (rep.verdict == Verdict::kEntangledCertified && !rep.witness) throw InvalidInput("entangled verdict without a witness");
  return out;
}

/// Process exit code for a verdict: 0 separable, 2 entangled, 3 undetermined.
inline int exit_code(Verdict v) {
  switch (v) {
    case Verdict::kSeparableCertified: return 0;
    case Verdict::kEntangledCertified: return 2;
    case Verdict::kUndetermined: return 3;
  }
  return 3;
}

}  // namespace sepscope::io

#endif  // SEPSCOPE_IO_HPP
