// Copyright 2026 The Relaframe Authors
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

#ifndef RELAFRAME_CONFIG_HPP_
#define RELAFRAME_CONFIG_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "relaframe/errors.hpp"

namespace relaframe {

enum class ExperimentId {
  convergence,
  derelativise,
  twirl_check,
  mutual_coherence,
  homodyne,
  structure_suite,
};

inline const std::vector<std::pair<ExperimentId, std::string>>&
experiment_names() {
  static const std::vector<std::pair<ExperimentId, std::string>> names = {
      {ExperimentId::convergence, "convergence"},
      {ExperimentId::derelativise, "derelativise"},
      {ExperimentId::twirl_check, "twirl-check"},
      {ExperimentId::mutual_coherence, "mutual-coherence"},
      {ExperimentId::homodyne, "homodyne"},
      {ExperimentId::structure_suite, "structure-suite"},
  };
  return names;
}

inline std::string experiment_name(ExperimentId id) {
  for (const auto& [eid, name] : experiment_names()) {
    if (eid == id) return name;
  }
  return "?";
}

enum class ModelKind { canonical, cyclic };

inline std::string model_name(ModelKind m) {
  return m == ModelKind::canonical ? "canonical" : "cyclic";
}

struct SequenceSpec {
  std::string kind = "coherent-amplitude";  // or "phase-peaked"
  std::vector<double> values;
};

struct StateSpec {
  enum class Kind { number_eigenstate, coherent, plus_superposition, random };
  Kind kind = Kind::plus_superposition;
  long long n = 0;             // number-eigenstate level
  double beta = 0.0;           // coherent amplitude |beta|
  double phase = 0.0;          // coherent phase arg(beta)
  std::uint64_t seed = 0;      // random state seed (required for random)
};

inline std::string state_kind_name(StateSpec::Kind k) {
  switch (k) {
    case StateSpec::Kind::number_eigenstate: return "number-eigenstate";
    case StateSpec::Kind::coherent: return "coherent";
    case StateSpec::Kind::plus_superposition: return "plus-superposition";
    case StateSpec::Kind::random: return "random";
  }
  return "?";
}

// A fully validated experiment description with every default materialised.
struct ExperimentConfig {
  ExperimentId experiment = ExperimentId::structure_suite;
  ModelKind model = ModelKind::canonical;
  int d_system = 0;
  int d_reference = 0;
  int bins = 0;
  SequenceSpec sequence;
  StateSpec system_state;
  StateSpec reference_state;
  double tol_witness = 1e-8;
  double tol_defect = 1e-10;
  double tol_truncation = 1e-6;
  std::string output_path;  // empty: stdout
};

namespace detail {

inline void check_keys(const nlohmann::json& obj, const std::string& path,
                       const std::vector<std::string>& allowed,
                       std::vector<std::string>& issues) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const auto& k : allowed) {
      if (k == key) { known = true; break; }
    }
    if (!known) {
      issues.push_back(path + ": unknown key '" + key + "'");
    }
  }
}

inline std::optional<StateSpec> parse_state_spec(
    const nlohmann::json& j, const std::string& path,
    std::vector<std::string>& issues) {
  if (!j.is_object()) {
    issues.push_back(path + ": must be an object");
    return std::nullopt;
  }
  check_keys(j, path, {"kind", "n", "beta", "phase", "seed"}, issues);
  if (!j.contains("kind") || !j["kind"].is_string()) {
    issues.push_back(path + ".kind: required string");
    return std::nullopt;
  }
  const std::string kind = j["kind"].get<std::string>();
  StateSpec spec;
  if (kind == "number-eigenstate") {
    spec.kind = StateSpec::Kind::number_eigenstate;
    if (!j.contains("n") || !j["n"].is_number_integer()) {
      issues.push_back(path + ".n: required integer for number-eigenstate");
      return std::nullopt;
    }
    spec.n = j["n"].get<long long>();
    if (spec.n < 0) {
      issues.push_back(path + ".n: must be >= 0");
      return std::nullopt;
    }
  } else if (kind == "coherent") {
    spec.kind = StateSpec::Kind::coherent;
    if (!j.contains("beta") || !j["beta"].is_number()) {
      issues.push_back(path + ".beta: required number for coherent");
      return std::nullopt;
    }
    spec.beta = j["beta"].get<double>();
    if (j.contains("phase")) {
      if (!j["phase"].is_number()) {
        issues.push_back(path + ".phase: must be a number");
        return std::nullopt;
      }
      spec.phase = j["phase"].get<double>();
    }
  } else if (kind == "plus-superposition") {
    spec.kind = StateSpec::Kind::plus_superposition;
  } else if (kind == "random") {
    spec.kind = StateSpec::Kind::random;
    if (!j.contains("seed") || !j["seed"].is_number_integer()) {
      issues.push_back(path +
                       ".seed: random states require an explicit seed");
      return std::nullopt;
    }
    spec.seed = j["seed"].get<std::uint64_t>();
  } else {
    issues.push_back(path + ".kind: unknown state kind '" + kind +
                     "' (expected number-eigenstate, coherent, "
                     "plus-superposition or random)");
    return std::nullopt;
  }
  return spec;
}

inline void check_state_fits(const StateSpec& spec, int dim,
                             const std::string& path,
                             std::vector<std::string>& issues) {
  if (spec.kind == StateSpec::Kind::number_eigenstate && spec.n >= dim) {
    issues.push_back(path + ".n: level " + std::to_string(spec.n) +
                     " does not fit in dimension " + std::to_string(dim));
  }
  if (spec.kind == StateSpec::Kind::plus_superposition && dim < 2) {
    issues.push_back(path + ": plus-superposition needs dimension >= 2");
  }
}

}  // namespace detail

// Parses and validates a config document (JSON). Raises ParseError for
// malformed input, ValidationError carrying every schema violation found,
// and returns the config with all defaults materialised otherwise.
inline ExperimentConfig parse_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what());
  }

  std::vector<std::string> issues;
  if (!j.is_object()) {
    throw ValidationError({"config: top level must be an object"});
  }
  detail::check_keys(j, "config",
                     {"experiment", "model", "dims", "bins", "sequence",
                      "states", "tolerances", "output"},
                     issues);

  ExperimentConfig cfg;

  // experiment
  bool have_experiment = false;
  if (!j.contains("experiment") || !j["experiment"].is_string()) {
    issues.push_back("experiment: required string");
  } else {
    const std::string name = j["experiment"].get<std::string>();
    bool found = false;
    for (const auto& [id, n] : experiment_names()) {
      if (n == name) {
        cfg.experiment = id;
        found = true;
        break;
      }
    }
    if (!found) {
      std::string valid;
      for (const auto& [id, n] : experiment_names()) {
        if (!valid.empty()) valid += ", ";
        valid += n;
      }
      issues.push_back("experiment: unknown id '" + name + "' (valid: " +
                       valid + ")");
    } else {
      have_experiment = true;
    }
  }

  // model
  if (j.contains("model")) {
    if (!j["model"].is_string()) {
      issues.push_back("model: must be a string");
    } else {
      const std::string m = j["model"].get<std::string>();
      if (m == "canonical") {
        cfg.model = ModelKind::canonical;
      } else if (m == "cyclic") {
        cfg.model = ModelKind::cyclic;
      } else {
        issues.push_back("model: unknown model '" + m +
                         "' (expected canonical or cyclic)");
      }
    }
  }

  // dims
  cfg.d_system = 0;
  cfg.d_reference = 64;
  if (cfg.experiment == ExperimentId::structure_suite) cfg.d_reference = 8;
  if (!j.contains("dims") || !j["dims"].is_object()) {
    issues.push_back("dims: required object with key 'system'");
  } else {
    detail::check_keys(j["dims"], "dims", {"system", "reference"}, issues);
    if (!j["dims"].contains("system") ||
        !j["dims"]["system"].is_number_integer()) {
      issues.push_back("dims.system: required integer");
    } else {
      cfg.d_system = j["dims"]["system"].get<int>();
      if (cfg.d_system < 1) issues.push_back("dims.system: must be >= 1");
    }
    if (j["dims"].contains("reference")) {
      if (!j["dims"]["reference"].is_number_integer()) {
        issues.push_back("dims.reference: must be an integer");
      } else {
        cfg.d_reference = j["dims"]["reference"].get<int>();
        if (cfg.d_reference < 1)
          issues.push_back("dims.reference: must be >= 1");
      }
    }
  }

  // bins (default 4 d_S for the canonical model, d_R for the cyclic one)
  cfg.bins = 0;
  if (j.contains("bins")) {
    if (!j["bins"].is_number_integer()) {
      issues.push_back("bins: must be an integer");
    } else {
      cfg.bins = j["bins"].get<int>();
      if (cfg.bins < 1) issues.push_back("bins: must be >= 1");
    }
  }
  if (cfg.bins == 0 && cfg.d_system >= 1) {
    cfg.bins = cfg.model == ModelKind::cyclic ? cfg.d_reference
                                              : 4 * cfg.d_system;
  }
  if (cfg.model == ModelKind::cyclic && cfg.bins != cfg.d_reference &&
      cfg.bins != 0) {
    if (j.contains("bins")) {
      issues.push_back(
          "bins: the cyclic model fixes bins = dims.reference (" +
          std::to_string(cfg.d_reference) + ")");
    }
  }

  // sequence
  cfg.sequence.kind = "coherent-amplitude";
  cfg.sequence.values =
      cfg.experiment == ExperimentId::homodyne
          ? std::vector<double>{2.0, 4.0, 8.0}
          : std::vector<double>{1.0, 2.0, 4.0, 8.0};
  if (j.contains("sequence")) {
    if (!j["sequence"].is_object()) {
      issues.push_back("sequence: must be an object");
    } else {
      detail::check_keys(j["sequence"], "sequence", {"kind", "values"},
                         issues);
      if (j["sequence"].contains("kind")) {
        if (!j["sequence"]["kind"].is_string()) {
          issues.push_back("sequence.kind: must be a string");
        } else {
          const std::string k = j["sequence"]["kind"].get<std::string>();
          if (k != "coherent-amplitude" && k != "phase-peaked") {
            issues.push_back("sequence.kind: unknown kind '" + k +
                             "' (expected coherent-amplitude or phase-peaked)");
          } else {
            cfg.sequence.kind = k;
          }
        }
      }
      if (j["sequence"].contains("values")) {
        if (!j["sequence"]["values"].is_array() ||
            j["sequence"]["values"].empty()) {
          issues.push_back("sequence.values: must be a non-empty array");
        } else {
          std::vector<double> vals;
          bool ok = true;
          for (const auto& v : j["sequence"]["values"]) {
            if (!v.is_number() || v.get<double>() <= 0.0) {
              issues.push_back(
                  "sequence.values: entries must be positive numbers");
              ok = false;
              break;
            }
            vals.push_back(v.get<double>());
          }
          if (ok) cfg.sequence.values = std::move(vals);
        }
      }
    }
  }

  // states
  cfg.system_state.kind = cfg.experiment == ExperimentId::homodyne
                              ? StateSpec::Kind::coherent
                              : StateSpec::Kind::plus_superposition;
  if (cfg.experiment == ExperimentId::homodyne) cfg.system_state.beta = 2.0;
  cfg.reference_state.kind = StateSpec::Kind::number_eigenstate;
  cfg.reference_state.n = 0;
  if (j.contains("states")) {
    if (!j["states"].is_object()) {
      issues.push_back("states: must be an object");
    } else {
      detail::check_keys(j["states"], "states", {"system", "reference"},
                         issues);
      if (j["states"].contains("system")) {
        if (auto s = detail::parse_state_spec(j["states"]["system"],
                                              "states.system", issues)) {
          cfg.system_state = *s;
        }
      }
      if (j["states"].contains("reference")) {
        if (auto s = detail::parse_state_spec(j["states"]["reference"],
                                              "states.reference", issues)) {
          cfg.reference_state = *s;
        }
      }
    }
  }
  if (cfg.d_system >= 1) {
    detail::check_state_fits(cfg.system_state, cfg.d_system, "states.system",
                             issues);
  }
  if (cfg.d_reference >= 1) {
    detail::check_state_fits(cfg.reference_state, cfg.d_reference,
                             "states.reference", issues);
  }
  if (cfg.experiment == ExperimentId::homodyne &&
      cfg.system_state.kind != StateSpec::Kind::coherent) {
    issues.push_back(
        "states.system: the homodyne experiment requires a coherent system "
        "state");
  }

  // tolerances
  if (j.contains("tolerances")) {
    if (!j["tolerances"].is_object()) {
      issues.push_back("tolerances: must be an object");
    } else {
      detail::check_keys(j["tolerances"], "tolerances",
                         {"witness", "defect", "truncation"}, issues);
      auto read_tol = [&](const char* key, double& slot) {
        if (!j["tolerances"].contains(key)) return;
        if (!j["tolerances"][key].is_number() ||
            j["tolerances"][key].get<double>() <= 0.0) {
          issues.push_back(std::string("tolerances.") + key +
                           ": must be a positive number");
        } else {
          slot = j["tolerances"][key].get<double>();
        }
      };
      read_tol("witness", cfg.tol_witness);
      read_tol("defect", cfg.tol_defect);
      read_tol("truncation", cfg.tol_truncation);
    }
  }

  // output
  if (j.contains("output")) {
    if (!j["output"].is_object()) {
      issues.push_back("output: must be an object");
    } else {
      detail::check_keys(j["output"], "output", {"path"}, issues);
      if (j["output"].contains("path")) {
        if (!j["output"]["path"].is_string() ||
            j["output"]["path"].get<std::string>().empty()) {
          issues.push_back("output.path: must be a non-empty string");
        } else {
          cfg.output_path = j["output"]["path"].get<std::string>();
        }
      }
    }
  }

  // Desk-scale cap for the Choi analysis of the structure suite.
  if (have_experiment && cfg.experiment == ExperimentId::structure_suite) {
    if (cfg.d_system > 6) {
      issues.push_back("dims.system: structure-suite caps dims.system at 6");
    }
    if (cfg.d_reference > 12) {
      issues.push_back(
          "dims.reference: structure-suite caps dims.reference at 12");
    }
  }

  if (!issues.empty()) throw ValidationError(std::move(issues));
  return cfg;
}

// The config with every default materialised, as a canonical JSON document.
inline nlohmann::json effective_config_json(const ExperimentConfig& cfg) {
  nlohmann::json j;
  j["experiment"] = experiment_name(cfg.experiment);
  j["model"] = model_name(cfg.model);
  j["dims"] = {{"system", cfg.d_system}, {"reference", cfg.d_reference}};
  j["bins"] = cfg.bins;
  j["sequence"] = {{"kind", cfg.sequence.kind},
                   {"values", cfg.sequence.values}};
  auto state_json = [](const StateSpec& s) {
    nlohmann::json out;
    out["kind"] = state_kind_name(s.kind);
    switch (s.kind) {
      case StateSpec::Kind::number_eigenstate: out["n"] = s.n; break;
      case StateSpec::Kind::coherent:
        out["beta"] = s.beta;
        out["phase"] = s.phase;
        break;
      case StateSpec::Kind::plus_superposition: break;
      case StateSpec::Kind::random: out["seed"] = s.seed; break;
    }
    return out;
  };
  j["states"] = {{"system", state_json(cfg.system_state)},
                 {"reference", state_json(cfg.reference_state)}};
  j["tolerances"] = {{"witness", cfg.tol_witness},
                     {"defect", cfg.tol_defect},
                     {"truncation", cfg.tol_truncation}};
  if (!cfg.output_path.empty()) {
    j["output"] = {{"path", cfg.output_path}};
  }
  return j;
}

}  // namespace relaframe

#endif  // RELAFRAME_CONFIG_HPP_
