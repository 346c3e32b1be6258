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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "relaframe/relaframe.hpp"

namespace {

// Exit codes: parse, validation and domain failures are distinguishable.
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitDomain = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw relaframe::ParseError("cannot read config file '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw relaframe::Error("cannot write output file '" + path + "'");
  }
  out << text;
}

int run_command(const std::string& config_path, const std::string& format,
                const std::string& out_override, bool verbose) {
  const relaframe::ExperimentConfig cfg =
      relaframe::parse_config(read_file(config_path));
  if (verbose) {
    std::cerr << "effective config: "
              << relaframe::effective_config_json(cfg).dump(2) << "\n";
  }
  const relaframe::ResultTable table = relaframe::run(cfg);
  if (verbose) {
    for (const auto& [key, value] : table.volatile_meta) {
      std::cerr << key << " = " << value << "\n";
    }
  }
  const std::string text =
      relaframe::emit(table, relaframe::emit_format_from_name(format));
  const std::string path =
      out_override.empty() ? cfg.output_path : out_override;
  write_output(path, text);
  return 0;
}

int validate_command(const std::string& config_path) {
  const relaframe::ExperimentConfig cfg =
      relaframe::parse_config(read_file(config_path));
  std::cout << "valid\n"
            << relaframe::effective_config_json(cfg).dump(2) << "\n";
  return 0;
}

int list_command() {
  for (const auto& info : relaframe::list_experiments()) {
    std::cout << info.id << "\n    " << info.description << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relaframe: config-driven quantum reference frame experiments"};
  app.require_subcommand(1);

  std::string config_path;
  std::string format = "csv";
  std::string out_override;
  bool verbose = false;

  CLI::App* run_cmd = app.add_subcommand("run", "execute an experiment config");
  run_cmd->add_option("config", config_path, "path to the config document")
      ->required();
  run_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json", "plotdata"}));
  run_cmd->add_option("--out", out_override,
                      "output path (overrides the config's output.path)");
  run_cmd->add_flag("--verbose", verbose, "echo effective config and timing");

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check a config document");
  validate_cmd->add_option("config", config_path, "path to the config document")
      ->required();

  CLI::App* list_cmd =
      app.add_subcommand("list-experiments", "list experiment ids");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      return run_command(config_path, format, out_override, verbose);
    }
    if (validate_cmd->parsed()) {
      return validate_command(config_path);
    }
    if (list_cmd->parsed()) {
      return list_command();
    }
  } catch (const relaframe::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  } catch (const relaframe::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const relaframe::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}
