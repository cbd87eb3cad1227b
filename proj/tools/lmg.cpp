// Copyright 2026 The lmg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end:
//   lmg <experiment> --config <path> [--set key=value ...] --out <path>
// Exit codes: 0 success, 2 configuration error, 3 numerical failure, 4 I/O.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "lmg/config.hpp"
#include "lmg/csv.hpp"
#include "lmg/errors.hpp"
#include "lmg/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

int run(const std::string& name, const std::string& config_path, const std::vector<std::string>& overrides,
        const std::string& out_path) {
  const lmg::Experiment experiment = lmg::parse_experiment(name);
  const lmg::Config config = lmg::load_config(lmg::experiment_keys(experiment), config_path, overrides);
  const lmg::CsvTable table = lmg::run_experiment(experiment, config);
  lmg::write_csv(table, out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dissipative Lipkin-Meshkov-Glick simulations"};
  app.set_version_flag("--version", LMG_VERSION_STRING);

  std::string experiment;
  std::string config_path;
  std::string out_path;
  std::vector<std::string> overrides;
  std::string choices;
  for (const auto& n : lmg::experiment_names()) choices += (choices.empty() ? "" : ", ") + n;

  app.add_option("experiment", experiment, "one of: " + choices)->required();
  app.add_option("--config", config_path, "flat key = value configuration file")->required();
  app.add_option("--set", overrides, "override a configuration key (key=value); wins over the file");
  app.add_option("--out", out_path, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    return run(experiment, config_path, overrides, out_path);
  } catch (const lmg::ConfigError& e) {
    spdlog::error("configuration error: {}", e.what());
    return kExitConfig;
  } catch (const lmg::IoError& e) {
    spdlog::error("I/O error: {}", e.what());
    return kExitIo;
  } catch (const lmg::NumericError& e) {
    spdlog::error("numerical failure: {} (last good time {})", e.what(), e.last_good_time());
    return kExitNumeric;
  } catch (const std::exception& e) {
    spdlog::error("numerical failure: {}", e.what());
    return kExitNumeric;
  }
}
