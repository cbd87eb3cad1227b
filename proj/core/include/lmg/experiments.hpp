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


#ifndef LMG_EXPERIMENTS_HPP
#define LMG_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "lmg/config.hpp"
#include "lmg/csv.hpp"

namespace lmg {

enum class Experiment { kFigure1, kFigure2, kGapScan, kSlowflow, kClassical, kKernels, kStationarity };

/// Throws ConfigError for an unknown name.
Experiment parse_experiment(const std::string& name);
std::string experiment_name(Experiment experiment);
std::vector<std::string> experiment_names();

/// Declared keys and defaults of an experiment.
const std::vector<ConfigKey>& experiment_keys(Experiment experiment);

/// Runs an experiment. All configuration values are parsed and validated
/// before any computation; bad values raise ConfigError.
CsvTable run_experiment(Experiment experiment, const Config& config);

CsvTable run_figure1(const Config& config);
CsvTable run_figure2(const Config& config);
CsvTable run_gap_scan(const Config& config);
CsvTable run_slowflow(const Config& config);
CsvTable run_classical(const Config& config);
CsvTable run_kernels(const Config& config);
CsvTable run_stationarity(const Config& config);

}  // namespace lmg

#endif  // LMG_EXPERIMENTS_HPP
