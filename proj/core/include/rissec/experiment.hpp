// SPDX-License-Identifier: Apache-2.0
//
// rissec - secrecy analysis of FC-RIS and UAV assisted multiuser downlinks
// Copyright (C) 2026 The rissec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "rissec/scheduling.hpp"
#include "rissec/secrecy.hpp"

namespace rissec {

class ConfigError : public std::runtime_error {
  public:
    enum class Kind {
        Schema,     // syntax, unknown key, malformed value
        MissingFile,
        OutOfRange, // well-formed but outside the model's domain
    };

    ConfigError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

enum class ExperimentKind {
    Fig2,   // sweep r_max
    Fig3,   // sweep the number of RIS elements
    Fig4,   // sweep the UAV altitude
    Single, // one point
};

struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::Single;
    std::vector<double> grid; // empty means the default grid of the kind
    std::vector<SchemeId> schemes = {kAllSchemes.begin(), kAllSchemes.end()};
    bool monte_carlo = true;
    bool analytic = true;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
};

struct LoadedConfig {
    ScenarioConfig scenario;
    ExperimentSpec experiment;
};

std::string_view to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(std::string_view name);

// Reads an INI file with sections geometry, environment, fading and
// experiment. Missing keys keep their defaults; unknown keys are rejected.
LoadedConfig load_config(const std::string& path);
LoadedConfig parse_config(std::istream& in);

// Grid used when the experiment section does not list one.
std::vector<double> default_grid(ExperimentKind kind);
std::string_view sweep_variable(ExperimentKind kind);

// Applies one sweep value to a scenario.
void apply_sweep(ScenarioConfig& config, ExperimentKind kind, double value);

struct CsvRow {
    std::string sweep_var;
    double sweep_value = 0.0;
    SchemeId scheme = SchemeId::FcrRs;
    std::string evaluator; // mc, analytic, closed-form, printed
    double zsrp = 0.0;
    double std_err = 0.0;
    std::uint64_t trials = 0; // 0 for non-sampling evaluators
    std::uint64_t seed = 0;
    double wall_ms = -1.0;    // negative when timing is off
};

struct RunOptions {
    unsigned threads = 1;
    bool timing = false;
    bool closed_form = false; // also emit closed-form and printed rows
    EveAveraging eve = EveAveraging::Sampled;
};

struct ExperimentOutput {
    std::vector<CsvRow> rows;
    std::vector<std::string> notes; // omitted rows and closed-form warnings
};

ExperimentOutput run_experiment(const LoadedConfig& config, const RunOptions& options);

inline constexpr const char* kCsvHeader = "sweep_var,sweep_value,scheme,evaluator,zsrp,std_err,trials,seed,wall_ms";

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows);

} // namespace rissec
