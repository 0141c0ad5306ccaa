// Copyright 2026 The povm-learn Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "povm/bloch.h"
#include "povm/classifier.h"
#include "povm/ensemble.h"

namespace povm {

enum class Scenario { EqualPriorXZ, UnequalPriorXZ, ConstZ };

std::string_view scenario_name(Scenario s);
Scenario parse_scenario(std::string_view text);

/// One experiment cell.
///
/// EqualPriorXZ reads alpha and beta as polar angles from +z: the states sit
/// at alpha +/- beta. UnequalPriorXZ and ConstZ read alpha as the direction of
/// the ensemble vector (its in-plane part for ConstZ), counterclockwise from
/// the x axis, with theta the angle between the two states' in-plane parts.
struct ExperimentConfig {
    Scenario scenario = Scenario::EqualPriorXZ;
    double eta0 = 0.5;
    double theta = kPi / 2.0;
    double alpha = 0.0;
    double beta = kPi / 6.0;
    double nz = 0.0;
    double phi0 = 0.0;
    /// Shots per tuning setting (equal priors) or per Pauli axis.
    std::uint64_t shots_learn = 100000;
    /// Per-axis overrides for the Pauli learners; 0 falls back to shots_learn.
    std::uint64_t shots_axis1 = 0;
    std::uint64_t shots_axis2 = 0;
    std::uint64_t shots_normal = 0;
    std::uint64_t shots_holdout = 10000;
    std::uint64_t trials = 10;
    std::uint64_t seed = 1;
    unsigned threads = 1;

    /// Throws ConfigError when a budget or scenario parameter is out of range.
    void validate() const;

    /// Shots for each Pauli axis after applying the overrides.
    PauliBudget pauli_budget() const;
};

struct TrialResult {
    std::uint64_t trial = 0;
    std::uint64_t cell = 0;
    std::uint64_t trial_in_cell = 0;
    Scenario scenario = Scenario::EqualPriorXZ;
    std::optional<Case> case_tag;

    double eta0 = 0.5;
    double theta_true = 0.0;
    double alpha_true = 0.0;
    std::optional<double> beta_true;
    std::optional<double> n_z;

    std::optional<BlochVec> axis;
    std::optional<double> alpha_hat;
    std::optional<double> theta_hat;
    std::optional<BlochVec> n_hat;

    std::optional<EvalReport> report;
    std::optional<double> success_analytic;
    std::optional<double> success_oracle;

    std::vector<ShotBatch> learn_batches;
    std::uint64_t shots_learn = 0;
    std::uint64_t shots_holdout = 0;
    std::uint64_t qubits_drawn = 0;

    std::string status = "ok";
    std::string message;

    bool ok() const { return status == "ok"; }
};

/// Builds the hidden ensemble of one trial. Unequal-prior and constant-z
/// scenarios draw the case from the trial's CaseDraw stream.
EnsembleSpec make_ground_truth(const ExperimentConfig &config, const TrialStreams &streams);

/// Runs generate, learn, classify and score for a single trial. Library
/// errors are caught and recorded in the row status.
TrialResult run_trial(const ExperimentConfig &config, std::uint64_t cell, std::uint64_t trial_in_cell);

/// Runs every trial of one cell. Rows are ordered by trial index.
std::vector<TrialResult> run_experiment(const ExperimentConfig &config);

/// Grid of values for a sweep; each list must be nonempty. The cartesian
/// product is expanded in eta0, theta, alpha, beta, nz order.
struct SweepGrid {
    std::vector<double> eta0;
    std::vector<double> theta;
    std::vector<double> alpha;
    std::vector<double> beta;
    std::vector<double> nz;
};

std::vector<ExperimentConfig> expand_grid(const ExperimentConfig &base, const SweepGrid &grid);

/// Runs all cells; trials of every cell share one worker pool and rows are
/// numbered globally in (cell, trial) order.
std::vector<TrialResult> run_sweep(const std::vector<ExperimentConfig> &cells);

struct CellSummary {
    std::uint64_t cell = 0;
    Scenario scenario = Scenario::EqualPriorXZ;
    double eta0 = 0.0;
    double theta = 0.0;
    double alpha = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t ok_trials = 0;
    /// Pooled over all holdout qubits of the ok trials, expected orientation.
    double pooled_success = 0.0;
    double mean_analytic = 0.0;
    double pooled_z = 0.0;
    std::uint64_t holdout_total = 0;
};

std::vector<CellSummary> summarize(const std::vector<TrialResult> &results);

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(std::string_view text);

/// Header line of the CSV output, without trailing newline.
std::string csv_header();

/// Renders rows in the given format. Floating values carry 12 significant
/// digits; inapplicable fields are empty (CSV) or null (JSON).
std::string format_results(const std::vector<TrialResult> &results, OutputFormat format);

/// Writes format_results to `path`. Throws IoError naming the path.
void emit_results(const std::vector<TrialResult> &results, OutputFormat format, const std::string &path);

/// Parses a real number or a multiple of pi such as "pi/3", "2pi/3", "-0.5*pi".
double parse_angle(std::string_view text);

/// Splits a comma-separated list and parses each entry with parse_angle.
std::vector<double> parse_list(std::string_view text);

}  // namespace povm
