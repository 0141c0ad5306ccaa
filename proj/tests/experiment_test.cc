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

#include "povm/experiment.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

#include "json.hpp"

#include "povm/constz.h"
#include "povm/decomposition.h"
#include "povm/errors.h"

using namespace povm;

namespace {

ExperimentConfig small(Scenario s) {
    ExperimentConfig c;
    c.scenario = s;
    c.eta0 = 0.7;
    c.theta = kPi / 2;
    c.alpha = 0.4;
    c.beta = kPi / 6;
    c.nz = s == Scenario::ConstZ ? 0.5 : 0.0;
    c.shots_learn = 20000;
    c.shots_holdout = 2000;
    c.trials = 4;
    c.seed = 17;
    return c;
}

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST(experiment, parse_angle) {
    EXPECT_DOUBLE_EQ(parse_angle("pi/3"), kPi / 3);
    EXPECT_DOUBLE_EQ(parse_angle("2pi/3"), 2 * kPi / 3);
    EXPECT_DOUBLE_EQ(parse_angle("-pi"), -kPi);
    EXPECT_DOUBLE_EQ(parse_angle("-0.5*pi"), -0.5 * kPi);
    EXPECT_DOUBLE_EQ(parse_angle(" 0.25 "), 0.25);
    EXPECT_DOUBLE_EQ(parse_angle("pi"), kPi);
    EXPECT_THROW(parse_angle("abc"), ConfigError);
    EXPECT_THROW(parse_angle("pi/0"), ConfigError);
    EXPECT_THROW(parse_angle(""), ConfigError);
    const std::vector<double> v = parse_list("0.5,0.6, 0.7");
    ASSERT_EQ(v.size(), 3u);
    EXPECT_DOUBLE_EQ(v[2], 0.7);
}

TEST(experiment, parse_enums) {
    EXPECT_EQ(parse_scenario("ConstZ"), Scenario::ConstZ);
    EXPECT_THROW(parse_scenario("constz"), ConfigError);
    EXPECT_EQ(parse_format("json"), OutputFormat::Json);
    EXPECT_THROW(parse_format("xml"), ConfigError);
}

TEST(experiment, validation) {
    ExperimentConfig c = small(Scenario::UnequalPriorXZ);
    c.trials = 0;
    EXPECT_THROW(c.validate(), ConfigError);
    c = small(Scenario::UnequalPriorXZ);
    c.eta0 = 1.0;
    EXPECT_THROW(c.validate(), ConfigError);
    c = small(Scenario::ConstZ);
    c.nz = 1.0;
    EXPECT_THROW(c.validate(), ConfigError);
    c = small(Scenario::EqualPriorXZ);
    c.beta = 2.0;
    EXPECT_THROW(c.validate(), ConfigError);
    c.beta = NAN;
    EXPECT_THROW(c.validate(), ConfigError);
    EXPECT_THROW(run_experiment(c), ConfigError);
}

TEST(experiment, ground_truth_matches_decomposition) {
    for (Scenario s : {Scenario::UnequalPriorXZ, Scenario::ConstZ}) {
        const ExperimentConfig c = small(s);
        int cases_a = 0;
        for (std::uint64_t t = 0; t < 200; ++t) {
            const EnsembleSpec spec = make_ground_truth(c, TrialStreams{c.seed, 0, t});
            ASSERT_TRUE(spec.case_tag.has_value());
            cases_a += *spec.case_tag == Case::A;
            EXPECT_NO_THROW(spec.validate());
            const BlochVec n = ensemble_bloch(spec);
            EXPECT_NEAR(in_plane_angle(n, spec.plane).value(), c.alpha, 1e-12);
            if (s == Scenario::UnequalPriorXZ) {
                const DecompositionPair d = decompose(n, c.theta, c.eta0, 1.0 - c.eta0, *spec.case_tag);
                EXPECT_LE(distance(d.n0, spec.psi0), 1e-12);
                EXPECT_LE(distance(d.n1, spec.psi1), 1e-12);
            } else {
                const DecompositionPair d =
                    decompose_constz(ConstZFrame::from(n), c.theta, c.eta0, 1.0 - c.eta0, *spec.case_tag);
                EXPECT_LE(distance(d.n0, spec.psi0), 1e-12);
                EXPECT_LE(distance(d.n1, spec.psi1), 1e-12);
            }
        }
        EXPECT_GT(cases_a, 70);
        EXPECT_LT(cases_a, 130);
    }
}

TEST(experiment, rows_and_budget) {
    for (Scenario s : {Scenario::EqualPriorXZ, Scenario::UnequalPriorXZ, Scenario::ConstZ}) {
        const ExperimentConfig c = small(s);
        const std::vector<TrialResult> rows = run_experiment(c);
        ASSERT_EQ(rows.size(), 4u);
        const std::uint64_t axes = s == Scenario::ConstZ ? 3 : 2;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const TrialResult &r = rows[i];
            EXPECT_EQ(r.trial, i);
            EXPECT_TRUE(r.ok()) << r.message;
            EXPECT_EQ(r.shots_learn, axes * c.shots_learn);
            EXPECT_EQ(r.shots_holdout, c.shots_holdout);
            EXPECT_EQ(r.shots_learn + r.shots_holdout, r.qubits_drawn);
            ASSERT_TRUE(r.report.has_value());
            EXPECT_EQ(r.report->confusion.total(), c.shots_holdout);
            EXPECT_NEAR(*r.success_analytic, *r.success_oracle, 1e-12);
        }
    }
}

TEST(experiment, per_trial_errors_are_recorded) {
    ExperimentConfig c = small(Scenario::EqualPriorXZ);
    c.beta = kPi / 2;
    c.shots_learn = 100;
    const std::vector<TrialResult> rows = run_experiment(c);
    ASSERT_EQ(rows.size(), 4u);
    int weak = 0;
    for (const TrialResult &r : rows) {
        EXPECT_EQ(r.shots_learn + r.shots_holdout, r.qubits_drawn);
        if (!r.ok()) {
            EXPECT_EQ(r.status, "weak_signal");
            EXPECT_FALSE(r.report.has_value());
            EXPECT_EQ(r.shots_learn, 200u);
            EXPECT_EQ(r.shots_holdout, 0u);
            ++weak;
        }
    }
    EXPECT_GT(weak, 0);
    const std::string csv = format_results(rows, OutputFormat::Csv);
    EXPECT_EQ(csv.find("nan"), std::string::npos);
    EXPECT_NE(csv.find("weak_signal"), std::string::npos);
}

TEST(experiment, degenerate_ensemble_is_recorded) {
    // theta = pi with equal priors puts the ensemble at the origin.
    ExperimentConfig c = small(Scenario::UnequalPriorXZ);
    c.eta0 = 0.5;
    c.theta = kPi;
    c.trials = 2;
    for (const TrialResult &r : run_experiment(c)) {
        EXPECT_FALSE(r.ok());
        EXPECT_FALSE(r.status.empty());
        EXPECT_FALSE(r.message.empty());
        EXPECT_EQ(r.shots_learn + r.shots_holdout, r.qubits_drawn);
    }
}

TEST(experiment, csv_layout) {
    const std::vector<TrialResult> rows = run_experiment(small(Scenario::UnequalPriorXZ));
    const std::vector<std::string> lines = lines_of(format_results(rows, OutputFormat::Csv));
    ASSERT_EQ(lines.size(), 5u);
    EXPECT_EQ(lines[0],
              "trial,scenario,case,eta0,theta_true,alpha_true,beta_true,n_z,axis_x,axis_y,axis_z,alpha_hat,"
              "success_emp,success_analytic,success_oracle,z_score,shots_learn,shots_holdout,status");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::vector<std::string> f = split(lines[i]);
        ASSERT_EQ(f.size(), 19u) << lines[i];
        EXPECT_EQ(f[1], "UnequalPriorXZ");
        EXPECT_TRUE(f[2] == "A" || f[2] == "B");
        EXPECT_EQ(f[3], "0.7");
        EXPECT_EQ(f[4], "1.57079632679");
        EXPECT_EQ(f[6], "");
        EXPECT_EQ(f[7], "");
        EXPECT_EQ(f[9], "0");
        EXPECT_EQ(f[18], "ok");
        for (std::size_t k : {8u, 10u, 11u, 12u, 13u, 14u, 15u}) {
            EXPECT_FALSE(f[k].empty());
            EXPECT_TRUE(std::isfinite(std::stod(f[k])));
        }
    }
}

TEST(experiment, json_layout) {
    const std::vector<TrialResult> rows = run_experiment(small(Scenario::ConstZ));
    const nlohmann::json doc = nlohmann::json::parse(format_results(rows, OutputFormat::Json));
    ASSERT_EQ(doc["results"].size(), 4u);
    ASSERT_EQ(doc["summary"].size(), 1u);
    for (const auto &r : doc["results"]) {
        for (const char *key : {"trial", "scenario", "case", "eta0", "theta_true", "alpha_true", "beta_true", "n_z",
                                "axis", "alpha_hat", "success_emp", "success_analytic", "success_oracle", "z_score",
                                "shots_learn", "shots_holdout", "status"}) {
            EXPECT_TRUE(r.contains(key)) << key;
        }
        EXPECT_TRUE(r["beta_true"].is_null());
        EXPECT_EQ(r["n_z"], 0.5);
        EXPECT_EQ(r["axis"].size(), 3u);
        EXPECT_EQ(r["axis"][2], 0.0);
    }
    EXPECT_EQ(doc["summary"][0]["trials"], 4);
}

TEST(experiment, twelve_significant_digits) {
    ExperimentConfig c = small(Scenario::UnequalPriorXZ);
    c.trials = 1;
    c.alpha = 1.0 / 3.0;
    const std::string csv = format_results(run_experiment(c), OutputFormat::Csv);
    EXPECT_NE(csv.find(",0.333333333333,"), std::string::npos);
    const nlohmann::json doc = nlohmann::json::parse(format_results(run_experiment(c), OutputFormat::Json));
    EXPECT_EQ(doc["results"][0]["alpha_true"].dump(), "0.333333333333");
}

TEST(experiment, deterministic_across_threads) {
    ExperimentConfig c = small(Scenario::UnequalPriorXZ);
    c.trials = 8;
    const std::string one = format_results(run_experiment(c), OutputFormat::Json);
    c.threads = 4;
    const std::string four = format_results(run_experiment(c), OutputFormat::Json);
    EXPECT_EQ(one, four);
    EXPECT_EQ(one, format_results(run_experiment(c), OutputFormat::Json));
}

TEST(experiment, sweep_cardinality) {
    ExperimentConfig base = small(Scenario::UnequalPriorXZ);
    base.trials = 100;
    base.shots_learn = 200;
    base.shots_holdout = 20;
    const SweepGrid grid{{0.5, 0.6, 0.7}, {kPi / 6, kPi / 2, 2 * kPi / 3}, {0.0}, {0.0}, {0.0}};
    const std::vector<ExperimentConfig> cells = expand_grid(base, grid);
    ASSERT_EQ(cells.size(), 9u);
    const std::vector<TrialResult> rows = run_sweep(cells);
    ASSERT_EQ(rows.size(), 900u);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].trial, i);
        EXPECT_EQ(rows[i].cell, i / 100);
        EXPECT_EQ(rows[i].trial_in_cell, i % 100);
    }
    EXPECT_EQ(lines_of(format_results(rows, OutputFormat::Csv)).size(), 901u);
    EXPECT_EQ(summarize(rows).size(), 9u);
    EXPECT_THROW(expand_grid(base, {{}, {1.0}, {0.0}, {0.0}, {0.0}}), ConfigError);
}

TEST(experiment, const_z_at_zero_height_matches_xz) {
    ExperimentConfig xz = small(Scenario::UnequalPriorXZ);
    xz.trials = 6;
    ExperimentConfig cz = xz;
    cz.scenario = Scenario::ConstZ;
    cz.nz = 0.0;
    const std::vector<TrialResult> a = run_experiment(xz);
    const std::vector<TrialResult> b = run_experiment(cz);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].case_tag, b[i].case_tag);
        EXPECT_NEAR(*a[i].success_analytic, *b[i].success_analytic, 1e-12);
        EXPECT_NEAR(*a[i].success_oracle, *b[i].success_oracle, 1e-12);
        EXPECT_NEAR(a[i].axis->x, b[i].axis->x, 1e-12);
        EXPECT_NEAR(a[i].axis->z, b[i].axis->y, 1e-12);
        EXPECT_EQ(a[i].report->confusion, b[i].report->confusion);
        for (std::size_t k = 0; k < 2; ++k) {
            EXPECT_EQ(a[i].learn_batches[k].n_plus, b[i].learn_batches[k].n_plus);
        }
    }
}

TEST(experiment, emit_reports_path) {
    const std::vector<TrialResult> rows = run_experiment(small(Scenario::EqualPriorXZ));
    const std::string bad = "/nonexistent-dir/out.csv";
    try {
        emit_results(rows, OutputFormat::Csv, bad);
        FAIL() << "expected IoError";
    } catch (const IoError &e) {
        EXPECT_NE(std::string(e.what()).find(bad), std::string::npos);
    }
    const std::string path = ::testing::TempDir() + "povm_emit.csv";
    emit_results(rows, OutputFormat::Csv, path);
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), format_results(rows, OutputFormat::Csv));
    EXPECT_THROW(emit_results({}, OutputFormat::Csv, path), ContractViolation);
}

TEST(experiment, per_axis_budget_override) {
    ExperimentConfig c = small(Scenario::ConstZ);
    c.shots_axis2 = 5000;
    c.shots_normal = 1000;
    const PauliBudget b = c.pauli_budget();
    EXPECT_EQ(b.axis1, c.shots_learn);
    EXPECT_EQ(b.axis2, 5000u);
    EXPECT_EQ(b.normal, 1000u);
    for (const TrialResult &r : run_experiment(c)) {
        ASSERT_TRUE(r.ok()) << r.message;
        ASSERT_EQ(r.learn_batches.size(), 3u);
        EXPECT_EQ(r.learn_batches[1].total, 5000u);
        EXPECT_EQ(r.learn_batches[2].total, 1000u);
        EXPECT_EQ(r.shots_learn, c.shots_learn + 6000u);
    }
}
