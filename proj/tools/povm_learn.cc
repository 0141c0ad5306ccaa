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

// Command-line harness for the qubit POVM learners.
//
//   povm-learn run    --scenario EqualPriorXZ --alpha pi/3 --beta pi/6 --trials 10
//   povm-learn sweep  --scenario UnequalPriorXZ --eta0 0.5,0.6,0.7 --theta pi/6,pi/2
//   povm-learn oracle-check [--instances N]
//   povm-learn selftest
//
// Shared options may also come from a flat key = value file given with
// --config; flags on the command line win.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "povm/checks.h"
#include "povm/errors.h"
#include "povm/experiment.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitCheckFailed = 4;

struct Options {
    std::string scenario = "EqualPriorXZ";
    std::vector<std::string> eta0{"0.5"};
    std::vector<std::string> theta{"pi/2"};
    std::vector<std::string> alpha{"0"};
    std::vector<std::string> beta{"pi/6"};
    std::vector<std::string> nz{"0"};
    std::string phi0 = "0";
    std::uint64_t shots_learn = 100000;
    std::uint64_t shots_axis1 = 0;
    std::uint64_t shots_axis2 = 0;
    std::uint64_t shots_normal = 0;
    std::uint64_t shots_holdout = 10000;
    std::uint64_t trials = 10;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::string format = "csv";
    std::string out = "-";
    std::uint64_t instances = 10000;
};

std::vector<double> parse_all(const std::vector<std::string> &items) {
    std::vector<double> out;
    for (const std::string &s : items) {
        for (double v : povm::parse_list(s)) {
            out.push_back(v);
        }
    }
    if (out.empty()) {
        throw povm::ConfigError("empty value list");
    }
    return out;
}

povm::ExperimentConfig base_config(const Options &o) {
    povm::ExperimentConfig c;
    c.scenario = povm::parse_scenario(o.scenario);
    c.phi0 = povm::parse_angle(o.phi0);
    c.shots_learn = o.shots_learn;
    c.shots_axis1 = o.shots_axis1;
    c.shots_axis2 = o.shots_axis2;
    c.shots_normal = o.shots_normal;
    c.shots_holdout = o.shots_holdout;
    c.trials = o.trials;
    c.seed = o.seed;
    c.threads = o.threads;
    return c;
}

povm::SweepGrid grid_of(const Options &o) {
    return {parse_all(o.eta0), parse_all(o.theta), parse_all(o.alpha), parse_all(o.beta), parse_all(o.nz)};
}

void write(const std::vector<povm::TrialResult> &rows, const Options &o) {
    const povm::OutputFormat fmt = povm::parse_format(o.format);
    std::ostream &log = o.out == "-" ? std::cerr : std::cout;
    if (o.out == "-") {
        std::cout << povm::format_results(rows, fmt);
    } else {
        povm::emit_results(rows, fmt, o.out);
    }
    for (const povm::CellSummary &s : povm::summarize(rows)) {
        log << "cell " << s.cell << " " << povm::scenario_name(s.scenario) << " eta0=" << s.eta0
            << " theta=" << s.theta << " alpha=" << s.alpha << ": " << s.ok_trials << "/" << s.trials
            << " ok, pooled success " << s.pooled_success << " vs " << s.mean_analytic << " (z = " << s.pooled_z
            << ")\n";
    }
}

int run_cells(const Options &o, bool allow_grid) {
    const povm::SweepGrid grid = grid_of(o);
    std::vector<povm::ExperimentConfig> cells = povm::expand_grid(base_config(o), grid);
    if (!allow_grid && cells.size() != 1) {
        throw povm::ConfigError("'run' takes single parameter values; use 'sweep' for grids");
    }
    write(povm::run_sweep(cells), o);
    return 0;
}

int print_checks(const povm::CheckReport &rep) {
    std::cout << rep.render();
    return rep.ok() ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Learn a minimum-error qubit discrimination measurement from unlabeled ensembles"};
    app.set_config("--config", "", "Flat key = value file supplying any option below");
    app.require_subcommand(1);

    Options o;
    app.add_option("--scenario", o.scenario, "EqualPriorXZ, UnequalPriorXZ or ConstZ");
    app.add_option("--eta0", o.eta0, "Prior of state 0 (list for sweep)")->delimiter(',');
    app.add_option("--theta", o.theta, "Angle between the two states (list for sweep)")->delimiter(',');
    app.add_option("--alpha", o.alpha, "Orientation angle (list for sweep)")->delimiter(',');
    app.add_option("--beta", o.beta, "Half-angle between equal-prior states (list for sweep)")->delimiter(',');
    app.add_option("--nz", o.nz, "Common z component for ConstZ (list for sweep)")->delimiter(',');
    app.add_option("--phi0", o.phi0, "First tuning setting of the equal-prior learner");
    app.add_option("--shots-learn", o.shots_learn, "Learning shots per setting or Pauli axis");
    app.add_option("--shots-axis1", o.shots_axis1, "Override shots on the first in-plane Pauli axis");
    app.add_option("--shots-axis2", o.shots_axis2, "Override shots on the second in-plane Pauli axis");
    app.add_option("--shots-normal", o.shots_normal, "Override shots on z for ConstZ");
    app.add_option("--shots-holdout", o.shots_holdout, "Held-out qubits classified per trial");
    app.add_option("--trials", o.trials, "Trials per cell");
    app.add_option("--seed", o.seed, "Root seed");
    app.add_option("--threads", o.threads, "Worker threads");
    app.add_option("--format", o.format, "csv or json");
    app.add_option("--out", o.out, "Output path, - for stdout");
    app.add_option("--instances", o.instances, "Random instances for oracle-check");

    auto *run = app.add_subcommand("run", "Run trials of a single scenario")->fallthrough();
    auto *sweep = app.add_subcommand("sweep", "Run a parameter grid")->fallthrough();
    auto *oracle = app.add_subcommand("oracle-check", "Property battery of the minimum-error oracle")->fallthrough();
    auto *self = app.add_subcommand("selftest", "Invariant suites, no file output")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    try {
        if (run->parsed()) {
            return run_cells(o, false);
        }
        if (sweep->parsed()) {
            return run_cells(o, true);
        }
        if (oracle->parsed()) {
            return print_checks(povm::oracle_battery(o.instances, o.seed));
        }
        if (self->parsed()) {
            return print_checks(povm::selftest(o.seed));
        }
    } catch (const povm::IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const povm::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return 0;
}
