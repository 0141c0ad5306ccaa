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

#include <atomic>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "povm/constz.h"
#include "povm/decomposition.h"
#include "povm/equal_prior.h"
#include "povm/errors.h"
#include "povm/helstrom.h"

namespace povm {

std::string_view scenario_name(Scenario s) {
    switch (s) {
        case Scenario::EqualPriorXZ:
            return "EqualPriorXZ";
        case Scenario::UnequalPriorXZ:
            return "UnequalPriorXZ";
        case Scenario::ConstZ:
            return "ConstZ";
    }
    return "unknown";
}

Scenario parse_scenario(std::string_view text) {
    for (Scenario s : {Scenario::EqualPriorXZ, Scenario::UnequalPriorXZ, Scenario::ConstZ}) {
        if (text == scenario_name(s)) {
            return s;
        }
    }
    throw ConfigError("unknown scenario '" + std::string(text) +
                      "' (expected EqualPriorXZ, UnequalPriorXZ or ConstZ)");
}

void ExperimentConfig::validate() const {
    auto fail = [](const std::string &msg) { throw ConfigError(msg); };
    if (shots_learn == 0 || shots_holdout == 0 || trials == 0) {
        fail("shots-learn, shots-holdout and trials must all be at least 1");
    }
    for (double v : {eta0, theta, alpha, beta, nz, phi0}) {
        if (!std::isfinite(v)) {
            fail("scenario parameters must be finite");
        }
    }
    switch (scenario) {
        case Scenario::EqualPriorXZ:
            if (beta < 0.0 || beta > kPi / 2.0) {
                fail("beta must lie in [0, pi/2]");
            }
            break;
        case Scenario::ConstZ:
            if (!(std::abs(nz) < 1.0)) {
                fail("nz must lie in (-1, 1)");
            }
            [[fallthrough]];
        case Scenario::UnequalPriorXZ:
            if (!(eta0 > 0.0 && eta0 < 1.0)) {
                fail("eta0 must lie in (0, 1)");
            }
            if (theta < 0.0 || theta > kPi) {
                fail("theta must lie in [0, pi]");
            }
            break;
    }
}

PauliBudget ExperimentConfig::pauli_budget() const {
    auto pick = [this](std::uint64_t v) { return v == 0 ? shots_learn : v; };
    return {pick(shots_axis1), pick(shots_axis2), pick(shots_normal)};
}

namespace {

// Angle between the ensemble vector and psi0 for the case-A arrangement.
double psi0_offset(double eta0, double eta1, double theta) {
    return std::atan2(eta1 * std::sin(theta), eta0 + eta1 * std::cos(theta));
}

}  // namespace

EnsembleSpec make_ground_truth(const ExperimentConfig &config, const TrialStreams &streams) {
    EnsembleSpec spec;
    if (config.scenario == Scenario::EqualPriorXZ) {
        spec.eta0 = 0.5;
        spec.eta1 = 0.5;
        spec.psi0 = bloch_from_state_angle(PlanarAngle(config.alpha + config.beta));
        spec.psi1 = bloch_from_state_angle(PlanarAngle(config.alpha - config.beta));
        spec.plane = Plane::xz();
        return spec;
    }

    RngStream case_rng = streams.stream(StreamRole::CaseDraw);
    const Case which = case_rng.uniform() < 0.5 ? Case::A : Case::B;

    spec.eta0 = config.eta0;
    spec.eta1 = 1.0 - config.eta0;
    spec.case_tag = which;
    const double offset = psi0_offset(spec.eta0, spec.eta1, config.theta);
    double angle0 = 0.0;
    double angle1 = 0.0;
    if (which == Case::A) {
        angle0 = config.alpha + offset;
        angle1 = angle0 - config.theta;
    } else {
        angle0 = config.alpha - offset;
        angle1 = angle0 + config.theta;
    }

    if (config.scenario == Scenario::UnequalPriorXZ) {
        spec.plane = Plane::xz();
        spec.psi0 = spec.plane.embed({std::cos(angle0), std::sin(angle0)});
        spec.psi1 = spec.plane.embed({std::cos(angle1), std::sin(angle1)});
    } else {
        spec.plane = Plane::const_z(config.nz);
        const double radius = std::sqrt(1.0 - config.nz * config.nz);
        spec.psi0 = spec.plane.embed({radius * std::cos(angle0), radius * std::sin(angle0)}, config.nz);
        spec.psi1 = spec.plane.embed({radius * std::cos(angle1), radius * std::sin(angle1)}, config.nz);
    }
    return spec;
}

namespace {

template <typename F>
std::optional<double> diagnostic(F &&f) {
    try {
        return f();
    } catch (const CosThetaOutOfRange &) {
        return std::nullopt;
    } catch (const ContractViolation &) {
        return std::nullopt;
    }
}

void fill_trial(const ExperimentConfig &config, const TrialStreams &streams, TrialResult &row,
                std::optional<Ensemble> &slot) {
    EnsembleSpec spec = make_ground_truth(config, streams);
    row.case_tag = spec.case_tag;
    Ensemble &ensemble = slot.emplace(spec);

    const double eta1 = 1.0 - config.eta0;
    switch (config.scenario) {
        case Scenario::EqualPriorXZ: {
            EqualPriorOptions opts;
            opts.phi0 = config.phi0;
            opts.shots_per_setting = config.shots_learn;
            const EqualPriorEstimate est = learn_equal_prior(ensemble, opts, streams);
            row.learn_batches = {est.batch0, est.batch1};
            row.alpha_hat = est.alpha_hat.value();
            row.axis = povm_axis_from_phi(est.phi_star);
            break;
        }
        case Scenario::UnequalPriorXZ: {
            const LearnedAxis learned = learn_axis_equal_counts(ensemble, config.pauli_budget(), streams);
            const BlochVec n_hat = learned.pauli.n_hat;
            row.learn_batches = learned.pauli.batches;
            row.n_hat = n_hat;
            row.axis = learned.axis;
            row.alpha_hat = in_plane_angle(n_hat, spec.plane).value();
            row.theta_hat = diagnostic(
                [&] { return theta_from_cos(cos_theta(n_hat.norm(), config.eta0, eta1, kEpsClamp)); });
            break;
        }
        case Scenario::ConstZ: {
            const LearnedAxis learned = learn_axis_constz(ensemble, config.pauli_budget(), streams);
            const BlochVec n_hat = learned.pauli.n_hat;
            row.learn_batches = learned.pauli.batches;
            row.n_hat = n_hat;
            row.axis = learned.axis;
            row.alpha_hat = in_plane_angle(n_hat, spec.plane).value();
            row.theta_hat = diagnostic([&] {
                const double r_norm = spec.plane.project(n_hat).norm();
                return theta_from_cos(cos_theta_z(r_norm, n_hat.z, config.eta0, eta1, kEpsClamp));
            });
            break;
        }
    }
    row.shots_learn = ensemble.consumed();

    // Ground-truth reference values.
    double analytic = 0.5;
    switch (config.scenario) {
        case Scenario::EqualPriorXZ:
            analytic = 0.5 * (1.0 + std::sin(config.beta));
            row.success_oracle = success_equal_priors(spec.psi0, spec.psi1);
            break;
        case Scenario::UnequalPriorXZ: {
            const BlochVec n = ensemble_bloch(spec);
            analytic = success_prob(config.eta0, eta1, config.theta, n.norm());
            const MixtureTargets t = mixture_targets(n, config.theta, config.eta0, eta1);
            row.success_oracle = success_equal_priors(t.m0, t.m1);
            break;
        }
        case Scenario::ConstZ: {
            const ConstZFrame frame = ConstZFrame::from(ensemble_bloch(spec));
            const MixtureTargets t = mixture_targets_constz(frame, config.theta, config.eta0, eta1);
            analytic = success_equal_priors(t.m0, t.m1);
            row.success_oracle = analytic;
            break;
        }
    }
    row.success_analytic = analytic;

    RngStream holdout_rng = streams.stream(StreamRole::Holdout);
    const ConfusionMatrix cm = classify_holdout(ensemble, *row.axis, config.shots_holdout, holdout_rng);
    row.shots_holdout = ensemble.consumed() - row.shots_learn;
    row.qubits_drawn = ensemble.consumed();
    row.report = score(cm, analytic, spec.case_tag == Case::B);
}

}  // namespace

TrialResult run_trial(const ExperimentConfig &config, std::uint64_t cell, std::uint64_t trial_in_cell) {
    TrialResult row;
    row.cell = cell;
    row.trial_in_cell = trial_in_cell;
    row.trial = trial_in_cell;
    row.scenario = config.scenario;
    row.eta0 = config.scenario == Scenario::EqualPriorXZ ? 0.5 : config.eta0;
    row.alpha_true = config.alpha;
    if (config.scenario == Scenario::EqualPriorXZ) {
        row.theta_true = 2.0 * config.beta;
        row.beta_true = config.beta;
    } else {
        row.theta_true = config.theta;
    }
    if (config.scenario == Scenario::ConstZ) {
        row.n_z = config.nz;
    }

    const TrialStreams streams{config.seed, cell, trial_in_cell};
    std::optional<Ensemble> ensemble;
    try {
        fill_trial(config, streams, row, ensemble);
    } catch (const Error &e) {
        row.status = std::string(e.status());
        row.message = e.what();
        // Qubits measured before the failure still count against the budget.
        const std::uint64_t consumed = ensemble ? ensemble->consumed() : 0;
        if (row.shots_learn == 0) {
            row.shots_learn = consumed;
        }
        row.shots_holdout = consumed - row.shots_learn;
        row.qubits_drawn = consumed;
    }
    return row;
}

std::vector<TrialResult> run_sweep(const std::vector<ExperimentConfig> &cells) {
    struct Job {
        std::size_t cell;
        std::uint64_t trial;
    };
    std::vector<Job> jobs;
    unsigned threads = 1;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        cells[c].validate();
        threads = std::max(threads, cells[c].threads);
        for (std::uint64_t t = 0; t < cells[c].trials; ++t) {
            jobs.push_back({c, t});
        }
    }

    std::vector<TrialResult> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            rows[i] = run_trial(cells[jobs[i].cell], jobs[i].cell, jobs[i].trial);
            rows[i].trial = i;
        }
    };
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < threads; ++k) {
            pool.emplace_back(worker);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    return rows;
}

std::vector<TrialResult> run_experiment(const ExperimentConfig &config) { return run_sweep({config}); }

std::vector<ExperimentConfig> expand_grid(const ExperimentConfig &base, const SweepGrid &grid) {
    for (const auto *list : {&grid.eta0, &grid.theta, &grid.alpha, &grid.beta, &grid.nz}) {
        if (list->empty()) {
            throw ConfigError("every sweep axis needs at least one value");
        }
    }
    std::vector<ExperimentConfig> cells;
    for (double eta0 : grid.eta0) {
        for (double theta : grid.theta) {
            for (double alpha : grid.alpha) {
                for (double beta : grid.beta) {
                    for (double nz : grid.nz) {
                        ExperimentConfig c = base;
                        c.eta0 = eta0;
                        c.theta = theta;
                        c.alpha = alpha;
                        c.beta = beta;
                        c.nz = nz;
                        cells.push_back(c);
                    }
                }
            }
        }
    }
    return cells;
}

std::vector<CellSummary> summarize(const std::vector<TrialResult> &results) {
    std::map<std::uint64_t, CellSummary> by_cell;
    std::map<std::uint64_t, std::uint64_t> hits;
    for (const TrialResult &row : results) {
        CellSummary &s = by_cell[row.cell];
        s.cell = row.cell;
        s.scenario = row.scenario;
        s.eta0 = row.eta0;
        s.theta = row.theta_true;
        s.alpha = row.alpha_true;
        ++s.trials;
        if (!row.ok() || !row.report) {
            continue;
        }
        ++s.ok_trials;
        const ConfusionMatrix &cm = row.report->confusion;
        hits[row.cell] += row.case_tag == Case::B ? cm.anti_diagonal() : cm.diagonal();
        s.holdout_total += cm.total();
        s.mean_analytic += *row.success_analytic;
    }
    std::vector<CellSummary> out;
    for (auto &[cell, s] : by_cell) {
        if (s.ok_trials > 0) {
            s.mean_analytic /= static_cast<double>(s.ok_trials);
            const double n = static_cast<double>(s.holdout_total);
            s.pooled_success = static_cast<double>(hits[cell]) / n;
            const double var = s.mean_analytic * (1.0 - s.mean_analytic) / n;
            s.pooled_z = var > 0.0 ? (s.pooled_success - s.mean_analytic) / std::sqrt(var) : 0.0;
        }
        out.push_back(s);
    }
    return out;
}

OutputFormat parse_format(std::string_view text) {
    if (text == "csv") {
        return OutputFormat::Csv;
    }
    if (text == "json") {
        return OutputFormat::Json;
    }
    throw ConfigError("unknown output format '" + std::string(text) + "' (expected csv or json)");
}

namespace {

std::string fmt_num(double v) {
    std::ostringstream ss;
    ss << std::setprecision(12) << (v == 0.0 ? 0.0 : v);
    return ss.str();
}

// Rounds to the value printed with 12 significant digits so that the JSON
// writer's shortest round-trip rendering never shows more.
double round12(double v) { return std::stod(fmt_num(v)); }

nlohmann::json json_num(const std::optional<double> &v) {
    if (!v) {
        return nullptr;
    }
    return round12(*v);
}

std::string csv_opt(const std::optional<double> &v) { return v ? fmt_num(*v) : std::string(); }

std::string case_text(const std::optional<Case> &c) { return c ? std::string(1, case_letter(*c)) : std::string(); }

}  // namespace

std::string csv_header() {
    return "trial,scenario,case,eta0,theta_true,alpha_true,beta_true,n_z,axis_x,axis_y,axis_z,alpha_hat,"
           "success_emp,success_analytic,success_oracle,z_score,shots_learn,shots_holdout,status";
}

std::string format_results(const std::vector<TrialResult> &results, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << csv_header() << '\n';
        for (const TrialResult &r : results) {
            const std::string ax = r.axis ? fmt_num(r.axis->x) : std::string();
            const std::string ay = r.axis ? fmt_num(r.axis->y) : std::string();
            const std::string az = r.axis ? fmt_num(r.axis->z) : std::string();
            const std::string emp = r.report ? fmt_num(r.report->empirical_success) : std::string();
            const std::string z = r.report ? fmt_num(r.report->z_score) : std::string();
            out << r.trial << ',' << scenario_name(r.scenario) << ',' << case_text(r.case_tag) << ','
                << fmt_num(r.eta0) << ',' << fmt_num(r.theta_true) << ',' << fmt_num(r.alpha_true) << ','
                << csv_opt(r.beta_true) << ',' << csv_opt(r.n_z) << ',' << ax << ',' << ay << ','
                << az << ',' << csv_opt(r.alpha_hat) << ',' << emp << ','
                << csv_opt(r.success_analytic) << ',' << csv_opt(r.success_oracle) << ',' << z << ','
                << r.shots_learn << ',' << r.shots_holdout << ',' << r.status << '\n';
        }
        return out.str();
    }

    nlohmann::json rows = nlohmann::json::array();
    for (const TrialResult &r : results) {
        nlohmann::json j;
        j["trial"] = r.trial;
        j["cell"] = r.cell;
        j["scenario"] = std::string(scenario_name(r.scenario));
        j["case"] = r.case_tag ? nlohmann::json(case_text(r.case_tag)) : nlohmann::json(nullptr);
        j["eta0"] = round12(r.eta0);
        j["theta_true"] = round12(r.theta_true);
        j["alpha_true"] = round12(r.alpha_true);
        j["beta_true"] = json_num(r.beta_true);
        j["n_z"] = json_num(r.n_z);
        if (r.axis) {
            j["axis"] = {round12(r.axis->x), round12(r.axis->y), round12(r.axis->z)};
        } else {
            j["axis"] = nullptr;
        }
        j["alpha_hat"] = json_num(r.alpha_hat);
        j["theta_hat"] = json_num(r.theta_hat);
        if (r.n_hat) {
            j["n_hat"] = {round12(r.n_hat->x), round12(r.n_hat->y), round12(r.n_hat->z)};
        } else {
            j["n_hat"] = nullptr;
        }
        if (r.report) {
            const auto &c = r.report->confusion.counts;
            j["success_emp"] = round12(r.report->empirical_success);
            j["success_convention"] = round12(r.report->convention_success);
            j["swapped"] = r.report->swapped;
            j["z_score"] = round12(r.report->z_score);
            j["confusion"] = {{c[0][0], c[0][1]}, {c[1][0], c[1][1]}};
        } else {
            j["success_emp"] = nullptr;
            j["success_convention"] = nullptr;
            j["swapped"] = nullptr;
            j["z_score"] = nullptr;
            j["confusion"] = nullptr;
        }
        j["success_analytic"] = json_num(r.success_analytic);
        j["success_oracle"] = json_num(r.success_oracle);
        j["shots_learn"] = r.shots_learn;
        j["shots_holdout"] = r.shots_holdout;
        j["qubits_drawn"] = r.qubits_drawn;
        j["status"] = r.status;
        if (!r.message.empty()) {
            j["message"] = r.message;
        }
        rows.push_back(std::move(j));
    }

    nlohmann::json summary = nlohmann::json::array();
    for (const CellSummary &s : summarize(results)) {
        summary.push_back({{"cell", s.cell},
                           {"scenario", std::string(scenario_name(s.scenario))},
                           {"eta0", round12(s.eta0)},
                           {"theta", round12(s.theta)},
                           {"alpha", round12(s.alpha)},
                           {"trials", s.trials},
                           {"ok_trials", s.ok_trials},
                           {"holdout_total", s.holdout_total},
                           {"pooled_success", round12(s.pooled_success)},
                           {"mean_analytic", round12(s.mean_analytic)},
                           {"pooled_z", round12(s.pooled_z)}});
    }
    nlohmann::json doc{{"results", rows}, {"summary", summary}};
    return doc.dump(2) + "\n";
}

void emit_results(const std::vector<TrialResult> &results, OutputFormat format, const std::string &path) {
    if (results.empty()) {
        throw ContractViolation("emit_results: no rows to write");
    }
    const std::string text = format_results(results, format);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw IoError("failed while writing '" + path + "'");
    }
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

double parse_real(std::string_view s, std::string_view whole) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ConfigError("cannot parse number '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

double parse_angle(std::string_view text) {
    const std::string_view t = trim(text);
    const std::size_t pos = t.find("pi");
    if (pos == std::string_view::npos) {
        return parse_real(t, text);
    }
    std::string_view coef = trim(t.substr(0, pos));
    if (!coef.empty() && coef.back() == '*') {
        coef.remove_suffix(1);
        coef = trim(coef);
    }
    double k = 1.0;
    if (coef == "-") {
        k = -1.0;
    } else if (!coef.empty() && coef != "+") {
        k = parse_real(coef, text);
    }
    std::string_view rest = trim(t.substr(pos + 2));
    double div = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/') {
            throw ConfigError("cannot parse angle '" + std::string(text) + "'");
        }
        div = parse_real(rest.substr(1), text);
        if (div == 0.0) {
            throw ConfigError("division by zero in angle '" + std::string(text) + "'");
        }
    }
    return k * kPi / div;
}

std::vector<double> parse_list(std::string_view text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_angle(text.substr(start, end - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

}  // namespace povm
