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

#include "povm/equal_prior.h"

#include <sstream>

#include "povm/errors.h"

namespace povm {

double delta_analytic(double alpha, double beta, double phi) {
    return std::cos(alpha - 2.0 * phi) * std::cos(beta);
}

BlochVec povm_axis_from_phi(double phi) { return {std::sin(2.0 * phi), 0.0, std::cos(2.0 * phi)}; }

double default_weak_threshold(std::uint64_t shots) { return 3.0 / std::sqrt(static_cast<double>(shots)); }

double estimate_delta(Ensemble &ensemble, double phi, std::uint64_t shots, RngStream &rng) {
    return ensemble.measure_shots(povm_axis_from_phi(phi), shots, rng).mean();
}

PlanarAngle solve_alpha(double delta0, double delta1, double phi0, double weak_threshold) {
    if (std::abs(delta0) <= weak_threshold && std::abs(delta1) <= weak_threshold) {
        std::ostringstream ss;
        ss << "tuning differences (" << delta0 << ", " << delta1 << ") are within the noise floor "
           << weak_threshold;
        throw WeakSignal(ss.str());
    }
    return PlanarAngle(2.0 * phi0 + std::atan2(delta1, delta0));
}

EqualPriorEstimate learn_equal_prior(Ensemble &ensemble, const EqualPriorOptions &options,
                                     const TrialStreams &streams) {
    const EnsembleSpec &spec = ensemble.spec();
    if (std::abs(spec.eta0 - spec.eta1) > 1e-12) {
        throw InvalidPriors("equal-prior learner requires eta0 = eta1 = 1/2");
    }
    if (!spec.plane.is_xz()) {
        throw ContractViolation("equal-prior learner requires an x-z plane ensemble");
    }
    if (options.shots_per_setting == 0) {
        throw ContractViolation("equal-prior learner needs at least one shot per setting");
    }

    const double phi1 = options.phi0 + kPi / 4.0;
    RngStream rng0 = streams.stream(StreamRole::SettingA);
    RngStream rng1 = streams.stream(StreamRole::SettingB);

    EqualPriorEstimate est;
    est.batch0 = ensemble.measure_shots(povm_axis_from_phi(options.phi0), options.shots_per_setting, rng0);
    est.batch1 = ensemble.measure_shots(povm_axis_from_phi(phi1), options.shots_per_setting, rng1);
    est.shots_used = est.batch0.total + est.batch1.total;
    est.delta0 = est.batch0.mean();
    est.delta1 = est.batch1.mean();

    const double threshold =
        options.weak_threshold < 0.0 ? default_weak_threshold(options.shots_per_setting) : options.weak_threshold;
    est.alpha_hat = solve_alpha(est.delta0, est.delta1, options.phi0, threshold);
    est.phi_star = std::fmod(est.alpha_hat.value() / 2.0 + kPi / 4.0, kPi);
    return est;
}

}  // namespace povm
