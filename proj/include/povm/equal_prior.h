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

#include "povm/bloch.h"
#include "povm/ensemble.h"

namespace povm {

// Equal-prior learner for states confined to the x-z plane.
//
// Angles in this module follow the state-amplitude convention: the hidden
// states are cos(g/2)|0> + sin(g/2)|1> with polar angles g = alpha +/- beta
// measured from +z, and the measurement basis is
// |v0> = cos(phi)|0> + sin(phi)|1>, whose Bloch axis sits at polar angle 2 phi.
// Convert to the plane convention with polar_from_z = pi/2 - angle_from_x.

struct EqualPriorEstimate {
    PlanarAngle alpha_hat;
    /// alpha_hat / 2 + pi/4, reported modulo pi. The Bloch axis depends on
    /// 2 phi only, so the reduction loses nothing.
    double phi_star = 0.0;
    double delta0 = 0.0;
    double delta1 = 0.0;
    ShotBatch batch0;
    ShotBatch batch1;
    std::uint64_t shots_used = 0;
};

/// p0 - p1 for the basis at phi: cos(alpha - 2 phi) cos(beta).
double delta_analytic(double alpha, double beta, double phi);

/// Bloch vector of |v0><v0|: (sin 2phi, 0, cos 2phi).
BlochVec povm_axis_from_phi(double phi);

/// Default noise floor for a tuning difference estimated from `shots`
/// outcomes: three binomial standard deviations at p = 1/2.
double default_weak_threshold(std::uint64_t shots);

/// Empirical p0 - p1 for the basis at phi.
double estimate_delta(Ensemble &ensemble, double phi, std::uint64_t shots, RngStream &rng);

/// Inverts the two tuning differences measured at phi0 and phi0 + pi/4.
///
/// delta0 ~ cos(alpha - 2 phi0) cos(beta) and delta1 ~ sin(alpha - 2 phi0)
/// cos(beta) with cos(beta) >= 0, so the sign pair fixes the quadrant and
/// alpha = 2 phi0 + atan2(delta1, delta0). Throws WeakSignal when both
/// magnitudes are at or below weak_threshold.
PlanarAngle solve_alpha(double delta0, double delta1, double phi0, double weak_threshold);

struct EqualPriorOptions {
    double phi0 = 0.0;
    std::uint64_t shots_per_setting = 0;
    /// Negative selects default_weak_threshold(shots_per_setting).
    double weak_threshold = -1.0;
};

/// Measures both settings on fresh qubits, solves for alpha and returns the
/// balanced setting phi* = alpha/2 + pi/4. Requires equal priors and an x-z
/// plane ensemble.
EqualPriorEstimate learn_equal_prior(Ensemble &ensemble, const EqualPriorOptions &options,
                                     const TrialStreams &streams);

}  // namespace povm
