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

#include "povm/bloch.h"
#include "povm/decomposition.h"
#include "povm/ensemble.h"

namespace povm {

// Learner for two states whose Bloch vectors share a z component n_z. Every
// vector splits as r + n_z z_hat with r in the x-y plane; pure states have
// |r_j| = (1 - n_z^2)^(1/2).

struct ConstZFrame {
    double n_z = 0.0;
    /// In-plane part, zero z component.
    BlochVec r;
    double r_radius = 1.0;

    /// Splits n into r + n_z z_hat. Requires |n_z| < 1.
    static ConstZFrame from(const BlochVec &n);
    Plane plane() const { return Plane::const_z(n_z); }
};

/// cos(theta) between r0 and r1:
/// (|r|^2 / (1 - n_z^2) - eta0^2 - eta1^2) / (2 eta0 eta1).
///
/// Expanding |r|^2 = |eta0 r0 + eta1 r1|^2 with |r_j|^2 = 1 - n_z^2 gives the
/// 2 eta0 eta1 denominator; without it coincident states would report
/// cos(theta) = 2.
double cos_theta_z(double r_norm, double n_z, double eta0, double eta1, double slack = kEpsPhys);

/// Pure states n_j = r_j + n_z z_hat, each unit, averaging to r + n_z z_hat.
DecompositionPair decompose_constz(const ConstZFrame &frame, double theta, double eta0, double eta1, Case which);

/// m0 = eta0 r0^A + eta1 r1^B + n_z z_hat, m1 = eta1 r1^A + eta0 r0^B + n_z z_hat.
MixtureTargets mixture_targets_constz(const ConstZFrame &frame, double theta, double eta0, double eta1);

/// Measures all three Pauli axes and returns the unit x-y axis orthogonal to
/// r_hat (+90 degree rotation about +z).
LearnedAxis learn_axis_constz(Ensemble &ensemble, const PauliBudget &budget, const TrialStreams &streams);

}  // namespace povm
