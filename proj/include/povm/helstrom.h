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

#include <utility>

#include "povm/bloch.h"

namespace povm {

// Minimum-error measurement for two equiprobable qubit states rho0, rho1 with
// Bloch vectors m0, m1. rho0 - rho1 = (m0 - m1).sigma / 2 has eigenvalues
// +/- lambda with lambda = |m0 - m1| / 2, and the optimal projector P0 has
// Bloch vector (m0 - m1) / |m0 - m1|. Everything stays in Bloch form.

struct HelstromResult {
    /// Bloch vector of P0, the detector for rho0.
    BlochVec p0_axis;
    double lambda = 0.0;
    double success = 0.5;
    /// Set when m0 = m1; any measurement is then optimal and p0_axis is +z.
    bool degenerate = false;
};

/// Throws DegenerateEnsemble when |m0 - m1| <= kEpsDegenerate.
HelstromResult helstrom(const BlochVec &m0, const BlochVec &m1);

/// Pipeline variant: a coincident pair yields success 1/2 with the
/// degenerate flag set instead of an error.
HelstromResult helstrom_or_degenerate(const BlochVec &m0, const BlochVec &m1);

/// 1/2 + lambda/2.
double success_equal_priors(const BlochVec &m0, const BlochVec &m1);

/// |m0|^2 - |m1|^2. Zero means Tr(rho0^2) = Tr(rho1^2), in which case the
/// optimal measurement fires both detectors equally on the 1/2-1/2 mixture.
double equal_count_condition(const BlochVec &m0, const BlochVec &m1);

/// Detector click probabilities of the measurement along `axis` on the
/// equal mixture of rho0 and rho1.
std::pair<double, double> detector_probabilities(const BlochVec &axis, const BlochVec &m0, const BlochVec &m1);

}  // namespace povm
