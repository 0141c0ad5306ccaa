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
#include <utility>

#include "povm/bloch.h"
#include "povm/ensemble.h"

namespace povm {

/// The two pure states of one decomposition of an ensemble vector.
struct DecompositionPair {
    BlochVec n0;
    BlochVec n1;
    Case which = Case::A;
};

/// Bloch vectors of the equal-weight mixtures the learned measurement has to
/// separate when the case is unknown: m0 for {rho0^A, rho1^B} and m1 for
/// {rho1^A, rho0^B}.
struct MixtureTargets {
    BlochVec m0;
    BlochVec m1;
    double theta = 0.0;
};

/// cos(theta) = (|n|^2 - eta0^2 - eta1^2) / (2 eta0 eta1), theta the angle
/// between the two pure states. Results within `slack` of [-1, 1] are
/// clamped; anything further out throws CosThetaOutOfRange. Use kEpsPhys for
/// exact inputs and kEpsClamp for sampled estimates.
double cos_theta(double n_norm, double eta0, double eta1, double slack = kEpsPhys);

/// Principal angle in [0, pi] for a clamped cosine.
double theta_from_cos(double c);

/// Solves r = eta0 r0 + eta1 r1 in plane coordinates for the given case, with
/// |r0| = |r1| = radius. Prefactor radius^2 / |r|^2 multiplies the case
/// matrices, which reduces to 1/|n|^2 for unit pure states.
std::pair<PlanePoint, PlanePoint> decompose_planar(PlanePoint r, double radius, double theta, double eta0,
                                                   double eta1, Case which);

/// Pure-state decomposition of an x-z ensemble vector.
DecompositionPair decompose(const BlochVec &n, double theta, double eta0, double eta1, Case which);

/// m0,1 = n +/- (2 eta0 eta1 sin(theta) / |n|) n_perp.
MixtureTargets mixture_targets(const BlochVec &n, double theta, double eta0, double eta1);

/// Same targets written out component by component; kept as a second route.
MixtureTargets mixture_targets_components(const BlochVec &n, double theta, double eta0, double eta1);

/// Success probability of the balanced measurement averaged over the two
/// equally likely cases: 1/2 + eta0 eta1 sin(theta) / |n|.
double success_prob(double eta0, double eta1, double theta, double n_norm);

struct LearnedAxis {
    BlochVec axis;
    PauliEstimate pauli;
};

/// Estimates n from x and z measurements and returns the unit axis in the
/// x-z plane orthogonal to it (the +90 degree rotation of n_hat).
LearnedAxis learn_axis_equal_counts(Ensemble &ensemble, const PauliBudget &budget, const TrialStreams &streams);

void require_priors(double eta0, double eta1);

}  // namespace povm
