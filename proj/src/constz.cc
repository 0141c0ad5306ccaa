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

#include "povm/constz.h"

#include <algorithm>
#include <sstream>

#include "povm/errors.h"

namespace povm {

ConstZFrame ConstZFrame::from(const BlochVec &n) {
    if (!(std::abs(n.z) < 1.0)) {
        throw ContractViolation("constant-z frame needs |n_z| < 1");
    }
    return {n.z, {n.x, n.y, 0.0}, std::sqrt(1.0 - n.z * n.z)};
}

double cos_theta_z(double r_norm, double n_z, double eta0, double eta1, double slack) {
    require_priors(eta0, eta1);
    if (!(std::abs(n_z) < 1.0)) {
        throw ContractViolation("cos_theta_z needs |n_z| < 1");
    }
    const double scaled = r_norm * r_norm / (1.0 - n_z * n_z);
    const double c = (scaled - eta0 * eta0 - eta1 * eta1) / (2.0 * eta0 * eta1);
    if (!(c >= -1.0 - slack && c <= 1.0 + slack)) {
        std::ostringstream ss;
        ss << "cos(theta) = " << c << " is outside [-1, 1] beyond slack " << slack << " (|r| = " << r_norm
           << ", n_z = " << n_z << ")";
        throw CosThetaOutOfRange(ss.str());
    }
    return std::clamp(c, -1.0, 1.0);
}

DecompositionPair decompose_constz(const ConstZFrame &frame, double theta, double eta0, double eta1,
                                   Case which) {
    const Plane plane = frame.plane();
    auto [p0, p1] = decompose_planar(plane.project(frame.r), frame.r_radius, theta, eta0, eta1, which);
    return {plane.embed(p0, frame.n_z), plane.embed(p1, frame.n_z), which};
}

MixtureTargets mixture_targets_constz(const ConstZFrame &frame, double theta, double eta0, double eta1) {
    const Plane plane = frame.plane();
    const PlanePoint r = plane.project(frame.r);
    auto [a0, a1] = decompose_planar(r, frame.r_radius, theta, eta0, eta1, Case::A);
    auto [b0, b1] = decompose_planar(r, frame.r_radius, theta, eta0, eta1, Case::B);

    MixtureTargets t;
    t.m0 = plane.embed({eta0 * a0.u + eta1 * b1.u, eta0 * a0.w + eta1 * b1.w}, frame.n_z);
    t.m1 = plane.embed({eta1 * a1.u + eta0 * b0.u, eta1 * a1.w + eta0 * b0.w}, frame.n_z);
    t.theta = theta;
    return t;
}

LearnedAxis learn_axis_constz(Ensemble &ensemble, const PauliBudget &budget, const TrialStreams &streams) {
    const Plane &plane = ensemble.spec().plane;
    if (plane.kind() != Plane::Kind::ConstZ) {
        throw ContractViolation("learn_axis_constz requires a constant-z plane ensemble");
    }
    LearnedAxis out;
    out.pauli = estimate_pauli(ensemble, plane, budget, streams);
    out.axis = perp_in_plane(out.pauli.n_hat, plane);
    return out;
}

}  // namespace povm
