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

#include "povm/decomposition.h"

#include <algorithm>
#include <sstream>

#include "povm/errors.h"

namespace povm {

namespace {

void require_theta(double theta) {
    if (!(theta >= 0.0 && theta <= kPi)) {
        std::ostringstream ss;
        ss << "theta must be the principal angle in [0, pi], got " << theta;
        throw ContractViolation(ss.str());
    }
}

void require_nondegenerate(double n_norm) {
    if (!(n_norm > kEpsDegenerate)) {
        std::ostringstream ss;
        ss << "ensemble vector norm " << n_norm << " is too small to orient a decomposition";
        throw DegenerateEnsemble(ss.str());
    }
}

void require_xz(const BlochVec &n) {
    if (!Plane::xz().contains(n)) {
        throw ContractViolation("ensemble vector must lie in the x-z plane");
    }
}

}  // namespace

void require_priors(double eta0, double eta1) {
    if (!(eta0 > 0.0 && eta0 < 1.0) || std::abs(eta0 + eta1 - 1.0) > 1e-12) {
        std::ostringstream ss;
        ss << "priors must satisfy 0 < eta0 < 1 and eta0 + eta1 = 1, got (" << eta0 << ", " << eta1 << ")";
        throw InvalidPriors(ss.str());
    }
}

double cos_theta(double n_norm, double eta0, double eta1, double slack) {
    require_priors(eta0, eta1);
    const double c = (n_norm * n_norm - eta0 * eta0 - eta1 * eta1) / (2.0 * eta0 * eta1);
    if (!(c >= -1.0 - slack && c <= 1.0 + slack)) {
        std::ostringstream ss;
        ss << "cos(theta) = " << c << " is outside [-1, 1] beyond slack " << slack << " (|n| = " << n_norm << ")";
        throw CosThetaOutOfRange(ss.str());
    }
    return std::clamp(c, -1.0, 1.0);
}

double theta_from_cos(double c) { return std::acos(std::clamp(c, -1.0, 1.0)); }

std::pair<PlanePoint, PlanePoint> decompose_planar(PlanePoint r, double radius, double theta, double eta0,
                                                   double eta1, Case which) {
    require_priors(eta0, eta1);
    require_theta(theta);
    const double len = r.norm();
    require_nondegenerate(len);

    const double k = radius * radius / (len * len);
    const double c = std::cos(theta);
    const double s = which == Case::A ? std::sin(theta) : -std::sin(theta);

    const double a0 = eta0 + eta1 * c;
    const double b0 = eta1 * s;
    const double a1 = eta1 + eta0 * c;
    const double b1 = eta0 * s;

    PlanePoint r0{k * (a0 * r.u - b0 * r.w), k * (b0 * r.u + a0 * r.w)};
    PlanePoint r1{k * (a1 * r.u + b1 * r.w), k * (-b1 * r.u + a1 * r.w)};
    return {r0, r1};
}

DecompositionPair decompose(const BlochVec &n, double theta, double eta0, double eta1, Case which) {
    require_xz(n);
    const Plane plane = Plane::xz();
    auto [p0, p1] = decompose_planar(plane.project(n), 1.0, theta, eta0, eta1, which);
    return {plane.embed(p0), plane.embed(p1), which};
}

MixtureTargets mixture_targets(const BlochVec &n, double theta, double eta0, double eta1) {
    require_priors(eta0, eta1);
    require_theta(theta);
    require_xz(n);
    const double len = n.norm();
    require_nondegenerate(len);

    const BlochVec perp = perp_in_plane(n, Plane::xz());
    const double coef = 2.0 * eta0 * eta1 * std::sin(theta) / len;
    return {n + coef * perp, n - coef * perp, theta};
}

MixtureTargets mixture_targets_components(const BlochVec &n, double theta, double eta0, double eta1) {
    require_priors(eta0, eta1);
    require_theta(theta);
    require_xz(n);
    const double nsq = n.norm_sq();
    require_nondegenerate(std::sqrt(nsq));

    const double g = 2.0 * eta0 * eta1 * std::sin(theta);
    MixtureTargets t;
    t.m0 = {(n.x * nsq - g * n.z) / nsq, 0.0, (g * n.x + n.z * nsq) / nsq};
    t.m1 = {(n.x * nsq + g * n.z) / nsq, 0.0, (-g * n.x + n.z * nsq) / nsq};
    t.theta = theta;
    return t;
}

double success_prob(double eta0, double eta1, double theta, double n_norm) {
    require_priors(eta0, eta1);
    require_theta(theta);
    require_nondegenerate(n_norm);
    const double ps = 0.5 + eta0 * eta1 * std::sin(theta) / n_norm;
    if (ps > 1.0 + kEpsPhys) {
        std::ostringstream ss;
        ss << "success probability " << ps << " exceeds 1: |n| = " << n_norm << " is inconsistent with theta "
           << theta << " and the priors";
        throw ContractViolation(ss.str());
    }
    return std::min(ps, 1.0);
}

LearnedAxis learn_axis_equal_counts(Ensemble &ensemble, const PauliBudget &budget, const TrialStreams &streams) {
    const Plane &plane = ensemble.spec().plane;
    if (!plane.is_xz()) {
        throw ContractViolation("learn_axis_equal_counts requires an x-z plane ensemble");
    }
    LearnedAxis out;
    out.pauli = estimate_pauli(ensemble, plane, budget, streams);
    out.axis = perp_in_plane(out.pauli.n_hat, plane);
    return out;
}

}  // namespace povm
