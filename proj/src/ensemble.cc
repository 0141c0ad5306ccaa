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

#include "povm/ensemble.h"

#include <algorithm>
#include <sstream>

#include "povm/errors.h"

namespace povm {

char case_letter(Case c) { return c == Case::A ? 'A' : 'B'; }

void EnsembleSpec::validate() const {
    if (eta0 < 0.0 || eta0 > 1.0 || eta1 < 0.0 || eta1 > 1.0 || std::abs(eta0 + eta1 - 1.0) > 1e-12) {
        std::ostringstream ss;
        ss << "priors must be probabilities summing to 1, got (" << eta0 << ", " << eta1 << ")";
        throw InvalidPriors(ss.str());
    }
    if (!psi0.is_pure() || !psi1.is_pure()) {
        throw ContractViolation("ensemble states must be pure (unit Bloch vectors)");
    }
    if (!plane.contains(psi0) || !plane.contains(psi1)) {
        throw ContractViolation("ensemble states must lie in the declared plane");
    }
}

BlochVec ensemble_bloch(const EnsembleSpec &spec) { return spec.eta0 * spec.psi0 + spec.eta1 * spec.psi1; }

double ShotBatch::mean() const {
    if (total == 0) {
        return 0.0;
    }
    return (static_cast<double>(n_plus) - static_cast<double>(n_minus)) / static_cast<double>(total);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) : seed_(seed), stream_id_(stream_id) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_id), static_cast<std::uint32_t>(stream_id >> 32)};
    engine_.seed(seq);
}

double RngStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t RngStream::binomial(std::uint64_t n, double p) {
    p = std::clamp(p, 0.0, 1.0);
    if (p == 0.0) {
        return 0;
    }
    if (p == 1.0) {
        return n;
    }
    std::binomial_distribution<std::uint64_t> dist(n, p);
    return dist(engine_);
}

std::uint64_t TrialStreams::stream_id(StreamRole role) const {
    // 24 bits of cell, 32 bits of trial, 8 bits of role.
    return (cell << 40) ^ (trial << 8) ^ static_cast<std::uint64_t>(role);
}

namespace {

// True when the first nonzero component of s is negative. Sampling is done
// along the canonical direction so that s and -s see mirrored outcomes.
bool is_flipped(const BlochVec &s) {
    for (double c : {s.x, s.y, s.z}) {
        if (c != 0.0) {
            return c < 0.0;
        }
    }
    return false;
}

}  // namespace

Ensemble::Ensemble(EnsembleSpec spec) : spec_(std::move(spec)) { spec_.validate(); }

Ensemble::Qubit Ensemble::draw_qubit(RngStream &rng) {
    ++consumed_;
    if (rng.uniform() < spec_.eta0) {
        return {0, spec_.psi0};
    }
    return {1, spec_.psi1};
}

bool Ensemble::sample_outcome(const BlochVec &axis, const BlochVec &state, RngStream &rng) {
    const bool flip = is_flipped(axis);
    const BlochVec canonical = flip ? -axis : axis;
    const bool plus = rng.uniform() < prob_plus(canonical, state);
    return plus != flip;
}

ShotBatch Ensemble::measure_shots(const BlochVec &axis, std::uint64_t shots, RngStream &rng) {
    require_unit(axis, "measure_shots");
    if (shots == 0) {
        throw ContractViolation("measure_shots: at least one shot is required");
    }
    const bool flip = is_flipped(axis);
    const BlochVec canonical = flip ? -axis : axis;
    const double p = spec_.eta0 * prob_plus(canonical, spec_.psi0) + spec_.eta1 * prob_plus(canonical, spec_.psi1);
    const std::uint64_t k = rng.binomial(shots, p);
    consumed_ += shots;

    ShotBatch batch;
    batch.axis = axis;
    batch.total = shots;
    batch.n_plus = flip ? shots - k : k;
    batch.n_minus = shots - batch.n_plus;
    return batch;
}

PauliEstimate estimate_pauli(Ensemble &ensemble, const Plane &plane, const PauliBudget &budget,
                             const TrialStreams &streams) {
    const bool three_axes = plane.kind() == Plane::Kind::ConstZ;
    if (budget.axis1 == 0 || budget.axis2 == 0 || (three_axes && budget.normal == 0)) {
        throw ContractViolation("estimate_pauli: every measured axis needs at least one shot");
    }

    PauliEstimate est;
    auto measure = [&](const BlochVec &axis, std::uint64_t shots, StreamRole role) {
        RngStream rng = streams.stream(role);
        est.batches.push_back(ensemble.measure_shots(axis, shots, rng));
        est.shots_used += shots;
        return est.batches.back().mean();
    };

    const double m1 = measure(plane.embed({1.0, 0.0}), budget.axis1, StreamRole::PlaneAxis1);
    const double m2 = measure(plane.embed({0.0, 1.0}), budget.axis2, StreamRole::PlaneAxis2);
    double height = 0.0;
    if (three_axes) {
        height = measure({0.0, 0.0, 1.0}, budget.normal, StreamRole::NormalAxis);
    }
    est.n_hat = plane.embed({m1, m2}, height);
    return est;
}

}  // namespace povm
