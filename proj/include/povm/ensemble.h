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
#include <optional>
#include <random>
#include <vector>

#include "povm/bloch.h"

namespace povm {

/// Which of the two decompositions of an unequal-prior ensemble holds.
/// Case A: psi1 sits at psi0's in-plane angle minus theta; case B: plus theta.
enum class Case { A, B };

char case_letter(Case c);

/// Ground truth of a hidden two-state ensemble. Never visible to learners
/// except through Ensemble sampling.
struct EnsembleSpec {
    double eta0 = 0.5;
    double eta1 = 0.5;
    BlochVec psi0;
    BlochVec psi1;
    Plane plane = Plane::xz();
    std::optional<Case> case_tag;

    /// Throws InvalidPriors or ContractViolation on a malformed spec.
    void validate() const;
};

/// eta0 * psi0 + eta1 * psi1.
BlochVec ensemble_bloch(const EnsembleSpec &spec);

struct ShotBatch {
    BlochVec axis;
    std::uint64_t n_plus = 0;
    std::uint64_t n_minus = 0;
    std::uint64_t total = 0;

    /// Empirical mean of the +/-1 outcomes.
    double mean() const;
    bool operator==(const ShotBatch &) const = default;
};

/// Seeded random stream. Identical (seed, stream_id) reproduces identical
/// draws. A stream must not be shared between concurrent consumers.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    /// Uniform double in [0, 1) built from the top 53 bits of one draw.
    double uniform();
    std::uint64_t binomial(std::uint64_t n, double p);

  private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
};

/// Purpose of a stream within one trial. Roles are keyed by plane axis rather
/// than by Bloch axis, so an x-z run and an x-y run at n_z = 0 consume
/// identical randomness.
enum class StreamRole : std::uint64_t {
    PlaneAxis1 = 1,
    PlaneAxis2 = 2,
    NormalAxis = 3,
    SettingA = 4,
    SettingB = 5,
    Holdout = 6,
    CaseDraw = 7,
};

/// Derives the independent streams used by one trial of one sweep cell.
struct TrialStreams {
    std::uint64_t seed = 0;
    std::uint64_t cell = 0;
    std::uint64_t trial = 0;

    std::uint64_t stream_id(StreamRole role) const;
    RngStream stream(StreamRole role) const { return RngStream(seed, stream_id(role)); }
};

/// Sampling front end over an EnsembleSpec that counts every qubit consumed.
/// Each measurement destroys one ensemble member.
class Ensemble {
  public:
    explicit Ensemble(EnsembleSpec spec);

    const EnsembleSpec &spec() const { return spec_; }
    std::uint64_t consumed() const { return consumed_; }

    struct Qubit {
        int label;
        BlochVec state;
    };

    /// Draws one member. The label is hidden ground truth for evaluators only.
    Qubit draw_qubit(RngStream &rng);

    /// Measures `shots` fresh qubits along a unit axis.
    ShotBatch measure_shots(const BlochVec &axis, std::uint64_t shots, RngStream &rng);

    /// Samples the +1 outcome of a single-qubit projective measurement of
    /// `state` along `axis`. The draw is mirror-symmetric: measuring along
    /// -axis with the same stream state gives the opposite outcome.
    static bool sample_outcome(const BlochVec &axis, const BlochVec &state, RngStream &rng);

  private:
    EnsembleSpec spec_;
    std::uint64_t consumed_ = 0;
};

/// Shots for each Pauli axis. Axes not required by the plane are ignored.
struct PauliBudget {
    std::uint64_t axis1 = 0;
    std::uint64_t axis2 = 0;
    std::uint64_t normal = 0;

    static PauliBudget equal(std::uint64_t per_axis) { return {per_axis, per_axis, per_axis}; }
};

struct PauliEstimate {
    BlochVec n_hat;
    std::vector<ShotBatch> batches;
    std::uint64_t shots_used = 0;
};

/// Estimates the ensemble Bloch vector from sigma measurements. XZ planes
/// measure x and z and report y = 0; constant-z planes measure all three
/// axes and keep the measured z alongside the in-plane part.
PauliEstimate estimate_pauli(Ensemble &ensemble, const Plane &plane, const PauliBudget &budget,
                             const TrialStreams &streams);

}  // namespace povm
