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

#include <array>
#include <cstdint>

#include "povm/bloch.h"
#include "povm/ensemble.h"

namespace povm {

/// counts[true_label][predicted_label].
struct ConfusionMatrix {
    std::array<std::array<std::uint64_t, 2>, 2> counts{};

    std::uint64_t total() const;
    std::uint64_t diagonal() const { return counts[0][0] + counts[1][1]; }
    std::uint64_t anti_diagonal() const { return counts[0][1] + counts[1][0]; }
    /// Same matrix with the predicted labels exchanged.
    ConfusionMatrix swapped_predictions() const;
    bool operator==(const ConfusionMatrix &) const = default;
};

struct EvalReport {
    ConfusionMatrix confusion;
    /// Success under the better of the two label orientations.
    double empirical_success = 0.0;
    /// Set when the anti-diagonal orientation won.
    bool swapped = false;
    /// Success under the expected orientation (predicted 0 <-> m0 target).
    double convention_success = 0.0;
    double analytic_success = 0.0;
    /// (empirical - analytic) / binomial sigma; 0 when the variance vanishes.
    double z_score = 0.0;
    bool operator==(const EvalReport &) const = default;
};

/// Measures each held-out qubit along `axis`: +1 predicts label 0, -1 label 1.
ConfusionMatrix classify_holdout(Ensemble &ensemble, const BlochVec &axis, std::uint64_t n_holdout,
                                 RngStream &rng);

/// Scores a confusion matrix. `expect_swapped` states that the expected
/// pairing is predicted 0 <-> true 1; this happens for case-B ensembles,
/// where the +90 degree axis convention points at psi1.
EvalReport score(const ConfusionMatrix &confusion, double analytic_success, bool expect_swapped = false);

}  // namespace povm
