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

#include "povm/classifier.h"

#include "povm/errors.h"

namespace povm {

std::uint64_t ConfusionMatrix::total() const {
    return counts[0][0] + counts[0][1] + counts[1][0] + counts[1][1];
}

ConfusionMatrix ConfusionMatrix::swapped_predictions() const {
    ConfusionMatrix out;
    for (int t = 0; t < 2; ++t) {
        out.counts[t][0] = counts[t][1];
        out.counts[t][1] = counts[t][0];
    }
    return out;
}

ConfusionMatrix classify_holdout(Ensemble &ensemble, const BlochVec &axis, std::uint64_t n_holdout,
                                 RngStream &rng) {
    require_unit(axis, "classify_holdout");
    if (n_holdout == 0) {
        throw ContractViolation("classify_holdout: holdout must contain at least one qubit");
    }
    ConfusionMatrix cm;
    for (std::uint64_t i = 0; i < n_holdout; ++i) {
        const Ensemble::Qubit q = ensemble.draw_qubit(rng);
        const int predicted = Ensemble::sample_outcome(axis, q.state, rng) ? 0 : 1;
        ++cm.counts[q.label][predicted];
    }
    return cm;
}

EvalReport score(const ConfusionMatrix &confusion, double analytic_success, bool expect_swapped) {
    const std::uint64_t total = confusion.total();
    if (total == 0) {
        throw ContractViolation("score: empty confusion matrix");
    }
    const double n = static_cast<double>(total);
    const double diag = static_cast<double>(confusion.diagonal()) / n;
    const double anti = static_cast<double>(confusion.anti_diagonal()) / n;

    EvalReport rep;
    rep.confusion = confusion;
    rep.swapped = anti > diag;
    rep.empirical_success = rep.swapped ? anti : diag;
    rep.convention_success = expect_swapped ? anti : diag;
    rep.analytic_success = analytic_success;
    const double var = analytic_success * (1.0 - analytic_success) / n;
    rep.z_score = var > 0.0 ? (rep.empirical_success - analytic_success) / std::sqrt(var) : 0.0;
    return rep;
}

}  // namespace povm
