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

#include "povm/helstrom.h"

#include <algorithm>
#include <sstream>

#include "povm/errors.h"

namespace povm {

HelstromResult helstrom(const BlochVec &m0, const BlochVec &m1) {
    const BlochVec d = m0 - m1;
    const double len = d.norm();
    if (len <= kEpsDegenerate) {
        std::ostringstream ss;
        ss << "states coincide (|m0 - m1| = " << len << "); every measurement is optimal";
        throw DegenerateEnsemble(ss.str());
    }
    HelstromResult res;
    res.p0_axis = d * (1.0 / len);
    res.lambda = 0.5 * len;
    res.success = 0.5 + 0.5 * res.lambda;
    return res;
}

HelstromResult helstrom_or_degenerate(const BlochVec &m0, const BlochVec &m1) {
    if ((m0 - m1).norm() <= kEpsDegenerate) {
        HelstromResult res;
        res.p0_axis = {0.0, 0.0, 1.0};
        res.degenerate = true;
        return res;
    }
    return helstrom(m0, m1);
}

double success_equal_priors(const BlochVec &m0, const BlochVec &m1) {
    return helstrom_or_degenerate(m0, m1).success;
}

double equal_count_condition(const BlochVec &m0, const BlochVec &m1) { return m0.norm_sq() - m1.norm_sq(); }

std::pair<double, double> detector_probabilities(const BlochVec &axis, const BlochVec &m0, const BlochVec &m1) {
    require_unit(axis, "detector_probabilities");
    const double p0 = std::clamp(0.5 * (1.0 + axis.dot(0.5 * (m0 + m1))), 0.0, 1.0);
    return {p0, 1.0 - p0};
}

}  // namespace povm
