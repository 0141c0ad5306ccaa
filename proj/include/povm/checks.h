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
#include <string>
#include <vector>

namespace povm {

struct CheckLine {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckLine> lines;
    bool ok() const;
    std::string render() const;
};

/// Property battery for the minimum-error oracle on random consistent
/// ensembles: equal purity of the mixture targets, axis agreement with the
/// balanced measurement, the lambda identity, converse uniqueness and
/// monotonicity of success in |m0 - m1|.
CheckReport oracle_battery(std::uint64_t instances, std::uint64_t seed);

/// Invariant suites of the geometry, decomposition, equal-prior inversion and
/// constant-z reduction. No file I/O.
CheckReport selftest(std::uint64_t seed);

}  // namespace povm
