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

#include <stdexcept>
#include <string>
#include <string_view>

namespace povm {

/// Failure categories surfaced by the library. Each maps to a stable status
/// string used in experiment output rows.
enum class ErrorKind {
    ContractViolation,
    DegenerateEnsemble,
    WeakSignal,
    CosThetaOutOfRange,
    InvalidPriors,
    Config,
    Io,
};

std::string_view status_name(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }
    std::string_view status() const { return status_name(kind_); }

  private:
    ErrorKind kind_;
};

struct ContractViolation : Error {
    explicit ContractViolation(const std::string &what) : Error(ErrorKind::ContractViolation, what) {}
};

struct DegenerateEnsemble : Error {
    explicit DegenerateEnsemble(const std::string &what) : Error(ErrorKind::DegenerateEnsemble, what) {}
};

/// Both tuning differences fell under the noise floor; the states are too
/// close to orthogonal for the two-setting rule to resolve the angle.
struct WeakSignal : Error {
    explicit WeakSignal(const std::string &what) : Error(ErrorKind::WeakSignal, what) {}
};

struct CosThetaOutOfRange : Error {
    explicit CosThetaOutOfRange(const std::string &what) : Error(ErrorKind::CosThetaOutOfRange, what) {}
};

struct InvalidPriors : Error {
    explicit InvalidPriors(const std::string &what) : Error(ErrorKind::InvalidPriors, what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string &what) : Error(ErrorKind::Config, what) {}
};

struct IoError : Error {
    explicit IoError(const std::string &what) : Error(ErrorKind::Io, what) {}
};

}  // namespace povm
