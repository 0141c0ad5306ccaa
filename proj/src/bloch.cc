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

#include "povm/bloch.h"

#include <algorithm>
#include <sstream>

#include "povm/errors.h"

namespace povm {

std::string_view status_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ContractViolation:
            return "contract_violation";
        case ErrorKind::DegenerateEnsemble:
            return "degenerate_ensemble";
        case ErrorKind::WeakSignal:
            return "weak_signal";
        case ErrorKind::CosThetaOutOfRange:
            return "cos_theta_out_of_range";
        case ErrorKind::InvalidPriors:
            return "invalid_priors";
        case ErrorKind::Config:
            return "config_error";
        case ErrorKind::Io:
            return "io_error";
    }
    return "unknown";
}

PlanarAngle::PlanarAngle(double radians) {
    double r = std::fmod(radians, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod of a tiny negative value can round up to exactly 2pi.
    value_ = r >= kTwoPi ? 0.0 : r;
}

Plane Plane::const_z(double n_z) {
    if (!(std::abs(n_z) < 1.0)) {
        std::ostringstream ss;
        ss << "constant-z plane needs |n_z| < 1, got " << n_z;
        throw ContractViolation(ss.str());
    }
    return Plane(Kind::ConstZ, n_z);
}

PlanePoint Plane::project(const BlochVec &v) const {
    if (kind_ == Kind::XZ) {
        return {v.x, v.z};
    }
    return {v.x, v.y};
}

BlochVec Plane::embed(PlanePoint p, double height) const {
    if (kind_ == Kind::XZ) {
        return {p.u, 0.0, p.w};
    }
    return {p.u, p.w, height};
}

bool Plane::contains(const BlochVec &v, double eps) const {
    if (kind_ == Kind::XZ) {
        return std::abs(v.y) <= eps;
    }
    return std::abs(v.z - n_z_) <= eps;
}

void require_unit(const BlochVec &s, const char *what) {
    if (std::abs(s.norm() - 1.0) > kEpsPhys) {
        std::ostringstream ss;
        ss << what << ": measurement axis must be a unit vector, |s| = " << s.norm();
        throw ContractViolation(ss.str());
    }
}

BlochVec bloch_from_state_angle(PlanarAngle polar_from_z) {
    return {std::sin(polar_from_z.value()), 0.0, std::cos(polar_from_z.value())};
}

double prob_plus(const BlochVec &s, const BlochVec &n) {
    require_unit(s, "prob_plus");
    if (!n.is_physical()) {
        std::ostringstream ss;
        ss << "prob_plus: state Bloch vector is unphysical, |n| = " << n.norm();
        throw ContractViolation(ss.str());
    }
    return std::clamp(0.5 * (1.0 + s.dot(n)), 0.0, 1.0);
}

BlochVec rotate_in_plane(const BlochVec &v, const Plane &plane, PlanarAngle angle) {
    if (!plane.contains(v)) {
        throw ContractViolation("rotate_in_plane: vector does not lie in the plane");
    }
    const PlanePoint p = plane.project(v);
    const double c = std::cos(angle.value());
    const double s = std::sin(angle.value());
    return plane.embed({c * p.u - s * p.w, s * p.u + c * p.w}, v.z);
}

BlochVec perp_in_plane(const BlochVec &n, const Plane &plane) {
    const PlanePoint p = plane.project(n);
    const double len = p.norm();
    if (len <= kEpsDegenerate) {
        std::ostringstream ss;
        ss << "in-plane part has norm " << len << ", perpendicular direction undefined";
        throw DegenerateEnsemble(ss.str());
    }
    return plane.embed({-p.w / len, p.u / len}, 0.0);
}

PlanarAngle in_plane_angle(const BlochVec &v, const Plane &plane) {
    const PlanePoint p = plane.project(v);
    return PlanarAngle(std::atan2(p.w, p.u));
}

}  // namespace povm
