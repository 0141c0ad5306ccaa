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
#include <cmath>
#include <numbers>

namespace povm {

/// Tolerance for exact (analytic) physical-state checks.
inline constexpr double kEpsPhys = 1e-9;
/// Below this in-plane norm a perpendicular direction is meaningless.
inline constexpr double kEpsDegenerate = 1e-6;
/// Slack allowed on cos(theta) computed from sampled estimates.
inline constexpr double kEpsClamp = 0.02;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Real 3-vector n with rho = (I + n.sigma)/2.
struct BlochVec {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double dot(const BlochVec &o) const { return x * o.x + y * o.y + z * o.z; }
    double norm_sq() const { return dot(*this); }
    double norm() const { return std::sqrt(norm_sq()); }

    BlochVec operator+(const BlochVec &o) const { return {x + o.x, y + o.y, z + o.z}; }
    BlochVec operator-(const BlochVec &o) const { return {x - o.x, y - o.y, z - o.z}; }
    BlochVec operator-() const { return {-x, -y, -z}; }
    BlochVec operator*(double k) const { return {k * x, k * y, k * z}; }
    friend BlochVec operator*(double k, const BlochVec &v) { return v * k; }
    bool operator==(const BlochVec &) const = default;

    bool is_physical(double eps = kEpsPhys) const { return norm() <= 1.0 + eps; }
    bool is_pure(double eps = kEpsPhys) const { return std::abs(norm() - 1.0) <= eps; }
};

inline double distance(const BlochVec &a, const BlochVec &b) { return (a - b).norm(); }

inline BlochVec cross(const BlochVec &a, const BlochVec &b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Unsigned angle in [0, pi] between two nonzero vectors.
inline double angle_between(const BlochVec &a, const BlochVec &b) { return std::atan2(cross(a, b).norm(), a.dot(b)); }

/// Angle reduced into [0, 2pi).
class PlanarAngle {
  public:
    PlanarAngle() = default;
    explicit PlanarAngle(double radians);
    double value() const { return value_; }
    operator double() const { return value_; }

  private:
    double value_ = 0.0;
};

/// Coordinates of a vector inside a plane's 2D subspace.
struct PlanePoint {
    double u = 0.0;
    double w = 0.0;
    double norm() const { return std::hypot(u, w); }
};

/// Plane to which the hidden states are known to be confined.
///
/// XZ: plane axes (x, z), through the origin.
/// ConstZ: plane axes (x, y) at height n_z; in-plane quantities refer to the
/// x-y part of a vector. Angles are counterclockwise from the first axis.
class Plane {
  public:
    enum class Kind { XZ, ConstZ };

    static Plane xz() { return Plane(Kind::XZ, 0.0); }
    static Plane const_z(double n_z);

    Kind kind() const { return kind_; }
    double n_z() const { return n_z_; }
    bool is_xz() const { return kind_ == Kind::XZ; }

    PlanePoint project(const BlochVec &v) const;
    /// Embeds a plane point. For ConstZ the supplied height is used as z.
    BlochVec embed(PlanePoint p, double height = 0.0) const;
    BlochVec in_plane_part(const BlochVec &v) const { return embed(project(v)); }
    bool contains(const BlochVec &v, double eps = kEpsPhys) const;

  private:
    Plane(Kind kind, double n_z) : kind_(kind), n_z_(n_z) {}
    Kind kind_;
    double n_z_;
};

/// Bloch vector of cos(g/2)|0> + sin(g/2)|1>, g the polar angle from +z.
BlochVec bloch_from_state_angle(PlanarAngle polar_from_z);

/// Probability of the +1 outcome of the projective measurement along s.
double prob_plus(const BlochVec &s, const BlochVec &n);

BlochVec rotate_in_plane(const BlochVec &v, const Plane &plane, PlanarAngle angle);

/// Unit vector in the plane obtained by a +90 degree rotation of the
/// normalized in-plane part of n. Throws DegenerateEnsemble when that part is
/// shorter than kEpsDegenerate.
BlochVec perp_in_plane(const BlochVec &n, const Plane &plane);

/// Counterclockwise angle of the in-plane part from the first plane axis.
PlanarAngle in_plane_angle(const BlochVec &v, const Plane &plane);

void require_unit(const BlochVec &s, const char *what);

}  // namespace povm
