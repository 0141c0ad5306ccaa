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

#include <random>

#include "gtest/gtest.h"

#include "povm/errors.h"

using namespace povm;

namespace {

void expect_vec_near(const BlochVec &got, const BlochVec &want, double tol) {
    EXPECT_NEAR(got.x, want.x, tol);
    EXPECT_NEAR(got.y, want.y, tol);
    EXPECT_NEAR(got.z, want.z, tol);
}

}  // namespace

TEST(bloch, planar_angle_reduces_mod_two_pi) {
    EXPECT_DOUBLE_EQ(PlanarAngle(0.5).value(), 0.5);
    EXPECT_NEAR(PlanarAngle(-0.1).value(), kTwoPi - 0.1, 1e-15);
    EXPECT_NEAR(PlanarAngle(kTwoPi + 1.0).value(), 1.0, 1e-15);
    EXPECT_EQ(PlanarAngle(kTwoPi).value(), 0.0);
    EXPECT_LT(PlanarAngle(-1e-18).value(), kTwoPi);
}

TEST(bloch, state_angle_examples) {
    expect_vec_near(bloch_from_state_angle(PlanarAngle(0.0)), {0, 0, 1}, 1e-15);
    expect_vec_near(bloch_from_state_angle(PlanarAngle(kPi)), {0, 0, -1}, 1e-15);
    expect_vec_near(bloch_from_state_angle(PlanarAngle(kPi / 2)), {1, 0, 0}, 1e-15);
}

TEST(bloch, state_angle_is_unit) {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> ang(-10.0, 10.0);
    for (int i = 0; i < 1000; ++i) {
        EXPECT_NEAR(bloch_from_state_angle(PlanarAngle(ang(gen))).norm(), 1.0, 1e-15);
    }
}

TEST(bloch, prob_plus_examples) {
    EXPECT_DOUBLE_EQ(prob_plus({0, 0, 1}, {0, 0, 1}), 1.0);
    EXPECT_DOUBLE_EQ(prob_plus({0, 0, 1}, {1, 0, 0}), 0.5);
    EXPECT_NEAR(prob_plus({0, 1, 0}, {0, 0.6, 0.6}), 0.8, 1e-15);
}

TEST(bloch, prob_plus_rejects_non_unit_axis) {
    EXPECT_THROW(prob_plus({0, 0, 0.5}, {0, 0, 1}), ContractViolation);
    EXPECT_THROW(prob_plus({0, 0, 1}, {0, 0, 1.1}), ContractViolation);
}

TEST(bloch, prob_plus_complement) {
    std::mt19937_64 gen(11);
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        BlochVec s{g(gen), g(gen), g(gen)};
        s = s * (1.0 / s.norm());
        BlochVec n{g(gen), g(gen), g(gen)};
        n = n * (u(gen) / n.norm());
        // One ulp of 1.0 is the best (1+d)/2 + (1-d)/2 can do in doubles.
        EXPECT_NEAR(prob_plus(s, n) + prob_plus(-s, n), 1.0, 0x1.0p-52);
    }
}

TEST(bloch, rotate_examples) {
    expect_vec_near(rotate_in_plane({1, 0, 0}, Plane::xz(), PlanarAngle(kPi / 2)), {0, 0, 1}, 1e-15);
    expect_vec_near(rotate_in_plane({0, 0, 1}, Plane::xz(), PlanarAngle(kPi / 2)), {-1, 0, 0}, 1e-15);
    expect_vec_near(rotate_in_plane({0.8, 0, 0.6}, Plane::xz(), PlanarAngle(0.0)), {0.8, 0, 0.6}, 0.0);
    expect_vec_near(rotate_in_plane({0.3, 0, 0.5}, Plane::const_z(0.5), PlanarAngle(kPi / 2)), {0, 0.3, 0.5}, 1e-15);
}

TEST(bloch, rotate_rejects_out_of_plane) {
    EXPECT_THROW(rotate_in_plane({0, 0.5, 0.5}, Plane::xz(), PlanarAngle(1.0)), ContractViolation);
    EXPECT_THROW(rotate_in_plane({0.5, 0, 0.1}, Plane::const_z(0.3), PlanarAngle(1.0)), ContractViolation);
}

TEST(bloch, rotate_preserves_norm_and_composes) {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    std::uniform_real_distribution<double> c(-0.7, 0.7);
    for (int i = 0; i < 500; ++i) {
        const double a = ang(gen);
        const double b = ang(gen);
        const BlochVec v{c(gen), 0.0, c(gen)};
        const BlochVec twice = rotate_in_plane(rotate_in_plane(v, Plane::xz(), PlanarAngle(a)), Plane::xz(),
                                               PlanarAngle(b));
        EXPECT_NEAR(twice.norm(), v.norm(), 1e-12);
        EXPECT_LE(distance(twice, rotate_in_plane(v, Plane::xz(), PlanarAngle(a + b))), 1e-12);

        const double nz = c(gen);
        const Plane plane = Plane::const_z(nz);
        const BlochVec w{c(gen), c(gen), nz};
        const BlochVec w2 = rotate_in_plane(rotate_in_plane(w, plane, PlanarAngle(a)), plane, PlanarAngle(b));
        EXPECT_NEAR(w2.norm(), w.norm(), 1e-12);
        EXPECT_EQ(w2.z, nz);
        EXPECT_LE(distance(w2, rotate_in_plane(w, plane, PlanarAngle(a + b))), 1e-12);
    }
}

TEST(bloch, perp_examples) {
    expect_vec_near(perp_in_plane({1, 0, 0}, Plane::xz()), {0, 0, 1}, 1e-15);
    expect_vec_near(perp_in_plane({0, 0, 0.5}, Plane::xz()), {-1, 0, 0}, 1e-15);
    expect_vec_near(perp_in_plane({0.3, 0, 0}, Plane::const_z(0.6)), {0, 1, 0}, 1e-15);
}

TEST(bloch, perp_degenerate) {
    EXPECT_THROW(perp_in_plane({0, 0, 0}, Plane::xz()), DegenerateEnsemble);
    EXPECT_THROW(perp_in_plane({1e-7, 0.9, 0}, Plane::xz()), DegenerateEnsemble);
    EXPECT_THROW(perp_in_plane({0, 0, 0.9}, Plane::const_z(0.9)), DegenerateEnsemble);
}

TEST(bloch, perp_is_unit_and_orthogonal) {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const BlochVec n{c(gen), c(gen), c(gen)};
        for (const Plane &plane : {Plane::xz(), Plane::const_z(0.5 * n.z)}) {
            const BlochVec p = perp_in_plane(n, plane);
            EXPECT_NEAR(p.norm(), 1.0, 1e-12);
            EXPECT_NEAR(p.dot(plane.in_plane_part(n)), 0.0, 1e-12);
            // +90 degrees: the in-plane part followed by p turns counterclockwise.
            const PlanePoint a = plane.project(n);
            const PlanePoint b = plane.project(p);
            EXPECT_GT(a.u * b.w - a.w * b.u, 0.0);
        }
    }
}

TEST(bloch, const_z_plane_bounds) {
    EXPECT_THROW(Plane::const_z(1.0), ContractViolation);
    EXPECT_THROW(Plane::const_z(-1.5), ContractViolation);
    EXPECT_NO_THROW(Plane::const_z(0.999));
}
