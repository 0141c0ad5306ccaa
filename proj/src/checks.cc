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

#include "povm/checks.h"

#include <algorithm>
#include <sstream>

#include "povm/bloch.h"
#include "povm/constz.h"
#include "povm/decomposition.h"
#include "povm/ensemble.h"
#include "povm/equal_prior.h"
#include "povm/helstrom.h"

namespace povm {

bool CheckReport::ok() const {
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine &l) { return l.passed; });
}

std::string CheckReport::render() const {
    std::ostringstream out;
    for (const CheckLine &l : lines) {
        out << (l.passed ? "[PASS] " : "[FAIL] ") << l.name;
        if (!l.detail.empty()) {
            out << "  (" << l.detail << ")";
        }
        out << '\n';
    }
    return out.str();
}

namespace {

struct Instance {
    double eta0;
    double eta1;
    double theta;
    double direction;
    double n_norm;
};

Instance random_instance(RngStream &rng) {
    for (;;) {
        Instance in;
        in.eta0 = 0.05 + 0.9 * rng.uniform();
        in.eta1 = 1.0 - in.eta0;
        in.theta = 0.05 + (kPi - 0.1) * rng.uniform();
        in.direction = kTwoPi * rng.uniform();
        in.n_norm = std::sqrt(in.eta0 * in.eta0 + in.eta1 * in.eta1 + 2.0 * in.eta0 * in.eta1 * std::cos(in.theta));
        if (in.n_norm > 1e-3) {
            return in;
        }
    }
}

// Tracks the worst deviation seen for one property.
struct Worst {
    std::string name;
    double tol;
    double worst = 0.0;
    void see(double v) { worst = std::max(worst, v); }
    CheckLine line() const {
        std::ostringstream ss;
        ss << "max deviation " << worst << ", tolerance " << tol;
        return {name, worst <= tol, ss.str()};
    }
};

double up_to_sign(const BlochVec &a, const BlochVec &b) { return std::min(distance(a, b), distance(a, -b)); }

}  // namespace

CheckReport oracle_battery(std::uint64_t instances, std::uint64_t seed) {
    RngStream rng(seed, 0x0A);
    Worst purity{"equal purity |m0| = |m1|", 1e-12};
    Worst axis{"optimal axis equals the balanced axis up to sign", 1e-12};
    Worst lambda{"1/2 + lambda/2 matches the closed-form success", 1e-12};
    Worst converse{"balanced in-plane axis determines the optimal axis", 1e-12};
    Worst balance{"optimal measurement fires both detectors equally", 1e-12};
    Worst constz_axis{"constant-z optimal axis lies in x-y and is orthogonal to r", 1e-12};
    bool monotone = true;

    std::vector<std::pair<double, double>> sep_success;
    for (std::uint64_t i = 0; i < instances; ++i) {
        const Instance in = random_instance(rng);
        const BlochVec n = Plane::xz().embed({in.n_norm * std::cos(in.direction), in.n_norm * std::sin(in.direction)});
        const MixtureTargets t = mixture_targets(n, in.theta, in.eta0, in.eta1);
        const HelstromResult h = helstrom(t.m0, t.m1);

        purity.see(std::abs(t.m0.norm() - t.m1.norm()));
        axis.see(up_to_sign(h.p0_axis, perp_in_plane(n, Plane::xz())));
        lambda.see(std::abs(h.success - success_prob(in.eta0, in.eta1, in.theta, in.n_norm)));
        converse.see(up_to_sign(perp_in_plane(t.m0 + t.m1, Plane::xz()), h.p0_axis));
        balance.see(std::abs(detector_probabilities(h.p0_axis, t.m0, t.m1).first - 0.5));
        sep_success.emplace_back((t.m0 - t.m1).norm(), h.success);

        const double nz = -0.9 + 1.8 * rng.uniform();
        const double radius = std::sqrt(1.0 - nz * nz);
        const ConstZFrame frame = ConstZFrame::from(
            {radius * in.n_norm * std::cos(in.direction), radius * in.n_norm * std::sin(in.direction), nz});
        const MixtureTargets tz = mixture_targets_constz(frame, in.theta, in.eta0, in.eta1);
        const HelstromResult hz = helstrom(tz.m0, tz.m1);
        purity.see(std::abs(tz.m0.norm() - tz.m1.norm()));
        constz_axis.see(std::max(std::abs(hz.p0_axis.z), std::abs(hz.p0_axis.dot(frame.r))));
    }

    std::sort(sep_success.begin(), sep_success.end());
    for (std::size_t i = 1; i < sep_success.size(); ++i) {
        monotone = monotone && sep_success[i].second >= sep_success[i - 1].second;
    }

    CheckReport rep;
    for (const Worst *w : {&purity, &axis, &lambda, &converse, &balance, &constz_axis}) {
        rep.lines.push_back(w->line());
    }
    rep.lines.push_back({"success nondecreasing in |m0 - m1|", monotone, ""});
    return rep;
}

CheckReport selftest(std::uint64_t seed) {
    RngStream rng(seed, 0x5E);
    CheckReport rep;

    Worst complement{"prob_plus(s) + prob_plus(-s) = 1", 0x1.0p-52};
    Worst perp{"perp_in_plane is unit and orthogonal", 1e-12};
    Worst rotation{"rotate_in_plane preserves norm and composes additively", 1e-12};
    Worst state_angle{"state-angle Bloch vectors are unit", 1e-15};
    for (int i = 0; i < 1000; ++i) {
        const double a = kTwoPi * rng.uniform();
        const double b = kPi * rng.uniform();
        const BlochVec s{std::sin(b) * std::cos(a), std::sin(b) * std::sin(a), std::cos(b)};
        const BlochVec n = s * rng.uniform();
        const BlochVec s_rot{s.z, s.x, s.y};
        complement.see(std::abs(prob_plus(s_rot, n) + prob_plus(-s_rot, n) - 1.0));

        for (const Plane &plane : {Plane::xz(), Plane::const_z(n.z)}) {
            const BlochVec p = perp_in_plane(n, plane);
            perp.see(std::abs(p.norm() - 1.0));
            perp.see(std::abs(p.dot(plane.in_plane_part(n))));
            const double x = kTwoPi * rng.uniform();
            const double y = kTwoPi * rng.uniform();
            const BlochVec v = plane.is_xz() ? BlochVec{n.x, 0.0, n.z} : n;
            const BlochVec twice = rotate_in_plane(rotate_in_plane(v, plane, PlanarAngle(x)), plane, PlanarAngle(y));
            const BlochVec once = rotate_in_plane(v, plane, PlanarAngle(x + y));
            rotation.see(std::abs(twice.norm() - v.norm()));
            rotation.see(distance(twice, once));
        }
        state_angle.see(std::abs(bloch_from_state_angle(PlanarAngle(a)).norm() - 1.0));
    }
    for (const Worst *w : {&complement, &perp, &rotation, &state_angle}) {
        rep.lines.push_back(w->line());
    }

    Worst round_trip{"decomposition recombines to n with unit states", 1e-12};
    Worst angle{"decomposed states are theta apart", 1e-12};
    Worst reduction{"constant-z decomposition at n_z = 0 matches x-z", 1e-12};
    for (int i = 0; i < 1000; ++i) {
        const Instance in = random_instance(rng);
        const BlochVec n = Plane::xz().embed({in.n_norm * std::cos(in.direction), in.n_norm * std::sin(in.direction)});
        const ConstZFrame frame = ConstZFrame::from({n.x, n.z, 0.0});
        for (Case c : {Case::A, Case::B}) {
            const DecompositionPair d = decompose(n, in.theta, in.eta0, in.eta1, c);
            round_trip.see(distance(in.eta0 * d.n0 + in.eta1 * d.n1, n));
            round_trip.see(std::abs(d.n0.norm() - 1.0));
            round_trip.see(std::abs(d.n1.norm() - 1.0));
            angle.see(std::abs(angle_between(d.n0, d.n1) - in.theta));
            const DecompositionPair z = decompose_constz(frame, in.theta, in.eta0, in.eta1, c);
            reduction.see(distance(z.n0, {d.n0.x, d.n0.z, 0.0}));
            reduction.see(distance(z.n1, {d.n1.x, d.n1.z, 0.0}));
        }
    }
    for (const Worst *w : {&round_trip, &angle, &reduction}) {
        rep.lines.push_back(w->line());
    }

    Worst collapse{"case ambiguity collapses at equal priors", 1e-12};
    for (int i = 0; i < 100; ++i) {
        const double theta = 0.05 + (kPi - 0.1) * rng.uniform();
        const double len = std::cos(theta / 2.0);
        const double dir = kTwoPi * rng.uniform();
        const BlochVec n{len * std::cos(dir), 0.0, len * std::sin(dir)};
        const DecompositionPair a = decompose(n, theta, 0.5, 0.5, Case::A);
        const DecompositionPair b = decompose(n, theta, 0.5, 0.5, Case::B);
        collapse.see(distance(a.n0, b.n1));
        collapse.see(distance(a.n1, b.n0));
    }
    rep.lines.push_back(collapse.line());

    Worst inversion{"noise-free alpha inversion on the branch grid", 1e-10};
    for (int k = 0; k < 100; ++k) {
        const double alpha = k * kTwoPi / 100.0;
        for (double beta : {0.2, 0.6, 1.0}) {
            for (double phi0 : {0.0, 0.3, 1.1}) {
                const double got = solve_alpha(delta_analytic(alpha, beta, phi0),
                                               delta_analytic(alpha, beta, phi0 + kPi / 4.0), phi0, 0.0);
                const double diff = std::remainder(got - alpha, kTwoPi);
                inversion.see(std::abs(diff));
            }
        }
    }
    rep.lines.push_back(inversion.line());

    const double r_max = std::sqrt(1.0 - 0.36);
    const double c = cos_theta_z(r_max, 0.6, 0.3, 0.7);
    rep.lines.push_back({"cos_theta_z is 1 for coincident states", std::abs(c - 1.0) <= 1e-12, ""});
    return rep;
}

}  // namespace povm
