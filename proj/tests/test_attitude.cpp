/*
 Copyright 2026 The attsmc Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include <cmath>
#include <random>
#include <stdexcept>

#include "attsmc/attitude.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace attsmc;

namespace {

Vec3 to_vec(const oracle::V3& v) { return {v[0], v[1], v[2]}; }

InertiaTensor reference_inertia() {
    const auto& j = oracle::kReferenceInertia;
    return InertiaTensor(Mat3{j[0][0], j[0][1], j[0][2], j[1][0], j[1][1], j[1][2], j[2][0], j[2][1], j[2][2]});
}

}  // namespace

TEST_SUITE("attitude") {

TEST_CASE("inertia validation") {
    CHECK_NOTHROW(reference_inertia());
    CHECK_THROWS_AS(InertiaTensor(Mat3::diag(1, -1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(InertiaTensor(Mat3{1, 0.1, 0, 0, 1, 0, 0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(InertiaTensor(Mat3::diag(1, NAN, 1)), std::invalid_argument);
}

TEST_CASE("G matrix at the origin and on the unit sphere") {
    CHECK(mrp_g_matrix(Vec3{}) == Mat3::scaled_identity(0.25));
    CHECK(mrp_g_matrix(Vec3{1, 0, 0}) == 0.5 * Mat3{1, 0, 0, 0, 0, 1, 0, -1, 0});
}

TEST_CASE("G matrix matches the element-wise oracle") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto s = oracle::uniform3(rng, -2, 2);
        const Mat3 got = mrp_g_matrix(to_vec(s));
        const auto want = oracle::g_matrix(s);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) CHECK(std::abs(got(r, c) - want[r][c]) < 1e-14);
    }
}

TEST_CASE("G satisfies the MRP identity at (0.5, 0.5, 0.5)") {
    const Vec3 s{0.5, 0.5, 0.5};
    const Vec3 lhs = left_multiply(s, mrp_g_matrix(s));
    for (std::size_t i = 0; i < 3; ++i) CHECK(lhs[i] == doctest::Approx(0.21875).epsilon(1e-15));
}

TEST_CASE("mrp_rate examples") {
    CHECK(mrp_rate(Vec3{0.3, -1.0, 2.0}, Vec3{}) == Vec3{});
    CHECK(mrp_rate(Vec3{}, Vec3{4, 8, 12}) == Vec3{1, 2, 3});
    CHECK(mrp_rate(Vec3{1, 0, 0}, Vec3{0, 0, 2}) == Vec3{0, 1, 0});

    const Vec3 sigma_db{-0.3333, 0.3333, 0.3333};
    const Vec3 rate = mrp_rate(sigma_db, Vec3{0, -0.1, 0});
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(rate[i] - oracle::kSigmaRate0[i]) < 1e-16);
}

TEST_CASE("body_accel examples") {
    const InertiaTensor j = reference_inertia();
    CHECK(body_accel(j, Vec3{}, Vec3{}) == Vec3{});
    CHECK(body_accel(InertiaTensor(Mat3::identity()), Vec3{0.3, -2, 7}, Vec3{}) == Vec3{});

    const Vec3 got = body_accel(j, Vec3{0, -0.1, 0}, Vec3{});
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(got[i] - oracle::kTorqueFreeAccel0[i]) < 1e-18);
}

TEST_CASE("attitude error is the componentwise difference") {
    const Vec3 a{0.3, -0.2, 0.1};
    CHECK(attitude_error(a, a) == Vec3{});
    CHECK(attitude_error(Vec3{}, Vec3{0.3333, -0.3333, -0.3333}) == Vec3{-0.3333, 0.3333, 0.3333});
    CHECK(attitude_error(Vec3{0.1, 0.2, 0.3}, Vec3{}) == Vec3{0.1, 0.2, 0.3});
}

TEST_CASE("MRP identity residual") {
    CHECK(mrp_identity_residual(Vec3{}) == 0.0);
    CHECK(mrp_identity_residual(Vec3{1, 0, 0}) == 0.0);

    std::mt19937_64 rng(1000);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) worst = std::max(worst, mrp_identity_residual(to_vec(oracle::uniform3(rng, -2, 2))));
    CHECK(worst < 1e-12);
}

TEST_CASE("property: mrp_rate is linear in omega") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int i = 0; i < 300; ++i) {
        const Vec3 s = to_vec(oracle::uniform3(rng, -2, 2));
        const Vec3 w1 = to_vec(oracle::uniform3(rng, -1, 1));
        const Vec3 w2 = to_vec(oracle::uniform3(rng, -1, 1));
        const double a = u(rng), b = u(rng);
        const Vec3 lhs = mrp_rate(s, a * w1 + b * w2);
        const Vec3 rhs = a * mrp_rate(s, w1) + b * mrp_rate(s, w2);
        CHECK(norm(lhs - rhs) < 1e-14 * (1.0 + dot(s, s)) * 10.0);
    }
}

TEST_CASE("property: body_accel satisfies Euler's equation") {
    std::mt19937_64 rng(9);
    const InertiaTensor j = reference_inertia();
    const double jscale = max_abs(j.matrix());
    for (int i = 0; i < 300; ++i) {
        const Vec3 w = to_vec(oracle::uniform3(rng, -3, 3));
        const Vec3 tau = to_vec(oracle::uniform3(rng, -5, 5));
        const Vec3 r = j * body_accel(j, w, tau) + cross(w, j * w) - tau;
        CHECK(norm(r) < 1e-12 * std::max(1.0, norm(tau) + dot(w, w) * jscale));
    }
}

}
