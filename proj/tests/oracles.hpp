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

// Test-only reference computations. These are written out in scalar form and
// must not call into the library, so they stay independent of the code they
// check.

#ifndef ATTSMC_TESTS_ORACLES_HPP
#define ATTSMC_TESTS_ORACLES_HPP

#include <array>
#include <random>

namespace oracle {

using V3 = std::array<double, 3>;
using M3 = std::array<std::array<double, 3>, 3>;

inline constexpr M3 kReferenceInertia{{{1.49, 0.054, 0.0442}, {0.054, 1.51, 0.0}, {0.0442, 0.0, 1.56}}};

inline V3 matvec(const M3& m, const V3& v) {
    return {m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]};
}

inline V3 crossp(const V3& a, const V3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double det(const M3& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

/// Cramer's rule.
inline V3 cramer(const M3& a, const V3& b) {
    const double d = det(a);
    V3 x{};
    for (int c = 0; c < 3; ++c) {
        M3 m = a;
        for (int r = 0; r < 3; ++r) m[r][c] = b[r];
        x[c] = det(m) / d;
    }
    return x;
}

/// G(sigma), element by element.
inline M3 g_matrix(const V3& s) {
    const double s2 = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
    const double d = 0.25 * (1.0 - s2);
    return {{{d + 0.5 * s[0] * s[0], 0.5 * (s[2] + s[0] * s[1]), 0.5 * (-s[1] + s[0] * s[2])},
             {0.5 * (-s[2] + s[1] * s[0]), d + 0.5 * s[1] * s[1], 0.5 * (s[0] + s[1] * s[2])},
             {0.5 * (s[1] + s[2] * s[0]), 0.5 * (-s[0] + s[2] * s[1]), d + 0.5 * s[2] * s[2]}}};
}

// Reference-case values from tests/oracles/derive_values.py (exact rational
// arithmetic, rounded once to double).
inline constexpr V3 kXi0{-0.013332, 0.009332, 0.013332};
inline constexpr V3 kGyro0{0.0, 0.0, -0.00054};
inline constexpr V3 kTorqueFreeAccel0{-1.0290442418247406e-05, 3.6800257654659596e-07, 0.00034644540868902985};
inline constexpr V3 kUeq0{0.0187368571404, 0.034156364399499997, 0.034613419973100003};
inline constexpr V3 kUn0{0.018771477599999999, -0.013371391999999999, -0.020208645599999998};
inline constexpr V3 kTau0{0.037508334740400003, 0.020784972399500001, 0.014404774373099999};
inline constexpr V3 kSigmaRate0{-0.011110555500000001, -0.022222777749999999, -0.022219444500000001};
inline constexpr double kKbar = 1.28e-4;

inline V3 uniform3(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    const double a = u(rng);
    const double b = u(rng);
    return {a, b, u(rng)};
}

}  // namespace oracle

#endif  // ATTSMC_TESTS_ORACLES_HPP
