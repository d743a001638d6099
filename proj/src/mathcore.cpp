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

#include "attsmc/mathcore.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace attsmc {

double max_abs(const Mat3& a) {
    double out = 0.0;
    for (double x : a.m) out = std::max(out, std::abs(x));
    return out;
}

bool is_finite(const Mat3& a) {
    return std::all_of(a.m.begin(), a.m.end(), [](double x) { return std::isfinite(x); });
}

namespace {

struct Lu {
    Mat3 lu;
    std::array<std::size_t, 3> perm{0, 1, 2};
};

// Doolittle LU with row pivoting; L has a unit diagonal and is stored below it.
Lu factor(const Mat3& a) {
    Lu f{a, {0, 1, 2}};
    auto& m = f.lu;
    for (std::size_t k = 0; k < 3; ++k) {
        std::size_t p = k;
        for (std::size_t r = k + 1; r < 3; ++r)
            if (std::abs(m(r, k)) > std::abs(m(p, k))) p = r;
        if (p != k) {
            for (std::size_t c = 0; c < 3; ++c) std::swap(m(k, c), m(p, c));
            std::swap(f.perm[k], f.perm[p]);
        }
        for (std::size_t r = k + 1; r < 3; ++r) {
            m(r, k) /= m(k, k);
            for (std::size_t c = k + 1; c < 3; ++c) m(r, c) -= m(r, k) * m(k, c);
        }
    }
    return f;
}

Vec3 substitute(const Lu& f, const Vec3& b) {
    const auto& m = f.lu;
    Vec3 y{b[f.perm[0]], b[f.perm[1]], b[f.perm[2]]};
    for (std::size_t r = 1; r < 3; ++r)
        for (std::size_t c = 0; c < r; ++c) y[r] -= m(r, c) * y[c];
    for (std::size_t r = 3; r-- > 0;) {
        for (std::size_t c = r + 1; c < 3; ++c) y[r] -= m(r, c) * y[c];
        y[r] /= m(r, r);
    }
    return y;
}

}  // namespace

Vec3 solve3(const Mat3& a, const Vec3& b) {
    const double scale = max_abs(a);
    const double det = determinant(a);
    if (!(scale > 0.0) || !(std::abs(det) >= kSingularityTolerance * scale * scale * scale)) {
        throw SingularMatrixError("solve3: matrix is singular (|det| = " + std::to_string(std::abs(det)) +
                                  ", scale = " + std::to_string(scale) + ")");
    }
    const Lu f = factor(a);
    Vec3 x = substitute(f, b);
    x += substitute(f, b - a * x);
    return x;
}

bool is_symmetric_positive_definite(const Mat3& a, double tol) {
    if (!is_finite(a)) return false;
    if (max_abs(a - transpose(a)) > tol) return false;
    const double m1 = a(0, 0);
    const double m2 = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    return m1 > 0.0 && m2 > 0.0 && determinant(a) > 0.0;
}

}  // namespace attsmc
