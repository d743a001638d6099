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

#ifndef ATTSMC_MATHCORE_HPP
#define ATTSMC_MATHCORE_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace attsmc {

// Fixed-dimension linear algebra for R^3. Everything in the controller and
// the rigid-body model lives in three dimensions, so there is no general
// N-dimensional machinery here.

struct Vec3 {
    std::array<double, 3> v{0.0, 0.0, 0.0};

    constexpr Vec3() = default;
    constexpr Vec3(double x1, double x2, double x3) : v{x1, x2, x3} {}

    constexpr double& operator[](std::size_t i) { return v[i]; }
    constexpr double operator[](std::size_t i) const { return v[i]; }

    constexpr Vec3& operator+=(const Vec3& o) {
        for (std::size_t i = 0; i < 3; ++i) v[i] += o.v[i];
        return *this;
    }
    constexpr Vec3& operator-=(const Vec3& o) {
        for (std::size_t i = 0; i < 3; ++i) v[i] -= o.v[i];
        return *this;
    }
    constexpr Vec3& operator*=(double s) {
        for (auto& x : v) x *= s;
        return *this;
    }

    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
constexpr Vec3 operator-(Vec3 a) { return a *= -1.0; }
constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }

constexpr double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline bool is_finite(const Vec3& a) {
    return std::isfinite(a[0]) && std::isfinite(a[1]) && std::isfinite(a[2]);
}

/// Row-major 3x3 matrix.
struct Mat3 {
    std::array<double, 9> m{};

    constexpr Mat3() = default;
    constexpr explicit Mat3(const std::array<double, 9>& entries) : m(entries) {}
    constexpr Mat3(double a00, double a01, double a02,
                   double a10, double a11, double a12,
                   double a20, double a21, double a22)
        : m{a00, a01, a02, a10, a11, a12, a20, a21, a22} {}

    static constexpr Mat3 identity() { return diag(1.0, 1.0, 1.0); }
    static constexpr Mat3 diag(double d0, double d1, double d2) {
        return {d0, 0.0, 0.0, 0.0, d1, 0.0, 0.0, 0.0, d2};
    }
    static constexpr Mat3 scaled_identity(double s) { return diag(s, s, s); }

    constexpr double& operator()(std::size_t r, std::size_t c) { return m[3 * r + c]; }
    constexpr double operator()(std::size_t r, std::size_t c) const { return m[3 * r + c]; }

    constexpr Vec3 row(std::size_t r) const { return {m[3 * r], m[3 * r + 1], m[3 * r + 2]}; }

    constexpr Mat3& operator+=(const Mat3& o) {
        for (std::size_t i = 0; i < 9; ++i) m[i] += o.m[i];
        return *this;
    }
    constexpr Mat3& operator-=(const Mat3& o) {
        for (std::size_t i = 0; i < 9; ++i) m[i] -= o.m[i];
        return *this;
    }
    constexpr Mat3& operator*=(double s) {
        for (auto& x : m) x *= s;
        return *this;
    }

    friend constexpr bool operator==(const Mat3&, const Mat3&) = default;
};

constexpr Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
constexpr Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
constexpr Mat3 operator*(double s, Mat3 a) { return a *= s; }
constexpr Mat3 operator*(Mat3 a, double s) { return a *= s; }

constexpr Vec3 operator*(const Mat3& a, const Vec3& x) {
    return {dot(a.row(0), x), dot(a.row(1), x), dot(a.row(2), x)};
}

constexpr Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
    return out;
}

/// Row vector times matrix, i.e. (x^T A)^T.
constexpr Vec3 left_multiply(const Vec3& x, const Mat3& a) {
    return {x[0] * a(0, 0) + x[1] * a(1, 0) + x[2] * a(2, 0),
            x[0] * a(0, 1) + x[1] * a(1, 1) + x[2] * a(2, 1),
            x[0] * a(0, 2) + x[1] * a(1, 2) + x[2] * a(2, 2)};
}

constexpr Mat3 transpose(const Mat3& a) {
    return {a(0, 0), a(1, 0), a(2, 0),
            a(0, 1), a(1, 1), a(2, 1),
            a(0, 2), a(1, 2), a(2, 2)};
}

constexpr Mat3 outer(const Vec3& a, const Vec3& b) {
    return {a[0] * b[0], a[0] * b[1], a[0] * b[2],
            a[1] * b[0], a[1] * b[1], a[1] * b[2],
            a[2] * b[0], a[2] * b[1], a[2] * b[2]};
}

/// Cross-product matrix: skew(v) * w == cross(v, w).
constexpr Mat3 skew(const Vec3& v) {
    return {0.0, -v[2], v[1],
            v[2], 0.0, -v[0],
            -v[1], v[0], 0.0};
}

constexpr double determinant(const Mat3& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

/// Largest absolute entry.
double max_abs(const Mat3& a);

bool is_finite(const Mat3& a);

/// Relative threshold on |det A| / max_abs(A)^3 below which solve3 refuses
/// to solve.
inline constexpr double kSingularityTolerance = 1e-12;

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Solves A x = b by LU factorization with partial pivoting followed by one
 * step of iterative refinement.
 *
 * Throws SingularMatrixError when |det A| < kSingularityTolerance * max_abs(A)^3
 * (including A == 0). For the inertia tensor this means a misconfigured body.
 */
Vec3 solve3(const Mat3& a, const Vec3& b);

/// True iff A is symmetric within `tol` (max-norm) and all leading
/// principal minors are positive.
bool is_symmetric_positive_definite(const Mat3& a, double tol);

}  // namespace attsmc

#endif  // ATTSMC_MATHCORE_HPP
