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

#include "attsmc/attitude.hpp"

#include <stdexcept>

namespace attsmc {

InertiaTensor::InertiaTensor(const Mat3& j) : j_(j) {
    if (!is_finite(j)) throw std::invalid_argument("inertia has non-finite entries");
    if (!is_symmetric_positive_definite(j, kMatrixValidationTolerance))
        throw std::invalid_argument("inertia is not symmetric positive definite");
}

Mat3 mrp_g_matrix(const Vec3& sigma) {
    const double s2 = dot(sigma, sigma);
    return 0.5 * (Mat3::scaled_identity(0.5 * (1.0 - s2)) - skew(sigma) + outer(sigma, sigma));
}

Vec3 mrp_rate(const Vec3& sigma_db, const Vec3& omega) {
    return mrp_g_matrix(sigma_db) * omega;
}

Vec3 body_accel(const InertiaTensor& j, const Vec3& omega, const Vec3& tau) {
    return solve3(j.matrix(), tau - cross(omega, j * omega));
}

Vec3 attitude_error(const Vec3& sigma_lb, const Vec3& sigma_ld) {
    return sigma_lb - sigma_ld;
}

double mrp_identity_residual(const Vec3& sigma) {
    const Vec3 lhs = left_multiply(sigma, mrp_g_matrix(sigma));
    const Vec3 rhs = 0.25 * (1.0 + dot(sigma, sigma)) * sigma;
    return norm(lhs - rhs);
}

}  // namespace attsmc
