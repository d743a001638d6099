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

#ifndef ATTSMC_ATTITUDE_HPP
#define ATTSMC_ATTITUDE_HPP

#include "attsmc/mathcore.hpp"

namespace attsmc {

// Frames: F_l is the inertial frame, F_b the body frame and F_d the desired
// frame. sigma_lb is the body attitude relative to F_l, sigma_ld the (constant)
// desired attitude, and sigma_db the attitude error. omega is the body rate
// relative to F_l, resolved in F_b.

/// Tolerance used when validating inertia and gain matrices.
inline constexpr double kMatrixValidationTolerance = 1e-9;

/// Symmetric positive-definite body inertia about the center of mass (kg m^2).
class InertiaTensor {
public:
    /// Throws std::invalid_argument if `j` is not finite, symmetric and
    /// positive definite.
    explicit InertiaTensor(const Mat3& j);

    const Mat3& matrix() const { return j_; }

    Vec3 operator*(const Vec3& x) const { return j_ * x; }

private:
    Mat3 j_;
};

/// The integrated ODE state: body rate (rad/s) and inertial MRP attitude.
struct BodyState {
    Vec3 omega;
    Vec3 sigma_lb;

    friend bool operator==(const BodyState&, const BodyState&) = default;
};

/// G(sigma) = 1/2 (((1 - sigma^T sigma) / 2) I - [sigma]x + sigma sigma^T).
Mat3 mrp_g_matrix(const Vec3& sigma);

/// MRP rate sigma_dot = G(sigma) omega. With a zero desired rate the error
/// kinematics are driven by the body rate directly.
Vec3 mrp_rate(const Vec3& sigma_db, const Vec3& omega);

/// Euler's equation solved for omega_dot: J^-1 (-omega x J omega + tau).
Vec3 body_accel(const InertiaTensor& j, const Vec3& omega, const Vec3& tau);

/**
 * Attitude error sigma_db = sigma_lb - sigma_ld.
 *
 * This is a plain componentwise difference, not the multiplicative MRP
 * composition. The two agree to first order near the target only. No
 * shadow-set switching is applied anywhere in the library.
 */
Vec3 attitude_error(const Vec3& sigma_lb, const Vec3& sigma_ld);

/// || sigma^T G(sigma) - 1/4 (1 + sigma^T sigma) sigma^T ||, zero in exact
/// arithmetic for every sigma.
double mrp_identity_residual(const Vec3& sigma);

}  // namespace attsmc

#endif  // ATTSMC_ATTITUDE_HPP
