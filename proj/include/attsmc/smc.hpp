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

#ifndef ATTSMC_SMC_HPP
#define ATTSMC_SMC_HPP

#include <functional>
#include <optional>

#include "attsmc/attitude.hpp"
#include "attsmc/mathcore.hpp"

namespace attsmc {

/**
 * Gains of the linear continuous sliding-mode law.
 *
 * The sliding surface is xi = k1 omega + k2 sigma_db and the reaching law
 * drives xi_dot = -L xi. Requires k1 != 0, k2 != 0, k1 k2 > 0 and L symmetric
 * positive definite. Both-negative gains are accepted; the law only depends on
 * k2 / k1 and L xi / k1, so they behave exactly like their positive mirror.
 */
class SmcGains {
public:
    /// Throws std::invalid_argument naming the violated condition.
    SmcGains(double k1, double k2, const Mat3& l);

    double k1() const { return k1_; }
    double k2() const { return k2_; }
    const Mat3& l() const { return l_; }

    /// lambda if L == lambda I (within kMatrixValidationTolerance), else empty.
    std::optional<double> scalar_l() const;

private:
    double k1_;
    double k2_;
    Mat3 l_;
};

/// Returns lambda when `l` equals lambda I within `tol` and lambda > 0.
std::optional<double> scalar_multiple_of_identity(const Mat3& l, double tol);

Vec3 sliding_variable(const SmcGains& g, const Vec3& omega, const Vec3& sigma_db);

/// u_eq = omega x J omega - (k2 / k1) J G(sigma_db) omega, evaluated at every
/// state rather than only on the surface.
Vec3 equivalent_control(const InertiaTensor& j, const SmcGains& g, const Vec3& omega,
                        const Vec3& sigma_db);

/// u_N = -(1 / k1) J L xi.
Vec3 reaching_control(const InertiaTensor& j, const SmcGains& g, const Vec3& xi);

struct TorqueBreakdown {
    Vec3 tau;
    Vec3 u_eq;
    Vec3 u_n;
    Vec3 xi;
};

/// tau = u_eq + u_N, with the intermediate terms kept for telemetry.
TorqueBreakdown total_torque(const InertiaTensor& j, const SmcGains& g, const Vec3& omega,
                             const Vec3& sigma_db);

/// Any state-feedback torque law with the same signature as total_torque.
/// Used to run the closed loop against deliberately broken controllers.
using ControlLaw = std::function<TorqueBreakdown(const InertiaTensor&, const SmcGains&,
                                                 const Vec3& omega, const Vec3& sigma_db)>;

ControlLaw sliding_mode_law();

struct LyapunovSample {
    double v = 0.0;              ///< 1/2 xi^T xi
    double vdot_analytic = 0.0;  ///< -xi^T L xi
    /// 1/2 xi^T xi + 2 kbar ln(1 + sigma^T sigma); only for L = lambda I.
    std::optional<double> vbar;
    /// 2 k1 k2 lambda, the constant that cancels the omega^T sigma cross term.
    std::optional<double> kbar;
};

LyapunovSample lyapunov_sample(const SmcGains& g, const Vec3& xi, const Vec3& sigma_db);

}  // namespace attsmc

#endif  // ATTSMC_SMC_HPP
