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

#include "attsmc/smc.hpp"

#include <cmath>
#include <stdexcept>

namespace attsmc {

SmcGains::SmcGains(double k1, double k2, const Mat3& l) : k1_(k1), k2_(k2), l_(l) {
    if (!std::isfinite(k1) || !std::isfinite(k2)) throw std::invalid_argument("k1 and k2 must be finite");
    if (k1 == 0.0 || k2 == 0.0) throw std::invalid_argument("k1 and k2 must both be nonzero");
    if (!(k1 * k2 > 0.0)) throw std::invalid_argument("k1*k2 must be positive");
    if (!is_symmetric_positive_definite(l, kMatrixValidationTolerance))
        throw std::invalid_argument("L is not positive definite");
}

std::optional<double> SmcGains::scalar_l() const {
    return scalar_multiple_of_identity(l_, kMatrixValidationTolerance);
}

std::optional<double> scalar_multiple_of_identity(const Mat3& l, double tol) {
    const double lambda = l(0, 0);
    if (!(lambda > 0.0)) return std::nullopt;
    if (max_abs(l - Mat3::scaled_identity(lambda)) > tol) return std::nullopt;
    return lambda;
}

Vec3 sliding_variable(const SmcGains& g, const Vec3& omega, const Vec3& sigma_db) {
    return g.k1() * omega + g.k2() * sigma_db;
}

Vec3 equivalent_control(const InertiaTensor& j, const SmcGains& g, const Vec3& omega,
                        const Vec3& sigma_db) {
    const Vec3 gyro = cross(omega, j * omega);
    return gyro - (g.k2() / g.k1()) * (j * (mrp_g_matrix(sigma_db) * omega));
}

Vec3 reaching_control(const InertiaTensor& j, const SmcGains& g, const Vec3& xi) {
    return -(1.0 / g.k1()) * (j * (g.l() * xi));
}

TorqueBreakdown total_torque(const InertiaTensor& j, const SmcGains& g, const Vec3& omega,
                             const Vec3& sigma_db) {
    TorqueBreakdown out;
    out.xi = sliding_variable(g, omega, sigma_db);
    out.u_eq = equivalent_control(j, g, omega, sigma_db);
    out.u_n = reaching_control(j, g, out.xi);
    out.tau = out.u_eq + out.u_n;
    return out;
}

ControlLaw sliding_mode_law() { return &total_torque; }

LyapunovSample lyapunov_sample(const SmcGains& g, const Vec3& xi, const Vec3& sigma_db) {
    LyapunovSample s;
    s.v = 0.5 * dot(xi, xi);
    s.vdot_analytic = -dot(xi, g.l() * xi);
    if (const auto lambda = g.scalar_l()) {
        const double kbar = 2.0 * g.k1() * g.k2() * *lambda;
        s.kbar = kbar;
        s.vbar = s.v + 2.0 * kbar * std::log1p(dot(sigma_db, sigma_db));
    }
    return s;
}

}  // namespace attsmc
