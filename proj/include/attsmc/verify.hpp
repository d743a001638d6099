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

#ifndef ATTSMC_VERIFY_HPP
#define ATTSMC_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "attsmc/scenario.hpp"
#include "attsmc/smc.hpp"
#include "attsmc/telemetry.hpp"

namespace attsmc {

enum class CheckStatus { Pass, Fail, Skip };

const char* to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Skip;
    double worst = 0.0;      ///< worst measured residual / violation
    double threshold = 0.0;  ///< pass bound on `worst`
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    /// True when no check failed (skipped checks do not count against it).
    bool passed() const;
    const CheckResult* find(const std::string& name) const;
};

// Thresholds of the individual checks.
inline constexpr double kMrpIdentityTol = 1e-12;
inline constexpr double kClosedLoopAlgebraTol = 1e-10;
inline constexpr double kXiDecayRelTol = 1e-6;
inline constexpr double kVbarIncreaseTol = 1e-9;
inline constexpr double kVdotRelTol = 1e-3;
inline constexpr double kConservationRelTol = 1e-8;
inline constexpr double kConservationHorizon = 100.0;
inline constexpr double kRecordRelTol = 1e-15;
inline constexpr int kIdentitySamples = 1000;
inline constexpr int kAlgebraSamples = 100;

// Individual checks, usable on their own. Trajectory checks take the
// telemetry of one closed-loop run.

/// sigma^T G(sigma) identity on `n` seeded uniform samples in [-2, 2]^3.
CheckResult check_mrp_identity(std::uint64_t seed, int n = kIdentitySamples);

/// xi_dot computed from the closed-loop field (k1 omega_dot + k2 sigma_dot)
/// against -L xi at `n` seeded random states.
CheckResult check_closed_loop_algebra(const Scenario& s, const ControlLaw& law, std::uint64_t seed,
                                      int n = kAlgebraSamples);

/// | ||xi(t)|| - ||xi(0)|| exp(-lambda t) | / ||xi(0)|| at every sample.
/// Skipped unless L = lambda I.
CheckResult check_xi_decay(const Scenario& s, const std::vector<TelemetryRecord>& records);

/// V strictly decreasing between samples while xi != 0.
CheckResult check_v_decreasing(const std::vector<TelemetryRecord>& records);

/// Finite-difference slope of V against the trapezoid average of -xi^T L xi.
CheckResult check_vdot_consistency(const std::vector<TelemetryRecord>& records);

/// Largest per-sample increase of Vbar. Skipped unless L = lambda I.
CheckResult check_vbar_monotonic(const Scenario& s, const std::vector<TelemetryRecord>& records);

/// tau == u_eq + u_N and xi == k1 omega + k2 sigma_db in every record.
CheckResult check_record_consistency(const Scenario& s, const std::vector<TelemetryRecord>& records);

/// Torque-free run of `horizon` seconds: relative drift of 1/2 omega^T J omega
/// and ||J omega||.
CheckResult check_zero_torque_conservation(const Scenario& s, double horizon = kConservationHorizon);

/// Final ||sigma_db|| and ||omega|| under the scenario thresholds.
CheckResult check_final_convergence(const Scenario& s, const std::vector<TelemetryRecord>& records);

struct VerifyOptions {
    ControlLaw law = sliding_mode_law();
    std::uint64_t seed = 20210501;
};

/// Runs the closed loop once and every check above. Simulation failures are
/// reported as failed entries, never thrown.
VerificationReport verify(const Scenario& s, const VerifyOptions& opts = {});

void print_report(const VerificationReport& report, std::ostream& out);

}  // namespace attsmc

#endif  // ATTSMC_VERIFY_HPP
