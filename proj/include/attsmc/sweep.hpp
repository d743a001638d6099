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

#ifndef ATTSMC_SWEEP_HPP
#define ATTSMC_SWEEP_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "attsmc/scenario.hpp"
#include "attsmc/telemetry.hpp"

namespace attsmc {

struct SweepOptions {
    int samples = 1;
    std::uint64_t seed = 0;
    double omega_range = 0.0;  ///< rad/s, half-width of the box around omega0
    double sigma_range = 0.0;  ///< half-width of the box around sigma_lb0
    int threads = 0;           ///< 0 picks the hardware concurrency
};

struct SweepRow {
    int run = 0;
    Vec3 omega0;
    Vec3 sigma_lb0;
    bool converged = false;
    /// First sample time after which both thresholds hold until t_final.
    std::optional<double> settling_time;
    double max_tau = 0.0;
    double final_sigma_db = 0.0;
    double final_omega = 0.0;
    std::string error;  ///< integrator failure message, empty on success

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Settling time of a trajectory under the given thresholds, or empty if the
/// final sample is still outside them.
std::optional<double> settling_time(const std::vector<TelemetryRecord>& records, const ConvergenceThresholds& c);

/// Draws the initial conditions of every run, in run order: omega0 + U[-r, r]^3
/// and sigma_lb0 + U[-r, r]^3 from a mt19937_64 seeded with `opts.seed`.
std::vector<BodyState> sweep_initial_conditions(const Scenario& s, const SweepOptions& opts);

/**
 * Runs one closed-loop simulation per initial condition. Runs may execute
 * concurrently; rows come back in run order and are identical for identical
 * inputs. Integrator failures are recorded in the row instead of thrown.
 */
std::vector<SweepRow> sweep(const Scenario& s, const SweepOptions& opts);

inline constexpr const char* kSweepCsvHeader =
    "run,omega0_1,omega0_2,omega0_3,sigma_lb0_1,sigma_lb0_2,sigma_lb0_3,converged,settling_time,max_tau,"
    "final_sigma_db,final_omega,error";

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);
void write_sweep_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);

}  // namespace attsmc

#endif  // ATTSMC_SWEEP_HPP
