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

#ifndef ATTSMC_SCENARIO_HPP
#define ATTSMC_SCENARIO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "attsmc/attitude.hpp"
#include "attsmc/odeint.hpp"
#include "attsmc/smc.hpp"

namespace attsmc {

/// Thresholds on ||sigma_db|| and ||omega|| that count as "at the target".
struct ConvergenceThresholds {
    double sigma_db = 1e-3;
    double omega = 1e-3;
};

/// One closed-loop simulation setup.
struct Scenario {
    InertiaTensor inertia;
    SmcGains gains;
    Vec3 omega0;
    Vec3 sigma_lb0;
    Vec3 sigma_ld;
    double t_final = 300.0;
    double sample_dt = 0.1;
    IntegratorConfig integrator;
    ConvergenceThresholds convergence;
};

/**
 * The bundled reference case: inertia
 *   [1.49 0.054 0.0442; 0.054 1.51 0; 0.0442 0 1.56] kg m^2,
 * k1 = k2 = 0.04, L = 0.04 I, omega(0) = (0, -0.1, 0) rad/s,
 * sigma_lb(0) = 0, sigma_ld = (0.3333, -0.3333, -0.3333), 300 s horizon
 * sampled every 0.1 s with the default integrator settings.
 */
Scenario reference_scenario();

class ScenarioError : public std::runtime_error {
public:
    enum class Kind { Io, Parse, Validation };

    ScenarioError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/**
 * Parses a scenario from JSON text.
 *
 * Keys: inertia (9 numbers, row-major), k1, k2, L (a positive number lambda
 * meaning lambda I, or 9 numbers row-major), omega0, sigma_lb0, sigma_ld
 * (3 numbers each), t_final, sample_dt, and optionally "integrator" (any of
 * rel_tol, abs_tol, h_init, h_min, h_max, max_steps) and "convergence"
 * (sigma_db, omega). Unknown keys are rejected. Error messages start with the
 * offending field name.
 */
Scenario parse_scenario(std::string_view json_text);

/// Reads and parses a scenario file.
Scenario load_scenario(const std::filesystem::path& path);

/// Serializes a scenario in the format parse_scenario accepts.
std::string scenario_to_json(const Scenario& s);

}  // namespace attsmc

#endif  // ATTSMC_SCENARIO_HPP
