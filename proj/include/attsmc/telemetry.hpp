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

#ifndef ATTSMC_TELEMETRY_HPP
#define ATTSMC_TELEMETRY_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "attsmc/scenario.hpp"
#include "attsmc/smc.hpp"

namespace attsmc {

/// One output sample decorated with the controller internals.
struct TelemetryRecord {
    double t = 0.0;
    Vec3 omega;
    Vec3 sigma_lb;
    Vec3 sigma_db;
    Vec3 xi;
    Vec3 u_eq;
    Vec3 u_n;
    Vec3 tau;
    double v = 0.0;
    double vdot = 0.0;
    std::optional<double> vbar;

    friend bool operator==(const TelemetryRecord&, const TelemetryRecord&) = default;
};

/// Builds the record for one state: tau, u_eq, u_N and xi from `law`, the
/// Lyapunov values from the gains.
TelemetryRecord make_record(const Scenario& s, double t, const BodyState& state,
                            const ControlLaw& law = sliding_mode_law());

/// Integrates the closed loop over [0, t_final]. Propagates IntegrationError.
std::vector<TelemetryRecord> run_simulation(const Scenario& s, const ControlLaw& law = sliding_mode_law());

inline constexpr std::string_view kCsvHeader =
    "t,omega1,omega2,omega3,sigma_lb1,sigma_lb2,sigma_lb3,sigma_db1,sigma_db2,sigma_db3,"
    "xi1,xi2,xi3,u_eq1,u_eq2,u_eq3,u_N1,u_N2,u_N3,tau1,tau2,tau3,V,Vdot,Vbar";

/// Writes the header and one line per record. Numbers use the shortest
/// representation that round-trips; Vbar is left empty when undefined.
void write_csv(const std::vector<TelemetryRecord>& records, std::ostream& out);
void write_csv(const std::vector<TelemetryRecord>& records, const std::filesystem::path& path);

/// Inverse of write_csv. Throws std::runtime_error on a malformed file.
std::vector<TelemetryRecord> read_csv(std::istream& in);
std::vector<TelemetryRecord> read_csv(const std::filesystem::path& path);

}  // namespace attsmc

#endif  // ATTSMC_TELEMETRY_HPP
