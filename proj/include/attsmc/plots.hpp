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

#ifndef ATTSMC_PLOTS_HPP
#define ATTSMC_PLOTS_HPP

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "attsmc/telemetry.hpp"

namespace attsmc {

struct Series {
    std::string label;
    std::vector<double> y;
};

/// Standalone SVG line chart of three series over a shared time axis.
/// Axes auto-scale to the data extent.
std::string render_line_chart(const std::string& title, const std::string& y_label, const std::vector<double>& t,
                              const std::array<Series, 3>& series);

/// Writes xi.svg, omega.svg, sigma_db.svg, sigma_lb.svg, u_N.svg and u_eq.svg
/// into `out_dir` (created if missing). Returns the paths written.
std::vector<std::filesystem::path> emit_plots(const std::vector<TelemetryRecord>& records,
                                              const std::filesystem::path& out_dir);

}  // namespace attsmc

#endif  // ATTSMC_PLOTS_HPP
