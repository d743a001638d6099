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

// Command-line front end: simulate, verify and sweep.

#include <chrono>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "attsmc/plots.hpp"
#include "attsmc/scenario.hpp"
#include "attsmc/sweep.hpp"
#include "attsmc/telemetry.hpp"
#include "attsmc/verify.hpp"

namespace {

std::filesystem::path output_path(const std::string& out) {
    const std::filesystem::path p(out);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    return p;
}

int run_simulate(const std::string& config, const std::string& out, const std::string& plots) {
    const auto scenario = attsmc::load_scenario(config);
    const auto start = std::chrono::steady_clock::now();
    const auto records = attsmc::run_simulation(scenario);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    attsmc::write_csv(records, output_path(out));
    if (!plots.empty()) attsmc::emit_plots(records, plots);

    const auto& last = records.back();
    std::printf("%zu samples over %.6g s in %.3f s\n", records.size(), last.t, elapsed);
    std::printf("final |sigma_db| = %.3e  |omega| = %.3e  |xi| = %.3e\n", attsmc::norm(last.sigma_db),
                attsmc::norm(last.omega), attsmc::norm(last.xi));
    std::printf("final sigma_lb = (%.6f, %.6f, %.6f)\n", last.sigma_lb[0], last.sigma_lb[1], last.sigma_lb[2]);
    return 0;
}

int run_verify(const std::string& config) {
    const auto scenario = attsmc::load_scenario(config);
    const auto report = attsmc::verify(scenario);
    attsmc::print_report(report, std::cout);
    return report.passed() ? 0 : 1;
}

int run_sweep(const std::string& config, const attsmc::SweepOptions& opts, const std::string& out) {
    const auto scenario = attsmc::load_scenario(config);
    const auto rows = attsmc::sweep(scenario, opts);
    attsmc::write_sweep_csv(rows, output_path(out));
    int converged = 0;
    double worst_settle = 0.0;
    for (const auto& r : rows) {
        if (r.converged) {
            ++converged;
            worst_settle = std::max(worst_settle, *r.settling_time);
        }
    }
    std::printf("%d/%zu runs converged; slowest settling time %.1f s\n", converged, rows.size(), worst_settle);
    return converged == static_cast<int>(rows.size()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sliding-mode attitude control simulator"};
    app.require_subcommand(1);

    std::string config;
    std::string out;
    std::string plots;

    auto* simulate = app.add_subcommand("simulate", "Run the closed loop and write telemetry CSV");
    simulate->add_option("--config", config, "Scenario JSON file")->required()->check(CLI::ExistingFile);
    simulate->add_option("--out", out, "Telemetry CSV output path")->required();
    simulate->add_option("--plots", plots, "Directory for SVG plots");

    auto* verify = app.add_subcommand("verify", "Run the stability invariant checks (exit 1 on failure)");
    verify->add_option("--config", config, "Scenario JSON file")->required()->check(CLI::ExistingFile);

    attsmc::SweepOptions sweep_opts;
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over initial conditions");
    sweep->add_option("--config", config, "Scenario JSON file")->required()->check(CLI::ExistingFile);
    sweep->add_option("--samples", sweep_opts.samples, "Number of runs")->required()->check(CLI::PositiveNumber);
    sweep->add_option("--seed", sweep_opts.seed, "Generator seed")->required();
    sweep->add_option("--omega-range", sweep_opts.omega_range, "Half-width of the omega box (rad/s)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sweep->add_option("--sigma-range", sweep_opts.sigma_range, "Half-width of the sigma_lb box")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sweep->add_option("--out", out, "Summary CSV output path")->required();
    sweep->add_option("--threads", sweep_opts.threads, "Worker threads (0 = all cores)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*simulate) return run_simulate(config, out, plots);
        if (*verify) return run_verify(config);
        if (*sweep) return run_sweep(config, sweep_opts, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
