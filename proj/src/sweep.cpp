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

#include "attsmc/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <fstream>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

namespace attsmc {

namespace {

std::string num(double x) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c == '\n' ? ' ' : c);
    }
    out.push_back('"');
    return out;
}

SweepRow run_one(const Scenario& base, int index, const BodyState& y0) {
    SweepRow row;
    row.run = index;
    row.omega0 = y0.omega;
    row.sigma_lb0 = y0.sigma_lb;
    Scenario s = base;
    s.omega0 = y0.omega;
    s.sigma_lb0 = y0.sigma_lb;
    try {
        const auto records = run_simulation(s);
        for (const auto& r : records) row.max_tau = std::max(row.max_tau, norm(r.tau));
        row.settling_time = settling_time(records, s.convergence);
        row.converged = row.settling_time.has_value();
        row.final_sigma_db = norm(records.back().sigma_db);
        row.final_omega = norm(records.back().omega);
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

}  // namespace

std::optional<double> settling_time(const std::vector<TelemetryRecord>& records, const ConvergenceThresholds& c) {
    std::optional<double> out;
    for (auto it = records.rbegin(); it != records.rend(); ++it) {
        if (!(norm(it->sigma_db) < c.sigma_db && norm(it->omega) < c.omega)) break;
        out = it->t;
    }
    return out;
}

std::vector<BodyState> sweep_initial_conditions(const Scenario& s, const SweepOptions& opts) {
    if (opts.samples < 1) throw std::invalid_argument("sweep: samples must be at least 1");
    if (!(opts.omega_range >= 0.0) || !(opts.sigma_range >= 0.0))
        throw std::invalid_argument("sweep: ranges must be non-negative");
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    auto box = [&](const Vec3& center, double r) {
        Vec3 out = center;
        for (std::size_t i = 0; i < 3; ++i) out[i] += r * unit(rng);
        return out;
    };
    std::vector<BodyState> out;
    out.reserve(static_cast<std::size_t>(opts.samples));
    for (int i = 0; i < opts.samples; ++i) {
        const Vec3 w = box(s.omega0, opts.omega_range);
        out.push_back({w, box(s.sigma_lb0, opts.sigma_range)});
    }
    return out;
}

std::vector<SweepRow> sweep(const Scenario& s, const SweepOptions& opts) {
    const auto ics = sweep_initial_conditions(s, opts);
    std::vector<SweepRow> rows(ics.size());

    unsigned workers = opts.threads > 0 ? static_cast<unsigned>(opts.threads) : std::thread::hardware_concurrency();
    workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(ics.size()));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < ics.size(); i = next++) rows[i] = run_one(s, static_cast<int>(i), ics[i]);
    };
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    pool.clear();
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << kSweepCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.run;
        for (std::size_t i = 0; i < 3; ++i) out << ',' << num(r.omega0[i]);
        for (std::size_t i = 0; i < 3; ++i) out << ',' << num(r.sigma_lb0[i]);
        out << ',' << (r.converged ? 1 : 0) << ',';
        if (r.settling_time) out << num(*r.settling_time);
        out << ',' << num(r.max_tau) << ',' << num(r.final_sigma_db) << ',' << num(r.final_omega) << ','
            << csv_field(r.error) << '\n';
    }
}

void write_sweep_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_sweep_csv(rows, out);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace attsmc
