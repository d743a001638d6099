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

#include "attsmc/telemetry.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <system_error>

namespace attsmc {

namespace {

constexpr std::size_t kColumns = 25;

void put(std::string& line, double x) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    line.append(buf.data(), res.ptr);
}

void put(std::string& line, const Vec3& v) {
    for (std::size_t i = 0; i < 3; ++i) {
        line.push_back(',');
        put(line, v[i]);
    }
}

double parse_double(std::string_view field, std::size_t line_no) {
    double x = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), x);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
        throw std::runtime_error("telemetry CSV line " + std::to_string(line_no) + ": bad number '" +
                                 std::string(field) + "'");
    }
    return x;
}

}  // namespace

TelemetryRecord make_record(const Scenario& s, double t, const BodyState& state, const ControlLaw& law) {
    TelemetryRecord r;
    r.t = t;
    r.omega = state.omega;
    r.sigma_lb = state.sigma_lb;
    r.sigma_db = attitude_error(state.sigma_lb, s.sigma_ld);
    const TorqueBreakdown u = law(s.inertia, s.gains, r.omega, r.sigma_db);
    r.xi = u.xi;
    r.u_eq = u.u_eq;
    r.u_n = u.u_n;
    r.tau = u.tau;
    const LyapunovSample lyap = lyapunov_sample(s.gains, r.xi, r.sigma_db);
    r.v = lyap.v;
    r.vdot = lyap.vdot_analytic;
    r.vbar = lyap.vbar;
    return r;
}

std::vector<TelemetryRecord> run_simulation(const Scenario& s, const ControlLaw& law) {
    const auto samples = integrate(closed_loop_derivative(s.inertia, s.gains, s.sigma_ld, law),
                                   BodyState{s.omega0, s.sigma_lb0}, s.t_final, s.integrator, s.sample_dt);
    std::vector<TelemetryRecord> out;
    out.reserve(samples.size());
    for (const auto& sample : samples) out.push_back(make_record(s, sample.t, sample.state, law));
    return out;
}

void write_csv(const std::vector<TelemetryRecord>& records, std::ostream& out) {
    if (records.empty()) throw std::invalid_argument("write_csv: no records");
    out << kCsvHeader << '\n';
    std::string line;
    for (const auto& r : records) {
        line.clear();
        put(line, r.t);
        put(line, r.omega);
        put(line, r.sigma_lb);
        put(line, r.sigma_db);
        put(line, r.xi);
        put(line, r.u_eq);
        put(line, r.u_n);
        put(line, r.tau);
        line.push_back(',');
        put(line, r.v);
        line.push_back(',');
        put(line, r.vdot);
        line.push_back(',');
        if (r.vbar) put(line, *r.vbar);
        line.push_back('\n');
        out << line;
    }
}

void write_csv(const std::vector<TelemetryRecord>& records, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_csv(records, out);
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::vector<TelemetryRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) throw std::runtime_error("telemetry CSV: unexpected header");

    std::vector<TelemetryRecord> out;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::array<std::string_view, kColumns> fields;
        std::size_t n = 0;
        std::string_view rest(line);
        while (true) {
            const auto comma = rest.find(',');
            if (n == kColumns) throw std::runtime_error("telemetry CSV line " + std::to_string(line_no) + ": too many fields");
            fields[n++] = rest.substr(0, comma);
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (n != kColumns) throw std::runtime_error("telemetry CSV line " + std::to_string(line_no) + ": expected 25 fields");

        std::size_t col = 0;
        auto next = [&] { return parse_double(fields[col++], line_no); };
        auto next3 = [&] {
            const double a = next();
            const double b = next();
            return Vec3{a, b, next()};
        };
        TelemetryRecord r;
        r.t = next();
        r.omega = next3();
        r.sigma_lb = next3();
        r.sigma_db = next3();
        r.xi = next3();
        r.u_eq = next3();
        r.u_n = next3();
        r.tau = next3();
        r.v = next();
        r.vdot = next();
        if (!fields[col].empty()) r.vbar = next();
        out.push_back(r);
    }
    return out;
}

std::vector<TelemetryRecord> read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_csv(in);
}

}  // namespace attsmc
