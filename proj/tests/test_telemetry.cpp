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

#include <cmath>
#include <cstring>
#include <random>
#include <sstream>

#include "attsmc/telemetry.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace attsmc;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

bool bitwise_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_SUITE("telemetry") {

TEST_CASE("reference run: first record and decay law") {
    const Scenario s = reference_scenario();
    const auto records = run_simulation(s);
    REQUIRE(records.size() == 3001);
    const auto& first = records.front();
    CHECK(first.t == 0.0);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(std::abs(first.xi[i] - oracle::kXi0[i]) < 1e-17);
        CHECK(std::abs(first.u_eq[i] - oracle::kUeq0[i]) < 1e-16);
        CHECK(std::abs(first.u_n[i] - oracle::kUn0[i]) < 1e-16);
        CHECK(std::abs(first.tau[i] - oracle::kTau0[i]) < 1e-16);
    }

    const double xi0 = norm(first.xi);
    double worst = 0.0;
    for (const auto& r : records) worst = std::max(worst, std::abs(norm(r.xi) / xi0 - std::exp(-0.04 * r.t)));
    CHECK(worst < 1e-6);

    for (std::size_t k = 0; k + 1 < records.size(); ++k) CHECK(norm(records[k + 1].xi) - norm(records[k].xi) < 1e-9);

    const auto& last = records.back();
    CHECK(last.t == 300.0);
    CHECK(norm(last.sigma_db) < 1e-3);
    CHECK(norm(last.omega) < 1e-3);
}

TEST_CASE("records are internally consistent") {
    Scenario s = reference_scenario();
    s.gains = SmcGains(0.1, 0.03, Mat3::diag(0.04, 0.05, 0.06));
    s.t_final = 50.0;
    for (const auto& r : run_simulation(s)) {
        CHECK(r.tau == r.u_eq + r.u_n);
        CHECK(r.xi == s.gains.k1() * r.omega + s.gains.k2() * r.sigma_db);
        CHECK(r.sigma_db == r.sigma_lb - s.sigma_ld);
        CHECK_FALSE(r.vbar.has_value());
    }
}

TEST_CASE("equilibrium start stays at rest") {
    Scenario s = reference_scenario();
    s.omega0 = Vec3{};
    s.sigma_lb0 = s.sigma_ld;
    s.t_final = 20.0;
    for (const auto& r : run_simulation(s)) {
        CHECK(r.tau == Vec3{});
        CHECK(r.omega == Vec3{});
        CHECK(r.sigma_db == Vec3{});
        CHECK(r.v == 0.0);
    }
}

TEST_CASE("CSV header, row count and reference first line") {
    const Scenario s = reference_scenario();
    auto records = run_simulation(s);

    std::ostringstream two;
    write_csv({records[0], records[1]}, two);
    const auto lines = lines_of(two.str());
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "t,omega1,omega2,omega3,sigma_lb1,sigma_lb2,sigma_lb3,sigma_db1,sigma_db2,sigma_db3,"
                      "xi1,xi2,xi3,u_eq1,u_eq2,u_eq3,u_N1,u_N2,u_N3,tau1,tau2,tau3,V,Vdot,Vbar");
    CHECK(lines[1].rfind("0,", 0) == 0);
    const auto fields = split(lines[1]);
    REQUIRE(fields.size() == 25);
    CHECK(fields[2] == "-0.1");
    CHECK(std::stod(fields[2]) == -0.1);

    std::ostringstream empty;
    CHECK_THROWS_AS(write_csv({}, empty), std::invalid_argument);
}

TEST_CASE("Vbar column is empty when undefined") {
    TelemetryRecord r;
    r.t = 1.5;
    std::ostringstream out;
    write_csv({r}, out);
    const auto fields = split(lines_of(out.str())[1]);
    REQUIRE(fields.size() == 25);
    CHECK(fields[24].empty());
}

TEST_CASE("property: CSV round trip is bitwise") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> mag(-300, 300);
    std::uniform_real_distribution<double> mant(-1, 1);
    auto draw = [&] { return mant(rng) * std::pow(10.0, mag(rng)); };
    std::vector<TelemetryRecord> records;
    for (int i = 0; i < 200; ++i) {
        TelemetryRecord r;
        r.t = std::abs(draw());
        for (Vec3* v : {&r.omega, &r.sigma_lb, &r.sigma_db, &r.xi, &r.u_eq, &r.u_n, &r.tau})
            *v = Vec3{draw(), draw(), draw()};
        r.v = draw();
        r.vdot = draw();
        if (i % 3) r.vbar = draw();
        records.push_back(r);
    }
    records.front().omega = Vec3{5e-324, -0.0, 1.7976931348623157e308};

    const auto dir = testing_support::scratch_dir("telemetry");
    write_csv(records, dir / "t.csv");
    const auto back = read_csv(dir / "t.csv");
    REQUIRE(back.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(back[i] == records[i]);
        CHECK(bitwise_equal(back[i].omega[1], records[i].omega[1]));
        CHECK(bitwise_equal(back[i].tau[2], records[i].tau[2]));
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("read_csv rejects malformed input") {
    std::istringstream bad_header("t,x\n1,2\n");
    CHECK_THROWS_AS(read_csv(bad_header), std::runtime_error);
    std::istringstream short_row(std::string(kCsvHeader) + "\n1,2,3\n");
    CHECK_THROWS_AS(read_csv(short_row), std::runtime_error);
    std::istringstream bad_number(std::string(kCsvHeader) + "\n" + std::string("x") + std::string(24, ',') + "\n");
    CHECK_THROWS_AS(read_csv(bad_number), std::runtime_error);
    CHECK_THROWS_AS(write_csv({TelemetryRecord{}}, std::filesystem::path("/nonexistent/dir/t.csv")), std::runtime_error);
}

}
