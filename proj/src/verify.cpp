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

#include "attsmc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>

namespace attsmc {

namespace {

CheckResult make(std::string name, double worst, double threshold, std::string detail = {}) {
    CheckResult r{std::move(name), CheckStatus::Pass, worst, threshold, std::move(detail)};
    r.status = (worst <= threshold) ? CheckStatus::Pass : CheckStatus::Fail;
    return r;
}

CheckResult skipped(std::string name, std::string why) {
    return {std::move(name), CheckStatus::Skip, 0.0, 0.0, std::move(why)};
}

CheckResult failed(std::string name, double threshold, std::string why) {
    return {std::move(name), CheckStatus::Fail, std::numeric_limits<double>::infinity(), threshold, std::move(why)};
}

Vec3 uniform3(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    const double a = u(rng);
    const double b = u(rng);
    return {a, b, u(rng)};
}

double kinetic_energy(const InertiaTensor& j, const Vec3& w) { return 0.5 * dot(w, j * w); }

}  // namespace

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Skip: return "SKIP";
    }
    return "?";
}

bool VerificationReport::passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::Fail; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

CheckResult check_mrp_identity(std::uint64_t seed, int n) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) worst = std::max(worst, mrp_identity_residual(uniform3(rng, -2.0, 2.0)));
    return make("mrp_identity", worst, kMrpIdentityTol, std::to_string(n) + " samples in [-2,2]^3");
}

CheckResult check_closed_loop_algebra(const Scenario& s, const ControlLaw& law, std::uint64_t seed, int n) {
    const auto f = closed_loop_derivative(s.inertia, s.gains, s.sigma_ld, law);
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const BodyState y{uniform3(rng, -1.0, 1.0), uniform3(rng, -1.0, 1.0)};
        const BodyState dy = f(0.0, y);
        const Vec3 xi = sliding_variable(s.gains, y.omega, attitude_error(y.sigma_lb, s.sigma_ld));
        const Vec3 xi_dot = s.gains.k1() * dy.omega + s.gains.k2() * dy.sigma_lb;
        worst = std::max(worst, norm(xi_dot + s.gains.l() * xi));
    }
    return make("closed_loop_algebra", worst, kClosedLoopAlgebraTol, std::to_string(n) + " random states");
}

CheckResult check_xi_decay(const Scenario& s, const std::vector<TelemetryRecord>& records) {
    const auto lambda = s.gains.scalar_l();
    if (!lambda) return skipped("xi_decay", "L is not a scalar multiple of I");
    const double xi0 = norm(records.front().xi);
    double worst = 0.0;
    for (const auto& r : records) {
        const double dev = std::abs(norm(r.xi) - xi0 * std::exp(-*lambda * r.t));
        worst = std::max(worst, xi0 > 0.0 ? dev / xi0 : dev);
    }
    return make("xi_decay", worst, kXiDecayRelTol, "max relative deviation from exp(-lambda t)");
}

CheckResult check_v_decreasing(const std::vector<TelemetryRecord>& records) {
    double worst = 0.0;  // largest V[k+1] / V[k] seen, must stay below 1
    std::size_t active = 0;
    for (std::size_t k = 0; k + 1 < records.size(); ++k) {
        if (!(records[k].v > 0.0)) continue;
        ++active;
        worst = std::max(worst, records[k + 1].v / records[k].v);
    }
    if (active == 0) return skipped("v_decreasing", "xi is identically zero");
    CheckResult r = make("v_decreasing", worst, 1.0, "max V[k+1]/V[k] over " + std::to_string(active) + " steps");
    if (worst >= 1.0) r.status = CheckStatus::Fail;
    return r;
}

CheckResult check_vdot_consistency(const std::vector<TelemetryRecord>& records) {
    double worst = 0.0;
    std::size_t active = 0;
    for (std::size_t k = 0; k + 1 < records.size(); ++k) {
        const auto& a = records[k];
        const auto& b = records[k + 1];
        const double h = b.t - a.t;
        const double scale = std::max(std::abs(a.vdot), std::abs(b.vdot));
        if (!(scale > 0.0) || !(h > 0.0)) continue;
        ++active;
        const double fd = (b.v - a.v) / h;
        const double trap = 0.5 * (a.vdot + b.vdot);
        worst = std::max(worst, std::abs(fd - trap) / scale);
    }
    if (active == 0) return skipped("vdot_consistency", "xi is identically zero");
    return make("vdot_consistency", worst, kVdotRelTol, "max |dV/dt (finite diff) + xi^T L xi| / |Vdot|");
}

CheckResult check_vbar_monotonic(const Scenario& s, const std::vector<TelemetryRecord>& records) {
    if (!s.gains.scalar_l()) return skipped("vbar_monotonic", "L is not a scalar multiple of I");
    double worst = 0.0;
    for (std::size_t k = 0; k + 1 < records.size(); ++k)
        worst = std::max(worst, *records[k + 1].vbar - *records[k].vbar);
    return make("vbar_monotonic", worst, kVbarIncreaseTol, "largest per-sample increase of Vbar");
}

CheckResult check_record_consistency(const Scenario& s, const std::vector<TelemetryRecord>& records) {
    double worst = 0.0;
    auto rel = [](const Vec3& a, const Vec3& b) {
        const double scale = std::max(norm(a), norm(b));
        return scale > 0.0 ? norm(a - b) / scale : 0.0;
    };
    for (const auto& r : records) {
        worst = std::max(worst, rel(r.tau, r.u_eq + r.u_n));
        worst = std::max(worst, rel(r.xi, s.gains.k1() * r.omega + s.gains.k2() * r.sigma_db));
    }
    return make("record_consistency", worst, kRecordRelTol);
}

CheckResult check_zero_torque_conservation(const Scenario& s, double horizon) {
    Vec3 w0 = s.omega0;
    if (norm(w0) == 0.0) w0 = Vec3{0.05, -0.1, 0.02};
    const InertiaTensor& j = s.inertia;
    const StateDerivative free = [&j](double, const BodyState& y) {
        return BodyState{body_accel(j, y.omega, Vec3{}), mrp_rate(y.sigma_lb, y.omega)};
    };
    std::vector<SolutionSample> run;
    try {
        run = integrate(free, BodyState{w0, Vec3{}}, horizon, s.integrator, std::max(s.sample_dt, 0.1));
    } catch (const std::exception& e) {
        return failed("zero_torque_conservation", kConservationRelTol, e.what());
    }
    const double e0 = kinetic_energy(j, w0);
    const double h0 = norm(j * w0);
    double worst = 0.0;
    for (const auto& smp : run) {
        worst = std::max(worst, std::abs(kinetic_energy(j, smp.state.omega) - e0) / e0);
        worst = std::max(worst, std::abs(norm(j * smp.state.omega) - h0) / h0);
    }
    return make("zero_torque_conservation", worst, kConservationRelTol,
                "relative drift of energy and |J omega| over " + std::to_string(static_cast<int>(horizon)) + " s");
}

CheckResult check_final_convergence(const Scenario& s, const std::vector<TelemetryRecord>& records) {
    const auto& last = records.back();
    const double e_sigma = norm(last.sigma_db) / s.convergence.sigma_db;
    const double e_omega = norm(last.omega) / s.convergence.omega;
    CheckResult r = make("final_convergence", std::max(e_sigma, e_omega), 1.0,
                         "max(|sigma_db|/tol, |omega|/tol) at t_final");
    if (r.worst >= 1.0) r.status = CheckStatus::Fail;
    return r;
}

VerificationReport verify(const Scenario& s, const VerifyOptions& opts) {
    VerificationReport report;
    report.checks.push_back(check_mrp_identity(opts.seed));
    report.checks.push_back(check_closed_loop_algebra(s, opts.law, opts.seed + 1));

    // On an integrator failure the trajectory checks still run on the samples
    // produced before it, so the report shows how far off the run was.
    std::vector<TelemetryRecord> records;
    CheckResult sim{"simulation", CheckStatus::Pass, 0.0, 0.0, "completed to t_final"};
    try {
        records = run_simulation(s, opts.law);
    } catch (const IntegrationError& e) {
        for (const auto& smp : e.partial()) records.push_back(make_record(s, smp.t, smp.state, opts.law));
        sim = failed("simulation", 0.0, e.what());
    } catch (const std::exception& e) {
        sim = failed("simulation", 0.0, e.what());
    }
    report.checks.push_back(sim);
    if (records.empty()) {
        for (const char* name : {"xi_decay", "v_decreasing", "vdot_consistency", "vbar_monotonic",
                                 "record_consistency", "final_convergence"}) {
            report.checks.push_back(failed(name, 0.0, "no samples"));
        }
    } else {
        report.checks.push_back(check_xi_decay(s, records));
        report.checks.push_back(check_v_decreasing(records));
        report.checks.push_back(check_vdot_consistency(records));
        report.checks.push_back(check_vbar_monotonic(s, records));
        report.checks.push_back(check_record_consistency(s, records));
        CheckResult conv = check_final_convergence(s, records);
        if (sim.status == CheckStatus::Fail) {
            conv.status = CheckStatus::Fail;
            conv.detail = "run stopped at t = " + std::to_string(records.back().t);
        }
        report.checks.push_back(conv);
    }
    report.checks.push_back(check_zero_torque_conservation(s));
    return report;
}

void print_report(const VerificationReport& report, std::ostream& out) {
    char line[256];
    for (const auto& c : report.checks) {
        if (c.status == CheckStatus::Skip) {
            std::snprintf(line, sizeof line, "[%s] %-26s %s\n", to_string(c.status), c.name.c_str(), c.detail.c_str());
        } else {
            std::snprintf(line, sizeof line, "[%s] %-26s worst=%.3e bound=%.3e  %s\n", to_string(c.status),
                          c.name.c_str(), c.worst, c.threshold, c.detail.c_str());
        }
        out << line;
    }
    out << (report.passed() ? "verification PASSED\n" : "verification FAILED\n");
}

}  // namespace attsmc
