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

#include <sstream>

#include "attsmc/verify.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace attsmc;

TEST_SUITE("verify") {

TEST_CASE("reference scenario passes every check") {
    const auto report = verify(reference_scenario());
    std::ostringstream out;
    print_report(report, out);
    INFO(out.str());
    CHECK(report.passed());
    for (const auto& c : report.checks) CHECK(c.status == CheckStatus::Pass);
    CHECK(report.checks.size() == 10);
    CHECK(out.str().find("verification PASSED") != std::string::npos);
}

TEST_CASE("flipping the reaching term breaks the decay check") {
    VerifyOptions opts;
    opts.law = testing_support::flipped_reaching_law();
    const auto report = verify(reference_scenario(), opts);
    std::ostringstream out;
    print_report(report, out);
    INFO(out.str());
    CHECK_FALSE(report.passed());
    REQUIRE(report.find("xi_decay"));
    CHECK(report.find("xi_decay")->status == CheckStatus::Fail);
    CHECK(report.find("xi_decay")->worst > 1.0);
    CHECK(report.find("closed_loop_algebra")->status == CheckStatus::Fail);
    // Properties of the plant alone are unaffected.
    CHECK(report.find("mrp_identity")->status == CheckStatus::Pass);
    CHECK(report.find("zero_torque_conservation")->status == CheckStatus::Pass);
}

TEST_CASE("non-scalar L skips the Vbar and closed-form decay checks") {
    Scenario s = reference_scenario();
    s.gains = SmcGains(0.04, 0.04, Mat3::diag(0.04, 0.05, 0.06));
    const auto report = verify(s);
    std::ostringstream out;
    print_report(report, out);
    INFO(out.str());
    CHECK(report.find("vbar_monotonic")->status == CheckStatus::Skip);
    CHECK(report.find("xi_decay")->status == CheckStatus::Skip);
    CHECK(report.find("v_decreasing")->status == CheckStatus::Pass);
    CHECK(report.find("vdot_consistency")->status == CheckStatus::Pass);
    CHECK(report.passed());
    CHECK(out.str().find("[SKIP] vbar_monotonic") != std::string::npos);
}

TEST_CASE("simulation failures become report entries") {
    Scenario s = reference_scenario();
    s.integrator.max_steps = 3;
    const auto report = verify(s);
    CHECK_FALSE(report.passed());
    CHECK(report.find("simulation")->status == CheckStatus::Fail);
    CHECK(report.find("simulation")->detail.find("max_steps") != std::string::npos);
    CHECK(report.find("final_convergence")->status == CheckStatus::Fail);
    CHECK(report.find("mrp_identity")->status == CheckStatus::Pass);
}

TEST_CASE("individual checks") {
    const Scenario s = reference_scenario();
    CHECK(check_mrp_identity(1, 1000).worst < kMrpIdentityTol);
    CHECK(check_closed_loop_algebra(s, sliding_mode_law(), 5).worst < kClosedLoopAlgebraTol);

    auto records = run_simulation(s);
    CHECK(check_xi_decay(s, records).status == CheckStatus::Pass);
    CHECK(check_vbar_monotonic(s, records).status == CheckStatus::Pass);

    // A single bumped sample is caught.
    auto bumped = records;
    bumped[1500].v *= 1.5;
    CHECK(check_v_decreasing(bumped).status == CheckStatus::Fail);
    CHECK(check_vdot_consistency(bumped).status == CheckStatus::Fail);
    bumped = records;
    *bumped[2000].vbar += 1e-8;
    CHECK(check_vbar_monotonic(s, bumped).status == CheckStatus::Fail);
    bumped = records;
    bumped[10].tau[0] += 1e-9;
    CHECK(check_record_consistency(s, bumped).status == CheckStatus::Fail);

    Scenario at_rest = s;
    at_rest.omega0 = Vec3{};
    at_rest.sigma_lb0 = s.sigma_ld;
    at_rest.t_final = 10.0;
    const auto rest = run_simulation(at_rest);
    CHECK(check_v_decreasing(rest).status == CheckStatus::Skip);
    CHECK(check_xi_decay(at_rest, rest).status == CheckStatus::Pass);
    CHECK(check_zero_torque_conservation(at_rest).status == CheckStatus::Pass);

    Scenario short_run = s;
    short_run.t_final = 20.0;
    CHECK(check_final_convergence(short_run, run_simulation(short_run)).status == CheckStatus::Fail);
}

}
