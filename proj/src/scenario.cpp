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

#include "attsmc/scenario.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace attsmc {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& field, const std::string& why) {
    throw ScenarioError(ScenarioError::Kind::Validation, field + ": " + why);
}

double number(const json& j, const std::string& field) {
    if (!j.is_number()) invalid(field, "expected a number");
    const double x = j.get<double>();
    if (!std::isfinite(x)) invalid(field, "must be finite");
    return x;
}

template <std::size_t N>
std::array<double, N> numbers(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != N) invalid(field, "expected an array of " + std::to_string(N) + " numbers");
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = number(j[i], field + "[" + std::to_string(i) + "]");
    return out;
}

Vec3 vec3(const json& j, const std::string& field) {
    const auto a = numbers<3>(j, field);
    return {a[0], a[1], a[2]};
}

const json& require(const json& obj, const std::string& key) {
    const auto it = obj.find(key);
    if (it == obj.end()) invalid(key, "missing required key");
    return *it;
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& prefix) {
    for (const auto& [key, _] : obj.items()) {
        if (!known.count(key)) invalid(prefix + key, "unknown key");
    }
}

InertiaTensor parse_inertia(const json& j) {
    const Mat3 m(numbers<9>(j, "inertia"));
    if (max_abs(m - transpose(m)) > kMatrixValidationTolerance) invalid("inertia", "must be symmetric");
    if (!is_symmetric_positive_definite(m, kMatrixValidationTolerance)) invalid("inertia", "not positive definite");
    return InertiaTensor(m);
}

SmcGains parse_gains(const json& root) {
    const double k1 = number(require(root, "k1"), "k1");
    const double k2 = number(require(root, "k2"), "k2");
    if (k1 == 0.0) invalid("k1", "must be nonzero (the equivalent control divides by k1)");
    if (k2 == 0.0) invalid("k2", "must be nonzero");
    if (!(k1 * k2 > 0.0)) invalid("k2", "k1*k2 must be positive");

    const json& lj = require(root, "L");
    Mat3 l;
    if (lj.is_number()) {
        const double lambda = number(lj, "L");
        if (!(lambda > 0.0)) invalid("L", "L not positive definite (scalar must be > 0)");
        l = Mat3::scaled_identity(lambda);
    } else if (lj.is_array()) {
        l = Mat3(numbers<9>(lj, "L"));
        if (!is_symmetric_positive_definite(l, kMatrixValidationTolerance))
            invalid("L", "L not positive definite");
    } else {
        invalid("L", "expected a positive number or an array of 9 numbers");
    }
    return SmcGains(k1, k2, l);
}

IntegratorConfig parse_integrator(const json& j) {
    IntegratorConfig cfg;
    if (!j.is_object()) invalid("integrator", "expected an object");
    reject_unknown(j, {"rel_tol", "abs_tol", "h_init", "h_min", "h_max", "max_steps"}, "integrator.");
    auto opt = [&](const char* key, double& dst) {
        if (const auto it = j.find(key); it != j.end()) dst = number(*it, std::string("integrator.") + key);
    };
    opt("rel_tol", cfg.rel_tol);
    opt("abs_tol", cfg.abs_tol);
    opt("h_init", cfg.h_init);
    opt("h_min", cfg.h_min);
    opt("h_max", cfg.h_max);
    if (const auto it = j.find("max_steps"); it != j.end()) {
        if (!it->is_number_integer()) invalid("integrator.max_steps", "expected an integer");
        cfg.max_steps = it->get<std::int64_t>();
    }
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(ScenarioError::Kind::Validation, e.what());
    }
    return cfg;
}

ConvergenceThresholds parse_convergence(const json& j) {
    ConvergenceThresholds c;
    if (!j.is_object()) invalid("convergence", "expected an object");
    reject_unknown(j, {"sigma_db", "omega"}, "convergence.");
    if (const auto it = j.find("sigma_db"); it != j.end()) c.sigma_db = number(*it, "convergence.sigma_db");
    if (const auto it = j.find("omega"); it != j.end()) c.omega = number(*it, "convergence.omega");
    if (!(c.sigma_db > 0.0)) invalid("convergence.sigma_db", "must be positive");
    if (!(c.omega > 0.0)) invalid("convergence.omega", "must be positive");
    return c;
}

json to_array(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

json to_array(const Mat3& m) {
    json out = json::array();
    for (double x : m.m) out.push_back(x);
    return out;
}

}  // namespace

Scenario reference_scenario() {
    return Scenario{
        InertiaTensor(Mat3{1.49, 0.054, 0.0442,
                           0.054, 1.51, 0.0,
                           0.0442, 0.0, 1.56}),
        SmcGains(0.04, 0.04, Mat3::scaled_identity(0.04)),
        Vec3{0.0, -0.1, 0.0},
        Vec3{0.0, 0.0, 0.0},
        Vec3{0.3333, -0.3333, -0.3333},
        300.0,
        0.1,
        IntegratorConfig{},
        ConvergenceThresholds{},
    };
}

Scenario parse_scenario(std::string_view json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ScenarioError(ScenarioError::Kind::Parse, std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) throw ScenarioError(ScenarioError::Kind::Parse, "scenario must be a JSON object");
    reject_unknown(root,
                   {"inertia", "k1", "k2", "L", "omega0", "sigma_lb0", "sigma_ld", "t_final", "sample_dt",
                    "integrator", "convergence"},
                   "");

    InertiaTensor inertia = parse_inertia(require(root, "inertia"));
    SmcGains gains = parse_gains(root);
    const Vec3 omega0 = vec3(require(root, "omega0"), "omega0");
    const Vec3 sigma_lb0 = vec3(require(root, "sigma_lb0"), "sigma_lb0");
    const Vec3 sigma_ld = vec3(require(root, "sigma_ld"), "sigma_ld");
    const double t_final = number(require(root, "t_final"), "t_final");
    if (!(t_final > 0.0)) invalid("t_final", "must be positive");
    const double sample_dt = number(require(root, "sample_dt"), "sample_dt");
    if (!(sample_dt > 0.0)) invalid("sample_dt", "must be positive");

    IntegratorConfig integrator;
    if (const auto it = root.find("integrator"); it != root.end()) integrator = parse_integrator(*it);
    ConvergenceThresholds convergence;
    if (const auto it = root.find("convergence"); it != root.end()) convergence = parse_convergence(*it);

    return Scenario{std::move(inertia), std::move(gains), omega0, sigma_lb0, sigma_ld, t_final, sample_dt,
                    integrator, convergence};
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError(ScenarioError::Kind::Io, "cannot open scenario file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_scenario(buf.str());
    } catch (const ScenarioError& e) {
        throw ScenarioError(e.kind(), path.string() + ": " + e.what());
    }
}

std::string scenario_to_json(const Scenario& s) {
    json root;
    root["inertia"] = to_array(s.inertia.matrix());
    root["k1"] = s.gains.k1();
    root["k2"] = s.gains.k2();
    if (const auto lambda = s.gains.scalar_l(); lambda && s.gains.l() == Mat3::scaled_identity(*lambda)) {
        root["L"] = *lambda;
    } else {
        root["L"] = to_array(s.gains.l());
    }
    root["omega0"] = to_array(s.omega0);
    root["sigma_lb0"] = to_array(s.sigma_lb0);
    root["sigma_ld"] = to_array(s.sigma_ld);
    root["t_final"] = s.t_final;
    root["sample_dt"] = s.sample_dt;
    root["integrator"] = {{"rel_tol", s.integrator.rel_tol}, {"abs_tol", s.integrator.abs_tol},
                          {"h_init", s.integrator.h_init},   {"h_min", s.integrator.h_min},
                          {"h_max", s.integrator.h_max},     {"max_steps", s.integrator.max_steps}};
    root["convergence"] = {{"sigma_db", s.convergence.sigma_db}, {"omega", s.convergence.omega}};
    return root.dump(2);
}

}  // namespace attsmc
