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

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "attsmc/attitude.hpp"
#include "attsmc/mathcore.hpp"
#include "attsmc/odeint.hpp"
#include "attsmc/plots.hpp"
#include "attsmc/scenario.hpp"
#include "attsmc/smc.hpp"
#include "attsmc/sweep.hpp"
#include "attsmc/telemetry.hpp"
#include "attsmc/verify.hpp"

namespace py = pybind11;
using namespace attsmc;

namespace {

using Arr3 = std::array<double, 3>;
using Arr33 = std::array<std::array<double, 3>, 3>;

Vec3 vec(const Arr3& a) { return {a[0], a[1], a[2]}; }
Arr3 arr(const Vec3& v) { return v.v; }

Mat3 mat(const Arr33& a) {
    return {a[0][0], a[0][1], a[0][2], a[1][0], a[1][1], a[1][2], a[2][0], a[2][1], a[2][2]};
}

Arr33 arr(const Mat3& m) {
    return {{{m(0, 0), m(0, 1), m(0, 2)}, {m(1, 0), m(1, 1), m(1, 2)}, {m(2, 0), m(2, 1), m(2, 2)}}};
}

py::dict torque_dict(const TorqueBreakdown& u) {
    py::dict d;
    d["tau"] = arr(u.tau);
    d["u_eq"] = arr(u.u_eq);
    d["u_N"] = arr(u.u_n);
    d["xi"] = arr(u.xi);
    return d;
}

py::dict telemetry_columns(const std::vector<TelemetryRecord>& records) {
    const std::size_t n = records.size();
    py::dict out;
    auto column = [&](const std::string& name, auto get) {
        py::array_t<double> a(static_cast<py::ssize_t>(n));
        auto w = a.mutable_unchecked<1>();
        for (std::size_t i = 0; i < n; ++i) w(static_cast<py::ssize_t>(i)) = get(records[i]);
        out[py::str(name)] = a;
    };
    column("t", [](const auto& r) { return r.t; });
    auto triple = [&](const std::string& name, Vec3 TelemetryRecord::*field) {
        for (std::size_t k = 0; k < 3; ++k)
            column(name + std::to_string(k + 1), [field, k](const auto& r) { return (r.*field)[k]; });
    };
    triple("omega", &TelemetryRecord::omega);
    triple("sigma_lb", &TelemetryRecord::sigma_lb);
    triple("sigma_db", &TelemetryRecord::sigma_db);
    triple("xi", &TelemetryRecord::xi);
    triple("u_eq", &TelemetryRecord::u_eq);
    triple("u_N", &TelemetryRecord::u_n);
    triple("tau", &TelemetryRecord::tau);
    column("V", [](const auto& r) { return r.v; });
    column("Vdot", [](const auto& r) { return r.vdot; });
    column("Vbar", [](const auto& r) { return r.vbar.value_or(std::numeric_limits<double>::quiet_NaN()); });
    return out;
}

std::vector<TelemetryRecord> simulate_nogil(const Scenario& s) {
    py::gil_scoped_release release;
    return run_simulation(s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sliding-mode spacecraft attitude control with MRP feedback";

    py::register_exception<ScenarioError>(m, "ScenarioError", PyExc_ValueError);
    py::register_exception<IntegrationError>(m, "IntegrationError", PyExc_RuntimeError);
    py::register_exception<SingularMatrixError>(m, "SingularMatrixError", PyExc_ArithmeticError);

    // mathcore
    m.def("skew", [](const Arr3& v) { return arr(skew(vec(v))); }, py::arg("v"));
    m.def("cross", [](const Arr3& a, const Arr3& b) { return arr(cross(vec(a), vec(b))); }, py::arg("a"), py::arg("b"));
    m.def("solve3", [](const Arr33& a, const Arr3& b) { return arr(solve3(mat(a), vec(b))); }, py::arg("A"),
          py::arg("b"));
    m.def("is_symmetric_positive_definite",
          [](const Arr33& a, double tol) { return is_symmetric_positive_definite(mat(a), tol); }, py::arg("M"),
          py::arg("tol") = kMatrixValidationTolerance);

    // attitude
    py::class_<InertiaTensor>(m, "InertiaTensor")
        .def(py::init([](const Arr33& j) { return InertiaTensor(mat(j)); }), py::arg("J"))
        .def_property_readonly("matrix", [](const InertiaTensor& j) { return arr(j.matrix()); });

    m.def("mrp_g_matrix", [](const Arr3& s) { return arr(mrp_g_matrix(vec(s))); }, py::arg("sigma"));
    m.def("mrp_rate", [](const Arr3& s, const Arr3& w) { return arr(mrp_rate(vec(s), vec(w))); }, py::arg("sigma_db"),
          py::arg("omega"));
    m.def("body_accel",
          [](const InertiaTensor& j, const Arr3& w, const Arr3& tau) { return arr(body_accel(j, vec(w), vec(tau))); },
          py::arg("J"), py::arg("omega"), py::arg("tau"));
    m.def("attitude_error", [](const Arr3& lb, const Arr3& ld) { return arr(attitude_error(vec(lb), vec(ld))); },
          py::arg("sigma_lb"), py::arg("sigma_ld"));
    m.def("mrp_identity_residual", [](const Arr3& s) { return mrp_identity_residual(vec(s)); }, py::arg("sigma"));

    // smc
    py::class_<SmcGains>(m, "SmcGains")
        .def(py::init([](double k1, double k2, const Arr33& l) { return SmcGains(k1, k2, mat(l)); }), py::arg("k1"),
             py::arg("k2"), py::arg("L"))
        .def(py::init([](double k1, double k2, double lambda) {
                 return SmcGains(k1, k2, Mat3::scaled_identity(lambda));
             }),
             py::arg("k1"), py::arg("k2"), py::arg("L"))
        .def_property_readonly("k1", &SmcGains::k1)
        .def_property_readonly("k2", &SmcGains::k2)
        .def_property_readonly("L", [](const SmcGains& g) { return arr(g.l()); })
        .def_property_readonly("scalar_L", &SmcGains::scalar_l);

    m.def("sliding_variable",
          [](const SmcGains& g, const Arr3& w, const Arr3& s) { return arr(sliding_variable(g, vec(w), vec(s))); },
          py::arg("gains"), py::arg("omega"), py::arg("sigma_db"));
    m.def("equivalent_control",
          [](const InertiaTensor& j, const SmcGains& g, const Arr3& w, const Arr3& s) {
              return arr(equivalent_control(j, g, vec(w), vec(s)));
          },
          py::arg("J"), py::arg("gains"), py::arg("omega"), py::arg("sigma_db"));
    m.def("reaching_control",
          [](const InertiaTensor& j, const SmcGains& g, const Arr3& xi) { return arr(reaching_control(j, g, vec(xi))); },
          py::arg("J"), py::arg("gains"), py::arg("xi"));
    m.def("total_torque",
          [](const InertiaTensor& j, const SmcGains& g, const Arr3& w, const Arr3& s) {
              return torque_dict(total_torque(j, g, vec(w), vec(s)));
          },
          py::arg("J"), py::arg("gains"), py::arg("omega"), py::arg("sigma_db"));
    m.def("lyapunov_sample",
          [](const SmcGains& g, const Arr3& xi, const Arr3& s) {
              const auto l = lyapunov_sample(g, vec(xi), vec(s));
              py::dict d;
              d["V"] = l.v;
              d["Vdot"] = l.vdot_analytic;
              d["Vbar"] = l.vbar ? py::cast(*l.vbar) : py::none();
              d["kbar"] = l.kbar ? py::cast(*l.kbar) : py::none();
              return d;
          },
          py::arg("gains"), py::arg("xi"), py::arg("sigma_db"));

    // odeint
    py::class_<IntegratorConfig>(m, "IntegratorConfig")
        .def(py::init<>())
        .def_readwrite("rel_tol", &IntegratorConfig::rel_tol)
        .def_readwrite("abs_tol", &IntegratorConfig::abs_tol)
        .def_readwrite("h_init", &IntegratorConfig::h_init)
        .def_readwrite("h_min", &IntegratorConfig::h_min)
        .def_readwrite("h_max", &IntegratorConfig::h_max)
        .def_readwrite("max_steps", &IntegratorConfig::max_steps)
        .def("validate", &IntegratorConfig::validate);

    // scenarios and simulation
    py::class_<Scenario>(m, "Scenario")
        .def_readwrite("inertia", &Scenario::inertia)
        .def_readwrite("gains", &Scenario::gains)
        .def_property(
            "omega0", [](const Scenario& s) { return arr(s.omega0); },
            [](Scenario& s, const Arr3& v) { s.omega0 = vec(v); })
        .def_property(
            "sigma_lb0", [](const Scenario& s) { return arr(s.sigma_lb0); },
            [](Scenario& s, const Arr3& v) { s.sigma_lb0 = vec(v); })
        .def_property(
            "sigma_ld", [](const Scenario& s) { return arr(s.sigma_ld); },
            [](Scenario& s, const Arr3& v) { s.sigma_ld = vec(v); })
        .def_readwrite("t_final", &Scenario::t_final)
        .def_readwrite("sample_dt", &Scenario::sample_dt)
        .def_readwrite("integrator", &Scenario::integrator)
        .def("to_json", &scenario_to_json);

    m.def("reference_scenario", &reference_scenario);
    m.def("parse_scenario", [](const std::string& text) { return parse_scenario(text); }, py::arg("text"));
    m.def("load_scenario", &load_scenario, py::arg("path"));

    m.def(
        "run_simulation", [](const Scenario& s) { return telemetry_columns(simulate_nogil(s)); }, py::arg("scenario"),
        "Closed-loop run; returns a dict of numpy columns named like the telemetry CSV header.");
    m.def(
        "simulate",
        [](const Scenario& s, const std::filesystem::path& csv, std::optional<std::filesystem::path> plots) {
            const auto records = simulate_nogil(s);
            write_csv(records, csv);
            if (plots) emit_plots(records, *plots);
            return records.size();
        },
        py::arg("scenario"), py::arg("out"), py::arg("plots") = py::none(),
        "Runs the scenario, writes the telemetry CSV and optionally the SVG plots.");
    m.attr("CSV_HEADER") = std::string(kCsvHeader);

    m.def(
        "verify",
        [](const Scenario& s) {
            VerificationReport report;
            {
                py::gil_scoped_release release;
                report = verify(s);
            }
            py::list checks;
            for (const auto& c : report.checks) {
                py::dict d;
                d["name"] = c.name;
                d["status"] = to_string(c.status);
                d["worst"] = c.worst;
                d["threshold"] = c.threshold;
                d["detail"] = c.detail;
                checks.append(d);
            }
            return py::make_tuple(report.passed(), checks);
        },
        py::arg("scenario"), "Runs the invariant checks; returns (passed, [check dicts]).");

    m.def(
        "sweep",
        [](const Scenario& s, int samples, std::uint64_t seed, double omega_range, double sigma_range, int threads) {
            std::vector<SweepRow> rows;
            {
                py::gil_scoped_release release;
                rows = sweep(s, SweepOptions{samples, seed, omega_range, sigma_range, threads});
            }
            py::list out;
            for (const auto& r : rows) {
                py::dict d;
                d["run"] = r.run;
                d["omega0"] = arr(r.omega0);
                d["sigma_lb0"] = arr(r.sigma_lb0);
                d["converged"] = r.converged;
                d["settling_time"] = r.settling_time ? py::cast(*r.settling_time) : py::none();
                d["max_tau"] = r.max_tau;
                d["error"] = r.error;
                out.append(d);
            }
            return out;
        },
        py::arg("scenario"), py::arg("samples"), py::arg("seed"), py::arg("omega_range"), py::arg("sigma_range"),
        py::arg("threads") = 0);
}
