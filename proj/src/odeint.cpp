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

#include "attsmc/odeint.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <utility>

namespace attsmc {

namespace {

constexpr std::size_t kDim = 6;
using State = std::array<double, kDim>;

State pack(const BodyState& s) {
    return {s.omega[0], s.omega[1], s.omega[2], s.sigma_lb[0], s.sigma_lb[1], s.sigma_lb[2]};
}

BodyState unpack(const State& y) {
    return {{y[0], y[1], y[2]}, {y[3], y[4], y[5]}};
}

bool all_finite(const State& y) {
    return std::all_of(y.begin(), y.end(), [](double x) { return std::isfinite(x); });
}

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0, a75 = -2187.0 / 6784.0,
                 a76 = 11.0 / 84.0;
// Difference between the 5th and embedded 4th order weights.
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                 e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
// Continuous extension.
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

constexpr double kSafety = 0.9;
constexpr double kMinFactor = 0.2;
constexpr double kMaxFactor = 5.0;

// Samples closer than this fraction of sample_dt to t_final collapse onto it.
constexpr double kGridSnap = 1e-9;

class Stepper {
public:
    Stepper(const StateDerivative& f) : f_(f) {}

    State eval(double t, const State& y) const { return pack(f_(t, unpack(y))); }

    // One trial step from (t, y) with k1 = f(t, y). Fills y1, k7 and the error
    // estimate; returns false if any stage went non-finite.
    bool attempt(double t, const State& y, const State& k1, double h) {
        k_[0] = k1;
        State tmp;
        auto combo = [&](std::initializer_list<std::pair<int, double>> terms) {
            for (std::size_t i = 0; i < kDim; ++i) {
                double acc = 0.0;
                for (const auto& [idx, a] : terms) acc += a * k_[idx][i];
                tmp[i] = y[i] + h * acc;
            }
            return tmp;
        };
        k_[1] = eval(t + c2 * h, combo({{0, a21}}));
        k_[2] = eval(t + c3 * h, combo({{0, a31}, {1, a32}}));
        k_[3] = eval(t + c4 * h, combo({{0, a41}, {1, a42}, {2, a43}}));
        k_[4] = eval(t + c5 * h, combo({{0, a51}, {1, a52}, {2, a53}, {3, a54}}));
        k_[5] = eval(t + h, combo({{0, a61}, {1, a62}, {2, a63}, {3, a64}, {4, a65}}));
        y1_ = combo({{0, a71}, {2, a73}, {3, a74}, {4, a75}, {5, a76}});
        if (!all_finite(y1_)) return false;
        k_[6] = eval(t + h, y1_);
        if (!all_finite(k_[6])) return false;
        for (std::size_t i = 0; i < kDim; ++i) {
            err_[i] = h * (e1 * k_[0][i] + e3 * k_[2][i] + e4 * k_[3][i] + e5 * k_[4][i] + e6 * k_[5][i] +
                           e7 * k_[6][i]);
        }
        return true;
    }

    double error_norm(const State& y, const IntegratorConfig& cfg) const {
        double sum = 0.0;
        for (std::size_t i = 0; i < kDim; ++i) {
            const double sc = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(y1_[i]));
            const double r = err_[i] / sc;
            sum += r * r;
        }
        return std::sqrt(sum / static_cast<double>(kDim));
    }

    // Dense output coefficients for the step just accepted.
    void prepare_dense(const State& y, double h) {
        for (std::size_t i = 0; i < kDim; ++i) {
            const double ydiff = y1_[i] - y[i];
            const double bspl = h * k_[0][i] - ydiff;
            r_[0][i] = y[i];
            r_[1][i] = ydiff;
            r_[2][i] = bspl;
            r_[3][i] = ydiff - h * k_[6][i] - bspl;
            r_[4][i] = h * (d1 * k_[0][i] + d3 * k_[2][i] + d4 * k_[3][i] + d5 * k_[4][i] + d6 * k_[5][i] +
                            d7 * k_[6][i]);
        }
    }

    State dense(double theta) const {
        const double theta1 = 1.0 - theta;
        State out;
        for (std::size_t i = 0; i < kDim; ++i)
            out[i] = r_[0][i] +
                     theta * (r_[1][i] + theta1 * (r_[2][i] + theta * (r_[3][i] + theta1 * r_[4][i])));
        return out;
    }

    const State& y1() const { return y1_; }
    const State& k7() const { return k_[6]; }

private:
    const StateDerivative& f_;
    std::array<State, 7> k_{};
    State y1_{};
    State err_{};
    std::array<State, 5> r_{};
};

}  // namespace

void IntegratorConfig::validate() const {
    auto tol_ok = [](double x) { return x > 0.0 && x <= 0.1; };
    if (!tol_ok(rel_tol)) throw std::invalid_argument("integrator.rel_tol must lie in (0, 0.1]");
    if (!tol_ok(abs_tol)) throw std::invalid_argument("integrator.abs_tol must lie in (0, 0.1]");
    if (!(h_min > 0.0)) throw std::invalid_argument("integrator.h_min must be positive");
    if (!(h_max > 0.0) || !std::isfinite(h_max)) throw std::invalid_argument("integrator.h_max must be positive");
    if (!(h_min <= h_init && h_init <= h_max))
        throw std::invalid_argument("integrator.h_init must satisfy h_min <= h_init <= h_max");
    if (max_steps < 1) throw std::invalid_argument("integrator.max_steps must be at least 1");
}

std::vector<double> sample_times(double t_final, double sample_dt) {
    if (!(t_final > 0.0) || !std::isfinite(t_final)) throw std::invalid_argument("t_final must be positive");
    if (!(sample_dt > 0.0) || !std::isfinite(sample_dt)) throw std::invalid_argument("sample_dt must be positive");
    std::vector<double> out;
    for (std::int64_t k = 0;; ++k) {
        const double t = static_cast<double>(k) * sample_dt;
        if (t >= t_final - kGridSnap * sample_dt) break;
        out.push_back(t);
    }
    out.push_back(t_final);
    return out;
}

std::vector<SolutionSample> integrate(const StateDerivative& deriv, const BodyState& y0, double t_final,
                                      const IntegratorConfig& cfg, double sample_dt) {
    cfg.validate();
    const std::vector<double> grid = sample_times(t_final, sample_dt);

    State y = pack(y0);
    if (!all_finite(y)) throw IntegrationError(IntegrationError::Kind::NonFiniteState, 0.0, "initial state is not finite");

    std::vector<SolutionSample> out;
    out.reserve(grid.size());
    out.push_back({0.0, y0});
    std::size_t next = 1;

    Stepper stepper(deriv);
    double t = 0.0;
    State k1 = stepper.eval(t, y);
    if (!all_finite(k1))
        throw IntegrationError(IntegrationError::Kind::NonFiniteState, t, "derivative is not finite at t = 0");

    double h = std::min(cfg.h_init, cfg.h_max);
    bool last_rejected = false;
    std::int64_t steps = 0;

    while (next < grid.size()) {
        if (++steps > cfg.max_steps) {
            throw IntegrationError(IntegrationError::Kind::MaxStepsExceeded, t,
                                   "max_steps exceeded at t = " + std::to_string(t), std::move(out));
        }
        const bool final_step = t + h >= t_final;
        const double h_try = final_step ? t_final - t : h;

        const bool finite = stepper.attempt(t, y, k1, h_try);
        const double err = finite ? stepper.error_norm(y, cfg) : std::numeric_limits<double>::infinity();

        if (!(err <= 1.0)) {
            const double fac = finite ? std::max(kMinFactor, kSafety * std::pow(err, -0.2)) : kMinFactor;
            h = h_try * fac;
            last_rejected = true;
            if (h < cfg.h_min) {
                if (!finite) {
                    throw IntegrationError(IntegrationError::Kind::NonFiniteState, t,
                                           "state became non-finite near t = " + std::to_string(t), std::move(out));
                }
                throw IntegrationError(IntegrationError::Kind::StepUnderflow, t,
                                       "step size fell below h_min at t = " + std::to_string(t), std::move(out));
            }
            continue;
        }

        const double t_new = final_step ? t_final : t + h_try;
        stepper.prepare_dense(y, h_try);
        while (next < grid.size() && grid[next] <= t_new) {
            const double ts = grid[next];
            const State ys = ts == t_new ? stepper.y1() : stepper.dense((ts - t) / h_try);
            out.push_back({ts, unpack(ys)});
            ++next;
        }

        t = t_new;
        y = stepper.y1();
        k1 = stepper.k7();

        double fac = err == 0.0 ? kMaxFactor : kSafety * std::pow(err, -0.2);
        fac = std::clamp(fac, kMinFactor, last_rejected ? 1.0 : kMaxFactor);
        if (!final_step || h_try >= h) h = h_try * fac;
        h = std::min(h, cfg.h_max);
        last_rejected = false;
    }
    return out;
}

StateDerivative closed_loop_derivative(const InertiaTensor& j, const SmcGains& g, const Vec3& sigma_ld,
                                       ControlLaw law) {
    return [j, g, sigma_ld, law = std::move(law)](double, const BodyState& y) {
        const Vec3 sigma_db = attitude_error(y.sigma_lb, sigma_ld);
        const TorqueBreakdown u = law(j, g, y.omega, sigma_db);
        return BodyState{body_accel(j, y.omega, u.tau), mrp_rate(sigma_db, y.omega)};
    };
}

}  // namespace attsmc
