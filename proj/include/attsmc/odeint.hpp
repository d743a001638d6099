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

#ifndef ATTSMC_ODEINT_HPP
#define ATTSMC_ODEINT_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "attsmc/attitude.hpp"
#include "attsmc/smc.hpp"

namespace attsmc {

/// Error-control and step-size settings for the adaptive integrator.
struct IntegratorConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double h_init = 1e-3;
    double h_min = 1e-12;
    double h_max = 1.0;
    std::int64_t max_steps = 10'000'000;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

struct SolutionSample {
    double t = 0.0;
    BodyState state;
};

/// Time derivative of the body state. The returned BodyState holds
/// (omega_dot, sigma_lb_dot).
using StateDerivative = std::function<BodyState(double t, const BodyState& y)>;

class IntegrationError : public std::runtime_error {
public:
    enum class Kind { StepUnderflow, MaxStepsExceeded, NonFiniteState };

    IntegrationError(Kind kind, double t, const std::string& what, std::vector<SolutionSample> partial = {})
        : std::runtime_error(what), kind_(kind), t_(t), partial_(std::move(partial)) {}

    Kind kind() const { return kind_; }
    /// Time reached when the failure was detected.
    double time() const { return t_; }
    /// Samples produced before the failure.
    const std::vector<SolutionSample>& partial() const { return partial_; }

private:
    Kind kind_;
    double t_;
    std::vector<SolutionSample> partial_;
};

/**
 * Integrates y' = deriv(t, y) from t = 0 to t_final with the Dormand-Prince
 * 5(4) embedded pair.
 *
 * A step is accepted when the RMS of error_i / (abs_tol + rel_tol max(|y_i|,
 * |y1_i|)) is at most one. The next step is scaled by 0.9 err^(-1/5), clamped
 * to [0.2, 5] (no growth right after a rejection) and capped at h_max. Samples
 * are produced at t = k sample_dt, k = 0, 1, ..., plus t_final itself, using
 * the 4th-order continuous extension of the pair. The last integration step
 * is clipped to land on t_final exactly.
 *
 * Throws std::invalid_argument on bad arguments and IntegrationError when the
 * step size underflows h_min, max_steps attempts are used up or the state
 * stops being finite.
 */
std::vector<SolutionSample> integrate(const StateDerivative& deriv, const BodyState& y0,
                                      double t_final, const IntegratorConfig& cfg,
                                      double sample_dt);

/// Output grid used by integrate(): k sample_dt below t_final, then t_final.
std::vector<double> sample_times(double t_final, double sample_dt);

/**
 * Closed-loop vector field for a constant target attitude and zero target
 * rate: omega_dot from Euler's equation under `law`, sigma_lb_dot from the MRP
 * kinematics of the error (equal to the error rate since sigma_ld is fixed).
 */
StateDerivative closed_loop_derivative(const InertiaTensor& j, const SmcGains& g, const Vec3& sigma_ld,
                                       ControlLaw law = sliding_mode_law());

}  // namespace attsmc

#endif  // ATTSMC_ODEINT_HPP
