# Copyright 2026 The attsmc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Sliding-mode spacecraft attitude control with MRP feedback."""

from ._core import (
    CSV_HEADER,
    InertiaTensor,
    IntegrationError,
    IntegratorConfig,
    Scenario,
    ScenarioError,
    SingularMatrixError,
    SmcGains,
    attitude_error,
    body_accel,
    cross,
    equivalent_control,
    is_symmetric_positive_definite,
    load_scenario,
    lyapunov_sample,
    mrp_g_matrix,
    mrp_identity_residual,
    mrp_rate,
    parse_scenario,
    reaching_control,
    reference_scenario,
    run_simulation,
    simulate,
    skew,
    sliding_variable,
    solve3,
    sweep,
    total_torque,
    verify,
)

__all__ = [
    "CSV_HEADER",
    "InertiaTensor",
    "IntegrationError",
    "IntegratorConfig",
    "Scenario",
    "ScenarioError",
    "SingularMatrixError",
    "SmcGains",
    "attitude_error",
    "body_accel",
    "cross",
    "equivalent_control",
    "is_symmetric_positive_definite",
    "load_scenario",
    "lyapunov_sample",
    "mrp_g_matrix",
    "mrp_identity_residual",
    "mrp_rate",
    "parse_scenario",
    "reaching_control",
    "reference_scenario",
    "run_simulation",
    "simulate",
    "skew",
    "sliding_variable",
    "solve3",
    "sweep",
    "total_torque",
    "verify",
]
