# Copyright 2026 The mbqc-gflow Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Flow, cone, simulation and entanglement analysis of open graph states."""

from ._core import (
    BudgetExceeded,
    GFlow,
    InconsistencyError,
    InvalidState,
    MeasurementPattern,
    NotDeterministic,
    OpenGraph,
    ParseError,
    Plane,
    check_determinism,
    correction_dependencies,
    cut_rank,
    entanglement_width,
    find_causal_flow,
    find_gflow,
    fixture,
    fixture_names,
    flow_entanglement_bound,
    flow_wires,
    forward_cone,
    is_d_happy,
    max_forward_cone,
    measurement_rounds,
    oracle_unitary,
    run_cli,
    simulate,
    structural_entanglement,
    verify_gflow,
)

__all__ = [name for name in dir() if not name.startswith("_")]
