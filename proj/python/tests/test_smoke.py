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

import json
import math

import numpy as np
import pytest

import mbqc_gflow as mg


def test_path_flow_and_unitary():
    graph, declared = mg.fixture("path-2")
    found = mg.find_gflow(graph)
    assert found == declared
    assert mg.verify_gflow(graph, found) == []
    pattern = mg.MeasurementPattern.xy(graph, {0: 0.0})
    result = mg.simulate(graph, found, pattern)
    hadamard = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
    assert np.allclose(result["unitary"], hadamard, atol=1e-12)
    assert np.allclose(mg.oracle_unitary(graph, found, pattern), hadamard, atol=1e-12)


def test_simulation_matches_oracle_on_cluster():
    graph, gflow = mg.fixture("cluster-2x3")
    rng = np.random.default_rng(3)
    for _ in range(5):
        angles = {v: float(a) for v, a in zip(graph.measured(), rng.uniform(0, 2 * math.pi, 4))}
        pattern = mg.MeasurementPattern.xy(graph, angles)
        sim = mg.simulate(graph, gflow, pattern)
        assert np.max(np.abs(sim["unitary"] - mg.oracle_unitary(graph, gflow, pattern))) < 1e-9
        assert sim["cone_bound_holds"]
        report = mg.check_determinism(graph, gflow, pattern, seed=7)
        assert report["deterministic"] and report["equiprobable"]


def test_negative_and_errors():
    graph, gflow = mg.fixture("bottleneck")
    assert gflow is None
    assert mg.find_gflow(graph) is None
    assert mg.find_causal_flow(graph) is None
    with pytest.raises(mg.BudgetExceeded):
        mg.structural_entanglement(mg.fixture("cluster-4x4")[0])
    with pytest.raises(ValueError):
        mg.OpenGraph(2, [(0, 0)], [], [1])


def test_cones_and_bounds():
    graph, gflow = mg.fixture("cluster-4x4")
    assert mg.max_forward_cone(graph, gflow)[1] == 12
    path, path_flow = mg.fixture("path-4")
    assert mg.flow_entanglement_bound(path, path_flow)["bound"] == 1
    assert mg.structural_entanglement(path) == 1
    assert mg.entanglement_width(path) == 1
    assert mg.cut_rank(path, [0, 1]) == 1
    assert mg.is_d_happy(path)[0]


def test_cli_round_trip():
    code, out, _ = mg.run_cli(["flow", "find", "--fixture", "path-5"])
    assert code == 0
    assert json.loads(out)["depth"] == 4
    code, out, _ = mg.run_cli(["flow", "find", "--fixture", "bottleneck"])
    assert code == 1
    assert json.loads(out)["gflow"] is None
