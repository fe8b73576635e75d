# Copyright 2026 The lossycv Authors
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

import math

import numpy as np
import pytest

import lossycv


def test_asymmetric_run_matches_closed_form():
    run = lossycv.run_asymmetric(0.3, 2.0, tau=1e-4, t=1.0, samples=4)
    assert run["gamma"].shape == (5, 4, 4)
    want = lossycv.analytic_asymmetric_gamma(0.3, 2.0, t=1.0)
    assert np.allclose(run["gamma"][-1], want, atol=1e-9)
    assert run["gamma"][-1][2, 2] == pytest.approx(2.19, abs=1e-9)


def test_symmetric_run_follows_riccati():
    run = lossycv.run_symmetric(0.4, 3.0, tau=1e-3, samples=5)
    exact = [lossycv.delta_closed_form(0.4, 3.0, t=t) for t in run["t"]]
    assert np.allclose(run["delta"], exact, rtol=1e-5)


def test_closed_forms():
    assert lossycv.optimal_r(0.2) == pytest.approx(4.0)
    assert lossycv.min_delta(0.3) == pytest.approx(0.3)
    assert lossycv.epr_source_delta(0.36, 10.0)[0] == pytest.approx(0.28)
    assert lossycv.asymptotic_asymmetric_negativity(1 / 3, 7.0) == pytest.approx(1 / 3)
    s, f = lossycv.optimize_local_squeezing(0.1, 0.4)
    assert (s, f) == (pytest.approx(2.0), pytest.approx(1 / 1.4))
    assert lossycv.clone_bound(2) == pytest.approx(2 / 3)
    n, log_n = lossycv.negativity(np.eye(4))
    assert n == pytest.approx(1.0) and log_n == pytest.approx(0.0, abs=1e-12)


def test_polygamy_pairs_agree():
    eps, pairs = lossycv.run_polygamy(3, 1.0, tau=1e-2, samples=2)
    assert eps == pytest.approx(2 / 3)
    assert len(pairs) == 3
    assert np.allclose(pairs[0]["N"], pairs[2]["N"], atol=1e-12)


def test_sweep_csv_text():
    text = lossycv.sweep("epr", grid_eps="0:0.5:2", grid_r="1:4:2")
    lines = text.strip().splitlines()
    assert lines[0].startswith("scheme,epsilon,r,t,N")
    assert len(lines) == 5
    assert math.isclose(float(lines[2].split(",")[4]), 0.25)


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        lossycv.run_asymmetric(1.0, 2.0)
    with pytest.raises(ValueError):
        lossycv.sweep("nonsense")
    with pytest.raises(ValueError):
        lossycv.fidelity_symmetric(0.0)


def test_verify_subset():
    rows = lossycv.verify("epr")
    assert rows == [(6, "epr-reference", True)]
