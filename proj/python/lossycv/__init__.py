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

"""Entanglement of remote atomic gases over a lossy channel."""

from lossycv._core import (
    adjudication_report,
    analytic_asymmetric_gamma,
    asymptotic_asymmetric_negativity,
    clone_bound,
    delta_closed_form,
    delta_steady_state,
    epr_source_delta,
    epr_uncertainty,
    fidelity_bk,
    fidelity_symmetric,
    min_delta,
    negativity,
    optimal_r,
    optimize_local_squeezing,
    run_asymmetric,
    run_polygamy,
    run_symmetric,
    sweep,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "adjudication_report",
    "analytic_asymmetric_gamma",
    "asymptotic_asymmetric_negativity",
    "clone_bound",
    "delta_closed_form",
    "delta_steady_state",
    "epr_source_delta",
    "epr_uncertainty",
    "fidelity_bk",
    "fidelity_symmetric",
    "min_delta",
    "negativity",
    "optimal_r",
    "optimize_local_squeezing",
    "run_asymmetric",
    "run_polygamy",
    "run_symmetric",
    "sweep",
    "verify",
]
