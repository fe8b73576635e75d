// Copyright 2026 The lossycv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>

#include "lossycv/acceptance.hpp"
#include "lossycv/adjudication.hpp"
#include "lossycv/asymmetric.hpp"
#include "lossycv/csv.hpp"
#include "lossycv/entanglement.hpp"
#include "lossycv/epr.hpp"
#include "lossycv/polygamy.hpp"
#include "lossycv/sweep.hpp"
#include "lossycv/symmetric.hpp"
#include "lossycv/teleport.hpp"

namespace py = pybind11;
using namespace lossycv;

namespace {

LightBasis basis_from(const std::string& name) {
  if (name == "flipped-vacuum") return LightBasis::kFlippedVacuumPort;
  if (name == "direct") return LightBasis::kDirect;
  throw std::invalid_argument("basis must be 'flipped-vacuum' or 'direct'");
}

Scheme scheme_from(const std::string& name) {
  const auto s = parse_scheme(name);
  if (!s) throw std::invalid_argument("unknown scheme '" + name + "'");
  return *s;
}

ChannelParams params_from(double epsilon, double r, double kappa2, double tau,
                          double t) {
  // tau is given in units of 1 / kappa2, as on the command line.
  return {epsilon, r, kappa2, tau / kappa2, t};
}

py::dict trajectory_dict(const Trajectory& run) {
  const auto n = static_cast<py::ssize_t>(run.size());
  py::array_t<double> t(n), gamma({n, py::ssize_t{4}, py::ssize_t{4}}),
      neg(n), log_neg(n), delta(n);
  auto tv = t.mutable_unchecked<1>();
  auto gv = gamma.mutable_unchecked<3>();
  auto nv = neg.mutable_unchecked<1>();
  auto lv = log_neg.mutable_unchecked<1>();
  auto dv = delta.mutable_unchecked<1>();
  for (py::ssize_t i = 0; i < n; ++i) {
    const auto& p = run[static_cast<std::size_t>(i)];
    tv(i) = p.t;
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) gv(i, a, b) = p.summary.gamma12(a, b);
    }
    nv(i) = p.summary.n;
    lv(i) = p.summary.log_negativity;
    dv(i) = p.summary.epr.delta;
  }
  py::dict out;
  out["t"] = t;
  out["gamma"] = gamma;
  out["N"] = neg;
  out["log_negativity"] = log_neg;
  out["delta"] = delta;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gaussian covariance simulation of entanglement over lossy "
            "channels";

  m.def(
      "run_asymmetric",
      [](double epsilon, double r, double kappa2, double tau, double t,
         long samples, const std::string& basis) {
        RunOptions options;
        options.samples = samples;
        options.basis = basis_from(basis);
        return trajectory_dict(
            run_asymmetric(params_from(epsilon, r, kappa2, tau, t), options));
      },
      py::arg("epsilon"), py::arg("r"), py::arg("kappa2") = 1.0,
      py::arg("tau") = kDefaultKappa2Tau, py::arg("t") = 1.0,
      py::arg("samples") = 100, py::arg("basis") = "flipped-vacuum");

  m.def(
      "run_symmetric",
      [](double epsilon, double r, double kappa2, double tau, double t,
         long samples, const std::string& order) {
        SymmetricOptions options;
        options.samples = samples;
        if (order == "strang") {
          options.order = SubstepOrder::kStrang;
        } else if (order == "sequential") {
          options.order = SubstepOrder::kSequential;
        } else {
          throw std::invalid_argument("order must be 'strang' or 'sequential'");
        }
        return trajectory_dict(
            run_symmetric(params_from(epsilon, r, kappa2, tau, t), options));
      },
      py::arg("epsilon"), py::arg("r"), py::arg("kappa2") = 1.0,
      py::arg("tau") = kDefaultKappa2Tau, py::arg("t") = 1.0,
      py::arg("samples") = 100, py::arg("order") = "strang");

  m.def(
      "run_polygamy",
      [](int m_sites, double r, double kappa2, double tau, double t,
         long samples) {
        PolygamyOptions options;
        options.samples = samples;
        const PolygamyResult res =
            run_polygamy(m_sites, params_from(0.0, r, kappa2, tau, t), options);
        py::list pairs;
        for (const auto& pair : res.pairs) {
          py::dict d = trajectory_dict(pair.trajectory);
          d["receiver"] = pair.receiver;
          pairs.append(d);
        }
        return py::make_tuple(res.effective_epsilon, pairs);
      },
      py::arg("m_sites"), py::arg("r"), py::arg("kappa2") = 1.0,
      py::arg("tau") = 1e-3, py::arg("t") = 1.0, py::arg("samples") = 100);

  m.def(
      "analytic_asymmetric_gamma",
      [](double epsilon, double r, double kappa2, double t,
         const std::string& basis) {
        return Eigen::Matrix4d(
            analytic_asymmetric_gamma(epsilon, r, kappa2, t, basis_from(basis)));
      },
      py::arg("epsilon"), py::arg("r"), py::arg("kappa2") = 1.0,
      py::arg("t") = 1.0, py::arg("basis") = "flipped-vacuum");
  m.def("asymptotic_asymmetric_negativity", &asymptotic_asymmetric_negativity,
        py::arg("epsilon"), py::arg("r"));

  m.def(
      "delta_closed_form",
      [](double epsilon, double r, double kappa2, double t) {
        return delta_closed_form(riccati_coeffs(epsilon, r, kappa2), t);
      },
      py::arg("epsilon"), py::arg("r"), py::arg("kappa2") = 1.0,
      py::arg("t") = 1.0);
  m.def("delta_steady_state", &delta_steady_state, py::arg("epsilon"),
        py::arg("r"));
  m.def("optimal_r", &optimal_r, py::arg("epsilon"));
  m.def("min_delta", &min_delta, py::arg("epsilon"));
  m.def(
      "epr_source_delta",
      [](double epsilon, double r) {
        const EprSourceDelta d = epr_source_delta(epsilon, r);
        return py::make_tuple(d.delta, d.infinite_squeezing_bound);
      },
      py::arg("epsilon"), py::arg("r"));

  m.def(
      "negativity",
      [](const Eigen::Matrix4d& gamma) {
        const Negativity n = negativity(gamma);
        return py::make_tuple(n.n, n.log_negativity);
      },
      py::arg("gamma"));
  m.def(
      "epr_uncertainty",
      [](const Eigen::Matrix4d& gamma) {
        const EprUncertainty e = epr_uncertainty(gamma);
        return py::make_tuple(e.delta, e.x_half, e.p_half);
      },
      py::arg("gamma"));

  m.def("fidelity_symmetric", &fidelity_symmetric, py::arg("delta"));
  m.def("fidelity_bk", &fidelity_bk, py::arg("var_p_plus"),
        py::arg("var_x_minus"));
  m.def(
      "optimize_local_squeezing",
      [](double var_p_plus, double var_x_minus) {
        const LocalSqueezing s = optimize_local_squeezing(var_p_plus, var_x_minus);
        return py::make_tuple(s.s_opt, s.f_opt);
      },
      py::arg("var_p_plus"), py::arg("var_x_minus"));
  m.def("clone_bound", &clone_bound, py::arg("m_sites"));

  m.def(
      "sweep",
      [](const std::string& scheme, const std::string& grid_eps,
         const std::string& grid_r, double kappa2, std::optional<double> t,
         bool envelope, int m_sites, unsigned jobs) {
        SweepConfig config;
        config.scheme = scheme_from(scheme);
        config.epsilon = parse_grid_axis(grid_eps, false);
        config.r = parse_grid_axis(grid_r, true);
        config.kappa2 = kappa2;
        config.t = t;
        config.envelope = envelope;
        config.m_sites = m_sites;
        config.jobs = jobs;
        py::gil_scoped_release release;
        return emit_records(run_sweep(config));
      },
      py::arg("scheme") = "asymmetric", py::arg("grid_eps") = "0.01:0.99:50",
      py::arg("grid_r") = "0.1:10:50", py::arg("kappa2") = 1.0,
      py::arg("t") = py::none(), py::arg("envelope") = false,
      py::arg("m_sites") = 2, py::arg("jobs") = 0u,
      "Sweep CSV text with one record per grid point.");

  m.def("adjudication_report", [] { return format_report(adjudicate()); });

  m.def(
      "verify",
      [](const std::string& only) {
        py::list out;
        for (const auto& c : acceptance_criteria()) {
          if (!criterion_selected(c, only)) continue;
          const CriterionResult r = run_criterion(c);
          out.append(py::make_tuple(r.number, r.id, r.passed()));
        }
        return out;
      },
      py::arg("only") = "");
}
