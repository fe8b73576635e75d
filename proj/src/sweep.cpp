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

#include "lossycv/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "lossycv/asymmetric.hpp"
#include "lossycv/entanglement.hpp"
#include "lossycv/epr.hpp"
#include "lossycv/symmetric.hpp"
#include "lossycv/teleport.hpp"

namespace lossycv {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

double parse_number(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("bad " + std::string(what) + " '" +
                                std::string(text) + "'");
  }
  return v;
}

// Records for a channel whose two EPR halves are equal.
void fill_symmetric(SweepRecord& rec, double delta) {
  rec.delta = delta;
  rec.n = std::min(1.0, delta);
  rec.log_negativity = -std::log2(rec.n);
  rec.f_symmetric = 1.0 / (1.0 + delta);
  rec.f_bk_opt = rec.f_symmetric;
}

void fill_asymmetric(SweepRecord& rec, double kappa2) {
  if (rec.t) {
    const Eigen::Matrix4d g =
        analytic_asymmetric_gamma(rec.epsilon, rec.r, kappa2, *rec.t);
    const TwoModeSummary s = summarize(g);
    rec.n = s.n;
    rec.log_negativity = s.log_negativity;
    rec.delta = s.epr.delta;
    rec.f_symmetric = s.delta ? 1.0 / (1.0 + *s.delta) : kNan;
    rec.f_bk_opt = fidelity_report(g).f_opt;
    return;
  }
  // Long-time limit. 2 Var(x-) = 1 + alpha t and 1 / (2 Var(p+)) = 1 + beta t
  // exactly, so the rates follow from the closed forms at kappa2 t = 1.
  const EprUncertainty unit =
      epr_uncertainty(analytic_asymmetric_gamma(rec.epsilon, rec.r, 1.0, 1.0));
  const double alpha = unit.x_half - 1.0;
  const double beta = 1.0 / unit.p_half - 1.0;
  rec.n = asymptotic_asymmetric_negativity(rec.epsilon, rec.r);
  rec.log_negativity = -std::log2(rec.n);
  rec.delta = alpha > 1e-15 ? kInf : 0.5;
  rec.f_symmetric = kNan;
  rec.f_bk_opt = 1.0 / (1.0 + std::sqrt(std::max(0.0, alpha) / beta));
}

// Uncapped quantity whose minimum over r defines the envelope.
double envelope_score(Scheme scheme, double eps, double r, double kappa2,
                      std::optional<double> t) {
  switch (scheme) {
    case Scheme::kAsymmetric:
    case Scheme::kPolygamy: {
      if (!t) {
        const double num = eps * (1.0 - eps + r * eps);
        const double den = r * (2.0 - 3.0 * eps) * (2.0 - 3.0 * eps) +
                           9.0 * eps * (1.0 - eps);
        return std::sqrt(num / den);
      }
      return symplectic_eigenvalues(partial_transpose(
          analytic_asymmetric_gamma(eps, r, kappa2, *t)))(0);
    }
    case Scheme::kSymmetric:
      return t ? delta_closed_form(riccati_coeffs(eps, r, kappa2), *t)
               : delta_steady_state(eps, r);
    case Scheme::kEpr:
      return epr_source_delta(eps, r).delta;
  }
  return kNan;
}

double envelope_argmin(Scheme scheme, double eps, const GridAxis& axis,
                       double kappa2, std::optional<double> t) {
  const std::vector<double> rs = axis.values();
  auto f = [&](double r) { return envelope_score(scheme, eps, r, kappa2, t); };
  std::size_t best = 0;
  double best_val = f(rs[0]);
  for (std::size_t i = 1; i < rs.size(); ++i) {
    const double v = f(rs[i]);
    if (v < best_val) {
      best = i;
      best_val = v;
    }
  }
  if (rs.size() < 2) return rs[best];
  // Refine between the neighbours of the best grid point.
  double lo = std::log(rs[best == 0 ? 0 : best - 1]);
  double hi = std::log(rs[std::min(best + 1, rs.size() - 1)]);
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - golden * (hi - lo);
  double d = lo + golden * (hi - lo);
  double fc = f(std::exp(c));
  double fd = f(std::exp(d));
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - golden * (hi - lo);
      fc = f(std::exp(c));
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + golden * (hi - lo);
      fd = f(std::exp(d));
    }
  }
  const double r_star = std::exp(0.5 * (lo + hi));
  return f(r_star) < best_val ? r_star : rs[best];
}

void run_parallel(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& work) {
  unsigned workers = jobs != 0 ? jobs : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto loop = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        work(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(loop);
  loop();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

const char* to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kAsymmetric: return "asymmetric";
    case Scheme::kSymmetric: return "symmetric";
    case Scheme::kEpr: return "epr";
    case Scheme::kPolygamy: return "polygamy";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (Scheme s : {Scheme::kAsymmetric, Scheme::kSymmetric, Scheme::kEpr,
                   Scheme::kPolygamy}) {
    if (name == to_string(s)) return s;
  }
  return std::nullopt;
}

std::vector<double> GridAxis::values() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double f = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    out.push_back(log_spaced
                      ? std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo)))
                      : lo + f * (hi - lo));
  }
  if (n > 1) out.back() = hi;
  return out;
}

GridAxis parse_grid_axis(std::string_view spec, bool log_spaced) {
  const auto a = spec.find(':');
  const auto b = a == std::string_view::npos ? a : spec.find(':', a + 1);
  if (b == std::string_view::npos ||
      spec.find(':', b + 1) != std::string_view::npos) {
    throw std::invalid_argument("grid must look like lo:hi:n, got '" +
                                std::string(spec) + "'");
  }
  GridAxis axis;
  axis.lo = parse_number(spec.substr(0, a), "grid lower bound");
  axis.hi = parse_number(spec.substr(a + 1, b - a - 1), "grid upper bound");
  const double n = parse_number(spec.substr(b + 1), "grid point count");
  if (!(n >= 1.0) || n != std::floor(n) || n > 1e7) {
    throw std::invalid_argument("grid point count must be a positive integer");
  }
  axis.n = static_cast<int>(n);
  axis.log_spaced = log_spaced;
  if (!(axis.lo <= axis.hi) || !std::isfinite(axis.lo) ||
      !std::isfinite(axis.hi)) {
    throw std::invalid_argument("grid needs finite lo <= hi");
  }
  if (log_spaced && !(axis.lo > 0.0)) {
    throw std::invalid_argument("log-spaced grid needs lo > 0");
  }
  return axis;
}

SweepRecord evaluate_point(Scheme scheme, double epsilon, double r,
                           double kappa2, std::optional<double> t) {
  if (!(epsilon >= 0.0 && epsilon < 1.0) || !(r > 0.0) || !(kappa2 > 0.0)) {
    throw std::domain_error("evaluate_point: need 0 <= eps < 1, r > 0, "
                            "kappa2 > 0");
  }
  if (t && !(*t >= 0.0)) {
    throw std::domain_error("evaluate_point: t must be non-negative");
  }
  SweepRecord rec;
  rec.scheme = scheme;
  rec.epsilon = epsilon;
  rec.r = r;
  rec.t = t;
  switch (scheme) {
    case Scheme::kAsymmetric:
    case Scheme::kPolygamy:
      fill_asymmetric(rec, kappa2);
      break;
    case Scheme::kSymmetric:
      fill_symmetric(rec, t ? delta_closed_form(
                                  riccati_coeffs(epsilon, r, kappa2), *t)
                            : delta_steady_state(epsilon, r));
      break;
    case Scheme::kEpr:
      fill_symmetric(rec, epr_source_delta(epsilon, r).delta);
      break;
  }
  return rec;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  if (config.scheme == Scheme::kPolygamy && config.m_sites < 2) {
    throw std::invalid_argument("m-sites must be at least 2");
  }
  if (!(config.kappa2 > 0.0)) {
    throw std::invalid_argument("kappa2 must be positive");
  }
  std::optional<double> t = config.t;
  if (!t && config.asymptotic_time) t = *config.asymptotic_time / config.kappa2;

  const std::vector<double> eps =
      config.scheme == Scheme::kPolygamy
          ? std::vector<double>{1.0 - 1.0 / config.m_sites}
          : config.epsilon.values();
  const std::vector<double> rs = config.r.values();
  for (double e : eps) {
    if (!(e >= 0.0 && e < 1.0)) {
      throw std::invalid_argument("epsilon grid must lie in [0, 1)");
    }
  }
  if (!(config.r.lo > 0.0)) {
    throw std::invalid_argument("r grid must be positive");
  }

  const std::size_t per_eps = config.envelope ? 1 : rs.size();
  std::vector<SweepRecord> out(eps.size() * per_eps);
  run_parallel(out.size(), config.jobs, [&](std::size_t i) {
    const double e = eps[i / per_eps];
    const double r =
        config.envelope
            ? envelope_argmin(config.scheme, e, config.r, config.kappa2, t)
            : rs[i % per_eps];
    out[i] = evaluate_point(config.scheme, e, r, config.kappa2, t);
  });
  return out;
}

}  // namespace lossycv
