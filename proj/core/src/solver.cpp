#include "gft/solver.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <string>

namespace gft {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

StepSchedule StepSchedule::harmonic() { return scaled_harmonic(1.0); }

StepSchedule StepSchedule::scaled_harmonic(double c) {
  if (!std::isfinite(c) || c <= 0.0)
    throw ValidationError("StepSchedule: scale must be finite and > 0");
  StepSchedule s;
  s.alpha_ = [c](std::size_t k) { return c / static_cast<double>(k); };
  s.sum_diverges_ = true;
  s.ell_squared_ = c * c * std::numbers::pi * std::numbers::pi / 6.0;
  return s;
}

StepSchedule StepSchedule::custom(std::function<double(std::size_t)> alpha,
                                  bool sum_diverges, double ell_squared) {
  if (!alpha) throw ValidationError("StepSchedule: alpha function required");
  if (std::isnan(ell_squared) || ell_squared < 0.0)
    throw ValidationError("StepSchedule: ell_squared must be >= 0 (or +inf)");
  StepSchedule s;
  s.alpha_ = std::move(alpha);
  s.sum_diverges_ = sum_diverges;
  s.ell_squared_ = ell_squared;
  return s;
}

double StepSchedule::alpha(std::size_t k) const {
  if (k == 0) throw ValidationError("StepSchedule: steps are indexed from 1");
  const double a = alpha_(k);
  if (!std::isfinite(a) || a <= 0.0)
    throw ValidationError("StepSchedule: alpha_" + std::to_string(k) +
                          " must be finite and > 0");
  return a;
}

double StepSchedule::partial_sum(std::size_t K) const {
  double s = 0.0;
  for (std::size_t k = 1; k <= K; ++k) s += alpha(k);
  return s;
}

SolveResult solve(const Problem& p, const Vec& start, const StepSchedule& schedule,
                  const SolveOptions& options) {
  detail::require_point(start, p.dim(), "solve");
  if (options.residual_tol && (!(*options.residual_tol >= 0.0) ||
                               !std::isfinite(*options.residual_tol)))
    throw ValidationError("solve: residual_tol must be finite and >= 0");

  SolveResult res;
  res.guarantee = p.all_convex() ? CertificateMode::sufficient
                                 : CertificateMode::necessary_only;
  if (!p.any_bounded_target())
    res.warnings.push_back(
        "no bounded target: an optimal solution may not exist");

  const std::size_t check_every =
      options.trace_every > 0 ? options.trace_every : 100;

  Vec x = start;
  double value = total_value(p, x);
  res.best_value = value;
  res.best_point = x;
  if (options.trace_every > 0) res.trace.push_back({0, x, value, value});

  std::deque<double> best_history;  // V over the trailing plateau window
  if (options.plateau) best_history.push_back(res.best_value);

  std::size_t k = 0;
  while (k < options.max_iters) {
    ++k;
    Vec g(p.dim());
    for (const Target& t : p.targets())
      g += mt_subgradient(p.dynamics(), t, x).vector;
    x -= g * schedule.alpha(k);

    for (std::size_t i = 0; i < x.dim(); ++i) {
      if (!(std::abs(x[i]) <= options.divergence_guard))
        throw NonFiniteIterateError(
            "solve: iterate " + std::to_string(k) + " coordinate " +
            std::to_string(i) + " left the guard region (|x| > " +
            std::to_string(options.divergence_guard) + ")");
    }

    value = total_value(p, x);
    if (value < res.best_value) {
      res.best_value = value;
      res.best_point = x;
    }
    res.iterations_run = k;
    if (options.trace_every > 0 && k % options.trace_every == 0)
      res.trace.push_back({k, x, value, res.best_value});

    if (options.plateau) {
      best_history.push_back(res.best_value);
      if (best_history.size() > options.plateau->window + 1) best_history.pop_front();
      if (best_history.size() == options.plateau->window + 1 &&
          best_history.front() - res.best_value < options.plateau->min_improvement) {
        res.stop_reason = StopReason::value_plateau;
        break;
      }
    }

    if (options.residual_tol && k % check_every == 0) {
      try {
        if (certificate_check(p, x, *options.residual_tol).holds) {
          res.stop_reason = StopReason::residual_tol;
          break;
        }
      } catch (const MultipleActiveTargetsError&) {
        // Overlapping targets cannot be certified; keep iterating.
      }
    }
  }

  res.final_point = x;
  if (options.trace_every > 0 && res.trace.back().k != k)
    res.trace.push_back({k, x, value, res.best_value});
  return res;
}

double error_bound(const StepSchedule& schedule, std::size_t K,
                   double dist_start_to_solutions, double lipschitz) {
  if (K == 0) throw ValidationError("error_bound: K must be >= 1");
  if (!(dist_start_to_solutions >= 0.0) || !std::isfinite(dist_start_to_solutions))
    throw ValidationError("error_bound: distance must be finite and >= 0");
  if (!(lipschitz >= 0.0) || !std::isfinite(lipschitz))
    throw ValidationError("error_bound: Lipschitz constant must be finite and >= 0");
  const double l2 = schedule.ell_squared();
  if (!(l2 < kInf))
    throw InfiniteEllSquaredError(
        "error_bound: schedule declares ell^2 = inf; no finite bound");
  const double d = dist_start_to_solutions;
  return (d * d + lipschitz * lipschitz * l2) / (2.0 * schedule.partial_sum(K));
}

double lipschitz_constant(const Problem& p) {
  return static_cast<double>(p.size());
}

}  // namespace gft
