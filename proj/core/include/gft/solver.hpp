#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gft/optimality.hpp"

namespace gft {

/// Step-size sequence {alpha_k} for the subgradient iteration, with its
/// declared series sums: convergence needs sum alpha_k = inf and
/// ell^2 = sum alpha_k^2 < inf.
class StepSchedule {
 public:
  /// alpha_k = 1/k.
  static StepSchedule harmonic();
  /// alpha_k = c/k, c > 0; ell^2 = c^2 pi^2 / 6.
  static StepSchedule scaled_harmonic(double c);
  /// Caller-supplied alpha(k) for k >= 1 with truthfully declared sums
  /// (ell_squared may be +inf, in which case no error bound exists).
  static StepSchedule custom(std::function<double(std::size_t)> alpha,
                             bool sum_diverges, double ell_squared);

  double alpha(std::size_t k) const;  // k >= 1; must be > 0
  bool sum_diverges() const { return sum_diverges_; }
  double ell_squared() const { return ell_squared_; }
  /// sum_{k=1..K} alpha_k.
  double partial_sum(std::size_t K) const;

 private:
  StepSchedule() = default;
  std::function<double(std::size_t)> alpha_;
  bool sum_diverges_ = false;
  double ell_squared_ = 0.0;
};

enum class StopReason { max_iters, residual_tol, value_plateau };

/// Stop when the running best value improved by less than min_improvement
/// over the trailing window of iterations.
struct PlateauRule {
  std::size_t window;
  double min_improvement;
};

struct SolveOptions {
  std::size_t max_iters = 100000;
  /// Record a trace row every trace_every iterations (0 = no trace).  The
  /// start (k = 0) and the final iterate are always included in a trace.
  std::size_t trace_every = 0;
  /// When set, run certificate_check periodically and stop once the
  /// residual is within this tolerance.
  std::optional<double> residual_tol;
  std::optional<PlateauRule> plateau;
  /// Abort with NonFiniteIterateError when any coordinate passes this bound.
  double divergence_guard = 1e12;
};

struct TraceRow {
  std::size_t k;
  Vec x;
  double value;       // T(x_k)
  double best_value;  // V_k
};

struct SolveResult {
  Vec best_point;
  double best_value = 0.0;
  std::size_t iterations_run = 0;
  std::vector<TraceRow> trace;
  StopReason stop_reason = StopReason::max_iters;
  std::optional<double> error_bound;  // not filled by solve (see error_bound())
  Vec final_point;
  /// sufficient when every target is convex (the convergence theory
  /// applies); necessary_only when a nonconvex target is present.
  CertificateMode guarantee = CertificateMode::sufficient;
  std::vector<std::string> warnings;
};

/// Subgradient iteration x_k = x_{k-1} - alpha_k sum_i v_i(x_{k-1}) with
/// v_i = mt_subgradient.  Iteration k reports the point reached after k
/// updates (matching the reference numerical traces); V_k is the running
/// minimum of T over the start and all iterates, and the best recorded
/// point, never the last iterate, is returned.
SolveResult solve(const Problem& p, const Vec& start, const StepSchedule& schedule,
                  const SolveOptions& options = {});

/// A-priori bound V_K - V* <= (d^2 + L^2 ell^2) / (2 sum_{k<=K} alpha_k).
/// Throws InfiniteEllSquaredError when the schedule declares ell^2 = inf.
double error_bound(const StepSchedule& schedule, std::size_t K,
                   double dist_start_to_solutions, double lipschitz);

/// Global Lipschitz constant of T: n * L_F with L_F = 1 for both supported
/// dynamics (their gauges are bounded by the Euclidean norm).
double lipschitz_constant(const Problem& p);

}  // namespace gft
