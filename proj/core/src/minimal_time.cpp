#include "gft/minimal_time.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gft {

namespace {

constexpr double kBoundaryEps = 1e-12;

const char* kind_name(TargetKind k) {
  switch (k) {
    case TargetKind::singleton: return "singleton";
    case TargetKind::ball: return "ball";
    case TargetKind::box: return "box";
    case TargetKind::axis_box: return "axis_box";
    case TargetKind::interval: return "interval";
    case TargetKind::abs_epigraph: return "abs_epigraph";
  }
  return "?";
}

void require_supported(Dynamics f, const Target& t, const char* what) {
  if (!pair_supported(f, t))
    throw UnsupportedPairError(std::string(what) + ": unit_box dynamics with " +
                               kind_name(t.kind()) +
                               " target has no closed form here");
}

/// Per-axis Chebyshev gaps max(|x_i - c_i| - r_i, 0) for the box-like kinds
/// under UnitBox dynamics; Singleton counts as a zero-radius box.
struct ChebyshevGaps {
  double value = 0.0;   // max gap
  std::size_t axis = 0; // smallest axis attaining it
  double sign = 1.0;    // sign(x_axis - clamp_axis)
};

ChebyshevGaps chebyshev_gaps(const Target& t, const Vec& x) {
  ChebyshevGaps out;
  const std::size_t d = t.dim();
  for (std::size_t i = 0; i < d; ++i) {
    double lo, hi;
    switch (t.kind()) {
      case TargetKind::singleton: {
        const auto& s = std::get<Singleton>(t.shape());
        lo = hi = s.point[i];
        break;
      }
      case TargetKind::box: {
        const auto& b = std::get<Box>(t.shape());
        lo = b.center[i] - b.radius;
        hi = b.center[i] + b.radius;
        break;
      }
      default: {
        const auto& b = std::get<AxisBox>(t.shape());
        lo = b.center[i] - b.radii[i];
        hi = b.center[i] + b.radii[i];
        break;
      }
    }
    double gap = 0.0;
    double sign = 1.0;
    if (x[i] > hi) {
      gap = x[i] - hi;
    } else if (x[i] < lo) {
      gap = lo - x[i];
      sign = -1.0;
    }
    if (gap > out.value) {
      out.value = gap;
      out.axis = i;
      out.sign = sign;
    }
  }
  return out;
}

}  // namespace

bool pair_supported(Dynamics f, const Target& t) {
  if (f == Dynamics::euclidean_ball) return true;
  const TargetKind k = t.kind();
  return k == TargetKind::box || k == TargetKind::axis_box ||
         k == TargetKind::singleton;
}

double minimal_time(Dynamics f, const Target& t, const Vec& x) {
  detail::require_point(x, t.dim(), "minimal_time");
  require_supported(f, t, "minimal_time");
  if (f == Dynamics::euclidean_ball) return euclidean_distance(t, x);
  return chebyshev_gaps(t, x).value;
}

std::vector<Vec> generalized_project(Dynamics f, const Target& t, const Vec& x) {
  detail::require_point(x, t.dim(), "generalized_project");
  require_supported(f, t, "generalized_project");
  if (f == Dynamics::euclidean_ball) return euclidean_project(t, x);
  if (target_contains(t, x, 0.0)) return {x};
  if (t.kind() == TargetKind::singleton)
    return {std::get<Singleton>(t.shape()).point};
  // Coordinatewise clamp: every per-axis gap is <= the Chebyshev distance,
  // so the clamp lies in x + T(x) F.
  const std::size_t d = t.dim();
  Vec p(d);
  for (std::size_t i = 0; i < d; ++i) {
    double lo, hi;
    if (t.kind() == TargetKind::box) {
      const auto& b = std::get<Box>(t.shape());
      lo = b.center[i] - b.radius;
      hi = b.center[i] + b.radius;
    } else {
      const auto& b = std::get<AxisBox>(t.shape());
      lo = b.center[i] - b.radii[i];
      hi = b.center[i] + b.radii[i];
    }
    p[i] = std::min(std::max(x[i], lo), hi);
  }
  return {p};
}

MtSubgradient mt_subgradient(Dynamics f, const Target& t, const Vec& x) {
  detail::require_point(x, t.dim(), "mt_subgradient");
  require_supported(f, t, "mt_subgradient");
  const std::size_t d = t.dim();

  if (target_contains(t, x, 0.0)) {
    const Regime r = boundary_distance(t, x) <= kBoundaryEps
                         ? Regime::in_set_boundary
                         : Regime::in_set_interior;
    return {Vec(d), r, std::nullopt};
  }

  if (f == Dynamics::unit_box) {
    const ChebyshevGaps g = chebyshev_gaps(t, x);
    Vec w = generalized_project(f, t, x).front();
    return {Vec::axis(d, g.axis, g.sign), Regime::out_of_set, std::move(w)};
  }

  // Euclidean case: unit vector from the (first) projection toward x.  For
  // balls this is (x - c)/||x - c||, the form used by the disk iteration.
  if (t.kind() == TargetKind::ball) {
    const auto& b = std::get<Ball>(t.shape());
    const Vec u = x - b.center;
    const double n = norm(u);
    Vec w = b.center + u * (b.radius / n);
    return {u / n, Regime::out_of_set, std::move(w)};
  }
  Vec w = euclidean_project(t, x).front();
  const Vec u = x - w;
  return {u / norm(u), Regime::out_of_set, std::move(w)};
}

double total_value(const Problem& p, const Vec& x) {
  detail::require_point(x, p.dim(), "total_value");
  double s = 0.0;
  for (const Target& t : p.targets()) s += minimal_time(p.dynamics(), t, x);
  return s;
}

Problem::Problem(Dynamics dynamics, std::vector<Target> targets)
    : dynamics_(dynamics), targets_(std::move(targets)) {
  if (targets_.empty()) throw ValidationError("Problem: needs at least one target");
  dim_ = targets_.front().dim();
  for (std::size_t i = 1; i < targets_.size(); ++i) {
    if (targets_[i].dim() != dim_)
      throw DimensionMismatchError("Problem: targets[" + std::to_string(i) +
                                   "] has dimension " +
                                   std::to_string(targets_[i].dim()) +
                                   ", expected " + std::to_string(dim_));
  }
}

bool Problem::all_convex() const {
  return std::all_of(targets_.begin(), targets_.end(),
                     [](const Target& t) { return t.is_convex(); });
}

bool Problem::any_bounded_target() const {
  return std::any_of(targets_.begin(), targets_.end(),
                     [](const Target& t) { return t.is_bounded(); });
}

}  // namespace gft
