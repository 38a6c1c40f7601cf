#include "gft/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace gft {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

/// Uniform per-axis view of the box-like shapes (Box, AxisBox, Interval).
struct BoxView {
  const Target* t;
  std::size_t dim;

  double center(std::size_t i) const {
    return std::visit(
        overloaded{[&](const Box& b) { return b.center[i]; },
                   [&](const AxisBox& b) { return b.center[i]; },
                   [&](const Interval& iv) { return 0.5 * (iv.lower + iv.upper); },
                   [](const auto&) { return 0.0; }},
        t->shape());
  }
  double radius(std::size_t i) const {
    return std::visit(
        overloaded{[&](const Box& b) { return b.radius; },
                   [&](const AxisBox& b) { return b.radii[i]; },
                   [&](const Interval& iv) { return 0.5 * (iv.upper - iv.lower); },
                   [](const auto&) { return 0.0; }},
        t->shape());
  }
  double lower(std::size_t i) const {
    return std::visit(
        overloaded{[&](const Interval& iv) { return iv.lower; },
                   [&](const auto&) { return center(i) - radius(i); }},
        t->shape());
  }
  double upper(std::size_t i) const {
    return std::visit(
        overloaded{[&](const Interval& iv) { return iv.upper; },
                   [&](const auto&) { return center(i) + radius(i); }},
        t->shape());
  }
  Vec clamp(const Vec& x) const {
    Vec p(dim);
    for (std::size_t i = 0; i < dim; ++i)
      p[i] = std::min(std::max(x[i], lower(i)), upper(i));
    return p;
  }
};

BoxView box_view(const Target& t) { return BoxView{&t, t.dim()}; }

/// Signed inside-distances of y = x - apex to the two half-planes whose
/// union is the AbsEpigraph: H_a = {y1+y2 >= 0} and H_b = {y2-y1 >= 0}.
/// Positive inside.  The set contains y iff max(da, db) >= 0.
struct EpiDistances {
  double da;
  double db;
};

EpiDistances epi_distances(const AbsEpigraph& e, const Vec& x) {
  const double y1 = x[0] - e.apex[0];
  const double y2 = x[1] - e.apex[1];
  return {(y1 + y2) / kSqrt2, (y2 - y1) / kSqrt2};
}

// Outward boundary normals of the two half-planes.
Vec epi_normal_a() { return Vec{-1.0 / kSqrt2, -1.0 / kSqrt2}; }
Vec epi_normal_b() { return Vec{1.0 / kSqrt2, -1.0 / kSqrt2}; }

void require_tol(double tol, const char* what) {
  if (!(tol >= 0.0) || !std::isfinite(tol))
    throw ValidationError(std::string(what) + ": tolerance must be finite and >= 0");
}

}  // namespace

namespace detail {

void require_point(const Vec& x, std::size_t expected_dim, const char* what) {
  if (x.dim() == 0)
    throw DimensionMismatchError(std::string(what) + ": point has dimension 0");
  if (expected_dim != 0 && x.dim() != expected_dim)
    throw DimensionMismatchError(std::string(what) + ": expected dimension " +
                                 std::to_string(expected_dim) + ", got " +
                                 std::to_string(x.dim()));
  if (!x.finite())
    throw ValidationError(std::string(what) + ": point has non-finite coordinate");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Dynamics
// ---------------------------------------------------------------------------

double gauge_value(Dynamics f, const Vec& x) {
  detail::require_point(x, 0, "gauge_value");
  switch (f) {
    case Dynamics::euclidean_ball:
      return norm(x);
    case Dynamics::unit_box:
      return norm_inf(x);
  }
  throw Error("gauge_value: unreachable");
}

double support_value(Dynamics f, const Vec& v) {
  detail::require_point(v, 0, "support_value");
  switch (f) {
    case Dynamics::euclidean_ball:
      return norm(v);
    case Dynamics::unit_box:
      return norm1(v);
  }
  throw Error("support_value: unreachable");
}

Vec gauge_subgradient(Dynamics f, const Vec& x) {
  detail::require_point(x, 0, "gauge_subgradient");
  const std::size_t d = x.dim();
  switch (f) {
    case Dynamics::euclidean_ball: {
      const double n = norm(x);
      if (n == 0.0) return Vec(d);
      return x / n;
    }
    case Dynamics::unit_box: {
      const double m = norm_inf(x);
      if (m == 0.0) return Vec(d);
      for (std::size_t j = 0; j < d; ++j) {
        if (std::abs(x[j]) == m) return Vec::axis(d, j, sign_of(x[j]));
      }
      throw Error("gauge_subgradient: unreachable");
    }
  }
  throw Error("gauge_subgradient: unreachable");
}

// ---------------------------------------------------------------------------
// Target construction
// ---------------------------------------------------------------------------

Target::Target(Singleton s) : shape_(std::move(s)) {
  const auto& v = std::get<Singleton>(shape_);
  detail::require_point(v.point, 0, "Singleton");
}

Target::Target(Ball b) : shape_(std::move(b)) {
  const auto& v = std::get<Ball>(shape_);
  detail::require_point(v.center, 0, "Ball");
  if (!std::isfinite(v.radius) || v.radius <= 0.0)
    throw ValidationError("Ball: radius must be finite and > 0");
}

Target::Target(Box b) : shape_(std::move(b)) {
  const auto& v = std::get<Box>(shape_);
  detail::require_point(v.center, 0, "Box");
  if (!std::isfinite(v.radius) || v.radius <= 0.0)
    throw ValidationError("Box: radius must be finite and > 0");
}

Target::Target(AxisBox b) : shape_(std::move(b)) {
  const auto& v = std::get<AxisBox>(shape_);
  detail::require_point(v.center, 0, "AxisBox");
  detail::require_point(v.radii, v.center.dim(), "AxisBox radii");
  for (std::size_t i = 0; i < v.radii.dim(); ++i) {
    if (v.radii[i] <= 0.0)
      throw ValidationError("AxisBox: every radius must be > 0");
  }
}

Target::Target(Interval iv) : shape_(iv) {
  if (!std::isfinite(iv.lower) || !std::isfinite(iv.upper))
    throw ValidationError("Interval: endpoints must be finite");
  if (iv.lower > iv.upper)
    throw ValidationError("Interval: requires lower <= upper");
}

Target::Target(AbsEpigraph e) : shape_(std::move(e)) {
  const auto& v = std::get<AbsEpigraph>(shape_);
  detail::require_point(v.apex, 2, "AbsEpigraph apex");
}

TargetKind Target::kind() const {
  return std::visit(
      overloaded{[](const Singleton&) { return TargetKind::singleton; },
                 [](const Ball&) { return TargetKind::ball; },
                 [](const Box&) { return TargetKind::box; },
                 [](const AxisBox&) { return TargetKind::axis_box; },
                 [](const Interval&) { return TargetKind::interval; },
                 [](const AbsEpigraph&) { return TargetKind::abs_epigraph; }},
      shape_);
}

std::size_t Target::dim() const {
  return std::visit(
      overloaded{[](const Singleton& s) { return s.point.dim(); },
                 [](const Ball& b) { return b.center.dim(); },
                 [](const Box& b) { return b.center.dim(); },
                 [](const AxisBox& b) { return b.center.dim(); },
                 [](const Interval&) { return std::size_t{1}; },
                 [](const AbsEpigraph&) { return std::size_t{2}; }},
      shape_);
}

// ---------------------------------------------------------------------------
// Distance / membership / projection
// ---------------------------------------------------------------------------

double euclidean_distance(const Target& t, const Vec& x) {
  detail::require_point(x, t.dim(), "euclidean_distance");
  return std::visit(
      overloaded{
          [&](const Singleton& s) { return distance(x, s.point); },
          [&](const Ball& b) {
            return std::max(0.0, distance(x, b.center) - b.radius);
          },
          [&](const AbsEpigraph& e) {
            const auto [da, db] = epi_distances(e, x);
            return std::max(0.0, -std::max(da, db));
          },
          [&](const auto&) {
            const BoxView v = box_view(t);
            double s = 0.0;
            for (std::size_t i = 0; i < v.dim; ++i) {
              const double g = std::max(std::abs(x[i] - v.center(i)) - v.radius(i), 0.0);
              s += g * g;
            }
            return std::sqrt(s);
          }},
      t.shape());
}

bool target_contains(const Target& t, const Vec& x, double tol) {
  require_tol(tol, "target_contains");
  return euclidean_distance(t, x) <= tol;
}

std::vector<Vec> euclidean_project(const Target& t, const Vec& x) {
  detail::require_point(x, t.dim(), "euclidean_project");
  if (target_contains(t, x, 0.0)) return {x};
  return std::visit(
      overloaded{
          [&](const Singleton& s) { return std::vector<Vec>{s.point}; },
          [&](const Ball& b) {
            const Vec u = x - b.center;
            return std::vector<Vec>{b.center + u * (b.radius / norm(u))};
          },
          [&](const AbsEpigraph& e) {
            const auto [da, db] = epi_distances(e, x);
            // Orthogonal drops onto the two boundary lines (da, db < 0 here),
            // written so points on the axis land exactly on the branches.
            const double y1 = x[0] - e.apex[0];
            const double y2 = x[1] - e.apex[1];
            const double ha = 0.5 * (y1 - y2);
            const double hb = 0.5 * (y1 + y2);
            const Vec pa{e.apex[0] + ha, e.apex[1] - ha};
            const Vec pb{e.apex[0] + hb, e.apex[1] + hb};
            std::vector<Vec> out;
            if (da == db) {
              out = {pa, pb};
              if (lex_less(out[1], out[0])) std::swap(out[0], out[1]);
            } else {
              out = {da > db ? pa : pb};
            }
            return out;
          },
          [&](const auto&) { return std::vector<Vec>{box_view(t).clamp(x)}; }},
      t.shape());
}

double boundary_distance(const Target& t, const Vec& x) {
  detail::require_point(x, t.dim(), "boundary_distance");
  const double outside = euclidean_distance(t, x);
  if (outside > 0.0) return outside;
  return std::visit(
      overloaded{
          [&](const Singleton&) { return 0.0; },
          [&](const Ball& b) { return b.radius - distance(x, b.center); },
          [&](const AbsEpigraph& e) {
            // Distance to the V-shaped boundary: two rays from the apex.
            const Vec y = x - e.apex;
            double best = std::numeric_limits<double>::infinity();
            for (const Vec& dir : {Vec{1.0 / kSqrt2, -1.0 / kSqrt2},
                                   Vec{-1.0 / kSqrt2, -1.0 / kSqrt2}}) {
              const double s = std::max(dot(y, dir), 0.0);
              best = std::min(best, distance(y, dir * s));
            }
            return best;
          },
          [&](const auto&) {
            const BoxView v = box_view(t);
            double m = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < v.dim; ++i)
              m = std::min(m, v.radius(i) - std::abs(x[i] - v.center(i)));
            return m;
          }},
      t.shape());
}

// ---------------------------------------------------------------------------
// Normal cones
// ---------------------------------------------------------------------------

NormalCone normal_cone(const Target& t, const Vec& w, double active_tol) {
  detail::require_point(w, t.dim(), "normal_cone");
  require_tol(active_tol, "normal_cone");
  if (euclidean_distance(t, w) > active_tol)
    throw NotInTargetError("normal_cone: anchor point lies outside the target");

  NormalCone cone;
  std::visit(
      overloaded{
          [&](const Singleton&) { cone.kind = NormalCone::Kind::full; },
          [&](const Ball& b) {
            const Vec u = w - b.center;
            const double n = norm(u);
            if (n > 0.0 && std::abs(n - b.radius) <= active_tol) {
              cone.kind = NormalCone::Kind::ray;
              cone.rays = {u * (1.0 / n)};
            } else {
              cone.kind = NormalCone::Kind::zero;
            }
          },
          [&](const AbsEpigraph& e) {
            const auto [da, db] = epi_distances(e, w);
            if (da > active_tol || db > active_tol) {
              cone.kind = NormalCone::Kind::zero;  // interior of the union
              return;
            }
            const bool on_a = std::abs(da) <= active_tol;
            const bool on_b = std::abs(db) <= active_tol;
            if (on_a && on_b) {
              cone.kind = NormalCone::Kind::ray_union;
              cone.rays = {epi_normal_a(), epi_normal_b()};
            } else if (on_a) {
              cone.kind = NormalCone::Kind::ray;
              cone.rays = {epi_normal_a()};
            } else {
              cone.kind = NormalCone::Kind::ray;
              cone.rays = {epi_normal_b()};
            }
          },
          [&](const auto&) {
            const BoxView v = box_view(t);
            cone.axis.assign(v.dim, 0);
            bool any = false;
            bool all_free = true;
            for (std::size_t i = 0; i < v.dim; ++i) {
              const bool at_lower = w[i] - v.lower(i) <= active_tol;
              const bool at_upper = v.upper(i) - w[i] <= active_tol;
              if (at_lower && at_upper)
                cone.axis[i] = 2;
              else if (at_upper)
                cone.axis[i] = 1;
              else if (at_lower)
                cone.axis[i] = -1;
              any = any || (cone.axis[i] != 0);
              all_free = all_free && (cone.axis[i] == 2);
            }
            if (!any) {
              cone.kind = NormalCone::Kind::zero;
              cone.axis.clear();
            } else if (all_free) {
              cone.kind = NormalCone::Kind::full;
              cone.axis.clear();
            } else {
              cone.kind = NormalCone::Kind::axis_cone;
            }
          }},
      t.shape());
  return cone;
}

Vec cone_project(const NormalCone& cone, const Vec& v) {
  switch (cone.kind) {
    case NormalCone::Kind::zero:
      return Vec(v.dim());
    case NormalCone::Kind::full:
      return v;
    case NormalCone::Kind::ray: {
      const Vec& u = cone.rays[0];
      return u * std::max(dot(v, u), 0.0);
    }
    case NormalCone::Kind::ray_union: {
      Vec best(v.dim());
      double best_d = std::numeric_limits<double>::infinity();
      for (const Vec& u : cone.rays) {
        const Vec p = u * std::max(dot(v, u), 0.0);
        const double d = distance(v, p);
        if (d < best_d) {
          best_d = d;
          best = p;
        }
      }
      return best;
    }
    case NormalCone::Kind::axis_cone: {
      Vec p(v.dim());
      for (std::size_t i = 0; i < v.dim(); ++i) {
        switch (cone.axis[i]) {
          case 0: p[i] = 0.0; break;
          case 1: p[i] = std::max(v[i], 0.0); break;
          case -1: p[i] = std::min(v[i], 0.0); break;
          default: p[i] = v[i]; break;
        }
      }
      return p;
    }
  }
  throw Error("cone_project: unreachable");
}

double cone_distance(const NormalCone& cone, const Vec& v) {
  return distance(v, cone_project(cone, v));
}

bool normal_cone_contains(const Target& t, const Vec& w, const Vec& v, double tol) {
  detail::require_point(v, t.dim(), "normal_cone_contains");
  require_tol(tol, "normal_cone_contains");
  const NormalCone cone = normal_cone(t, w, tol);
  const double n = norm(v);
  if (n == 0.0) return true;
  return cone_distance(cone, v) <= tol * n;
}

}  // namespace gft
