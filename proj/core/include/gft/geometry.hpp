#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "gft/errors.hpp"
#include "gft/vec.hpp"

namespace gft {

/// Dynamics set F: closed, bounded, convex, with 0 in its interior.
/// EuclideanBall is the closed unit ball; UnitBox is [-1,1]^d.
enum class Dynamics { euclidean_ball, unit_box };

/// Minkowski gauge rho_F(x) = inf{t >= 0 : x in tF}.
/// EuclideanBall -> ||x||, UnitBox -> max_i |x_i|.
double gauge_value(Dynamics f, const Vec& x);

/// Support function sigma_F(v) = sup{<v,u> : u in F}.
/// EuclideanBall -> ||v||, UnitBox -> sum_i |v_i|.
double support_value(Dynamics f, const Vec& v);

/// One element of the gauge subdifferential at x (zero vector at x = 0).
/// EuclideanBall: x/||x||.  UnitBox: sign(x_j) e_j where j is the smallest
/// index attaining max_i |x_i|.
Vec gauge_subgradient(Dynamics f, const Vec& x);

// ---------------------------------------------------------------------------
// Target sets
// ---------------------------------------------------------------------------

struct Singleton {
  Vec point;
  friend bool operator==(const Singleton&, const Singleton&) = default;
};

struct Ball {
  Vec center;
  double radius;
  friend bool operator==(const Ball&, const Ball&) = default;
};

/// Axis-aligned cube: center +- radius on every axis.
struct Box {
  Vec center;
  double radius;
  friend bool operator==(const Box&, const Box&) = default;
};

/// Axis-aligned box with one half-width per axis.
struct AxisBox {
  Vec center;
  Vec radii;
  friend bool operator==(const AxisBox&, const AxisBox&) = default;
};

/// Closed interval [lower, upper] on the line (d = 1 only).
struct Interval {
  double lower;
  double upper;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// {(x1,x2) : x2 - apex2 >= -|x1 - apex1|}, the union of the two half-planes
/// {x2-a2 >= x1-a1} and {x2-a2 >= -(x1-a1)}.  The only nonconvex kind.
struct AbsEpigraph {
  Vec apex;
  friend bool operator==(const AbsEpigraph&, const AbsEpigraph&) = default;
};

enum class TargetKind { singleton, ball, box, axis_box, interval, abs_epigraph };

/// One closed target set.  Construction validates shape parameters
/// (finiteness, positive radii, interval ordering, ambient dimension).
class Target {
 public:
  using Shape = std::variant<Singleton, Ball, Box, AxisBox, Interval, AbsEpigraph>;

  Target(Singleton s);      // NOLINT(google-explicit-constructor)
  Target(Ball b);           // NOLINT(google-explicit-constructor)
  Target(Box b);            // NOLINT(google-explicit-constructor)
  Target(AxisBox b);        // NOLINT(google-explicit-constructor)
  Target(Interval iv);      // NOLINT(google-explicit-constructor)
  Target(AbsEpigraph e);    // NOLINT(google-explicit-constructor)

  const Shape& shape() const { return shape_; }
  TargetKind kind() const;
  std::size_t dim() const;
  bool is_convex() const { return kind() != TargetKind::abs_epigraph; }
  /// All kinds are bounded except AbsEpigraph.
  bool is_bounded() const { return kind() != TargetKind::abs_epigraph; }

  friend bool operator==(const Target&, const Target&) = default;

 private:
  Shape shape_;
};

/// Euclidean distance d(x; Omega), zero inside.
double euclidean_distance(const Target& t, const Vec& x);

/// True iff x lies in Omega inflated by tol under the Euclidean metric.
bool target_contains(const Target& t, const Vec& x, double tol);

/// All Euclidean nearest points of Omega to x, in closed form.  One element
/// except for AbsEpigraph with x on the axis below the apex, where the two
/// equidistant half-plane projections are both returned (lexicographic
/// order).  Points of Omega project to themselves.
std::vector<Vec> euclidean_project(const Target& t, const Vec& x);

/// Euclidean distance from x to the boundary of Omega (from either side).
double boundary_distance(const Target& t, const Vec& x);

// ---------------------------------------------------------------------------
// Normal cones
// ---------------------------------------------------------------------------

/// Closed-form description of the (limiting) normal cone N(w; Omega) for the
/// supported target kinds.
///   zero       {0}                       (interior points)
///   full       all of R^d                (singletons, degenerate boxes)
///   ray        {t u : t >= 0}            (ball boundary, epigraph branches)
///   axis_cone  product of per-axis cones (box faces/edges/corners,
///              interval endpoints); axis codes: 0 -> {0}, +1 -> [0,inf),
///              -1 -> (-inf,0], 2 -> R
///   ray_union  union of two rays         (epigraph apex; nonconvex)
struct NormalCone {
  enum class Kind { zero, full, ray, axis_cone, ray_union };
  Kind kind = Kind::zero;
  std::vector<Vec> rays;   // unit directions for ray / ray_union
  std::vector<int> axis;   // per-axis codes for axis_cone
};

/// Normal cone to Omega at w.  w must lie in Omega within active_tol; faces
/// and boundary pieces within active_tol of w count as active.
NormalCone normal_cone(const Target& t, const Vec& w, double active_tol);

/// Nearest point of the cone to v (for ray_union: the nearer branch).
Vec cone_project(const NormalCone& cone, const Vec& v);

double cone_distance(const NormalCone& cone, const Vec& v);

/// True iff v lies in N(w; Omega) within angular tolerance tol, i.e.
/// dist(v, N) <= tol * ||v||.  The zero vector always belongs.
bool normal_cone_contains(const Target& t, const Vec& w, const Vec& v, double tol);

namespace detail {
/// Validates finiteness and, when expected_dim > 0, the dimension of x.
void require_point(const Vec& x, std::size_t expected_dim, const char* what);
}  // namespace detail

}  // namespace gft
