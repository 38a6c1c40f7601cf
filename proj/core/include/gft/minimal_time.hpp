#pragma once

#include <optional>
#include <vector>

#include "gft/problem.hpp"

namespace gft {

/// True iff the (dynamics, target) pair has a closed-form minimal time
/// function in this library: EuclideanBall pairs with every kind; UnitBox
/// pairs with Box, AxisBox and Singleton.
bool pair_supported(Dynamics f, const Target& t);

/// Minimal time T^F_Omega(x) = inf{t >= 0 : Omega intersects x + tF}.
/// EuclideanBall -> Euclidean distance; UnitBox -> Chebyshev distance to the
/// box.  Zero exactly on the target.  Throws UnsupportedPairError outside
/// the compatibility matrix.
double minimal_time(Dynamics f, const Target& t, const Vec& x);

/// Generalized projection: points of Omega reachable at the minimal time,
/// i.e. (x + T(x) F) cap Omega.  Returns {x} for points of Omega.  For
/// UnitBox dynamics the coordinatewise clamp is returned (one valid member
/// of the generally set-valued projection).
std::vector<Vec> generalized_project(Dynamics f, const Target& t, const Vec& x);

enum class Regime { in_set_interior, in_set_boundary, out_of_set };

/// One subgradient of T^F_Omega, tagged with the regime it came from.
struct MtSubgradient {
  Vec vector;
  Regime regime;
  /// Generalized projection used for the out-of-set selection.
  std::optional<Vec> witness_projection;
};

/// Subgradient selection: zero for points of Omega; otherwise the element of
/// -[gauge subdifferential](w - x) cap N(w; Omega) built from the first
/// generalized projection w.  EuclideanBall: (x-w)/||x-w||.  UnitBox:
/// sign(x_j - w_j) e_j for the smallest axis j attaining the Chebyshev
/// distance.
MtSubgradient mt_subgradient(Dynamics f, const Target& t, const Vec& x);

/// T(x) = sum_i T^F_{Omega_i}(x).
double total_value(const Problem& p, const Vec& x);

}  // namespace gft
