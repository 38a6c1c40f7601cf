#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gft/minimal_time.hpp"

namespace gft {

enum class ASetKind {
  singleton_vec,  // x outside the target: one unit selection per projection
  cone_cap_ball,  // x in the target, on its boundary: N(x;Omega) cap C*
  zero            // x in the target interior: {0}
};

/// A_i(x): the i-th summand of the Fermat-rule condition 0 in sum_i A_i(x).
/// Outside the target it is a singleton selection (two candidates when the
/// AbsEpigraph projection is two-valued); on the target it is the normal
/// cone capped by the dual set C* = {v : sigma_F(-v) <= 1}.
struct ASet {
  ASetKind kind;
  std::vector<Vec> vectors;  // singleton_vec: one or two candidate selections
  NormalCone cone;           // cone_cap_ball: the normal cone part
  std::size_t source_target = 0;
};

/// Builds A_i(x).  Membership within membership_tol counts as in-set, so
/// points quoted at limited precision land on the intended branch.
ASet a_set(const Problem& p, std::size_t i, const Vec& x,
           double membership_tol = 0.0);

enum class CertificateMode { sufficient, necessary_only };

/// Outcome of the Fermat-rule check 0 in sum_i A_i(x), quantified as a
/// Euclidean distance-to-set residual.
struct Certificate {
  bool holds;
  double residual;
  std::optional<std::size_t> active_target;
  CertificateMode mode;
};

/// Checks the optimality certificate at x with tolerance tol (used both for
/// in-set classification and for the residual threshold).  Throws
/// MultipleActiveTargetsError when x lies in two or more targets.
/// mode == sufficient (all targets convex) makes a passing check a proof of
/// global optimality; otherwise the condition is necessary only.
Certificate certificate_check(const Problem& p, const Vec& x, double tol);

/// Report of the three-set alternative for Euclidean dynamics.
/// Case 1: x in exactly one target; requires <a_m, a_l> <= -1/2 and
/// -a_m - a_l in the normal cone of the active target.
/// Case 2: x in no target; requires all pairwise products equal to -1/2.
struct ThreeSetReport {
  int which_case;                     // 1 or 2
  std::optional<std::size_t> active_target;
  std::vector<double> inner_products; // pairwise products of out-of-set a_i
  bool satisfied;
};

ThreeSetReport three_set_check(const Problem& p, const Vec& x, double tol);

/// Minimizing [lo, hi] for the sum of distances to sorted disjoint closed
/// intervals: the middle interval for odd n, the gap [b_{n/2}, a_{n/2+1}]
/// for even n.  Every point of the result attains the same value.
Interval solve_intervals(const std::vector<Interval>& intervals);

/// Classical Fermat-Torricelli point of a plane triangle: the vertex whose
/// angle is >= 120 degrees if one exists (collinear triples fall out as the
/// middle point), otherwise the isogonic point where each side subtends 120
/// degrees.
Vec torricelli_point(const Vec& p1, const Vec& p2, const Vec& p3);

}  // namespace gft
