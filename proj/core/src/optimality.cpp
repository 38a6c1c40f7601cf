#include "gft/optimality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace gft {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_tol(double tol, const char* what) {
  if (!(tol >= 0.0) || !std::isfinite(tol))
    throw ValidationError(std::string(what) + ": tolerance must be finite and >= 0");
}

/// Projection of q onto {w >= 0, sum_i w_i <= 1} and the squared distance.
/// Standard sort-based simplex projection.
double simplex_cap_sqdist(std::vector<double> q) {
  double pos_sum = 0.0;
  for (double v : q) pos_sum += std::max(v, 0.0);
  if (pos_sum <= 1.0) {
    double s = 0.0;
    for (double v : q) {
      const double w = std::max(v, 0.0);
      s += (v - w) * (v - w);
    }
    return s;
  }
  std::vector<double> sorted = q;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cum = 0.0;
  double theta = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cum += sorted[k];
    const double cand = (cum - 1.0) / static_cast<double>(k + 1);
    if (k + 1 == sorted.size() || sorted[k + 1] <= cand) {
      theta = cand;
      break;
    }
  }
  double s = 0.0;
  for (double v : q) {
    const double w = std::max(v - theta, 0.0);
    s += (v - w) * (v - w);
  }
  return s;
}

/// Distance from p to cone cap C* where C* is the Euclidean unit ball
/// (EuclideanBall dynamics) or the l1 unit ball (UnitBox dynamics).
double distance_to_capped_cone(const NormalCone& cone, Dynamics f, const Vec& p) {
  if (cone.kind == NormalCone::Kind::zero) return norm(p);

  if (f == Dynamics::euclidean_ball) {
    // For a convex cone K, the projection onto K cap B is the projection
    // onto K radially clamped to the unit sphere.
    auto clamp_to_ball = [&](Vec q) {
      const double n = norm(q);
      if (n > 1.0) q *= 1.0 / n;
      return q;
    };
    if (cone.kind == NormalCone::Kind::ray_union) {
      double best = kInf;
      for (const Vec& u : cone.rays) {
        NormalCone branch{NormalCone::Kind::ray, {u}, {}};
        best = std::min(best, distance(p, clamp_to_ball(cone_project(branch, p))));
      }
      return best;
    }
    return distance(p, clamp_to_ball(cone_project(cone, p)));
  }

  // UnitBox dynamics: C* is the l1 ball; only axis cones and the full cone
  // can occur (balls and the epigraph are unsupported under this dynamics).
  std::vector<int> axis;
  if (cone.kind == NormalCone::Kind::full) {
    axis.assign(p.dim(), 2);
  } else if (cone.kind == NormalCone::Kind::axis_cone) {
    axis = cone.axis;
  } else {
    throw Error("distance_to_capped_cone: cone kind unreachable for unit_box");
  }
  double fixed = 0.0;
  std::vector<double> q;
  q.reserve(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (axis[i] == 0) {
      fixed += p[i] * p[i];
    } else {
      const double s = axis[i] == 2 ? (p[i] < 0.0 ? -1.0 : 1.0)
                                    : static_cast<double>(axis[i]);
      q.push_back(s * p[i]);
    }
  }
  return std::sqrt(fixed + simplex_cap_sqdist(std::move(q)));
}

std::vector<std::size_t> active_targets(const Problem& p, const Vec& x, double tol) {
  std::vector<std::size_t> act;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (target_contains(p.target(i), x, tol)) act.push_back(i);
  }
  return act;
}

/// Candidate singleton selections for an out-of-set target (one per
/// generalized projection; two for the equidistant AbsEpigraph case).
std::vector<Vec> out_of_set_vectors(const Problem& p, std::size_t i, const Vec& x) {
  const Target& t = p.target(i);
  if (p.dynamics() == Dynamics::unit_box)
    return {mt_subgradient(Dynamics::unit_box, t, x).vector};
  std::vector<Vec> out;
  for (const Vec& w : euclidean_project(t, x)) out.push_back(normalized(x - w));
  return out;
}

/// Minimum residual over the candidate combinations (the AbsEpigraph union
/// contributes two choices); other targets contribute exactly one vector.
double best_residual(const std::vector<std::vector<Vec>>& parts,
                     const std::optional<NormalCone>& cone, Dynamics f,
                     std::size_t dim) {
  std::size_t combos = 1;
  for (const auto& c : parts) combos *= c.size();
  double best = kInf;
  for (std::size_t mask = 0; mask < combos; ++mask) {
    Vec s(dim);
    std::size_t m = mask;
    for (const auto& c : parts) {
      s += c[m % c.size()];
      m /= c.size();
    }
    const double r = cone ? distance_to_capped_cone(*cone, f, -s) : norm(s);
    best = std::min(best, r);
  }
  return best;
}

/// Apex of the equilateral triangle erected on segment [a, b] on the side
/// away from c.
Vec equilateral_apex(const Vec& a, const Vec& b, const Vec& c) {
  const Vec mid = (a + b) * 0.5;
  const Vec ab = b - a;
  Vec perp{-ab[1], ab[0]};
  if (dot(perp, c - mid) > 0.0) perp *= -1.0;
  return mid + perp * (std::sqrt(3.0) / 2.0);
}

Vec line_intersection(const Vec& p0, const Vec& p1, const Vec& q0, const Vec& q1) {
  const Vec d0 = p1 - p0;
  const Vec d1 = q1 - q0;
  const double det = d0[0] * d1[1] - d0[1] * d1[0];
  if (det == 0.0)
    throw DegenerateTriangleError("torricelli_point: construction lines are parallel");
  const Vec r = q0 - p0;
  const double s = (r[0] * d1[1] - r[1] * d1[0]) / det;
  return p0 + d0 * s;
}

}  // namespace

ASet a_set(const Problem& p, std::size_t i, const Vec& x, double membership_tol) {
  detail::require_point(x, p.dim(), "a_set");
  require_tol(membership_tol, "a_set");
  if (i >= p.size()) throw ValidationError("a_set: target index out of range");
  const Target& t = p.target(i);
  if (!pair_supported(p.dynamics(), t))
    throw UnsupportedPairError("a_set: unsupported (dynamics, target) pair");

  ASet out;
  out.source_target = i;
  if (target_contains(t, x, membership_tol)) {
    out.cone = normal_cone(t, x, membership_tol);
    out.kind = out.cone.kind == NormalCone::Kind::zero ? ASetKind::zero
                                                       : ASetKind::cone_cap_ball;
  } else {
    out.kind = ASetKind::singleton_vec;
    out.vectors = out_of_set_vectors(p, i, x);
  }
  return out;
}

Certificate certificate_check(const Problem& p, const Vec& x, double tol) {
  detail::require_point(x, p.dim(), "certificate_check");
  require_tol(tol, "certificate_check");
  for (const Target& t : p.targets()) {
    if (!pair_supported(p.dynamics(), t))
      throw UnsupportedPairError("certificate_check: unsupported (dynamics, target) pair");
  }

  const auto act = active_targets(p, x, tol);
  if (act.size() >= 2)
    throw MultipleActiveTargetsError(
        "certificate_check: point lies in " + std::to_string(act.size()) +
        " targets; the condition assumes pairwise disjoint targets");

  std::vector<std::vector<Vec>> parts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!act.empty() && i == act.front()) continue;
    parts.push_back(out_of_set_vectors(p, i, x));
  }
  std::optional<NormalCone> cone;
  if (!act.empty()) cone = normal_cone(p.target(act.front()), x, tol);

  Certificate cert;
  cert.residual = best_residual(parts, cone, p.dynamics(), p.dim());
  cert.holds = cert.residual <= tol;
  cert.active_target =
      act.empty() ? std::nullopt : std::optional<std::size_t>(act.front());
  cert.mode = p.all_convex() ? CertificateMode::sufficient
                             : CertificateMode::necessary_only;
  return cert;
}

ThreeSetReport three_set_check(const Problem& p, const Vec& x, double tol) {
  detail::require_point(x, p.dim(), "three_set_check");
  require_tol(tol, "three_set_check");
  if (p.size() != 3)
    throw WrongArityError("three_set_check: requires exactly 3 targets, got " +
                          std::to_string(p.size()));
  if (p.dynamics() != Dynamics::euclidean_ball)
    throw UnsupportedPairError("three_set_check: requires euclidean_ball dynamics");

  const auto act = active_targets(p, x, tol);
  if (act.size() >= 2)
    throw AmbiguousCaseError("three_set_check: point lies in two or more targets");

  ThreeSetReport rep;
  rep.satisfied = false;

  if (act.size() == 1) {
    rep.which_case = 1;
    rep.active_target = act.front();
    std::vector<std::vector<Vec>> cand;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i != act.front()) cand.push_back(out_of_set_vectors(p, i, x));
    }
    const Target& active = p.target(act.front());
    std::vector<double> first_ips;
    for (const Vec& am : cand[0]) {
      for (const Vec& al : cand[1]) {
        const double ip = dot(am, al);
        if (first_ips.empty()) first_ips = {ip};
        const bool ok = ip <= -0.5 + tol &&
                        normal_cone_contains(active, x, -am - al, tol);
        if (ok) {
          rep.inner_products = {ip};
          rep.satisfied = true;
          return rep;
        }
      }
    }
    rep.inner_products = first_ips;
    return rep;
  }

  rep.which_case = 2;
  std::vector<std::vector<Vec>> cand;
  for (std::size_t i = 0; i < 3; ++i) cand.push_back(out_of_set_vectors(p, i, x));
  std::vector<double> first_ips;
  for (const Vec& a1 : cand[0]) {
    for (const Vec& a2 : cand[1]) {
      for (const Vec& a3 : cand[2]) {
        const std::vector<double> ips = {dot(a1, a2), dot(a1, a3), dot(a2, a3)};
        if (first_ips.empty()) first_ips = ips;
        const bool ok = std::all_of(ips.begin(), ips.end(), [&](double v) {
          return std::abs(v + 0.5) <= tol;
        });
        if (ok) {
          rep.inner_products = ips;
          rep.satisfied = true;
          return rep;
        }
      }
    }
  }
  rep.inner_products = first_ips;
  return rep;
}

Interval solve_intervals(const std::vector<Interval>& intervals) {
  if (intervals.empty())
    throw NotSortedDisjointError("solve_intervals: needs at least one interval");
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (!std::isfinite(intervals[i].lower) || !std::isfinite(intervals[i].upper))
      throw ValidationError("solve_intervals: endpoints must be finite");
    if (intervals[i].lower > intervals[i].upper)
      throw NotSortedDisjointError("solve_intervals: intervals[" +
                                   std::to_string(i) + "] has lower > upper");
    if (i > 0 && !(intervals[i - 1].upper < intervals[i].lower))
      throw NotSortedDisjointError(
          "solve_intervals: intervals must be sorted and pairwise disjoint "
          "(violated between index " + std::to_string(i - 1) + " and " +
          std::to_string(i) + ")");
  }
  const std::size_t n = intervals.size();
  if (n % 2 == 1) return intervals[n / 2];
  return Interval{intervals[n / 2 - 1].upper, intervals[n / 2].lower};
}

Vec torricelli_point(const Vec& p1, const Vec& p2, const Vec& p3) {
  detail::require_point(p1, 2, "torricelli_point");
  detail::require_point(p2, 2, "torricelli_point");
  detail::require_point(p3, 2, "torricelli_point");
  const Vec pts[3] = {p1, p2, p3};
  for (int i = 0; i < 3; ++i) {
    if (pts[i] == pts[(i + 1) % 3])
      throw DegenerateTriangleError("torricelli_point: points must be distinct");
  }

  // Vertex rule: an angle of 120 degrees or more (collinear triples give the
  // middle point an angle of 180).
  for (int i = 0; i < 3; ++i) {
    const Vec u = pts[(i + 1) % 3] - pts[i];
    const Vec v = pts[(i + 2) % 3] - pts[i];
    if (dot(u, v) <= -0.5 * norm(u) * norm(v)) return pts[i];
  }

  // Isogonic construction: lines from each vertex to the apex of the
  // equilateral triangle erected on the opposite side meet at the answer.
  const Vec apex12 = equilateral_apex(p1, p2, p3);
  const Vec apex13 = equilateral_apex(p1, p3, p2);
  return line_intersection(apex12, p3, apex13, p2);
}

}  // namespace gft
