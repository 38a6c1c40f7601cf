#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "gft/gft.hpp"
#include "support/brute.hpp"

using namespace gft;

namespace {

Problem disks3() {
  return Problem(Dynamics::euclidean_ball,
                 {Target(Ball{Vec{-2.0, 0.0}, 1.0}), Target(Ball{Vec{0.0, 2.0}, 1.0}),
                  Target(Ball{Vec{2.0, 0.0}, 1.0})});
}

Problem squares3() {
  return Problem(Dynamics::euclidean_ball,
                 {Target(Box{Vec{-2.0, 0.0}, 0.5}), Target(Box{Vec{0.0, 2.0}, 0.5}),
                  Target(Box{Vec{2.0, 0.0}, 0.5})});
}

}  // namespace

TEST_CASE("harmonic schedule") {
  const StepSchedule s = StepSchedule::harmonic();
  CHECK(s.alpha(1) == 1.0);
  CHECK(s.alpha(4) == 0.25);
  CHECK(s.sum_diverges());
  CHECK(s.ell_squared() ==
        doctest::Approx(std::numbers::pi * std::numbers::pi / 6.0).epsilon(1e-15));
  CHECK(s.partial_sum(10) == doctest::Approx(2.9289682539682538).epsilon(1e-14));
  CHECK_THROWS_AS(s.alpha(0), ValidationError);
}

TEST_CASE("scaled harmonic schedule") {
  const StepSchedule s = StepSchedule::scaled_harmonic(2.0);
  CHECK(s.alpha(4) == 0.5);
  CHECK(s.ell_squared() ==
        doctest::Approx(4.0 * std::numbers::pi * std::numbers::pi / 6.0).epsilon(1e-15));
  CHECK_THROWS_AS(StepSchedule::scaled_harmonic(0.0), ValidationError);
  CHECK_THROWS_AS(StepSchedule::scaled_harmonic(-1.0), ValidationError);
}

TEST_CASE("custom schedule declares its sums") {
  const StepSchedule s = StepSchedule::custom(
      [](std::size_t) { return 1.0; }, true, std::numeric_limits<double>::infinity());
  CHECK(s.alpha(17) == 1.0);
  CHECK(std::isinf(s.ell_squared()));
  CHECK_THROWS_AS(StepSchedule::custom(nullptr, true, 1.0), ValidationError);
  const StepSchedule bad =
      StepSchedule::custom([](std::size_t) { return -1.0; }, true, 1.0);
  CHECK_THROWS_AS(bad.alpha(1), ValidationError);
}

TEST_CASE("error bound: closed form and limits") {
  const StepSchedule h = StepSchedule::harmonic();
  const double d = std::sqrt(61.0);
  const double want =
      (61.0 + 9.0 * std::numbers::pi * std::numbers::pi / 6.0) /
      (2.0 * h.partial_sum(100));
  CHECK(error_bound(h, 100, d, 3.0) == doctest::Approx(want).epsilon(1e-14));
  CHECK(want == doctest::Approx(7.3066).epsilon(1e-4));
  // The bound decays to zero as the step sums diverge.
  CHECK(error_bound(h, 100000, d, 3.0) < error_bound(h, 1000, d, 3.0));
  CHECK(error_bound(h, 10000000, d, 3.0) < 2.3);

  const StepSchedule constant = StepSchedule::custom(
      [](std::size_t) { return 1.0; }, true, std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(error_bound(constant, 100, d, 3.0), InfiniteEllSquaredError);
  CHECK_THROWS_AS(error_bound(h, 0, d, 3.0), ValidationError);
}

TEST_CASE("lipschitz constants") {
  CHECK(lipschitz_constant(disks3()) == 3.0);
  const Problem five(Dynamics::unit_box,
                     {Target(Box{Vec{-1.0, 0.0}, 0.25}), Target(Box{Vec{-1.0, 1.0}, 0.25}),
                      Target(Box{Vec{0.0, 2.0}, 0.25}), Target(Box{Vec{1.0, 1.0}, 0.25}),
                      Target(Box{Vec{1.0, 0.0}, 0.25})});
  CHECK(lipschitz_constant(five) == 5.0);

  // Monte-Carlo verification of |T(x)-T(y)| <= 3 ||x-y|| on the disks.
  const Problem p = disks3();
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-6.0, 6.0);
  for (int it = 0; it < 10000; ++it) {
    const Vec x{u(rng), u(rng)};
    const Vec y{u(rng), u(rng)};
    CHECK(std::abs(total_value(p, x) - total_value(p, y)) <=
          3.0 * distance(x, y) + 1e-12);
  }
}

TEST_CASE("solver reproduces the harmonic-step table on three disks") {
  SolveOptions opt;
  opt.max_iters = 10;
  const SolveResult r10 = solve(disks3(), Vec{5.0, 7.0}, StepSchedule::harmonic(), opt);
  CHECK(r10.final_point[0] == doctest::Approx(0.6224).epsilon(5e-5));
  CHECK(r10.final_point[1] == doctest::Approx(1.1995).epsilon(5e-5));
  CHECK(r10.best_value == doctest::Approx(2.7243).epsilon(5e-5));

  opt.max_iters = 100;
  const SolveResult r100 = solve(disks3(), Vec{5.0, 7.0}, StepSchedule::harmonic(), opt);
  CHECK(r100.final_point[0] == doctest::Approx(0.0552).epsilon(5e-4));
  CHECK(r100.final_point[1] == doctest::Approx(0.9984).epsilon(5e-4));
  CHECK(r100.best_value == doctest::Approx(2.4741).epsilon(5e-5));
  CHECK(r100.iterations_run == 100);
  CHECK(r100.stop_reason == StopReason::max_iters);
  CHECK(r100.guarantee == CertificateMode::sufficient);
}

TEST_CASE("starting at the optimum stays there") {
  const Problem p(Dynamics::euclidean_ball, {Target(Singleton{Vec{3.0, 4.0}})});
  SolveOptions opt;
  opt.max_iters = 1;
  const SolveResult r = solve(p, Vec{3.0, 4.0}, StepSchedule::harmonic(), opt);
  CHECK(r.best_point == Vec{3.0, 4.0});
  CHECK(r.best_value == 0.0);
}

TEST_CASE("divergence guard aborts with a diagnostic") {
  const Problem p(Dynamics::euclidean_ball, {Target(Singleton{Vec{10.0, 0.0}})});
  const StepSchedule huge = StepSchedule::custom(
      [](std::size_t) { return 1e13; }, true, std::numeric_limits<double>::infinity());
  SolveOptions opt;
  opt.max_iters = 100;
  CHECK_THROWS_AS(solve(p, Vec{0.0, 0.0}, huge, opt), NonFiniteIterateError);
}

TEST_CASE("V_k is nonincreasing along the trace and best is the min") {
  SolveOptions opt;
  opt.max_iters = 5000;
  opt.trace_every = 50;
  const SolveResult r = solve(disks3(), Vec{5.0, 7.0}, StepSchedule::harmonic(), opt);
  REQUIRE(!r.trace.empty());
  CHECK(r.trace.front().k == 0);
  CHECK(r.trace.back().k == 5000);
  double prev = std::numeric_limits<double>::infinity();
  double min_seen = std::numeric_limits<double>::infinity();
  for (const TraceRow& row : r.trace) {
    CHECK(row.best_value <= prev + 1e-15);
    prev = row.best_value;
    min_seen = std::min(min_seen, row.value);
    CHECK(row.best_value <= row.value);
  }
  CHECK(r.best_value <= min_seen);
  CHECK(r.trace.back().best_value == r.best_value);
}

TEST_CASE("identical inputs produce bit-identical runs") {
  SolveOptions opt;
  opt.max_iters = 2000;
  opt.trace_every = 100;
  const SolveResult a = solve(disks3(), Vec{5.0, 7.0}, StepSchedule::harmonic(), opt);
  const SolveResult b = solve(disks3(), Vec{5.0, 7.0}, StepSchedule::harmonic(), opt);
  CHECK(a.best_point == b.best_point);
  CHECK(a.best_value == b.best_value);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].x == b.trace[i].x);
    CHECK(a.trace[i].value == b.trace[i].value);
  }
}

TEST_CASE("generic iteration equals the specialized disk iteration bit for bit") {
  // Specialized route: q = (x - c)/||x - c|| outside, 0 inside.
  const Vec centers[3] = {Vec{-2.0, 0.0}, Vec{0.0, 2.0}, Vec{2.0, 0.0}};
  Vec x{5.0, 7.0};
  const Problem p = disks3();
  SolveOptions opt;
  opt.max_iters = 1000;
  const SolveResult generic = solve(p, x, StepSchedule::harmonic(), opt);
  for (std::size_t k = 1; k <= 1000; ++k) {
    Vec g(2);
    for (const Vec& c : centers) {
      const Vec u = x - c;
      const double n = norm(u);
      if (n > 1.0) g += u / n;
    }
    x -= g * (1.0 / static_cast<double>(k));
  }
  CHECK(x == generic.final_point);
}

TEST_CASE("generic iteration matches the vertex/face square iteration") {
  // Specialized route from the square geometry: nearest-vertex pulls in the
  // corner regions, axis unit vectors in the face bands.
  const Vec centers[3] = {Vec{-2.0, 0.0}, Vec{0.0, 2.0}, Vec{2.0, 0.0}};
  const double r = 0.5;
  Vec x{5.0, 7.0};
  const Problem p = squares3();
  SolveOptions opt;
  opt.max_iters = 1000;
  const SolveResult generic = solve(p, x, StepSchedule::harmonic(), opt);
  for (std::size_t k = 1; k <= 1000; ++k) {
    Vec g(2);
    for (const Vec& c : centers) {
      const double dx = x[0] - c[0];
      const double dy = x[1] - c[1];
      Vec q(2);
      if (std::abs(dx) <= r && std::abs(dy) <= r) {
        // inside
      } else if (std::abs(dx) <= r) {
        q = Vec{0.0, dy > 0.0 ? 1.0 : -1.0};
      } else if (std::abs(dy) <= r) {
        q = Vec{dx > 0.0 ? 1.0 : -1.0, 0.0};
      } else {
        const Vec vertex{c[0] + (dx > 0.0 ? r : -r), c[1] + (dy > 0.0 ? r : -r)};
        q = normalized(x - vertex);
      }
      g += q;
    }
    x -= g * (1.0 / static_cast<double>(k));
  }
  CHECK(distance(x, generic.final_point) <= 1e-12);
}

TEST_CASE("early stop on the certificate residual") {
  SolveOptions opt;
  opt.max_iters = 100000;
  opt.residual_tol = 5e-2;
  opt.trace_every = 10;
  const SolveResult r = solve(disks3(), Vec{5.0, 7.0}, StepSchedule::harmonic(), opt);
  CHECK(r.stop_reason == StopReason::residual_tol);
  CHECK(r.iterations_run < 100000);
}

TEST_CASE("plateau stop") {
  SolveOptions opt;
  opt.max_iters = 100000;
  opt.plateau = PlateauRule{200, 1e-12};
  const SolveResult r = solve(disks3(), Vec{5.0, 7.0}, StepSchedule::harmonic(), opt);
  CHECK(r.stop_reason == StopReason::value_plateau);
  CHECK(r.iterations_run < 100000);
}

TEST_CASE("solving on the line converges into the optimal interval") {
  const Problem p(Dynamics::euclidean_ball,
                  {Target(Interval{0.0, 1.0}), Target(Interval{2.0, 3.0}),
                   Target(Interval{4.0, 5.0})});
  SolveOptions opt;
  opt.max_iters = 20000;
  const SolveResult r = solve(p, Vec{-6.0}, StepSchedule::harmonic(), opt);
  CHECK(r.best_value == doctest::Approx(3.0).epsilon(1e-4));
  CHECK(r.best_point[0] >= 2.0 - 1e-3);
  CHECK(r.best_point[0] <= 3.0 + 1e-3);
}

TEST_CASE("solve propagates unsupported pairs") {
  const Problem bad(Dynamics::unit_box, {Target(Ball{Vec{0.0, 0.0}, 1.0})});
  SolveOptions opt;
  opt.max_iters = 5;
  CHECK_THROWS_AS(solve(bad, Vec{3.0, 3.0}, StepSchedule::harmonic(), opt),
                  UnsupportedPairError);
}

TEST_CASE("nonconvex instances are stamped necessary-only, unbounded warns") {
  const Problem nonconvex(Dynamics::euclidean_ball,
                          {Target(Ball{Vec{0.0, -2.0}, 1.0}),
                           Target(AbsEpigraph{Vec{0.0, 0.0}})});
  SolveOptions opt;
  opt.max_iters = 10;
  const SolveResult r = solve(nonconvex, Vec{0.0, -4.0}, StepSchedule::harmonic(), opt);
  CHECK(r.guarantee == CertificateMode::necessary_only);
  CHECK(r.warnings.empty());

  const Problem unbounded(Dynamics::euclidean_ball, {Target(AbsEpigraph{Vec{0.0, 0.0}})});
  const SolveResult u = solve(unbounded, Vec{0.0, -4.0}, StepSchedule::harmonic(), opt);
  CHECK(!u.warnings.empty());
}

TEST_CASE("harmonic steps reach the reference values within 5e-4 at 1e5 iterations") {
  struct Case {
    Problem problem;
    Vec start;
    double reference;
  };
  const Case cases[] = {
      {disks3(), Vec{5.0, 7.0}, 2.0 * (std::sqrt(5.0) - 1.0)},
      {squares3(), Vec{5.0, 7.0}, (2.0 + 3.0 * std::sqrt(3.0)) / 2.0},
      {Problem(Dynamics::unit_box,
               {Target(Box{Vec{-2.0, 0.0}, 0.5}), Target(Box{Vec{0.0, 2.0}, 0.5}),
                Target(Box{Vec{2.0, 0.0}, 0.5})}),
       Vec{1.0, 1.0}, 3.0},
      {Problem(Dynamics::unit_box,
               {Target(Box{Vec{-1.0, 0.0}, 0.25}), Target(Box{Vec{-1.0, 1.0}, 0.25}),
                Target(Box{Vec{0.0, 2.0}, 0.25}), Target(Box{Vec{1.0, 1.0}, 0.25}),
                Target(Box{Vec{1.0, 0.0}, 0.25})}),
       Vec{1.0, 1.0}, 3.75},
  };
  for (const Case& c : cases) {
    SolveOptions opt;
    opt.max_iters = 100000;
    const SolveResult r = solve(c.problem, c.start, StepSchedule::harmonic(), opt);
    CHECK(std::abs(r.best_value - c.reference) <= 5e-4);
  }
}

TEST_CASE("value convergence under the a-priori bound") {
  const Problem p = disks3();
  const Vec start{5.0, 7.0};
  const double vhat = 2.0 * (std::sqrt(5.0) - 1.0);
  const double d = distance(start, Vec{0.0, 1.0});
  for (const std::size_t K : {10ul, 100ul, 1000ul, 10000ul}) {
    SolveOptions opt;
    opt.max_iters = K;
    const SolveResult r = solve(p, start, StepSchedule::harmonic(), opt);
    CHECK(r.best_value - vhat <=
          error_bound(StepSchedule::harmonic(), K, d, lipschitz_constant(p)) + 1e-6);
  }
}
