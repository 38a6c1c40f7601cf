#include "gft/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <variant>

namespace gft {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_bbox(const BBox& b, std::size_t dim) {
  detail::require_point(b.lo, dim, "grid_minimize bbox.lo");
  detail::require_point(b.hi, dim, "grid_minimize bbox.hi");
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(b.lo[i] < b.hi[i]))
      throw EmptyBBoxError("grid_minimize: bbox is empty on axis " +
                           std::to_string(i));
  }
}

}  // namespace

OracleResult grid_minimize(const Problem& p, const BBox& bbox,
                           std::size_t coarse_n, std::size_t refinements) {
  require_bbox(bbox, p.dim());
  if (coarse_n < 2)
    throw ValidationError("grid_minimize: coarse_n must be >= 2");

  const std::size_t d = p.dim();
  double best_value = std::numeric_limits<double>::infinity();
  Vec best(d);

  BBox cur = bbox;
  double cell = 0.0;
  for (std::size_t pass = 0; pass <= refinements; ++pass) {
    cell = 0.0;
    Vec step(d);
    for (std::size_t i = 0; i < d; ++i) {
      step[i] = (cur.hi[i] - cur.lo[i]) / static_cast<double>(coarse_n - 1);
      cell = std::max(cell, step[i]);
    }
    std::vector<std::size_t> idx(d, 0);
    Vec x(d);
    for (;;) {
      for (std::size_t i = 0; i < d; ++i)
        x[i] = cur.lo[i] + step[i] * static_cast<double>(idx[i]);
      const double v = total_value(p, x);
      if (v < best_value || (v == best_value && lex_less(x, best))) {
        best_value = v;
        best = x;
      }
      // Odometer over grid indices, last axis fastest: lexicographic order.
      std::size_t axis = d;
      while (axis > 0) {
        --axis;
        if (++idx[axis] < coarse_n) break;
        idx[axis] = 0;
        if (axis == 0) goto pass_done;
      }
    }
  pass_done:
    if (pass < refinements) {
      BBox next{Vec(d), Vec(d)};
      for (std::size_t i = 0; i < d; ++i) {
        next.lo[i] = best[i] - 2.0 * step[i];
        next.hi[i] = best[i] + 2.0 * step[i];
      }
      cur = next;
    }
  }

  return OracleResult{best, best_value, cell, bbox};
}

BBox default_bbox(const Problem& p, double margin) {
  if (!std::isfinite(margin) || margin <= 0.0)
    throw ValidationError("default_bbox: margin must be finite and > 0");
  const std::size_t d = p.dim();
  Vec lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = std::numeric_limits<double>::infinity();
    hi[i] = -std::numeric_limits<double>::infinity();
  }
  auto cover = [&](const Vec& c, auto radius_of) {
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], c[i] - radius_of(i));
      hi[i] = std::max(hi[i], c[i] + radius_of(i));
    }
  };
  for (const Target& t : p.targets()) {
    std::visit(
        overloaded{
            [&](const Singleton& s) { cover(s.point, [](std::size_t) { return 0.0; }); },
            [&](const Ball& b) { cover(b.center, [&](std::size_t) { return b.radius; }); },
            [&](const Box& b) { cover(b.center, [&](std::size_t) { return b.radius; }); },
            [&](const AxisBox& b) { cover(b.center, [&](std::size_t i) { return b.radii[i]; }); },
            [&](const Interval& iv) {
              lo[0] = std::min(lo[0], iv.lower);
              hi[0] = std::max(hi[0], iv.upper);
            },
            [&](const AbsEpigraph& e) { cover(e.apex, [](std::size_t) { return 0.0; }); }},
        t.shape());
  }
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] -= margin;
    hi[i] += margin;
  }
  return BBox{lo, hi};
}

}  // namespace gft
