#pragma once

#include <cstddef>

#include "gft/minimal_time.hpp"

namespace gft {

/// Axis-aligned search bounds, lo[i] < hi[i] for every axis.
struct BBox {
  Vec lo;
  Vec hi;
};

struct OracleResult {
  Vec argmin;
  double min_value;
  double cell_size;  // grid resolution of the final refinement pass
  BBox bbox;         // the bounds originally searched
};

/// Brute-force verifier: evaluates T on a coarse_n^d grid over bbox, then
/// repeatedly recenters a four-cell-wide box around the incumbent and
/// re-grids, `refinements` times.  Fully deterministic: ties are broken by
/// value, then lexicographic point order.
OracleResult grid_minimize(const Problem& p, const BBox& bbox,
                           std::size_t coarse_n, std::size_t refinements);

/// Bounds covering every target's parameter points inflated by their radii,
/// plus a margin on every side.  (The AbsEpigraph contributes its apex.)
BBox default_bbox(const Problem& p, double margin = 2.0);

}  // namespace gft
