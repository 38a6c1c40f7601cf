#pragma once

#include <string>
#include <string_view>

#include "gft/problem.hpp"

namespace gft {

/// Parses a problem document:
///   {"dimension": d,
///    "dynamics": {"kind": "euclidean_ball" | "unit_box"},
///    "targets": [{"kind": "...", ...kind-specific numeric fields...}, ...]}
/// Target kinds and fields: singleton{point}, ball{center,radius},
/// box{center,radius}, axis_box{center,radii}, interval{a,b},
/// abs_epigraph{apex}.  Throws ParseError naming the JSON path of the first
/// offending field (e.g. "targets[0].radius").
Problem parse_problem_text(std::string_view text);

/// Reads and parses a problem file.
Problem load_problem_file(const std::string& path);

/// Serializes back to the document format above; re-parsing yields an equal
/// Problem.  Numbers keep full double precision.
std::string problem_to_json_text(const Problem& p, bool pretty = false);

}  // namespace gft
