#pragma once

#include <cstddef>
#include <vector>

#include "gft/geometry.hpp"

namespace gft {

/// A generalized Fermat-Torricelli instance: one dynamics set and n >= 1
/// closed targets sharing the ambient dimension.  Immutable after
/// construction; safe to share across threads.
class Problem {
 public:
  Problem(Dynamics dynamics, std::vector<Target> targets);

  Dynamics dynamics() const { return dynamics_; }
  const std::vector<Target>& targets() const { return targets_; }
  const Target& target(std::size_t i) const { return targets_[i]; }
  std::size_t size() const { return targets_.size(); }
  std::size_t dim() const { return dim_; }

  bool all_convex() const;
  bool any_bounded_target() const;

  friend bool operator==(const Problem&, const Problem&) = default;

 private:
  Dynamics dynamics_;
  std::vector<Target> targets_;
  std::size_t dim_;
};

}  // namespace gft
