#pragma once

// Umbrella header for the generalized Fermat-Torricelli library.

#include "gft/errors.hpp"
#include "gft/geometry.hpp"
#include "gft/minimal_time.hpp"
#include "gft/optimality.hpp"
#include "gft/oracle.hpp"
#include "gft/problem.hpp"
#include "gft/problem_io.hpp"
#include "gft/solver.hpp"
#include "gft/vec.hpp"
