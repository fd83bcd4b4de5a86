#pragma once

#include "geom/geometry.hpp"
#include "geom/workspace.hpp"

namespace tamp::geom {

/// True iff no densified sample along the trajectory (spacing <= step)
/// lies inside an obstacle or outside the bounds. Point-robot model.
/// Planner output is gated by exact segment tests, so it stays clean
/// under this check at any resolution.
bool collisionFree(const Trajectory& tr, const Workspace& w, double step);

}  // namespace tamp::geom
