#pragma once

#include <optional>
#include <string>

#include "core/rng.hpp"
#include "geom/rrt.hpp"
#include "geom/workspace.hpp"

namespace tamp::geom {

/// Uniform collision-free pose in a named convex region, by rejection
/// sampling from the region's bounding box. Throws ValidationError when
/// the region cannot produce a free pose within the rejection budget.
Pose samplePoseInRegion(const std::string& regionName, const Workspace& w,
                        RngStream& rng, int maxRejections = 1000);

/// Axis-aligned sampling envelope around a component: half-width on both
/// sides of the axis segment, extended half-width beyond both ends.
struct Envelope {
  const Component* component;
  double halfWidth;

  double area() const {
    return (component->axisLength() + 2.0 * halfWidth) * 2.0 * halfWidth;
  }
};

struct InspectionResult {
  std::optional<Trajectory> trajectory;  // empty on failure
  std::vector<Pose> waypoints;  // the sampled poses, axis-ordered
  int rrtIterations = 0;        // consumed either way
};

/// Inspection pattern for a component: five collision-free waypoints in
/// the envelope, ordered by projection onto the major axis, consecutive
/// waypoints connected with planMotion. Fails (empty trajectory) if a
/// waypoint cannot be placed or a connecting plan fails.
InspectionResult inspectionTrajectory(const std::string& componentName,
                                      const Workspace& w, RngStream& rng,
                                      double envelopeHalfWidth,
                                      const RrtParams& params = {},
                                      int waypointCount = 5);

}  // namespace tamp::geom
