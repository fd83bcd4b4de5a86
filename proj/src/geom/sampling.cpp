#include "geom/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace tamp::geom {

Pose samplePoseInRegion(const std::string& regionName, const Workspace& w,
                        RngStream& rng, int maxRejections) {
  const Polygon& poly = w.region(regionName);
  Aabb box = boundingBox(poly);
  for (int i = 0; i < maxRejections; ++i) {
    Pose p{rng.uniform(box.xmin, box.xmax), rng.uniform(box.ymin, box.ymax)};
    if (pointInPolygon(p, poly) && w.poseFree(p)) return p;
  }
  throw ValidationError("region '" + regionName +
                        "' yielded no collision-free pose after " +
                        std::to_string(maxRejections) + " rejections");
}

InspectionResult inspectionTrajectory(const std::string& componentName,
                                      const Workspace& w, RngStream& rng,
                                      double envelopeHalfWidth,
                                      const RrtParams& params,
                                      int waypointCount) {
  const Component& comp = w.component(componentName);
  const double len = comp.axisLength();
  const double hw = envelopeHalfWidth;
  double ux = 1.0, uy = 0.0;
  if (len > 0.0) {
    ux = (comp.axisEnd.x - comp.axisStart.x) / len;
    uy = (comp.axisEnd.y - comp.axisStart.y) / len;
  }

  constexpr int kRejectionsPerWaypoint = 200;
  std::vector<Pose> waypoints;
  for (int i = 0; i < waypointCount; ++i) {
    bool placed = false;
    for (int r = 0; r < kRejectionsPerWaypoint; ++r) {
      double u = rng.uniform(-hw, len + hw);
      double v = rng.uniform(-hw, hw);
      Pose p{comp.axisStart.x + u * ux - v * uy,
             comp.axisStart.y + u * uy + v * ux};
      if (w.poseFree(p)) {
        waypoints.push_back(p);
        placed = true;
        break;
      }
    }
    if (!placed) return {std::nullopt, {}, 0};
  }

  std::sort(waypoints.begin(), waypoints.end(),
            [&](const Pose& a, const Pose& b) {
              return comp.axisProjection(a) < comp.axisProjection(b);
            });

  Trajectory pattern = makeTrajectory({waypoints.front()});
  int iterations = 0;
  for (size_t i = 1; i < waypoints.size(); ++i) {
    auto leg = planMotion(waypoints[i - 1], waypoints[i], w, rng.nextUint(),
                          params);
    if (!leg)
      return {std::nullopt, std::move(waypoints),
              iterations + params.iterationCap};
    iterations += leg->iterations;
    pattern = concat(pattern, leg->trajectory);
  }
  return InspectionResult{std::move(pattern), std::move(waypoints),
                          iterations};
}

}  // namespace tamp::geom
